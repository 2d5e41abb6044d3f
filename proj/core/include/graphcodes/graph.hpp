#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphcodes/errors.hpp"

namespace graphcodes {

/// Undirected edge between vertices u and v (1-indexed).
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A set of edge indices in 1..64, stored as a bit mask (bit i-1 is e_i).
/// Ordering compares the mask as an unsigned integer.
class EdgeSubset {
 public:
  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(std::uint64_t mask) : mask_(mask) {}
  static EdgeSubset of(std::span<const int> indices);
  static constexpr EdgeSubset first(int s) {
    return EdgeSubset(s >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1);
  }

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  constexpr bool contains(int i) const noexcept { return (mask_ >> (i - 1)) & 1U; }
  constexpr void insert(int i) noexcept { mask_ |= std::uint64_t{1} << (i - 1); }
  constexpr void erase(int i) noexcept { mask_ &= ~(std::uint64_t{1} << (i - 1)); }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  /// Largest edge index in the set, 0 if empty.
  constexpr int last() const noexcept { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }
  constexpr bool subset_of(EdgeSubset o) const noexcept { return (mask_ & ~o.mask_) == 0; }
  std::vector<int> indices() const;

  constexpr EdgeSubset operator&(EdgeSubset o) const noexcept { return EdgeSubset(mask_ & o.mask_); }
  constexpr EdgeSubset operator|(EdgeSubset o) const noexcept { return EdgeSubset(mask_ | o.mask_); }
  constexpr EdgeSubset operator^(EdgeSubset o) const noexcept { return EdgeSubset(mask_ ^ o.mask_); }
  constexpr EdgeSubset operator-(EdgeSubset o) const noexcept { return EdgeSubset(mask_ & ~o.mask_); }

  friend constexpr auto operator<=>(EdgeSubset, EdgeSubset) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// "{e1,e3,e4}"
std::string to_string(EdgeSubset e);

/// Simple graph on vertices 1..n with an ordered edge list e_1..e_s.
/// The ordering is part of the value.
class Graph {
 public:
  static constexpr int kMaxEdges = 64;

  /// Throws InvalidGraph on loops, duplicate edges, out-of-range endpoints,
  /// s == 0 or s > 64.
  Graph(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  int s() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// 1-indexed.
  const Edge& edge(int k) const { return edges_.at(static_cast<std::size_t>(k - 1)); }
  /// 1-indexed edge number joining u and v, if any.
  std::optional<int> edge_index(int u, int v) const;

  /// Graph whose i-th edge is this graph's edge order[i] (1-indexed
  /// permutation of 1..s).
  Graph permuted(std::span<const int> order) const;

  /// Degree of each vertex (index 0 unused) in the subgraph given by `sub`.
  std::vector<int> degrees(EdgeSubset sub) const;
  bool is_eulerian(EdgeSubset sub) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct GraphSummary {
  int n = 0;
  int s = 0;
  int b0 = 0;  // connected components, isolated vertices included
  bool bipartite = true;
  int gamma = 0;  // non-bipartite components
};

GraphSummary summarize(const Graph& g);

/// Connected components as vertex lists, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

/// 2-colouring of a bipartite graph: colour[v] in {0,1}, colour[smallest
/// vertex of each component] = 0. Empty optional when not bipartite.
std::optional<std::vector<int>> two_colouring(const Graph& g);

/// Fundamental cycles of a BFS spanning forest, one per non-tree edge in
/// edge order. Size s - n + b0.
std::vector<EdgeSubset> cycle_space_basis(const Graph& g);

/// All nonempty Eulerian edge subsets (sums of basis cycles), optionally only
/// those with an even number of edges, sorted by mask. Throws CapExceeded if
/// 2^(s-n+b0) > cap.
std::vector<EdgeSubset> enumerate_eulerian(const Graph& g, bool even_edge_count_only,
                                           std::uint64_t cap = std::uint64_t{1} << 20);

// Family constructors. Numbering and edge order:
//   path(n)              vertices 1..n, edges (i,i+1) for i = 1..n-1
//   cycle(n)             edges (1,2),(2,3),...,(n-1,n),(n,1)
//   complete(n)          edges (i,j), i<j, lexicographic
//   complete_bipartite   parts {1..a}, {a+1..a+b}; edges (i,a+j) by i then j
//   complete_multipartite parts are consecutive blocks; edges (i,j), i<j in
//                        different parts, lexicographic
//   parallel_composition hubs 1 and 2; internal vertices of path 1, path 2,
//                        ... numbered consecutively from 3; edges path by
//                        path, each walked from hub 1 to hub 2
namespace family {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(std::span<const int> parts);
Graph parallel_composition(std::span<const int> lengths);
}  // namespace family

/// Dispatch by family name (the names above); throws InvalidParams.
Graph build_family(std::string_view name, std::span<const int> params);

/// Vertices of h are shifted by g.n(); edges of g come first.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Text format: header "n s", then s lines "u v"; '#' starts a comment.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

struct NestInterval {
  int host = 0;          // 0-based index of the ear carrying the interval
  EdgeSubset interval;   // edges of the host ear between the two endpoints
};

/// A validated nested ear decomposition.
struct EarDecomposition {
  std::vector<std::vector<int>> ears;   // vertex sequences; ears[0] is closed
  std::vector<EdgeSubset> ear_edges;
  std::vector<NestInterval> intervals;  // one per ear after the first
  int epsilon = 0;                      // ears with an even number of edges
};

/// Checks that `ears` is a nested ear decomposition of g. ears[0] is the
/// cycle E_1 given as a closed walk (first vertex repeated at the end); the
/// rest are paths. Throws NotADecomposition, NotOpen or NotNested.
EarDecomposition validate_ear_decomposition(const Graph& g, const std::vector<std::vector<int>>& ears);

}  // namespace graphcodes
