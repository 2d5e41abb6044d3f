#include "graphcodes/graph.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace graphcodes {

EdgeSubset EdgeSubset::of(std::span<const int> indices) {
  EdgeSubset e;
  for (int i : indices) {
    if (i < 1 || i > 64) throw InvalidParams("edge index out of range: " + std::to_string(i));
    e.insert(i);
  }
  return e;
}

std::vector<int> EdgeSubset::indices() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string to_string(EdgeSubset e) {
  std::string out = "{";
  bool first = true;
  for (int i : e.indices()) {
    if (!first) out += ',';
    out += 'e' + std::to_string(i);
    first = false;
  }
  return out + '}';
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw InvalidGraph("graph needs at least one vertex");
  if (edges_.empty()) throw InvalidGraph("graph needs at least one edge");
  if (s() > kMaxEdges) throw InvalidGraph("at most 64 edges are supported, got " + std::to_string(s()));
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges_) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range 1.." +
                         std::to_string(n_));
    if (u == v) throw InvalidGraph("loop at vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw InvalidGraph("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
}

std::optional<int> Graph::edge_index(int u, int v) const {
  for (int k = 0; k < s(); ++k) {
    const auto& e = edges_[static_cast<std::size_t>(k)];
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return k + 1;
  }
  return std::nullopt;
}

Graph Graph::permuted(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != s()) throw InvalidParams("edge permutation has wrong length");
  std::vector<bool> used(static_cast<std::size_t>(s()) + 1, false);
  std::vector<Edge> out;
  out.reserve(order.size());
  for (int k : order) {
    if (k < 1 || k > s() || used[static_cast<std::size_t>(k)])
      throw InvalidParams("not a permutation of 1.." + std::to_string(s()));
    used[static_cast<std::size_t>(k)] = true;
    out.push_back(edge(k));
  }
  return Graph(n_, std::move(out));
}

std::vector<int> Graph::degrees(EdgeSubset sub) const {
  std::vector<int> deg(static_cast<std::size_t>(n_) + 1, 0);
  for (int k : sub.indices()) {
    if (k > s()) continue;
    const auto& e = edge(k);
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

bool Graph::is_eulerian(EdgeSubset sub) const {
  const auto deg = degrees(sub);
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.n()) + 1);
  for (int k = 1; k <= g.s(); ++k) {
    const auto& e = g.edge(k);
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, k);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, k);
  }
  return adj;
}

struct Forest {
  std::vector<int> parent;       // 0 for roots
  std::vector<int> parent_edge;  // 0 for roots
  std::vector<int> depth;
  std::vector<int> component;    // component id per vertex
  std::vector<int> colour;
  std::vector<bool> odd_component;
  std::vector<bool> tree_edge;
  int count = 0;
};

Forest bfs_forest(const Graph& g) {
  const auto adj = adjacency(g);
  const auto n = static_cast<std::size_t>(g.n());
  Forest f;
  f.parent.assign(n + 1, 0);
  f.parent_edge.assign(n + 1, 0);
  f.depth.assign(n + 1, 0);
  f.component.assign(n + 1, -1);
  f.colour.assign(n + 1, 0);
  f.tree_edge.assign(static_cast<std::size_t>(g.s()) + 1, false);
  for (int root = 1; root <= g.n(); ++root) {
    if (f.component[static_cast<std::size_t>(root)] >= 0) continue;
    const int id = f.count++;
    f.odd_component.push_back(false);
    std::queue<int> todo;
    todo.push(root);
    f.component[static_cast<std::size_t>(root)] = id;
    while (!todo.empty()) {
      const int u = todo.front();
      todo.pop();
      for (auto [v, k] : adj[static_cast<std::size_t>(u)]) {
        const auto vu = static_cast<std::size_t>(v);
        if (f.component[vu] < 0) {
          f.component[vu] = id;
          f.parent[vu] = u;
          f.parent_edge[vu] = k;
          f.depth[vu] = f.depth[static_cast<std::size_t>(u)] + 1;
          f.colour[vu] = 1 - f.colour[static_cast<std::size_t>(u)];
          f.tree_edge[static_cast<std::size_t>(k)] = true;
          todo.push(v);
        } else if (f.colour[vu] == f.colour[static_cast<std::size_t>(u)]) {
          f.odd_component[static_cast<std::size_t>(id)] = true;
        }
      }
    }
  }
  return f;
}

}  // namespace

GraphSummary summarize(const Graph& g) {
  const Forest f = bfs_forest(g);
  GraphSummary out;
  out.n = g.n();
  out.s = g.s();
  out.b0 = f.count;
  out.gamma = static_cast<int>(std::count(f.odd_component.begin(), f.odd_component.end(), true));
  out.bipartite = out.gamma == 0;
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const Forest f = bfs_forest(g);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(f.count));
  for (int v = 1; v <= g.n(); ++v) out[static_cast<std::size_t>(f.component[static_cast<std::size_t>(v)])].push_back(v);
  return out;
}

std::optional<std::vector<int>> two_colouring(const Graph& g) {
  Forest f = bfs_forest(g);
  if (std::find(f.odd_component.begin(), f.odd_component.end(), true) != f.odd_component.end())
    return std::nullopt;
  return std::move(f.colour);
}

std::vector<EdgeSubset> cycle_space_basis(const Graph& g) {
  const Forest f = bfs_forest(g);
  std::vector<EdgeSubset> basis;
  for (int k = 1; k <= g.s(); ++k) {
    if (f.tree_edge[static_cast<std::size_t>(k)]) continue;
    EdgeSubset cyc;
    cyc.insert(k);
    int a = g.edge(k).u, b = g.edge(k).v;
    while (a != b) {
      auto& deeper = f.depth[static_cast<std::size_t>(a)] >= f.depth[static_cast<std::size_t>(b)] ? a : b;
      cyc.insert(f.parent_edge[static_cast<std::size_t>(deeper)]);
      deeper = f.parent[static_cast<std::size_t>(deeper)];
    }
    basis.push_back(cyc);
  }
  return basis;
}

std::vector<EdgeSubset> enumerate_eulerian(const Graph& g, bool even_edge_count_only, std::uint64_t cap) {
  const auto basis = cycle_space_basis(g);
  const BigInt required = BigInt(1) << basis.size();
  if (required > cap) throw CapExceeded("Eulerian subgraph enumeration", required, cap);
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  std::vector<EdgeSubset> out;
  EdgeSubset acc;
  // Gray code walk: step i flips the basis element at the lowest set bit of i.
  for (std::uint64_t i = 1; i < total; ++i) {
    acc = acc ^ basis[static_cast<std::size_t>(std::countr_zero(i))];
    if (!even_edge_count_only || acc.size() % 2 == 0) out.push_back(acc);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace family {

Graph path(int n) {
  if (n < 2) throw InvalidParams("path needs at least 2 vertices");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  if (n < 3) throw InvalidParams("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  e.push_back({n, 1});
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  if (n < 2) throw InvalidParams("complete graph needs at least 2 vertices");
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InvalidParams("complete bipartite parts must be positive");
  std::vector<Edge> e;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) e.push_back({i, a + j});
  return Graph(a + b, std::move(e));
}

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.size() < 2) throw InvalidParams("complete multipartite needs at least 2 parts");
  std::vector<int> part_of{0};
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw InvalidParams("complete multipartite parts must be positive");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size()) - 1;
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)]) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph parallel_composition(std::span<const int> lengths) {
  if (lengths.size() < 2) throw InvalidParams("parallel composition needs at least 2 paths");
  if (std::any_of(lengths.begin(), lengths.end(), [](int k) { return k < 1; }))
    throw InvalidParams("path lengths must be positive");
  if (std::count(lengths.begin(), lengths.end(), 1) > 1)
    throw InvalidParams("at most one path of length 1 (otherwise the hubs are joined twice)");
  std::vector<Edge> e;
  int next = 3;
  for (int k : lengths) {
    int prev = 1;
    for (int step = 1; step < k; ++step) {
      e.push_back({prev, next});
      prev = next++;
    }
    e.push_back({prev, 2});
  }
  return Graph(next - 1, std::move(e));
}

}  // namespace family

Graph build_family(std::string_view name, std::span<const int> params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count)
      throw InvalidParams(std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "path") {
    want(1);
    return family::path(params[0]);
  }
  if (name == "cycle") {
    want(1);
    return family::cycle(params[0]);
  }
  if (name == "complete") {
    want(1);
    return family::complete(params[0]);
  }
  if (name == "complete_bipartite") {
    want(2);
    return family::complete_bipartite(params[0], params[1]);
  }
  if (name == "complete_multipartite") return family::complete_multipartite(params);
  if (name == "parallel_composition") return family::parallel_composition(params);
  throw InvalidParams("unknown graph family: " + std::string(name));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  for (const auto& [u, v] : h.edges()) e.push_back({u + g.n(), v + g.n()});
  return Graph(g.n() + h.n(), std::move(e));
}

Graph parse_graph(std::istream& in) {
  std::vector<long long> nums;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long x;
    while (ls >> x) nums.push_back(x);
    ls.clear();
    std::string junk;
    if (ls >> junk) throw InvalidGraph("unexpected token '" + junk + "' on line " + std::to_string(lineno));
  }
  if (nums.size() < 2) throw InvalidGraph("missing header 'n s'");
  const long long n = nums[0], s = nums[1];
  if (n < 1 || s < 0 || s > Graph::kMaxEdges) throw InvalidGraph("bad header");
  if (nums.size() != static_cast<std::size_t>(2 + 2 * s))
    throw InvalidGraph("expected " + std::to_string(s) + " edges, found " + std::to_string((nums.size() - 2) / 2) +
                       (nums.size() % 2 ? " and a dangling endpoint" : ""));
  std::vector<Edge> e;
  for (long long k = 0; k < s; ++k)
    e.push_back({static_cast<int>(nums[static_cast<std::size_t>(2 + 2 * k)]),
                 static_cast<int>(nums[static_cast<std::size_t>(3 + 2 * k)])});
  return Graph(static_cast<int>(n), std::move(e));
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.s() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// Ear decompositions ---------------------------------------------------------

namespace {

// Edges of the sub-path of `walk` between positions i < j.
EdgeSubset walk_segment(const Graph& g, const std::vector<int>& walk, std::size_t i, std::size_t j) {
  EdgeSubset out;
  for (std::size_t k = i; k < j; ++k) out.insert(*g.edge_index(walk[k], walk[k + 1]));
  return out;
}

bool compatible(EdgeSubset a, EdgeSubset b) {
  return (a & b).empty() || a.subset_of(b) || b.subset_of(a);
}

}  // namespace

EarDecomposition validate_ear_decomposition(const Graph& g, const std::vector<std::vector<int>>& ears) {
  if (ears.empty()) throw NotADecomposition("no ears given");
  EarDecomposition out;
  out.ears = ears;
  EdgeSubset used;
  std::vector<bool> seen(static_cast<std::size_t>(g.n()) + 1, false);

  for (std::size_t i = 0; i < ears.size(); ++i) {
    const auto& ear = ears[i];
    const std::string tag = "ear " + std::to_string(i + 1);
    if (ear.size() < 2) throw NotADecomposition(tag + " has no edges");
    for (int v : ear)
      if (v < 1 || v > g.n()) throw NotADecomposition(tag + " uses unknown vertex " + std::to_string(v));
    EdgeSubset edges;
    for (std::size_t k = 0; k + 1 < ear.size(); ++k) {
      const auto idx = g.edge_index(ear[k], ear[k + 1]);
      if (!idx)
        throw NotADecomposition(tag + ": {" + std::to_string(ear[k]) + "," + std::to_string(ear[k + 1]) +
                                "} is not an edge");
      if (used.contains(*idx) || edges.contains(*idx))
        throw NotADecomposition(tag + ": edge e" + std::to_string(*idx) + " used twice");
      edges.insert(*idx);
    }
    used = used | edges;
    out.ear_edges.push_back(edges);

    if (i == 0) {
      if (ear.front() != ear.back() || ear.size() < 4)
        throw NotADecomposition("first ear must be a cycle given as a closed walk");
      std::set<int> inner(ear.begin(), ear.end() - 1);
      if (inner.size() != ear.size() - 1) throw NotADecomposition("first ear repeats a vertex");
      for (int v : inner) seen[static_cast<std::size_t>(v)] = true;
      continue;
    }

    const int a = ear.front(), b = ear.back();
    if (a == b) throw NotOpen(tag + " has equal end-points");
    if (!seen[static_cast<std::size_t>(a)] || !seen[static_cast<std::size_t>(b)])
      throw NotOpen(tag + " has an end-point outside the earlier ears");
    std::set<int> inner;
    for (std::size_t k = 1; k + 1 < ear.size(); ++k) {
      const int v = ear[k];
      if (seen[static_cast<std::size_t>(v)] || !inner.insert(v).second)
        throw NotOpen(tag + ": internal vertex " + std::to_string(v) + " is not new");
    }
    for (int v : inner) seen[static_cast<std::size_t>(v)] = true;
  }
  if (used != EdgeSubset::first(g.s())) throw NotADecomposition("ears do not cover every edge");

  // Candidate nest intervals per ear: every earlier ear holding both end-points
  // (both arcs when that ear is the cycle).
  std::vector<std::vector<NestInterval>> options(ears.size());
  for (std::size_t i = 1; i < ears.size(); ++i) {
    const int a = ears[i].front(), b = ears[i].back();
    for (std::size_t j = 0; j < i; ++j) {
      const auto& host = ears[j];
      const std::size_t len = j == 0 ? host.size() - 1 : host.size();
      const auto pa = std::find(host.begin(), host.begin() + static_cast<std::ptrdiff_t>(len), a);
      const auto pb = std::find(host.begin(), host.begin() + static_cast<std::ptrdiff_t>(len), b);
      if (pa == host.begin() + static_cast<std::ptrdiff_t>(len) || pb == host.begin() + static_cast<std::ptrdiff_t>(len))
        continue;
      auto x = static_cast<std::size_t>(pa - host.begin());
      auto y = static_cast<std::size_t>(pb - host.begin());
      if (x > y) std::swap(x, y);
      const EdgeSubset arc = walk_segment(g, host, x, y);
      options[i].push_back({static_cast<int>(j), arc});
      if (j == 0) options[i].push_back({0, out.ear_edges[0] - arc});
    }
    if (options[i].empty())
      throw NotNested("ear " + std::to_string(i + 1) + " does not have both end-points on one earlier ear");
  }

  std::vector<NestInterval> chosen(ears.size());
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == ears.size()) return true;
    for (const auto& opt : options[i]) {
      bool ok = true;
      for (std::size_t k = 1; k < i && ok; ++k)
        if (chosen[k].host == opt.host && !compatible(chosen[k].interval, opt.interval)) ok = false;
      if (!ok) continue;
      chosen[i] = opt;
      if (assign(i + 1)) return true;
    }
    return false;
  };
  if (!assign(1)) throw NotNested("no choice of nest intervals is pairwise disjoint or nested");
  out.intervals.assign(chosen.begin() + 1, chosen.end());
  out.epsilon = static_cast<int>(
      std::count_if(out.ear_edges.begin(), out.ear_edges.end(), [](EdgeSubset e) { return e.size() % 2 == 0; }));
  return out;
}

}  // namespace graphcodes
