#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphcodes/gf.hpp"
#include "graphcodes/graph.hpp"
#include "graphcodes/matrix.hpp"
#include "graphcodes/monomial.hpp"

namespace graphcodes {

inline constexpr std::uint64_t kDefaultTorusCap = 10'000'000;
inline constexpr std::uint64_t kDefaultMonomialCap = 1'000'000;

/// Point of P^{m-1} scaled so its last nonzero coordinate is 1.
struct ProjectivePoint {
  std::vector<Element> coords;

  /// Throws InvalidParams for the zero vector.
  static ProjectivePoint normalized(std::vector<Element> coords, const Field& f);
  bool in_torus() const noexcept;

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// The projective torus in P^{s-1}: (q-1)^(s-1) points, last coordinate 1,
/// sorted lexicographically by encoding. Throws CapExceeded.
std::vector<ProjectivePoint> torus_points(int s, const Field& f, std::uint64_t cap = kDefaultTorusCap);

/// |X| predicted from the graph's invariants.
BigInt expected_length(const GraphSummary& summary, int q);
inline BigInt expected_length(const GraphSummary& summary, const Field& f) { return expected_length(summary, f.q()); }

/// Finite point set X in the torus of P^{s-1}, canonically sorted.
class ToricSet {
 public:
  /// The whole torus T^{s-1}.
  static ToricSet torus(int s, const Field& f, std::uint64_t cap = kDefaultTorusCap);

  const Field& field() const noexcept { return field_; }
  int s() const noexcept { return s_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
  /// Source graph; empty for a bare torus.
  const std::optional<Graph>& graph() const noexcept { return graph_; }
  /// True when q = 2 (each coordinate has a single nonzero value).
  bool degenerate() const noexcept { return field_.q() == 2; }

 private:
  friend ToricSet parameterize(const Graph& g, const Field& f, std::uint64_t cap);
  ToricSet(Field f, int s, std::vector<ProjectivePoint> pts, std::optional<Graph> g)
      : field_(std::move(f)), s_(s), points_(std::move(pts)), graph_(std::move(g)) {}

  Field field_;
  int s_;
  std::vector<ProjectivePoint> points_;
  std::optional<Graph> graph_;
};

/// Image of the torus T^{n-1} under x -> (x_i x_j)_{e_k = {i,j}}. Throws
/// CapExceeded when (q-1)^(n-1) > cap and LengthMismatch if the count
/// disagrees with expected_length.
ToricSet parameterize(const Graph& g, const Field& f, std::uint64_t cap = kDefaultTorusCap);

/// f(P) / t_1(P)^deg f for a monomial f, at any representative P with
/// nonzero coordinates.
Element evaluate_ratio(const Field& f, const Monomial& m, std::span<const Element> point);

/// Rows: degree-d monomials (grevlex, greatest first); columns: points of X.
/// Throws CapExceeded when C(s+d-1, d) > cap.
Matrix evaluation_matrix(const ToricSet& x, int d, std::uint64_t cap = kDefaultMonomialCap);

/// C(s+d-1, d)
BigInt monomial_count(int s, int d);

}  // namespace graphcodes
