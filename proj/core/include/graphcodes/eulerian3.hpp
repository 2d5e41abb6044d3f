#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "graphcodes/graph.hpp"
#include "graphcodes/monomial.hpp"

// Ternary codes: over GF(3) the vanishing ideal of X is the Eulerian ideal
// of the graph, and its grevlex Groebner basis is known (squares t_i^2 - t_j^2
// plus the Eulerian binomials). Everything here is combinatorial: standard
// monomials of (I(X), t_s^2), parity joins and the sets J_d.

namespace graphcodes {

inline constexpr std::uint64_t kDefaultCycleSpaceCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultSubsetCap = std::uint64_t{1} << 24;

/// Leading terms (grevlex) of the Groebner basis of (I(X), t_s^2) up to
/// max_degree: t_i^2 for every i, and for each even Eulerian subgraph C and
/// each split of E_C into equal halves, the greater half.
std::set<Monomial> eulerian_leading_terms(const Graph& g, int max_degree, std::uint64_t cap = kDefaultCycleSpaceCap);

/// Degree-d monomials divisible by no leading term, greatest first.
std::vector<Monomial> standard_monomials(const Graph& g, int d, std::uint64_t cap = kDefaultCycleSpaceCap);

struct ParityWitness {
  EdgeSubset eulerian;  // E_C, |E_C| even
  int meet = 0;         // |J ∩ E_C|
  int half = 0;         // |E_C| / 2
};

struct ParityJoinCertificate {
  EdgeSubset join;
  bool is_parity_join = true;
  std::vector<ParityWitness> witnesses;  // one per even Eulerian subgraph
  std::optional<ParityWitness> violation;
};

ParityJoinCertificate is_parity_join(const Graph& g, EdgeSubset j, std::uint64_t cap = kDefaultCycleSpaceCap);

/// Parity joins of size d that contain the last edge of every even Eulerian
/// subgraph they meet in exactly half its edges. Empty for d < 0.
std::vector<EdgeSubset> enumerate_Jd(const Graph& g, int d, std::uint64_t cap = kDefaultSubsetCap);

/// sum_{i >= 0} |J_{d-2i}|
std::uint64_t dim_ternary(const Graph& g, int d, std::uint64_t cap = kDefaultSubsetCap);

struct MaxParityJoin {
  int mu = 0;
  EdgeSubset witness;
  int reg() const noexcept { return mu - 1; }
};

/// Largest parity join, searching edge subsets with monotone pruning.
/// Throws CapExceeded after `cap` search nodes.
MaxParityJoin max_parity_join(const Graph& g, std::uint64_t cap = kDefaultSubsetCap);

}  // namespace graphcodes
