#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "graphcodes/errors.hpp"

namespace graphcodes {

/// Graph families with a known regularity.
namespace reg_family {
struct Torus {
  int s = 0;  // X is the torus in P^{s-1}
};
struct CompleteBipartite {
  int a = 0, b = 0;
};
struct Complete {
  int n = 0;
};
struct EvenCycle {
  int half_length = 0;  // the cycle has 2 * half_length edges
};
struct CompleteMultipartite {
  std::vector<int> parts;
};
}  // namespace reg_family

using RegFamily = std::variant<reg_family::Torus, reg_family::CompleteBipartite, reg_family::Complete,
                               reg_family::EvenCycle, reg_family::CompleteMultipartite>;

/// C(a, b), zero when b < 0 or a < b (a may be negative).
BigInt binom(long long a, long long b);

/// Hilbert function of the torus in P^{s-1}:
/// sum_j (-1)^j C(s-1, j) C(s-1+d-(q-1)j, s-1).
BigInt k_formula(int s, int d, int q);

/// dim C_X(d) for G = K_{a,b}: k(a,d,q) k(b,d,q).
BigInt dim_complete_bipartite(int a, int b, int d, int q);

/// dim C_X(d) over GF(3) for the cycle of length 2*half_length.
BigInt dim_even_cycle_ternary(int half_length, int d);

/// Known regularity values. Complete graphs with n <= 3 are unicyclic-odd
/// or trees, so they use the torus row with s = n(n-1)/2.
BigInt reg_closed_form(const RegFamily& family, int q);

/// Regularity of the parallel composition of paths with the given lengths.
BigInt reg_parallel(std::span<const int> lengths, int q);

/// Regularity of a bipartite graph on n_vertices with a nested ear
/// decomposition having `epsilon` even ears. Throws InvalidParams when
/// n_vertices + epsilon - 3 is odd or negative.
BigInt reg_nested_ears(int n_vertices, int epsilon, int q);

/// Minimum distance of the torus code in P^{s-1}.
BigInt mindist_torus_formula(int s, int d, int q);

/// delta_X(d) for G = K_{a,b}.
BigInt mindist_complete_bipartite(int a, int b, int d, int q);

/// Bounds on delta_X(d) for a connected bipartite graph with parts of sizes
/// a and b: product of the part tori (lower) and the torus in P^{a+b-2}
/// (upper).
std::pair<BigInt, BigInt> mindist_bipartite_bounds(int a, int b, int d, int q);

/// Lower bound on delta_X(d) for a connected non-bipartite graph:
/// delta of the torus in P^{n-1} at degree 2d.
BigInt mindist_nonbipartite_lower(int n_vertices, int d, int q);

/// Families with a closed form for the largest parity join.
namespace mu_family {
struct ParallelComposition {
  std::vector<int> lengths;  // all even or all odd
};
struct NestedEars {
  int n_vertices = 0;
  int epsilon = 0;
};
}  // namespace mu_family

using MuFamily = std::variant<reg_family::CompleteBipartite, reg_family::Complete, reg_family::CompleteMultipartite,
                              mu_family::ParallelComposition, mu_family::NestedEars>;

BigInt mu_closed_form(const MuFamily& family);

}  // namespace graphcodes
