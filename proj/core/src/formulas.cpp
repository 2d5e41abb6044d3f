#include "graphcodes/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace graphcodes {
namespace {

BigInt ipow(long long b, long long e) {
  BigInt out = 1;
  for (long long i = 0; i < e; ++i) out *= b;
  return out;
}

void require_q(int q) {
  if (q < 3) throw InvalidParams("formula requires q >= 3, got " + std::to_string(q));
}

long long ceil_half(long long x) { return (x + 1) / 2; }

// Overloaded-lambda helper for std::visit.
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

BigInt binom(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  BigInt out = 1;
  for (long long i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

BigInt k_formula(int s, int d, int q) {
  if (s < 1 || d < 0) throw InvalidParams("k_formula requires s >= 1 and d >= 0");
  require_q(q);
  BigInt sum = 0;
  for (long long j = 0; j <= s - 1; ++j) {
    const BigInt term = binom(s - 1, j) * binom(s - 1 + d - static_cast<long long>(q - 1) * j, s - 1);
    sum += (j % 2 == 0) ? term : BigInt(-term);
  }
  return sum;
}

BigInt dim_complete_bipartite(int a, int b, int d, int q) { return k_formula(a, d, q) * k_formula(b, d, q); }

BigInt dim_even_cycle_ternary(int half_length, int d) {
  if (half_length < 2 || d < 0) throw InvalidParams("even cycle needs half_length >= 2 and d >= 0");
  const int s = 2 * half_length;
  if (d >= half_length - 1) return BigInt(1) << (s - 2);
  BigInt sum = 0;
  for (int i = 0; d - 2 * i >= 0; ++i) sum += binom(s, d - 2 * i);
  return sum;
}

BigInt reg_closed_form(const RegFamily& family, int q) {
  require_q(q);
  const long long q2 = q - 2;
  return std::visit(
      overloaded{
          [&](const reg_family::Torus& t) -> BigInt {
            if (t.s < 1) throw InvalidParams("torus needs s >= 1");
            return BigInt(t.s - 1) * q2;
          },
          [&](const reg_family::CompleteBipartite& k) -> BigInt {
            if (k.a < 1 || k.b < 1) throw InvalidParams("complete bipartite parts must be positive");
            return BigInt(std::max(k.a, k.b) - 1) * q2;
          },
          [&](const reg_family::Complete& k) -> BigInt {
            if (k.n < 2) throw InvalidParams("complete graph needs n >= 2");
            if (k.n <= 3) return reg_closed_form(reg_family::Torus{k.n * (k.n - 1) / 2}, q);
            return ceil_half((k.n - 1) * q2);
          },
          [&](const reg_family::EvenCycle& c) -> BigInt {
            if (c.half_length < 2) throw InvalidParams("even cycle needs half_length >= 2");
            return BigInt(c.half_length - 1) * q2;
          },
          [&](const reg_family::CompleteMultipartite& k) -> BigInt {
            if (k.parts.size() <= 2) throw UnsupportedFamily("complete multipartite row needs r > 2 parts");
            if (std::any_of(k.parts.begin(), k.parts.end(), [](int a) { return a < 1; }))
              throw InvalidParams("parts must be positive");
            const long long n = std::accumulate(k.parts.begin(), k.parts.end(), 0LL);
            long long best = ceil_half((n - 1) * q2);
            for (int a : k.parts) best = std::max(best, a * q2);
            return best;
          },
      },
      family);
}

BigInt reg_parallel(std::span<const int> lengths, int q) {
  require_q(q);
  if (lengths.size() < 2) throw InvalidParams("parallel composition needs r >= 2 paths");
  if (std::any_of(lengths.begin(), lengths.end(), [](int k) { return k < 1; }))
    throw InvalidParams("path lengths must be positive");
  if (std::count(lengths.begin(), lengths.end(), 1) > 1) throw InvalidParams("at most one path of length 1");

  std::vector<long long> ks(lengths.begin(), lengths.end());
  std::stable_partition(ks.begin(), ks.end(), [](long long k) { return k % 2 == 0; });
  const auto r = ks.size();
  const auto evens = static_cast<std::size_t>(std::count_if(ks.begin(), ks.end(), [](long long k) { return k % 2 == 0; }));
  const long long q2 = q - 2;
  auto halves = [&](std::size_t from, std::size_t to) {
    long long sum = 0;
    for (std::size_t i = from; i < to; ++i) sum += ks[i] / 2;
    return sum;
  };

  if (evens == 0) return BigInt(halves(0, r)) * q2;
  if (evens == r) return BigInt(halves(0, r) - 1) * q2;
  if (evens == 1 && r == 2) return BigInt(ks[0] + ks[1] - 1) * q2;
  if (evens == 1) return BigInt(ks[0] + halves(1, r)) * q2;
  if (r == evens + 1) return BigInt(halves(0, evens) + ks[evens]) * q2;
  return BigInt(halves(0, r)) * q2;
}

BigInt reg_nested_ears(int n_vertices, int epsilon, int q) {
  require_q(q);
  const int num = n_vertices + epsilon - 3;
  if (num < 0 || num % 2 != 0)
    throw InvalidParams("|V| + epsilon - 3 must be even and non-negative for a bipartite graph");
  return BigInt(num / 2) * (q - 2);
}

BigInt mindist_torus_formula(int s, int d, int q) {
  require_q(q);
  if (s < 2 || d < 1) throw InvalidParams("torus minimum distance needs s >= 2 and d >= 1");
  const long long q2 = q - 2;
  if (d >= q2 * (s - 1)) return 1;
  const long long k = (d - 1) / q2;
  const long long l = d - k * q2;  // 1 <= l <= q-2
  return ipow(q - 1, s - (k + 2)) * (q - 1 - l);
}

BigInt mindist_complete_bipartite(int a, int b, int d, int q) {
  if (a < 2 || b < 2) throw InvalidParams("complete bipartite minimum distance needs a, b >= 2");
  return mindist_torus_formula(a, d, q) * mindist_torus_formula(b, d, q);
}

std::pair<BigInt, BigInt> mindist_bipartite_bounds(int a, int b, int d, int q) {
  if (a < 2 || b < 2) throw InvalidParams("bipartite bounds need parts of size >= 2");
  return {mindist_torus_formula(a, d, q) * mindist_torus_formula(b, d, q), mindist_torus_formula(a + b - 1, d, q)};
}

BigInt mindist_nonbipartite_lower(int n_vertices, int d, int q) {
  if (d < 1) throw InvalidParams("d must be at least 1");
  return mindist_torus_formula(n_vertices, 2 * d, q);
}

BigInt mu_closed_form(const MuFamily& family) {
  return std::visit(
      overloaded{
          [](const reg_family::CompleteBipartite& k) -> BigInt {
            if (k.a < 1 || k.b < 1) throw InvalidParams("complete bipartite parts must be positive");
            return std::max(k.a, k.b);
          },
          [](const reg_family::Complete& k) -> BigInt {
            if (k.n <= 3) throw UnsupportedFamily("complete graph row needs n > 3");
            return ceil_half(k.n - 1) + 1;
          },
          [](const reg_family::CompleteMultipartite& k) -> BigInt {
            if (k.parts.size() <= 2) throw UnsupportedFamily("complete multipartite row needs r > 2 parts");
            const long long n = std::accumulate(k.parts.begin(), k.parts.end(), 0LL);
            long long best = ceil_half(n - 1);
            for (int a : k.parts) best = std::max<long long>(best, a);
            return best + 1;
          },
          [](const mu_family::ParallelComposition& pc) -> BigInt {
            const auto& ks = pc.lengths;
            if (ks.size() < 2) throw InvalidParams("parallel composition needs r >= 2 paths");
            const bool all_even = std::all_of(ks.begin(), ks.end(), [](int k) { return k % 2 == 0; });
            const bool all_odd = std::all_of(ks.begin(), ks.end(), [](int k) { return k % 2 == 1; });
            long long half_sum = 0;
            for (int k : ks) half_sum += k / 2;
            if (all_even) return half_sum;
            if (all_odd) return half_sum + 1;
            throw UnsupportedFamily("mixed-parity parallel composition has no parity-join row");
          },
          [](const mu_family::NestedEars& h) -> BigInt {
            const int num = h.n_vertices + h.epsilon - 1;
            if (num < 0 || num % 2 != 0) throw InvalidParams("|V| + epsilon - 1 must be even");
            return num / 2;
          },
      },
      family);
}

}  // namespace graphcodes
