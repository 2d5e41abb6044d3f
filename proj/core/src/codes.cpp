#include "graphcodes/codes.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string>

namespace graphcodes {

namespace {

// Drops repeated rows, keeping first occurrences in order. The row space and
// hence the reduced form are unchanged; near the plateau most monomials
// evaluate to a row already seen.
Matrix distinct_rows(const Matrix& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    const int c = m.cols() ? std::memcmp(m.row(a).data(), m.row(b).data(), m.cols()) : 0;
    return c != 0 ? c < 0 : a < b;
  };
  std::sort(order.begin(), order.end(), less);
  std::vector<bool> keep(m.rows(), false);
  for (std::size_t i = 0; i < order.size(); ++i)
    keep[order[i]] = i == 0 || std::memcmp(m.row(order[i]).data(), m.row(order[i - 1]).data(), m.cols()) != 0;
  Matrix out(0, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (keep[r]) out.append_row(m.row(r));
  return out;
}

}  // namespace

CodeInstance make_code(const ToricSet& x, int d, std::uint64_t cap) {
  CodeInstance code{x.field(), d, distinct_rows(evaluation_matrix(x, d, cap)), {}, 0, x.size()};
  code.pivots = rref(code.generator, code.field);
  code.k = code.pivots.size();
  return code;
}

std::size_t dimension(const ToricSet& x, int d, std::uint64_t cap) {
  return rank(distinct_rows(evaluation_matrix(x, d, cap)), x.field());
}

std::vector<std::size_t> hilbert_function(const ToricSet& x, std::uint64_t cap) {
  std::vector<std::size_t> values;
  for (int d = 0;; ++d) {
    const std::size_t k = dimension(x, d, cap);
    if (!values.empty() && k <= values.back())
      throw MonotonicityViolation("Hilbert function not strictly increasing at d = " + std::to_string(d));
    values.push_back(k);
    if (k == x.size()) return values;
    if (k > x.size()) throw MonotonicityViolation("dimension exceeds length");
  }
}

int regularity_index(const ToricSet& x, std::uint64_t cap) {
  return static_cast<int>(hilbert_function(x, cap).size()) - 1;
}

std::uint64_t minimum_distance(const ToricSet& x, int d, std::uint64_t budget, std::uint64_t cap) {
  const CodeInstance code = make_code(x, d, cap);
  return minimum_distance(code.generator, code.field, budget).distance;
}

DistanceProfile distance_profile(const ToricSet& x, int d_max, std::uint64_t budget, std::uint64_t cap) {
  DistanceProfile out;
  const auto m = static_cast<std::uint64_t>(x.size());
  for (int d = 0; d <= d_max; ++d) {
    const CodeInstance code = make_code(x, d, cap);
    DistanceRecord rec{d, code.k, 0, m - code.k + 1};
    try {
      rec.distance = minimum_distance(code.generator, code.field, budget).distance;
    } catch (const BudgetExceeded& e) {
      out.complete = false;
      out.stopped_at = d;
      out.required = e.required();
      return out;
    }
    if (rec.distance > rec.singleton_bound)
      throw MonotonicityViolation("Singleton bound violated at d = " + std::to_string(d));
    if (!out.rows.empty()) {
      const auto prev = out.rows.back().distance;
      if (prev > 1 && rec.distance >= prev)
        throw MonotonicityViolation("minimum distance not strictly decreasing at d = " + std::to_string(d));
      if (prev == 1 && rec.distance != 1)
        throw MonotonicityViolation("minimum distance left 1 at d = " + std::to_string(d));
    }
    if (code.k == m && rec.distance != 1)
      throw MonotonicityViolation("full-length code with distance > 1 at d = " + std::to_string(d));
    out.rows.push_back(rec);
  }
  return out;
}

}  // namespace graphcodes
