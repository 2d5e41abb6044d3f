#include "graphcodes/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace graphcodes {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (std::any_of(exps_.begin(), exps_.end(), [](int a) { return a < 0; }))
    throw InvalidParams("negative exponent in monomial");
}

Monomial Monomial::from_support(EdgeSubset support, int s) {
  std::vector<int> e(static_cast<std::size_t>(s), 0);
  for (int i : support.indices()) {
    if (i > s) throw InvalidParams("support exceeds number of variables");
    e[static_cast<std::size_t>(i - 1)] = 1;
  }
  return Monomial(std::move(e));
}

int Monomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::square_free() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int a) { return a <= 1; });
}

EdgeSubset Monomial::support() const {
  EdgeSubset out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) out.insert(static_cast<int>(i) + 1);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw InvalidParams("monomials in different rings");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.variables() != b.variables()) throw InvalidParams("monomials in different rings");
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = a.variables(); i >= 1; --i) {
    const int diff = a.exponent(i) - b.exponent(i);
    if (diff < 0) return std::strong_ordering::greater;
    if (diff > 0) return std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(int s, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(s), 0);
  // Compositions of d into s parts.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == s - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.emplace_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(i)] = a;
      self(self, i + 1, left - a);
    }
  };
  if (s > 0 && d >= 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) { return grevlex_less(y, x); });
  return out;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 1; i <= m.variables(); ++i) {
    const int a = m.exponent(i);
    if (a == 0) continue;
    if (!out.empty()) out += '*';
    out += 't' + std::to_string(i);
    if (a > 1) out += '^' + std::to_string(a);
  }
  return out.empty() ? "1" : out;
}

}  // namespace graphcodes
