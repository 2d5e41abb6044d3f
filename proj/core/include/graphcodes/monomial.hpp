#pragma once

#include <compare>
#include <string>
#include <vector>

#include "graphcodes/graph.hpp"

namespace graphcodes {

/// Monomial t_1^a_1 ... t_s^a_s as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  /// Square-free monomial with the given support, in s variables.
  static Monomial from_support(EdgeSubset support, int s);

  int variables() const noexcept { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  /// 1-indexed.
  int exponent(int i) const { return exps_.at(static_cast<std::size_t>(i - 1)); }
  int degree() const noexcept;
  bool square_free() const noexcept;
  EdgeSubset support() const;
  bool divides(const Monomial& other) const;

  /// Structural equality; use grevlex_compare for the monomial order.
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on exponent vectors, for use as a set key only.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Graded reverse lexicographic order with t_1 > t_2 > ... > t_s: higher
/// degree wins; at equal degree a > b iff the rightmost nonzero entry of
/// a - b is negative. Throws InvalidParams on differing lengths.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);
inline bool grevlex_less(const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; }

/// All degree-d monomials in s variables, greatest first under grevlex.
std::vector<Monomial> monomials_of_degree(int s, int d);

/// "t1*t2^2", or "1" for the constant monomial.
std::string to_string(const Monomial& m);

}  // namespace graphcodes
