#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "graphcodes/errors.hpp"

namespace graphcodes {

/// A GF(q) element, encoded as 0..q-1. For q = p^e the base-p digits of the
/// encoding are the coefficients of the polynomial representative (digit i
/// is the coefficient of x^i).
using Element = std::uint8_t;

/// Finite field GF(q), q = p^e <= 256, with full log/antilog tables.
///
/// The reducing polynomial for e > 1 is the monic irreducible of degree e
/// whose lower coefficients form the smallest base-p integer; the primitive
/// element is the smallest encoding that generates the multiplicative
/// group. Both choices are deterministic, so encodings are reproducible.
///
/// Copies share the same immutable tables.
class Field {
 public:
  static constexpr int kMaxOrder = 256;

  /// Throws NotAPrimePower when q is not p^e, InvalidParams when q > 256.
  static Field make(int q);

  int q() const noexcept { return t_->q; }
  int p() const noexcept { return t_->p; }
  int e() const noexcept { return t_->e; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element primitive() const noexcept { return t_->primitive; }

  Element add(Element a, Element b) const noexcept { return t_->add[idx(a, b)]; }
  Element sub(Element a, Element b) const noexcept { return t_->sub[idx(a, b)]; }
  Element neg(Element a) const noexcept { return t_->sub[idx(0, a)]; }
  Element mul(Element a, Element b) const noexcept { return t_->mul[idx(a, b)]; }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  /// a^n; negative n requires a != 0. pow(0, 0) = 1.
  Element pow(Element a, long long n) const;

  /// Discrete log to the primitive element, in 0..q-2. Requires a != 0.
  int log(Element a) const;
  /// primitive^k for any integer k.
  Element exp(long long k) const noexcept;

  bool contains(long long x) const noexcept { return x >= 0 && x < q(); }

  /// Coefficients c_0..c_e of the reducing polynomial (c_e = 1).
  const std::vector<int>& modulus() const noexcept { return t_->modulus; }

  std::vector<int> digits(Element a) const;
  Element from_digits(std::span<const int> digits) const;

  // Table rows for inner loops: row(a)[b] == op(a, b).
  const Element* add_row(Element a) const noexcept { return &t_->add[idx(a, 0)]; }
  const Element* sub_row(Element a) const noexcept { return &t_->sub[idx(a, 0)]; }
  const Element* mul_row(Element a) const noexcept { return &t_->mul[idx(a, 0)]; }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.q() == b.q(); }

 private:
  struct Tables {
    int q = 0, p = 0, e = 0;
    Element primitive = 1;
    std::vector<int> modulus;
    std::vector<Element> add, sub, mul, inv;
    std::vector<Element> exp;  // length q-1
    std::vector<int> log;      // length q, log[0] unused
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::size_t idx(Element a, Element b) const noexcept {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(t_->q) + b;
  }

  std::shared_ptr<const Tables> t_;
};

/// Returns (p, e) with q = p^e, or throws NotAPrimePower.
std::pair<int, int> prime_power_decompose(long long q);

}  // namespace graphcodes
