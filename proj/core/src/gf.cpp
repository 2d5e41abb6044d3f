#include "graphcodes/gf.hpp"

#include <string>

namespace graphcodes {
namespace {

using Poly = std::vector<int>;  // coefficients, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inverse_mod_p(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

// Remainder of a modulo b over GF(p); b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inverse_mod_p(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int c = a.back() * lead_inv % p;
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_from_code(int code, int p, int len) {
  Poly a(len, 0);
  for (int i = 0; i < len; ++i, code /= p) a[i] = code % p;
  return a;
}

int code_from_poly(const Poly& a, int p) {
  int code = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) code = code * p + a[i];
  return code;
}

// Monic polynomial of degree `deg` whose lower coefficients encode `code`.
Poly monic(int code, int p, int deg) {
  Poly f = poly_from_code(code, p, deg);
  f.push_back(1);
  return f;
}

bool irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code)
      if (poly_mod(f, monic(code, p, d), p).empty()) return false;
  }
  return true;
}

}  // namespace

std::pair<int, int> prime_power_decompose(long long q) {
  if (q < 2) throw NotAPrimePower(q);
  long long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q is prime
  long long rest = q;
  int e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw NotAPrimePower(q);
  return {static_cast<int>(p), e};
}

Field Field::make(int q) {
  const auto [p, e] = prime_power_decompose(q);
  if (q > kMaxOrder)
    throw InvalidParams("GF(" + std::to_string(q) + ") unsupported: q must be at most 256");

  auto t = std::make_shared<Tables>();
  t->q = q;
  t->p = p;
  t->e = e;

  for (int code = 0;; ++code) {
    Poly f = monic(code, p, e);
    if (irreducible(f, p)) {
      t->modulus = std::move(f);
      break;
    }
  }

  const auto n = static_cast<std::size_t>(q) * static_cast<std::size_t>(q);
  t->add.resize(n);
  t->sub.resize(n);
  t->mul.resize(n);
  for (int a = 0; a < q; ++a) {
    const Poly pa = poly_from_code(a, p, e);
    for (int b = 0; b < q; ++b) {
      const Poly pb = poly_from_code(b, p, e);
      Poly s(e), d(e), prod(2 * e, 0);
      for (int i = 0; i < e; ++i) {
        s[i] = (pa[i] + pb[i]) % p;
        d[i] = ((pa[i] - pb[i]) % p + p) % p;
      }
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      const std::size_t k = static_cast<std::size_t>(a) * q + b;
      t->add[k] = static_cast<Element>(code_from_poly(s, p));
      t->sub[k] = static_cast<Element>(code_from_poly(d, p));
      t->mul[k] = static_cast<Element>(code_from_poly(poly_mod(prod, t->modulus, p), p));
    }
  }

  const int order = q - 1;
  for (int g = 1; g < q; ++g) {
    int x = 1, k = 1;
    for (; k <= order; ++k) {
      x = t->mul[static_cast<std::size_t>(x) * q + g];
      if (x == 1) break;
    }
    if (k == order) {
      t->primitive = static_cast<Element>(g);
      break;
    }
  }

  t->exp.resize(order);
  t->log.assign(q, -1);
  int x = 1;
  for (int k = 0; k < order; ++k) {
    t->exp[k] = static_cast<Element>(x);
    t->log[x] = k;
    x = t->mul[static_cast<std::size_t>(x) * q + t->primitive];
  }
  t->inv.assign(q, 0);
  for (int a = 1; a < q; ++a) t->inv[a] = t->exp[(order - t->log[a]) % order];

  return Field(std::move(t));
}

Element Field::inv(Element a) const {
  if (a == 0) throw DivisionByZero();
  return t_->inv[a];
}

Element Field::pow(Element a, long long n) const {
  if (a == 0) {
    if (n == 0) return 1;
    if (n < 0) throw DivisionByZero();
    return 0;
  }
  const long long order = q() - 1;
  long long k = (static_cast<long long>(t_->log[a]) * (n % order)) % order;
  if (k < 0) k += order;
  return t_->exp[static_cast<std::size_t>(k)];
}

int Field::log(Element a) const {
  if (a == 0) throw DivisionByZero();
  return t_->log[a];
}

Element Field::exp(long long k) const noexcept {
  const long long order = q() - 1;
  k %= order;
  if (k < 0) k += order;
  return t_->exp[static_cast<std::size_t>(k)];
}

std::vector<int> Field::digits(Element a) const { return poly_from_code(a, p(), e()); }

Element Field::from_digits(std::span<const int> digits) const {
  int code = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) code = code * p() + (*it % p() + p()) % p();
  return static_cast<Element>(code);
}

}  // namespace graphcodes
