#include "graphcodes/toric.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "graphcodes/parallel.hpp"

namespace graphcodes {

ProjectivePoint ProjectivePoint::normalized(std::vector<Element> coords, const Field& f) {
  auto last = std::find_if(coords.rbegin(), coords.rend(), [](Element x) { return x != 0; });
  if (last == coords.rend()) throw InvalidParams("the zero vector is not a projective point");
  const Element scale = f.inv(*last);
  for (auto& x : coords) x = f.mul(x, scale);
  return ProjectivePoint{std::move(coords)};
}

bool ProjectivePoint::in_torus() const noexcept {
  return std::none_of(coords.begin(), coords.end(), [](Element x) { return x == 0; });
}

namespace {

BigInt torus_size(int dim, int q) {
  BigInt out = 1;
  for (int i = 0; i < dim; ++i) out *= q - 1;
  return out;
}

// Visits every tuple in {0..q-2}^len (discrete logs) in lexicographic order
// of the corresponding encodings. `order` lists logs sorted by exp(log).
std::vector<int> logs_by_encoding(const Field& f) {
  std::vector<int> logs(static_cast<std::size_t>(f.q() - 1));
  std::iota(logs.begin(), logs.end(), 0);
  std::sort(logs.begin(), logs.end(), [&](int a, int b) { return f.exp(a) < f.exp(b); });
  return logs;
}

}  // namespace

std::vector<ProjectivePoint> torus_points(int s, const Field& f, std::uint64_t cap) {
  if (s < 1) throw InvalidParams("torus dimension must be at least 1");
  const BigInt count = torus_size(s - 1, f.q());
  if (count > cap) throw CapExceeded("torus enumeration", count, cap);
  const auto order = logs_by_encoding(f);
  const auto base = order.size();
  const auto total = static_cast<std::uint64_t>(count);
  std::vector<ProjectivePoint> out;
  out.reserve(total);
  std::vector<std::size_t> digit(static_cast<std::size_t>(s - 1), 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::vector<Element> c(static_cast<std::size_t>(s), 1);
    for (std::size_t k = 0; k + 1 < c.size(); ++k) c[k] = f.exp(order[digit[k]]);
    out.push_back(ProjectivePoint{std::move(c)});
    for (std::size_t k = digit.size(); k-- > 0;) {
      if (++digit[k] < base) break;
      digit[k] = 0;
    }
  }
  return out;
}

BigInt expected_length(const GraphSummary& summary, int q) {
  if (summary.bipartite) return torus_size(summary.n - summary.b0 - 1, q);
  BigInt out = torus_size(summary.n - summary.b0 + summary.gamma - 1, q);
  if (q % 2 == 1) out >>= (summary.gamma - 1);
  return out;
}

ToricSet ToricSet::torus(int s, const Field& f, std::uint64_t cap) {
  return ToricSet(f, s, torus_points(s, f, cap), std::nullopt);
}

ToricSet parameterize(const Graph& g, const Field& f, std::uint64_t cap) {
  const int n = g.n(), s = g.s();
  const BigInt count = torus_size(n - 1, f.q());
  if (count > cap) throw CapExceeded("torus enumeration for parameterization", count, cap);
  const auto total = static_cast<std::uint64_t>(count);
  const int order = f.q() - 1;
  const auto stride = static_cast<std::size_t>(s);

  // Image of x = (g^l_1, ..., g^l_{n-1}, 1), normalized by its last
  // coordinate, computed in the log domain.
  std::vector<Element> image(total * stride);
  parallel_for(total, [&](std::size_t begin, std::size_t end, int) {
    std::vector<int> lx(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::size_t rest = idx;
      for (int v = n - 1; v >= 1; --v) {
        lx[static_cast<std::size_t>(v)] = static_cast<int>(rest % static_cast<std::size_t>(order));
        rest /= static_cast<std::size_t>(order);
      }
      lx[static_cast<std::size_t>(n)] = 0;
      const Edge& last = g.edge(s);
      const int shift = lx[static_cast<std::size_t>(last.u)] + lx[static_cast<std::size_t>(last.v)];
      Element* out = image.data() + idx * stride;
      for (int k = 1; k <= s; ++k) {
        const Edge& e = g.edge(k);
        out[k - 1] = f.exp(lx[static_cast<std::size_t>(e.u)] + lx[static_cast<std::size_t>(e.v)] - shift);
      }
    }
  });

  std::vector<std::uint64_t> idx(total);
  std::iota(idx.begin(), idx.end(), std::uint64_t{0});
  auto row = [&](std::uint64_t i) { return image.data() + i * stride; };
  std::sort(idx.begin(), idx.end(),
            [&](std::uint64_t a, std::uint64_t b) { return std::memcmp(row(a), row(b), stride) < 0; });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](std::uint64_t a, std::uint64_t b) { return std::memcmp(row(a), row(b), stride) == 0; }),
            idx.end());

  std::vector<ProjectivePoint> points;
  points.reserve(idx.size());
  for (auto i : idx) points.push_back(ProjectivePoint{std::vector<Element>(row(i), row(i) + stride)});

  const BigInt expected = expected_length(summarize(g), f);
  if (BigInt(points.size()) != expected)
    throw LengthMismatch(BigInt(points.size()), expected);
  return ToricSet(f, s, std::move(points), g);
}

Element evaluate_ratio(const Field& f, const Monomial& m, std::span<const Element> point) {
  if (static_cast<std::size_t>(m.variables()) != point.size())
    throw InvalidParams("monomial and point dimensions differ");
  long long log = 0;
  for (std::size_t k = 0; k < point.size(); ++k) {
    const int a = m.exponents()[k];
    if (a != 0) log += static_cast<long long>(a) * f.log(point[k]);
  }
  log -= static_cast<long long>(m.degree()) * f.log(point[0]);
  return f.exp(log);
}

BigInt monomial_count(int s, int d) {
  if (d < 0) return 0;
  // C(s+d-1, d)
  BigInt out = 1;
  for (int i = 1; i <= d; ++i) out = out * (s - 1 + i) / i;
  return out;
}

Matrix evaluation_matrix(const ToricSet& x, int d, std::uint64_t cap) {
  if (d < 0) throw InvalidParams("degree must be non-negative");
  const BigInt rows = monomial_count(x.s(), d);
  if (rows > cap) throw CapExceeded("degree-" + std::to_string(d) + " monomials", rows, cap);
  const auto monos = monomials_of_degree(x.s(), d);
  const Field& f = x.field();
  const int order = f.q() - 1;

  // Logs of each point's coordinates relative to the first coordinate.
  const auto m = x.size();
  const auto s = static_cast<std::size_t>(x.s());
  std::vector<int> rel(m * s);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& c = x.points()[j].coords;
    const int l1 = f.log(c[0]);
    for (std::size_t k = 0; k < s; ++k) rel[j * s + k] = ((f.log(c[k]) - l1) % order + order) % order;
  }

  Matrix out(monos.size(), m);
  parallel_for(monos.size(), [&](std::size_t begin, std::size_t end, int) {
    for (std::size_t r = begin; r < end; ++r) {
      const auto& e = monos[r].exponents();
      for (std::size_t j = 0; j < m; ++j) {
        long long log = 0;
        for (std::size_t k = 0; k < s; ++k) log += static_cast<long long>(e[k]) * rel[j * s + k];
        out(r, j) = f.exp(log);
      }
    }
  });
  return out;
}

}  // namespace graphcodes
