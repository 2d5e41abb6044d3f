#include "graphcodes_cli/verify.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "graphcodes/formulas.hpp"
#include "graphcodes/gf.hpp"

namespace graphcodes::cli {

namespace {

std::optional<std::vector<int>> multipartite_classes(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::vector<int> label(n + 1, -1);
  std::vector<int> sizes;
  for (int v = 1; v <= n; ++v) {
    if (label[v] >= 0) continue;
    const int c = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (int u = 1; u <= n; ++u) {
      if (u != v && adj[v][u]) continue;
      if (label[u] >= 0) return std::nullopt;
      label[u] = c;
      ++sizes.back();
    }
  }
  for (const auto& e : g.edges())
    if (label[e.u] == label[e.v]) return std::nullopt;
  long long cross = static_cast<long long>(n) * n;
  for (int a : sizes) cross -= static_cast<long long>(a) * a;
  if (cross / 2 != g.s() || sizes.size() < 2) return std::nullopt;
  return sizes;
}

bool same_edge_set(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.s() != b.s()) return false;
  return std::all_of(a.edges().begin(), a.edges().end(),
                     [&](const Edge& e) { return b.edge_index(e.u, e.v).has_value(); });
}

Status judge(Relation rel, const BigInt& obs, const BigInt& exp, const std::optional<BigInt>& upper) {
  bool ok = false;
  switch (rel) {
    case Relation::Equal:
      ok = obs == exp;
      break;
    case Relation::AtMost:
      ok = obs <= exp;
      break;
    case Relation::AtLeast:
      ok = obs >= exp;
      break;
    case Relation::Between:
      ok = obs >= exp && upper && obs <= *upper;
      break;
  }
  return ok ? Status::Pass : Status::Fail;
}

class Builder {
 public:
  explicit Builder(VerifyReport& r) : r_(r) {}

  void compare(std::string name, std::optional<int> d, Relation rel, const std::optional<BigInt>& observed,
               BigInt expected, std::optional<BigInt> upper = std::nullopt, std::string skip_reason = {}) {
    CheckRow row{std::move(name), d, rel, observed, std::move(expected), std::move(upper), Status::Skipped, {}};
    if (observed)
      row.status = judge(rel, *observed, *row.expected, row.upper);
    else
      row.reason = skip_reason.empty() ? "not computed" : std::move(skip_reason);
    r_.checks.push_back(std::move(row));
  }

  void skip(std::string name, std::optional<int> d, std::string reason) {
    CheckRow row;
    row.check = std::move(name);
    row.d = d;
    row.reason = std::move(reason);
    r_.checks.push_back(std::move(row));
  }

 private:
  VerifyReport& r_;
};

std::string refusal(const Error& e) { return e.what(); }

}  // namespace

Shape recognize(const Graph& g) {
  Shape sh;
  sh.summary = summarize(g);
  sh.connected = sh.summary.b0 == 1;
  if (!sh.connected) return sh;
  sh.multipartite_parts = multipartite_classes(g);
  const auto deg = g.degrees(EdgeSubset::first(g.s()));
  if (g.n() == g.s() && g.n() % 2 == 0 && std::all_of(deg.begin() + 1, deg.end(), [](int x) { return x == 2; }))
    sh.even_cycle_half = g.n() / 2;
  if (auto colour = two_colouring(g)) {
    const int ones = static_cast<int>(std::count(colour->begin() + 1, colour->end(), 1));
    sh.bipartite_parts = std::pair{g.n() - ones, ones};
  }
  return sh;
}

VerifyReport verify(const Graph& g, int q, int d_max, const VerifyOptions& opts) {
  if (d_max < 0) throw InvalidParams("d_max must be non-negative");
  const Field f = Field::make(q);
  const Shape shape = recognize(g);

  VerifyReport rep;
  rep.graph_name = opts.graph_name;
  rep.n = g.n();
  rep.s = g.s();
  for (const auto& e : g.edges()) rep.edges.emplace_back(e.u, e.v);
  rep.q = q;
  rep.d_max = d_max;
  Builder b(rep);

  const int s = g.s();
  const bool generic_q = q >= 3;
  const BigInt expected_m = expected_length(shape.summary, q);
  const bool is_torus = generic_q && expected_m == boost::multiprecision::pow(BigInt(q - 1), s - 1);
  const auto& parts = shape.multipartite_parts;
  const bool complete_bip = parts && parts->size() == 2;
  const bool complete = parts && static_cast<int>(parts->size()) == g.n();
  // K_{1,1,1} is the triangle, which the multipartite row does not cover.
  const bool multipartite = parts && parts->size() > 2 && g.n() > 3;
  std::optional<std::vector<int>> parallel;
  if (opts.parallel_lengths && same_edge_set(g, family::parallel_composition(*opts.parallel_lengths)))
    parallel = opts.parallel_lengths;

  std::optional<ToricSet> x;
  try {
    x = parameterize(g, f, opts.torus_cap);
    rep.length = BigInt(x->size());
    b.compare("length.formula", std::nullopt, Relation::Equal, rep.length, expected_m);
  } catch (const LengthMismatch& e) {
    rep.length = e.observed();
    b.compare("length.formula", std::nullopt, Relation::Equal, e.observed(), e.expected());
  } catch (const CapExceeded& e) {
    b.skip("length.formula", std::nullopt, refusal(e));
  }

  // Hilbert function up to d_max or the plateau, whichever is later.
  std::map<int, CodeInstance> codes;
  std::map<int, BigInt> dims;
  std::optional<int> reg;
  std::string reg_skip = "length not computed";
  if (x) {
    try {
      for (int d = 0;; ++d) {
        std::size_t k = 0;
        if (d <= d_max) {
          auto code = make_code(*x, d, opts.monomial_cap);
          k = code.k;
          codes.emplace(d, std::move(code));
        } else {
          k = dimension(*x, d, opts.monomial_cap);
        }
        dims[d] = BigInt(k);
        if (k == x->size() && !reg) reg = d;
        if (reg && d >= d_max) break;
      }
    } catch (const CapExceeded& e) {
      reg_skip = refusal(e);
    }
  }

  std::optional<BigInt> prev_delta;
  for (int d = 0; d <= d_max; ++d) {
    DegreeRow row{d, {}, {}, {}};
    std::optional<BigInt> dim;
    if (auto it = dims.find(d); it != dims.end()) dim = it->second;
    const std::string dim_skip = x ? reg_skip : "length not computed";
    row.dim = dim;

    if (is_torus) b.compare("dim.torus", d, Relation::Equal, dim, k_formula(s, d, q), {}, dim_skip);
    if (complete_bip && generic_q)
      b.compare("dim.complete_bipartite", d, Relation::Equal, dim,
                dim_complete_bipartite((*parts)[0], (*parts)[1], d, q), {}, dim_skip);
    if (shape.even_cycle_half && *shape.even_cycle_half >= 2 && q == 3)
      b.compare("dim.even_cycle_ternary", d, Relation::Equal, dim, dim_even_cycle_ternary(*shape.even_cycle_half, d),
                {}, dim_skip);
    if (q == 3) {
      try {
        b.compare("dim.ternary_parity_join", d, Relation::Equal, dim, BigInt(dim_ternary(g, d, opts.subset_cap)), {},
                  dim_skip);
      } catch (const CapExceeded& e) {
        b.skip("dim.ternary_parity_join", d, refusal(e));
      }
    }

    std::optional<BigInt> delta;
    std::string delta_skip = dim_skip;
    auto code_it = codes.find(d);
    if (code_it != codes.end()) {
      try {
        delta = BigInt(minimum_distance(code_it->second.generator, f, opts.budget).distance);
      } catch (const BudgetExceeded& e) {
        delta_skip = refusal(e);
      }
      row.singleton = BigInt(x->size()) - BigInt(code_it->second.k) + 1;
    }
    row.mindist = delta;

    if (code_it != codes.end()) {
      b.compare("mindist.singleton", d, Relation::AtMost, delta, *row.singleton, {}, delta_skip);
      if (prev_delta) {
        if (*prev_delta > 1)
          b.compare("mindist.decreasing", d, Relation::AtMost, delta, *prev_delta - 1, {}, delta_skip);
        else
          b.compare("mindist.stays_one", d, Relation::Equal, delta, 1, {}, delta_skip);
      }
      if (reg && d >= *reg) b.compare("mindist.after_reg", d, Relation::Equal, delta, 1, {}, delta_skip);
    } else {
      b.skip("mindist.singleton", d, delta_skip);
    }

    if (d >= 1 && generic_q) {
      if (is_torus && s >= 2)
        b.compare("mindist.torus", d, Relation::Equal, delta, mindist_torus_formula(s, d, q), {}, delta_skip);
      if (complete_bip && (*parts)[0] >= 2 && (*parts)[1] >= 2)
        b.compare("mindist.complete_bipartite", d, Relation::Equal, delta,
                  mindist_complete_bipartite((*parts)[0], (*parts)[1], d, q), {}, delta_skip);
      if (shape.bipartite_parts && shape.bipartite_parts->first >= 2 && shape.bipartite_parts->second >= 2) {
        auto [lo, hi] = mindist_bipartite_bounds(shape.bipartite_parts->first, shape.bipartite_parts->second, d, q);
        b.compare("mindist.bipartite_bounds", d, Relation::Between, delta, lo, hi, delta_skip);
      }
      if (shape.connected && !shape.summary.bipartite) {
        const BigInt lo = mindist_nonbipartite_lower(g.n(), d, q);
        if (!delta && code_it != codes.end()) {
          // The exact search was refused; deciding the bound alone is often cheaper.
          try {
            const bool ok =
                minimum_distance_at_least(code_it->second.generator, f, static_cast<std::uint64_t>(lo), opts.budget);
            CheckRow r;
            r.check = "mindist.nonbipartite_lower";
            r.d = d;
            r.relation = Relation::AtLeast;
            r.expected = lo;
            r.status = ok ? Status::Pass : Status::Fail;
            r.reason = ok ? "certified by information-set bound" : "codeword below the bound exists";
            if (!ok) r.observed = lo - 1;
            rep.checks.push_back(std::move(r));
          } catch (const BudgetExceeded& e) {
            b.skip("mindist.nonbipartite_lower", d, refusal(e));
          }
        } else {
          b.compare("mindist.nonbipartite_lower", d, Relation::AtLeast, delta, lo, {}, delta_skip);
        }
      }
    }
    if (delta) prev_delta = delta;
    else prev_delta.reset();
    rep.degrees.push_back(std::move(row));
  }

  std::optional<BigInt> reg_big = reg ? std::optional<BigInt>(*reg) : std::nullopt;
  rep.regularity.bruteforce = reg_big;
  auto closed = [&](const char* name, const BigInt& value) {
    if (!rep.regularity.closed_form) rep.regularity.closed_form = value;
    b.compare(name, std::nullopt, Relation::Equal, reg_big, value, {}, reg_skip);
  };
  if (generic_q) {
    if (is_torus) closed("reg.torus", BigInt(s - 1) * (q - 2));
    if (complete_bip) closed("reg.complete_bipartite", reg_closed_form(reg_family::CompleteBipartite{(*parts)[0], (*parts)[1]}, q));
    if (complete && g.n() > 3) closed("reg.complete", reg_closed_form(reg_family::Complete{g.n()}, q));
    if (multipartite) closed("reg.complete_multipartite", reg_closed_form(reg_family::CompleteMultipartite{*parts}, q));
    if (shape.even_cycle_half && *shape.even_cycle_half >= 2)
      closed("reg.even_cycle", reg_closed_form(reg_family::EvenCycle{*shape.even_cycle_half}, q));
    if (parallel) closed("reg.parallel", reg_parallel(*parallel, q));
  }

  if (q == 3) {
    std::optional<int> mu;
    try {
      mu = max_parity_join(g, opts.subset_cap).mu;
      rep.regularity.ternary_parity_join = BigInt(*mu - 1);
      b.compare("reg.ternary_parity_join", std::nullopt, Relation::Equal, reg_big, BigInt(*mu - 1), {}, reg_skip);
    } catch (const CapExceeded& e) {
      b.skip("reg.ternary_parity_join", std::nullopt, refusal(e));
    }
    const std::string mu_skip = "parity join search refused";
    const std::optional<BigInt> mu_big = mu ? std::optional<BigInt>(*mu) : std::nullopt;
    if (complete_bip)
      b.compare("mu.complete_bipartite", std::nullopt, Relation::Equal, mu_big,
                mu_closed_form(reg_family::CompleteBipartite{(*parts)[0], (*parts)[1]}), {}, mu_skip);
    if (complete && g.n() > 3)
      b.compare("mu.complete", std::nullopt, Relation::Equal, mu_big, mu_closed_form(reg_family::Complete{g.n()}), {},
                mu_skip);
    if (multipartite)
      b.compare("mu.complete_multipartite", std::nullopt, Relation::Equal, mu_big,
                mu_closed_form(reg_family::CompleteMultipartite{*parts}), {}, mu_skip);
    if (parallel) {
      const bool all_even = std::all_of(parallel->begin(), parallel->end(), [](int k) { return k % 2 == 0; });
      const bool all_odd = std::all_of(parallel->begin(), parallel->end(), [](int k) { return k % 2 == 1; });
      if (all_even || all_odd)
        b.compare("mu.parallel", std::nullopt, Relation::Equal, mu_big,
                  mu_closed_form(mu_family::ParallelComposition{*parallel}), {}, mu_skip);
    }
  }
  return rep;
}

}  // namespace graphcodes::cli
