// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Usage: acceptance [--criterion N]...

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphcodes/codes.hpp"
#include "graphcodes/eulerian3.hpp"
#include "graphcodes/formulas.hpp"
#include "graphcodes/parallel.hpp"
#include "graphcodes_cli/commands.hpp"
#include "graphcodes_cli/report.hpp"
#include "graphcodes_cli/verify.hpp"
#include "support/suite.hpp"

using namespace graphcodes;

namespace {

// Per-cell minimum-distance budget (codewords evaluated).
constexpr std::uint64_t kCellBudget = 50'000'000;

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    check(got == want, os.str());
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks, " << failures_.size() << " failed";
    for (std::size_t i = 0; i < failures_.size() && i < 6; ++i) os << "\n      " << failures_[i];
    if (failures_.size() > 6) os << "\n      ... " << failures_.size() - 6 << " more";
    for (const auto& n : notes_) os << "\n      note: " << n;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string label(const std::string& g, int q, int d = -1) {
  std::string s = g + " q=" + std::to_string(q);
  if (d >= 0) s += " d=" + std::to_string(d);
  return s;
}

// 1. |X| equals the closed form for the whole suite and q in {3,4,5,7,8,9}.
void length_formula_suite(Tally& t) {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    const auto f = Field::make(q);
    for (const auto& [name, g] : suite::graphs()) {
      const BigInt want = expected_length(summarize(g), q);
      try {
        t.equal(BigInt(parameterize(g, f).size()), want, label(name, q));
      } catch (const LengthMismatch& e) {
        t.equal(e.observed(), e.expected(), label(name, q));
      }
    }
  }
}

// 2. Hexagon at q = 5, d = 1.
void hexagon(Tally& t) {
  const auto f = Field::make(5);
  const auto x = parameterize(family::cycle(6), f);
  t.equal(x.size(), 256U, "|X|");
  const auto code = make_code(x, 1);
  t.equal(code.m - code.k + 1, 251U, "Singleton bound");
  const auto [lo, hi] = mindist_bipartite_bounds(3, 3, 1, 5);
  t.equal(lo, 144, "lower bound");
  t.equal(hi, 192, "upper bound");
  const auto delta = minimum_distance(code.generator, f).distance;
  t.check(delta >= 144 && delta <= 192, "delta_X(1) = " + std::to_string(delta) + " outside [144, 192]");
  t.note("delta_X(1) = " + std::to_string(delta));
}

// 3. Torus Hilbert function, plateau and regularity.
void torus_dimension(Tally& t) {
  for (int s : {2, 3, 4})
    for (int q : {3, 4, 5}) {
      const auto x = ToricSet::torus(s, Field::make(q));
      const auto h = hilbert_function(x);
      const std::string g = "T" + std::to_string(s - 1);
      for (std::size_t d = 0; d < h.size(); ++d)
        t.equal(BigInt(h[d]), k_formula(s, static_cast<int>(d), q), label(g, q, static_cast<int>(d)));
      t.equal(BigInt(h.back()), boost::multiprecision::pow(BigInt(q - 1), s - 1), label(g, q) + " plateau");
      t.equal(static_cast<int>(h.size()) - 1, (s - 1) * (q - 2), label(g, q) + " reg");
    }
}

// 4. Complete bipartite dimension, minimum distance and regularity.
void complete_bipartite(Tally& t) {
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 3}})
    for (int q : {3, 5}) {
      const auto f = Field::make(q);
      const auto x = parameterize(family::complete_bipartite(a, b), f);
      const std::string g = "K" + std::to_string(a) + std::to_string(b);
      const int reg = regularity_index(x);
      t.equal(reg, (std::max(a, b) - 1) * (q - 2), label(g, q) + " reg");
      for (int d = 0; d <= reg; ++d) {
        const auto code = make_code(x, d);
        t.equal(BigInt(code.k), dim_complete_bipartite(a, b, d, q), label(g, q, d) + " dim");
        if (d == 0) continue;
        const BigInt want = mindist_complete_bipartite(a, b, d, q);
        try {
          const auto r = minimum_distance(code.generator, f, kCellBudget);
          t.equal(BigInt(r.distance), want, label(g, q, d) + " delta");
        } catch (const BudgetExceeded& e) {
          t.check(false, label(g, q, d) + " delta not computed (k = " + std::to_string(code.k) +
                             ", expected " + want.str() + "): exact search needs " + e.required().str() +
                             " codeword evaluations");
        }
      }
    }
}

// 5. Even cycles over GF(3).
void ternary_even_cycle(Tally& t) {
  const auto f = Field::make(3);
  for (int l : {2, 3, 4}) {
    const auto x = parameterize(family::cycle(2 * l), f);
    const std::string g = "C" + std::to_string(2 * l);
    const int reg = regularity_index(x);
    for (int d = 0; d <= reg + 1; ++d)
      t.equal(BigInt(dimension(x, d)), dim_even_cycle_ternary(l, d), label(g, 3, d));
    t.equal(BigInt(dimension(x, l - 1)), BigInt(1) << (2 * l - 2), label(g, 3, l - 1) + " plateau 2^(s-2)");
  }
}

// 6. Supports of B_d are exactly J_d.
void ternary_bijection(Tally& t) {
  for (const auto& [name, g] : suite::graphs())
    for (int d = 0; d <= g.s(); ++d) {
      std::vector<EdgeSubset> supports;
      for (const auto& m : standard_monomials(g, d)) {
        t.check(m.square_free(), label(name, 3, d) + " non-square-free standard monomial");
        supports.push_back(m.support());
      }
      auto jd = enumerate_Jd(g, d);
      std::sort(supports.begin(), supports.end());
      std::sort(jd.begin(), jd.end());
      t.check(std::adjacent_find(supports.begin(), supports.end()) == supports.end(),
              label(name, 3, d) + " support map not injective");
      t.check(supports == jd, label(name, 3, d) + " supports of B_d differ from J_d (" +
                                  std::to_string(supports.size()) + " vs " + std::to_string(jd.size()) + ")");
    }
}

// Nested ear decompositions used in criteria 7 and 8, as closed walk + paths.
struct Ears {
  std::string name;
  Graph graph;
  std::vector<std::vector<int>> ears;
};

std::vector<Ears> worked_decompositions() {
  return {
      {"C4", family::cycle(4), {{1, 2, 3, 4, 1}}},
      {"C6", family::cycle(6), {{1, 2, 3, 4, 5, 6, 1}}},
      {"C8", family::cycle(8), {{1, 2, 3, 4, 5, 6, 7, 8, 1}}},
      {"par222", family::parallel_composition(std::vector<int>{2, 2, 2}), {{1, 3, 2, 4, 1}, {1, 5, 2}}},
      {"par333", family::parallel_composition(std::vector<int>{3, 3, 3}), {{1, 3, 4, 2, 6, 5, 1}, {1, 7, 8, 2}}},
  };
}

// 7. Ternary dimension and regularity from parity joins.
void ternary_dim_reg(Tally& t) {
  const auto f = Field::make(3);
  for (const auto& [name, g] : suite::graphs()) {
    const auto x = parameterize(g, f);
    const auto h = hilbert_function(x);
    for (std::size_t d = 0; d <= h.size(); ++d) {
      const std::size_t want = d < h.size() ? h[d] : x.size();
      t.equal(dim_ternary(g, static_cast<int>(d)), want, label(name, 3, static_cast<int>(d)) + " dim");
    }
    t.equal(max_parity_join(g).reg(), static_cast<int>(h.size()) - 1, label(name, 3) + " mu-1 vs reg");
  }

  using reg_family::CompleteBipartite;
  struct Row {
    std::string name;
    Graph graph;
    MuFamily row;
  };
  auto par = [](std::vector<int> ks) { return family::parallel_composition(ks); };
  const std::vector<Row> rows = {
      {"P2 as K11", family::path(2), CompleteBipartite{1, 1}},
      {"P3 as K12", family::path(3), CompleteBipartite{1, 2}},
      {"K22", family::complete_bipartite(2, 2), CompleteBipartite{2, 2}},
      {"C4 as K22", family::cycle(4), CompleteBipartite{2, 2}},
      {"K23", family::complete_bipartite(2, 3), CompleteBipartite{2, 3}},
      {"K33", family::complete_bipartite(3, 3), CompleteBipartite{3, 3}},
      {"K4", family::complete(4), reg_family::Complete{4}},
      {"K5", family::complete(5), reg_family::Complete{5}},
      {"K222", family::complete_multipartite(std::vector<int>{2, 2, 2}), reg_family::CompleteMultipartite{{2, 2, 2}}},
      {"K122", family::complete_multipartite(std::vector<int>{1, 2, 2}), reg_family::CompleteMultipartite{{1, 2, 2}}},
      {"par222", par({2, 2, 2}), mu_family::ParallelComposition{{2, 2, 2}}},
      {"par22", par({2, 2}), mu_family::ParallelComposition{{2, 2}}},
      {"par44", par({4, 4}), mu_family::ParallelComposition{{4, 4}}},
      {"par33", par({3, 3}), mu_family::ParallelComposition{{3, 3}}},
      {"par333", par({3, 3, 3}), mu_family::ParallelComposition{{3, 3, 3}}},
      {"par13", par({1, 3}), mu_family::ParallelComposition{{1, 3}}},
  };
  for (const auto& r : rows) t.equal(BigInt(max_parity_join(r.graph).mu), mu_closed_form(r.row), r.name + " mu row");
  for (const auto& e : worked_decompositions()) {
    const auto dec = validate_ear_decomposition(e.graph, e.ears);
    t.equal(BigInt(max_parity_join(e.graph).mu),
            mu_closed_form(mu_family::NestedEars{e.graph.n(), dec.epsilon}), e.name + " mu nested ears");
  }
}

// 8. Regularity table, parallel compositions and nested ears against brute force.
void regularity_table(Tally& t) {
  for (int s = 1; s <= 4; ++s)
    for (int q : {3, 4, 5})
      t.equal(BigInt(regularity_index(ToricSet::torus(s, Field::make(q)))),
              reg_closed_form(reg_family::Torus{s}, q), label("T" + std::to_string(s - 1), q));
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b)
      for (int q : {3, 4, 5})
        t.equal(BigInt(regularity_index(parameterize(family::complete_bipartite(a, b), Field::make(q)))),
                reg_closed_form(reg_family::CompleteBipartite{a, b}, q),
                label("K" + std::to_string(a) + std::to_string(b), q));
  const auto f3 = Field::make(3);
  for (int n : {4, 5})
    t.equal(BigInt(regularity_index(parameterize(family::complete(n), f3))),
            reg_closed_form(reg_family::Complete{n}, 3), label("K" + std::to_string(n), 3));
  for (int n = 4; n <= 8; ++n) {
    const RegFamily row = n % 2 == 0 ? RegFamily(reg_family::EvenCycle{n / 2}) : RegFamily(reg_family::Torus{n});
    t.equal(BigInt(regularity_index(parameterize(family::cycle(n), f3))), reg_closed_form(row, 3),
            label("C" + std::to_string(n), 3));
  }
  t.equal(BigInt(regularity_index(parameterize(family::complete_multipartite(std::vector<int>{2, 2, 2}), f3))),
          reg_closed_form(reg_family::CompleteMultipartite{{2, 2, 2}}, 3), label("K222", 3));
  for (const std::vector<int>& ks : {std::vector<int>{2, 2}, {2, 2, 2}, {3, 3}, {2, 3}})
    t.equal(BigInt(regularity_index(parameterize(family::parallel_composition(ks), f3))), reg_parallel(ks, 3),
            "parallel(" + std::to_string(ks[0]) + "," + std::to_string(ks[1]) + (ks.size() > 2 ? ",..)" : ")"));
  for (const auto& e : worked_decompositions()) {
    const auto dec = validate_ear_decomposition(e.graph, e.ears);
    for (int q : {3, 4}) {
      const BigInt want = reg_nested_ears(e.graph.n(), dec.epsilon, q);
      t.equal(BigInt(regularity_index(parameterize(e.graph, Field::make(q)))), want, label(e.name, q) + " nested ears");
      if (e.name.rfind("par", 0) == 0) {
        const int k = e.name[3] - '0';
        t.equal(reg_parallel(std::vector<int>(3, k), q), want, label(e.name, q) + " nested ears vs parallel");
      }
    }
  }
}

// 9. Minimum distance laws.
void mindist_laws(Tally& t) {
  struct Case {
    std::string name;
    ToricSet x;
  };
  std::vector<Case> cases;
  for (int q : {3, 5}) {
    const auto f = Field::make(q);
    cases.push_back({label("T1", q), ToricSet::torus(2, f)});
    cases.push_back({label("T2", q), ToricSet::torus(3, f)});
    cases.push_back({label("K3", q), parameterize(family::complete(3), f)});
    cases.push_back({label("K4", q), parameterize(family::complete(4), f)});
    cases.push_back({label("K22", q), parameterize(family::complete_bipartite(2, 2), f)});
    cases.push_back({label("K23", q), parameterize(family::complete_bipartite(2, 3), f)});
  }
  const auto f3 = Field::make(3);
  cases.push_back({label("P6", 3), parameterize(family::path(6), f3)});
  cases.push_back({label("C6", 3), parameterize(family::cycle(6), f3)});
  cases.push_back({label("K33", 3), parameterize(family::complete_bipartite(3, 3), f3)});

  std::map<std::string, std::vector<std::uint64_t>> deltas;
  for (const auto& c : cases) {
    const int reg = regularity_index(c.x);
    try {
      const auto p = distance_profile(c.x, reg + 1, kCellBudget);
      t.check(p.complete, c.name + " profile incomplete at d = " + std::to_string(p.stopped_at.value_or(-1)));
      std::uint64_t prev = 0;
      for (const auto& r : p.rows) {
        const std::string at = c.name + " d=" + std::to_string(r.d);
        t.check(r.distance <= r.singleton_bound, at + " Singleton");
        if (r.d > 0 && prev > 1) t.check(r.distance < prev, at + " not decreasing");
        if (r.d > 0 && prev == 1) t.equal(r.distance, 1U, at + " after reaching 1");
        if (r.d >= reg) t.equal(r.distance, 1U, at + " at or past reg");
        prev = r.distance;
        deltas[c.name].push_back(r.distance);
      }
    } catch (const MonotonicityViolation& e) {
      t.check(false, c.name + ": " + e.what());
    }
  }

  for (int q : {3, 5})
    for (int s : {2, 3}) {
      const auto& ds = deltas[label("T" + std::to_string(s - 1), q)];
      for (std::size_t d = 1; d < ds.size(); ++d)
        t.equal(BigInt(ds[d]), mindist_torus_formula(s, static_cast<int>(d), q),
                label("T" + std::to_string(s - 1), q, static_cast<int>(d)) + " torus formula");
    }

  // subgraph lemma: G a subgraph of G' with |X| = |X'| gives delta' <= delta
  for (auto [sub, super] : {std::pair{"P6", "C6"}, {"C6", "K33"}}) {
    const auto& a = deltas[label(sub, 3)];
    const auto& b = deltas[label(super, 3)];
    t.equal(a.front(), b.front(), std::string(sub) + "/" + super + " equal lengths");
    for (std::size_t d = 1; d < std::min(a.size(), b.size()); ++d)
      t.check(b[d] <= a[d], std::string(super) + " vs " + sub + " d=" + std::to_string(d) + ": " +
                                std::to_string(b[d]) + " > " + std::to_string(a[d]));
  }

  for (int q : {3, 5})
    for (int n : {3, 4}) {
      const auto& ds = deltas[label("K" + std::to_string(n), q)];
      for (std::size_t d = 1; d < ds.size(); ++d) {
        const BigInt lo = mindist_nonbipartite_lower(n, static_cast<int>(d), q);
        t.check(BigInt(ds[d]) >= lo, label("K" + std::to_string(n), q, static_cast<int>(d)) +
                                         " below non-bipartite bound " + lo.str());
      }
    }
}

// 10. Determinism, edge-order invariance and worker-count invariance.
std::string cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return std::to_string(code) + ":" + out.str();
}

void determinism(Tally& t) {
  struct Inst {
    std::string family;
    std::string params;
    int q;
    int s;
    int mindist_dmax;
  };
  const std::vector<Inst> insts = {
      {"complete_bipartite", "2,3", 5, 6, 2}, {"complete", "4", 3, 6, 2},         {"cycle", "6", 5, 6, 1},
      {"parallel_composition", "2,3", 3, 5, 2}, {"complete", "4", 5, 6, 2}};
  std::mt19937 rng(2024);
  for (const auto& in : insts) {
    auto base = [&](const std::string& cmd) {
      return std::vector<std::string>{cmd, "--family", in.family, "--params", in.params, "--q", std::to_string(in.q)};
    };
    std::vector<std::vector<std::string>> commands = {base("length"), base("reg")};
    for (int d = 1; d <= 3; ++d) {
      auto a = base("dim");
      a.insert(a.end(), {"--d", std::to_string(d)});
      commands.push_back(a);
    }
    for (int d = 1; d <= in.mindist_dmax; ++d) {
      auto a = base("mindist");
      a.insert(a.end(), {"--d", std::to_string(d)});
      commands.push_back(a);
    }
    std::vector<std::vector<int>> perms;
    for (int i = 0; i < 3; ++i) {
      std::vector<int> p(in.s);
      std::iota(p.begin(), p.end(), 1);
      std::shuffle(p.begin(), p.end(), rng);
      perms.push_back(p);
    }
    for (const auto& cmd : commands) {
      const std::string first = cli(cmd);
      const std::string what = cmd[0] + " " + in.family + " " + in.params + " q=" + std::to_string(in.q);
      t.check(first.rfind("0:", 0) == 0, what + " exited nonzero");
      t.equal(cli(cmd), first, what + " repeated");
      for (const auto& p : perms) {
        std::string order;
        for (std::size_t i = 0; i < p.size(); ++i) order += (i ? "," : "") + std::to_string(p[i]);
        auto c = cmd;
        c.insert(c.end(), {"--seed-order", order});
        t.equal(cli(c), first, what + " seed-order " + order);
      }
      for (int workers : {1, 2, 4}) {
        ScopedWorkerCount w(workers);
        t.equal(cli(cmd), first, what + " workers=" + std::to_string(workers));
      }
    }
  }
  std::string report;
  for (int workers : {1, 3}) {
    ScopedWorkerCount w(workers);
    const auto r = cli::to_json(cli::verify(family::complete(4), 5, 4)).dump();
    if (report.empty()) report = r;
    t.equal(r, report, "verify report workers=" + std::to_string(workers));
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Tally&)> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "length formula over the graph suite", 30, length_formula_suite},
    {2, "hexagon golden values at q=5, d=1", 10, hexagon},
    {3, "torus dimension, plateau and regularity", 60, torus_dimension},
    {4, "complete bipartite dimension, minimum distance, regularity", 300, complete_bipartite},
    {5, "ternary even cycle dimension", 30, ternary_even_cycle},
    {6, "ternary bijection between B_d and J_d", 60, ternary_bijection},
    {7, "ternary dimension, regularity and parity-join rows", 120, ternary_dim_reg},
    {8, "regularity table, parallel compositions, nested ears", 180, regularity_table},
    {9, "minimum distance laws", 300, mindist_laws},
    {10, "determinism and edge-order invariance", 120, determinism},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  int failed = 0;
  for (const auto& c : kCriteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.check(false, std::string("unexpected exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream limit;
    limit << std::fixed << std::setprecision(1) << secs << " s of " << c.limit_seconds << " s";
    t.check(secs <= c.limit_seconds, "time limit exceeded: " + limit.str());
    const bool ok = t.ok();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ("
              << limit.str() << ")\n      " << t.summary() << std::endl;
  }
  return failed ? 1 : 0;
}
