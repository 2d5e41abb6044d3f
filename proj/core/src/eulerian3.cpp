#include "graphcodes/eulerian3.hpp"

#include "graphcodes/formulas.hpp"

#include <algorithm>
#include <string>

namespace graphcodes {
namespace {

std::vector<EdgeSubset> even_eulerian(const Graph& g, std::uint64_t cap) {
  return enumerate_eulerian(g, /*even_edge_count_only=*/true, cap);
}

bool violates(EdgeSubset j, const std::vector<EdgeSubset>& cycles) {
  return std::any_of(cycles.begin(), cycles.end(), [&](EdgeSubset c) { return 2 * (j & c).size() > c.size(); });
}

bool in_Jd(EdgeSubset j, const std::vector<EdgeSubset>& cycles) {
  for (EdgeSubset c : cycles) {
    const int meet = (j & c).size();
    if (2 * meet > c.size()) return false;
    if (2 * meet == c.size() && !j.contains(c.last())) return false;
  }
  return true;
}

// Calls visit(subset) for each size-d subset of {1..s}, in increasing mask order
// of the lowest-index-first combination walk.
template <class Visit>
void for_each_subset(int s, int d, Visit&& visit) {
  if (d < 0 || d > s) return;
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    EdgeSubset e;
    for (int i : idx) e.insert(i);
    visit(e);
    int i = d - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == s - d + i + 1) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < d; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

}  // namespace

std::set<Monomial> eulerian_leading_terms(const Graph& g, int max_degree, std::uint64_t cap) {
  const int s = g.s();
  std::set<Monomial> out;
  if (max_degree >= 2)
    for (int i = 1; i <= s; ++i) {
      std::vector<int> e(static_cast<std::size_t>(s), 0);
      e[static_cast<std::size_t>(i - 1)] = 2;
      out.emplace(std::move(e));
    }
  for (EdgeSubset c : even_eulerian(g, cap)) {
    const int half = c.size() / 2;
    if (half > max_degree) continue;
    const auto edges = c.indices();
    std::vector<int> pick(edges.size(), 0);
    std::fill(pick.end() - half, pick.end(), 1);
    do {
      EdgeSubset alpha;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (pick[i]) alpha.insert(edges[i]);
      const Monomial a = Monomial::from_support(alpha, s);
      const Monomial b = Monomial::from_support(c - alpha, s);
      out.insert(grevlex_less(a, b) ? b : a);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return out;
}

std::vector<Monomial> standard_monomials(const Graph& g, int d, std::uint64_t cap) {
  if (d < 0) return {};
  const int s = g.s();
  // Only divisibility-minimal square-free leading terms matter for
  // square-free candidates; non-square-free candidates are excluded by t_i^2.
  std::vector<EdgeSubset> lead;
  for (const auto& m : eulerian_leading_terms(g, d, cap))
    if (m.square_free()) lead.push_back(m.support());
  std::sort(lead.begin(), lead.end(), [](EdgeSubset a, EdgeSubset b) { return a.size() < b.size(); });
  std::vector<EdgeSubset> minimal;
  for (EdgeSubset l : lead)
    if (std::none_of(minimal.begin(), minimal.end(), [&](EdgeSubset m) { return m.subset_of(l); }))
      minimal.push_back(l);

  std::vector<Monomial> out;
  for_each_subset(s, d, [&](EdgeSubset cand) {
    if (std::none_of(minimal.begin(), minimal.end(), [&](EdgeSubset l) { return l.subset_of(cand); }))
      out.push_back(Monomial::from_support(cand, s));
  });
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_less(b, a); });
  return out;
}

ParityJoinCertificate is_parity_join(const Graph& g, EdgeSubset j, std::uint64_t cap) {
  if (!j.subset_of(EdgeSubset::first(g.s()))) throw InvalidParams("edge subset exceeds the graph's edges");
  ParityJoinCertificate cert;
  cert.join = j;
  for (EdgeSubset c : even_eulerian(g, cap)) {
    ParityWitness w{c, (j & c).size(), c.size() / 2};
    cert.witnesses.push_back(w);
    if (!cert.violation && w.meet > w.half) {
      cert.violation = w;
      cert.is_parity_join = false;
    }
  }
  return cert;
}

std::vector<EdgeSubset> enumerate_Jd(const Graph& g, int d, std::uint64_t cap) {
  if (d < 0 || d > g.s()) return {};
  const BigInt count = binom(g.s(), d);
  if (count > cap) throw CapExceeded("size-" + std::to_string(d) + " edge subsets", count, cap);
  const auto cycles = even_eulerian(g, kDefaultCycleSpaceCap);
  std::vector<EdgeSubset> out;
  for_each_subset(g.s(), d, [&](EdgeSubset j) {
    if (in_Jd(j, cycles)) out.push_back(j);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t dim_ternary(const Graph& g, int d, std::uint64_t cap) {
  std::uint64_t sum = 0;
  for (int e = d; e >= 0; e -= 2) sum += enumerate_Jd(g, e, cap).size();
  return sum;
}

MaxParityJoin max_parity_join(const Graph& g, std::uint64_t cap) {
  const auto cycles = even_eulerian(g, kDefaultCycleSpaceCap);
  const int s = g.s();
  MaxParityJoin best;
  std::uint64_t nodes = 0;
  // Depth-first over subsets adding edges in increasing index. A violating
  // set stays violating under supersets, so its subtree is skipped.
  auto dfs = [&](auto&& self, EdgeSubset j, int next) -> void {
    if (++nodes > cap) throw CapExceeded("parity-join search nodes", BigInt(nodes), cap);
    if (j.size() > best.mu) {
      best.mu = j.size();
      best.witness = j;
    }
    if (j.size() + (s - next + 1) <= best.mu) return;
    for (int e = next; e <= s; ++e) {
      EdgeSubset k = j;
      k.insert(e);
      if (!violates(k, cycles)) self(self, k, e + 1);
    }
  };
  dfs(dfs, EdgeSubset{}, 1);
  return best;
}

}  // namespace graphcodes
