#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "graphcodes/codes.hpp"
#include "graphcodes/eulerian3.hpp"
#include "graphcodes/formulas.hpp"
#include "graphcodes/parallel.hpp"
#include "support/oracle.hpp"
#include "support/suite.hpp"

using namespace graphcodes;

namespace {

Monomial sq(int s, int i) {
  std::vector<int> e(s, 0);
  e[i - 1] = 2;
  return Monomial(e);
}

std::vector<std::uint64_t> masks(const std::vector<EdgeSubset>& v) {
  std::vector<std::uint64_t> out;
  for (auto e : v) out.push_back(e.mask());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Eulerian3, LeadingTerms) {
  const auto c4 = family::cycle(4);
  const auto lt = eulerian_leading_terms(c4, 2);
  std::set<Monomial> want;
  for (int i = 1; i <= 4; ++i) want.insert(sq(4, i));
  for (auto m : {0b0011, 0b0101, 0b0110}) want.insert(Monomial::from_support(EdgeSubset(m), 4));
  EXPECT_EQ(lt, want);

  const auto k3 = eulerian_leading_terms(family::complete(3), 3);
  EXPECT_EQ(k3.size(), 3U);  // squares only
  const auto tree = eulerian_leading_terms(family::path(5), 4);
  for (const auto& m : tree) EXPECT_FALSE(m.square_free());
}

TEST(Eulerian3, StandardMonomialExamples) {
  for (const auto& [name, g] : suite::graphs()) {
    const auto b0 = standard_monomials(g, 0);
    ASSERT_EQ(b0.size(), 1U) << name;
    EXPECT_EQ(b0[0].degree(), 0);
    const auto b1 = standard_monomials(g, 1);
    EXPECT_EQ(static_cast<int>(b1.size()), g.s()) << name;
  }
  const auto c4 = standard_monomials(family::cycle(4), 2);
  std::vector<std::string> got;
  for (const auto& m : c4) got.push_back(to_string(m));
  EXPECT_EQ(got, (std::vector<std::string>{"t1*t4", "t2*t4", "t3*t4"}));
}

TEST(Eulerian3, ParityJoinExamples) {
  const auto c4 = family::cycle(4);
  auto cert = is_parity_join(c4, EdgeSubset(0b0111));
  EXPECT_FALSE(cert.is_parity_join);
  ASSERT_TRUE(cert.violation.has_value());
  EXPECT_EQ(cert.violation->meet, 3);
  EXPECT_EQ(cert.violation->half, 2);

  const auto tree = family::path(5);
  for (std::uint64_t j = 0; j < 16; ++j) EXPECT_TRUE(is_parity_join(tree, EdgeSubset(j)).is_parity_join);

  const auto k4 = family::complete(4);
  const auto four_cycles = enumerate_eulerian(k4, true);
  for (auto c : four_cycles) {
    auto idx = c.indices();
    EdgeSubset three;
    for (int i = 0; i < 3; ++i) three.insert(idx[i]);
    EXPECT_FALSE(is_parity_join(k4, three).is_parity_join);
  }
}

TEST(Eulerian3, JdExamples) {
  const auto c4 = family::cycle(4);
  EXPECT_EQ(enumerate_Jd(c4, 1).size(), 4U);
  EXPECT_EQ(masks(enumerate_Jd(c4, 2)), (std::vector<std::uint64_t>{0b1001, 0b1010, 0b1100}));
  EXPECT_TRUE(enumerate_Jd(c4, 3).empty());
  EXPECT_TRUE(enumerate_Jd(c4, -1).empty());
  EXPECT_EQ(dim_ternary(c4, 2), 4U);
  EXPECT_EQ(dim_ternary(family::cycle(6), 2), 16U);
  EXPECT_EQ(dim_ternary(family::complete(3), 2), 4U);
}

TEST(Eulerian3, JdMatchesDefinitionAndBasis) {
  for (const auto& [name, g] : suite::graphs()) {
    for (int d = 0; d <= g.s(); ++d) {
      const auto jd = enumerate_Jd(g, d);
      EXPECT_EQ(masks(jd), oracle::jd(g, d)) << name << " d=" << d;
      std::vector<EdgeSubset> supports;
      for (const auto& m : standard_monomials(g, d)) supports.push_back(m.support());
      EXPECT_EQ(masks(supports), masks(jd)) << name << " d=" << d;
    }
  }
}

TEST(Eulerian3, DimensionMatchesRankOverGF3) {
  const auto f3 = Field::make(3);
  for (const auto& [name, g] : suite::graphs()) {
    const auto x = parameterize(g, f3);
    const auto h = hilbert_function(x);
    for (std::size_t d = 0; d < h.size() + 1; ++d)
      EXPECT_EQ(dim_ternary(g, static_cast<int>(d)), d < h.size() ? h[d] : x.size()) << name << " d=" << d;
  }
}

TEST(Eulerian3, MaxParityJoin) {
  EXPECT_EQ(max_parity_join(family::cycle(4)).mu, 2);
  EXPECT_EQ(max_parity_join(family::cycle(4)).reg(), 1);
  EXPECT_EQ(max_parity_join(family::complete(4)).mu, 3);
  EXPECT_EQ(max_parity_join(family::path(6)).mu, 5);
  const auto f3 = Field::make(3);
  for (const auto& [name, g] : suite::graphs()) {
    const auto m = max_parity_join(g);
    EXPECT_EQ(m.mu, oracle::mu(g)) << name;
    EXPECT_EQ(m.witness.size(), m.mu);
    EXPECT_TRUE(is_parity_join(g, m.witness).is_parity_join);
    EXPECT_EQ(m.reg(), regularity_index(parameterize(g, f3))) << name;
  }
  EXPECT_THROW(max_parity_join(family::complete(6), 10), CapExceeded);
}

TEST(Eulerian3, NoEvenEulerianMeansTorusCount) {
  for (const auto& g : {family::path(5), family::cycle(5), family::complete(3)})
    for (int d = 0; d <= 6; ++d) {
      BigInt sum = 0;
      for (int i = 0; d - 2 * i >= 0; ++i) sum += binom(g.s(), d - 2 * i);
      EXPECT_EQ(BigInt(dim_ternary(g, d)), sum);
      EXPECT_EQ(BigInt(dim_ternary(g, d)), k_formula(g.s(), d, 3));
    }
}

TEST(Eulerian3, DimensionInvariantUnderEdgeOrder) {
  std::mt19937 rng(5);
  for (const auto& [name, g] : suite::graphs()) {
    std::vector<int> order(g.s());
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    const auto h = g.permuted(order);
    for (int d = 0; d <= g.s(); ++d) EXPECT_EQ(dim_ternary(g, d), dim_ternary(h, d)) << name;
    EXPECT_EQ(max_parity_join(g).mu, max_parity_join(h).mu) << name;
  }
}

TEST(Eulerian3, DeterministicAcrossWorkerCounts) {
  const auto g = family::complete(5);
  std::vector<std::uint64_t> base;
  {
    ScopedWorkerCount w(1);
    base = masks(enumerate_Jd(g, 4));
  }
  ScopedWorkerCount w(4);
  EXPECT_EQ(masks(enumerate_Jd(g, 4)), base);
}
