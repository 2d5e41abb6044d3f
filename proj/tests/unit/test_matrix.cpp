#include <random>

#include <gtest/gtest.h>

#include "graphcodes/matrix.hpp"
#include "support/oracle.hpp"

using graphcodes::Field;
using graphcodes::Matrix;

TEST(Matrix, RrefSmall) {
  const auto f = Field::make(5);
  Matrix m(3, 3);
  const int v[3][3] = {{0, 2, 4}, {1, 1, 1}, {2, 2, 2}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = static_cast<graphcodes::Element>(v[r][c]);
  const auto piv = rref(m, f);
  ASSERT_EQ(piv, (std::vector<std::size_t>{0, 1}));
  ASSERT_EQ(m.rows(), 2U);
  // rows: (1,0,4), (0,1,2)
  EXPECT_EQ(m(0, 0), 1);
  EXPECT_EQ(m(0, 1), 0);
  EXPECT_EQ(m(0, 2), 4);
  EXPECT_EQ(m(1, 2), 2);
}

TEST(Matrix, RankAgreesWithOracle) {
  std::mt19937 rng(7);
  for (int q : {2, 3, 4, 5, 8, 9}) {
    const auto f = Field::make(q);
    const oracle::PolyField ref(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
      Matrix m(rows, cols);
      std::vector<std::vector<int>> plain(rows, std::vector<int>(cols));
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          // sparse entries so that rank deficiency is common
          const int x = rng() % 3 == 0 ? static_cast<int>(rng() % q) : 0;
          m(r, c) = static_cast<graphcodes::Element>(x);
          plain[r][c] = x;
        }
      EXPECT_EQ(rank(m, f), oracle::rank(plain, ref));
    }
  }
}

TEST(Matrix, RrefIsCanonical) {
  // Row operations do not change the reduced form.
  const auto f = Field::make(7);
  std::mt19937 rng(11);
  Matrix a(4, 6);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 6; ++c) a(r, c) = static_cast<graphcodes::Element>(rng() % 7);
  Matrix b = a;
  b.swap_rows(0, 3);
  axpy(b.row(1), 3, b.row(2), f);
  rref(a, f);
  rref(b, f);
  EXPECT_EQ(a, b);
}
