#include "ricci_lab/integer_matrix.hpp"
#include "ricci_lab/smith.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ricci_lab;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

bool is_unimodular(const IntegerMatrix& m) {
  const Integer det = m.determinant();
  return det == 1 || det == -1;
}

}  // namespace

TEST(IntegerMatrix, ProductAndTranspose) {
  const IntegerMatrix a{{1, 2}, {3, 4}};
  const IntegerMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (IntegerMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), (IntegerMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(a.determinant(), -2);
  EXPECT_EQ(a.rank(), 2u);
}

TEST(IntegerMatrix, RankOfDependentRows) {
  const IntegerMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(a.rank(), 2u);
  EXPECT_EQ(a.determinant(), 0);
}

TEST(Smith, KnownInvariantFactors) {
  const IntegerMatrix a{{1, 2, 0}, {0, 1, 2}, {-1, 0, 1}};
  const SmithDecomposition s = smith_normal_form(a);
  EXPECT_EQ(s.U * a * s.V, s.D);
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{1, 1, 3}));
}

TEST(Smith, DiagonalTwoTwo) {
  const IntegerMatrix a{{2, 0}, {0, 2}};
  EXPECT_EQ(smith_normal_form(a).diagonal(), (std::vector<Integer>{2, 2}));
  const IntegerMatrix b{{2, 0}, {0, 3}};
  EXPECT_EQ(smith_normal_form(b).diagonal(), (std::vector<Integer>{1, 6}));
}

TEST(Smith, ZeroMatrixHasRankZero) {
  const SmithDecomposition s = smith_normal_form(IntegerMatrix(3, 2));
  EXPECT_EQ(s.rank(), 0u);
}

TEST(SmithProperty, RandomMatricesDecompose) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    const IntegerMatrix a = random_matrix(rng, rows, cols, 6);
    const SmithDecomposition s = smith_normal_form(a);
    ASSERT_EQ(s.U * a * s.V, s.D) << a.to_string();
    ASSERT_TRUE(is_unimodular(s.U));
    ASSERT_TRUE(is_unimodular(s.V));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) {
          ASSERT_EQ(s.D(i, j), 0);
        }
    const auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i + 1] != 0) {
        ASSERT_EQ(d[i + 1] % d[i], 0) << a.to_string();
      }
    ASSERT_EQ(s.rank(), a.rank());
  }
}

TEST(SmithProperty, KernelBasisIsAnnihilatedAndFullRank) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 2 + rng() % 4;
    const IntegerMatrix a = random_matrix(rng, rows, cols, 4);
    const IntegerMatrix k = integer_kernel_basis(a);
    ASSERT_EQ(k.cols(), cols - a.rank());
    if (k.cols() == 0) continue;
    ASSERT_EQ(a * k, IntegerMatrix(rows, k.cols()));
    ASSERT_EQ(k.rank(), k.cols());
  }
}
