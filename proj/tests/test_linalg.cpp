#include "braidss/braidss.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace braidss;

namespace {
RationalMatrix dense(std::vector<std::vector<Rational>> a) { return RationalMatrix::from_dense(a); }
}  // namespace

TEST(RationalMatrix, SparseStorage) {
  RationalMatrix m(3, 2);
  m.set(1, 1, Rational(2, 3));
  m.add(1, 1, Rational(-2, 3));
  m.add(2, 0, 5);
  EXPECT_EQ(m.nonzeros(), 1u);
  EXPECT_EQ(m.at(2, 0), 5);
  EXPECT_EQ(m.transpose().at(0, 2), 5);
  EXPECT_EQ(m.transpose().transpose(), m);
  EXPECT_THROW(m.at(3, 0), ArgumentError);
}

TEST(Rank, SmallExamples) {
  EXPECT_EQ(rank(dense({{0, 2}, {0, 1}})), 1u);
  EXPECT_EQ(rank(RationalMatrix(4, 0)), 0u);
  EXPECT_EQ(rank(RationalMatrix(0, 3)), 0u);
  EXPECT_EQ(rank(RationalMatrix(3, 3)), 0u);
  EXPECT_EQ(rank(RationalMatrix::identity(5)), 5u);
  EXPECT_EQ(rank(dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})), 2u);
  EXPECT_EQ(rank(dense({{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 1}})), 1u);
  EXPECT_EQ(rank(dense({{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), Rational(1, 7)}})), 2u);
}

TEST(Rank, AgreesWithGaussianOnRandomMatrices) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(0, 8)(rng), c = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    // Low-rank products make dependent rows common.
    std::size_t inner = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    RationalMatrix a(r, inner), b(inner, c);
    auto fill = [&](RationalMatrix& m) {
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (rng() % 3) m.set(i, j, Rational(static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 4) + 1));
    };
    fill(a);
    fill(b);
    RationalMatrix m = multiply(a, b);
    std::size_t g = rank_gaussian(m);
    EXPECT_EQ(rank(m), g);
    EXPECT_LE(g, inner);
    EXPECT_EQ(rank(m.transpose()), g);
  }
}

TEST(Rank, LargeEntriesStayExact) {
  // Hilbert matrices are nonsingular but badly conditioned.
  std::vector<std::vector<Rational>> h(12, std::vector<Rational>(12));
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) h[i][j] = Rational(1, i + j + 1);
  EXPECT_EQ(rank(dense(h)), 12u);
  h[11] = h[10];
  EXPECT_EQ(rank(dense(h)), 11u);
}

TEST(Multiply, ShapesAndValues) {
  RationalMatrix a = dense({{1, 2}, {3, 4}});
  RationalMatrix b = dense({{0, 1}, {1, 0}});
  EXPECT_EQ(multiply(a, b), dense({{2, 1}, {4, 3}}));
  EXPECT_EQ(multiply(a, RationalMatrix::identity(2)), a);
  EXPECT_THROW(multiply(a, RationalMatrix(3, 1)), ArgumentError);
  EXPECT_TRUE(multiply(RationalMatrix(2, 0), RationalMatrix(0, 3)).is_zero());
  EXPECT_EQ(multiply(RationalMatrix(2, 0), RationalMatrix(0, 3)).rows(), 2u);
}
