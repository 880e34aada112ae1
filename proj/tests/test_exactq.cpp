#include <gtest/gtest.h>

#include <random>

#include "dsgl/exactq.hpp"

using namespace dsgl;

namespace {

SparseMatrix hilbert(std::size_t n) {
  SparseMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.set(i, j, Rational(1, static_cast<long>(i + j + 1)));
  return h;
}

SparseMatrix random_integer(std::size_t r, std::size_t c, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-4, 4);
  SparseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
  return m;
}

}  // namespace

TEST(Exactq, HilbertMatrixHasFullRank) {
  // det H_n != 0 for every n; floating point fails already around n = 12
  for (std::size_t n : {1, 4, 8, 14}) EXPECT_EQ(rank(hilbert(n)), n);
}

TEST(Exactq, RationalArithmeticIsExact) {
  Rational s = 0;
  for (int k = 1; k <= 10; ++k) s += Rational(1, k * (k + 1));
  EXPECT_EQ(s, Rational(10, 11));  // telescoping sum
}

TEST(Exactq, ProductRankBoundedByInnerDimension) {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    SparseMatrix a = random_integer(7, 3, seed), b = random_integer(3, 6, seed + 100);
    EXPECT_LE(rank(a * b), 3u);
    EXPECT_EQ(rank(a * b), rank((a * b).transpose()));
  }
}

TEST(Exactq, KernelVectorsAreAnnihilatedAndRankNullityHolds) {
  for (unsigned seed = 1; seed <= 6; ++seed) {
    SparseMatrix m = random_integer(4, 7, seed) * random_integer(7, 7, seed + 7);
    auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size() + rank(m), m.cols());
    for (const auto& v : ker) EXPECT_TRUE(is_zero(m.apply(v)));
    EXPECT_EQ(span_basis(m.cols(), ker).size(), ker.size());
  }
}

TEST(Exactq, ImageBasisSpansColumns) {
  SparseMatrix m = SparseMatrix::from_dense({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  auto img = image_basis(m);
  EXPECT_EQ(img.size(), 2u);
  for (std::size_t c = 0; c < 3; ++c) EXPECT_TRUE(in_span(img, m.column(c)));
  EXPECT_FALSE(in_span(img, Vector{0, 1, 0}));
}

TEST(Exactq, QuotientProjectionKillsSubspaceAndFixesRepresentatives) {
  std::vector<Vector> sub = {{1, 1, 0, 0}, {0, 1, -1, 2}};
  QuotientBasis q = quotient_basis(4, sub);
  ASSERT_EQ(q.representatives.size(), 2u);
  for (const auto& s : sub) EXPECT_TRUE(is_zero(q.projection.apply(s)));
  for (std::size_t t = 0; t < q.representatives.size(); ++t) {
    Vector img = q.projection.apply(q.representatives[t]);
    for (std::size_t k = 0; k < img.size(); ++k) EXPECT_EQ(img[k], k == t ? 1 : 0);
  }
  EXPECT_THROW(quotient_basis(4, {{1, 0, 0, 0}, {2, 0, 0, 0}}), std::invalid_argument);
}

TEST(Exactq, SolveFindsPreimagesOrReportsNone) {
  SparseMatrix a = SparseMatrix::from_dense({{1, 1}, {1, -1}, {2, 0}});
  auto x = solve(a, {3, 1, 4});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve(a, {1, 0, 0}));
}

TEST(Exactq, MatrixAlgebra) {
  SparseMatrix a = random_integer(3, 3, 9), b = random_integer(3, 3, 10), c = random_integer(3, 3, 11);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * SparseMatrix::identity(3), a);
  EXPECT_EQ((a + b).transpose(), a.transpose() + b.transpose());
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_THROW(a * SparseMatrix(2, 2), std::invalid_argument);
}
