#include <gtest/gtest.h>

#include <random>

#include "dsgl/superalg.hpp"

using namespace dsgl;

namespace {

AlgebraElement u(int n, int i, int j, const Rational& c = 1) { return AlgebraElement::unit(n, i, j, c); }

// Independent oracle: supercommutator of explicit 2n x 2n matrices.
using Dense = std::vector<std::vector<Rational>>;

Dense dense(const AlgebraElement& a) {
  int m = 2 * a.rank();
  Dense d(m, std::vector<Rational>(m));
  for (const auto& [unit, c] : a.terms()) d[unit.i - 1][unit.j - 1] += c;
  return d;
}

Dense mul(const Dense& a, const Dense& b) {
  std::size_t m = a.size();
  Dense out(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Dense supercommutator(const Dense& a, const Dense& b, int sign) {
  Dense ab = mul(a, b), ba = mul(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j] * sign;
  return ab;
}

}  // namespace

TEST(Superalg, SpecBracketValues) {
  EXPECT_EQ(bracket(u(2, 1, 2), u(2, 2, 1)), u(2, 1, 1) - u(2, 2, 2));
  EXPECT_TRUE(bracket(u(2, 1, 3), u(2, 1, 3)).is_zero());
  EXPECT_EQ(bracket(u(2, 1, 3), u(2, 3, 1)), u(2, 1, 1) + u(2, 3, 3));
}

TEST(Superalg, BracketAgreesWithMatrixOracle) {
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= 2 * n; ++i)
      for (int j = 1; j <= 2 * n; ++j)
        for (int k = 1; k <= 2 * n; ++k)
          for (int l = 1; l <= 2 * n; ++l) {
            MatrixUnit a{i, j}, b{k, l};
            int sign = (bit(unit_parity(a, n)) && bit(unit_parity(b, n))) ? -1 : 1;
            ASSERT_EQ(dense(bracket_units(n, a, b)), supercommutator(dense(u(n, i, j)), dense(u(n, k, l)), sign))
                << unit_name(a) << " " << unit_name(b);
          }
}

TEST(Superalg, ParityOfUnits) {
  EXPECT_EQ(unit_parity({1, 2}, 2), Parity::Even);
  EXPECT_EQ(unit_parity({3, 4}, 2), Parity::Even);
  EXPECT_EQ(unit_parity({1, 3}, 2), Parity::Odd);
  EXPECT_EQ(unit_parity({4, 1}, 2), Parity::Odd);
}

TEST(Superalg, GoodGrading) {
  EXPECT_EQ(good_degree({1, 3}, 2), 0);
  EXPECT_EQ(good_degree({1, 4}, 3), 0);
  EXPECT_EQ(good_degree({1, 2}, 2), 1);
  EXPECT_EQ(good_degree({4, 1}, 2), -1);
  // additive on brackets
  for (int n = 2; n <= 3; ++n)
    for (const auto& r : all_roots(n))
      for (const auto& s : all_roots(n)) {
        AlgebraElement br = bracket_units(n, r.root_vector(), s.root_vector());
        for (const auto& [w, c] : br.terms())
          EXPECT_EQ(good_degree(w, n), good_degree(r.root_vector(), n) + good_degree(s.root_vector(), n));
      }
}

TEST(Superalg, Roots) {
  Root r{2, 1, 2};
  EXPECT_EQ(r.str(), "e1-e2");
  EXPECT_FALSE(r.is_odd());
  EXPECT_EQ((Root{2, 1, 3}).str(), "e1-d1");
  Root low{2, 4, 1};
  EXPECT_EQ(low.str(), "d2-e1");
  EXPECT_TRUE(low.is_odd());
  EXPECT_FALSE(root_of({2, 2}, 2));
  EXPECT_EQ(all_roots(2).size(), 12u);
  EXPECT_THROW(root_of({5, 1}, 2), std::out_of_range);
}

TEST(Superalg, AutomorphismsSquareToParityAndRespectBrackets) {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i <= 2 * n; ++i)
      for (int j = 1; j <= 2 * n; ++j) {
        AlgebraElement a = u(n, i, j);
        // c squares to the parity automorphism, as supertransposition does
        Rational sign = unit_parity({i, j}, n) == Parity::Odd ? -1 : 1;
        EXPECT_EQ(apply_unit_map(apply_unit_map(a, automorphism_c), automorphism_c), a.scaled(sign));
        EXPECT_EQ(apply_unit_map(apply_unit_map(a, automorphism_at), automorphism_at), a);
      }
    for (const auto& r : all_roots(n))
      for (const auto& s : all_roots(n)) {
        AlgebraElement a = u(n, r.i, r.j), b = u(n, s.i, s.j);
        for (auto f : {automorphism_c, automorphism_at})
          EXPECT_EQ(apply_unit_map(bracket(a, b), f), bracket(apply_unit_map(a, f), apply_unit_map(b, f)));
      }
  }
}

TEST(Superalg, AutomorphismsPreserveStandardEvenBorel) {
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i <= 2 * n; ++i) {
      if (i == n || i == 2 * n) continue;
      for (auto f : {automorphism_c, automorphism_at}) {
        SignedUnit s = f({i, i + 1}, n);
        bool same_block = (s.unit.i <= n) == (s.unit.j <= n);
        EXPECT_TRUE(same_block && s.unit.i < s.unit.j);
      }
    }
}
