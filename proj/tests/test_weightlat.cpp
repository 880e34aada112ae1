#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "dsgl/weightlat.hpp"

using namespace dsgl;

namespace {

RhoTuple T(int n, std::vector<long> v) { return RhoTuple(n, std::move(v)); }

// Largest set of disjoint pairs (i, n+j) with t_i = t_{n+j}, by brute force.
int atypicality_oracle(const RhoTuple& t) {
  int n = t.n, best = 0;
  std::vector<int> used(static_cast<std::size_t>(n + 1), 0);
  std::function<void(int, int)> go = [&](int i, int count) {
    if (i > n) {
      best = std::max(best, count);
      return;
    }
    go(i + 1, count);
    for (int j = 1; j <= n; ++j)
      if (!used[j] && t[i] == t[n + j]) {
        used[j] = 1;
        go(i + 1, count + 1);
        used[j] = 0;
      }
  };
  go(1, 0);
  return best;
}

// Kostant partition function over the negative roots of b (odd roots at most once).
long kostant(const std::vector<Root>& neg, std::size_t k, const Weight& rest) {
  if (rest.is_zero()) return 1;
  if (k == neg.size()) return 0;
  long total = 0;
  Weight cur = rest;
  int cap = neg[k].is_odd() ? 1 : 64;
  for (int e = 0; e <= cap; ++e) {
    total += kostant(neg, k + 1, cur);
    cur = cur + Weight::of_root(neg[k]);
    // every coordinate sum stays bounded; stop once rest leaves the cone
    long mass = 0;
    for (long c : cur.coeffs) mass += std::abs(c);
    if (mass > 64) break;
  }
  return total;
}

RhoTuple random_tuple(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<long> v(static_cast<std::size_t>(2 * n));
  for (auto& x : v) x = d(rng);
  return T(n, v);
}

}  // namespace

TEST(Weightlat, BilinearForm) {
  Weight e1(2, {1, 0, 0, 0}), d1(2, {0, 0, 1, 0});
  EXPECT_EQ(bilinear_form(e1, e1), 1);
  EXPECT_EQ(bilinear_form(d1, d1), -1);
  EXPECT_EQ(bilinear_form(e1, d1), 0);
  for (const auto& r : all_roots(3)) EXPECT_EQ(bilinear_form(Weight::ber(3), r), 0);
}

TEST(Weightlat, TupleConversions) {
  EXPECT_EQ(to_tuple(Weight(2)), T(2, {0, -1, -1, 0}));
  EXPECT_EQ(from_tuple(T(2, {3, 1, 4, 1}), distinguished_o(2)), Weight(2, {3, 1, -4, -1}));
  std::mt19937 rng(4);
  for (int k = 0; k < 100; ++k) {
    RhoTuple t = random_tuple(rng, 2);
    EXPECT_EQ(to_tuple(from_tuple(t, BorelLabel(2, {}))), t);
    // the rho-shifted value does not depend on the Borel
    for (const auto& b : enumerate_borels(2)) EXPECT_EQ(from_tuple(t, b) + rho(b), tuple_weight(t));
  }
  EXPECT_EQ(parse_tuple("(1,2|2,1)"), T(2, {1, 2, 2, 1}));
  EXPECT_EQ(parse_tuple("-1|+3"), T(1, {-1, 3}));
  EXPECT_EQ(T(2, {1, 2, 2, 1}).str(), "(1,2|2,1)");
  for (std::string bad : {"1,2|3", "1,,2|3,4", "1|2|3", "a|b"}) EXPECT_THROW(parse_tuple(bad), std::invalid_argument) << bad;
  try {
    parse_tuple("1,x|2,3");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos);
  }
}

TEST(Weightlat, Atypicality) {
  EXPECT_EQ(atypicality(T(2, {5, -1, 5, -1})), 2);
  EXPECT_EQ(atypicality(T(2, {1, 2, 3, 4})), 0);
  EXPECT_EQ(atypicality(T(1, {7, 7})), 1);
  std::mt19937 rng(9);
  for (int k = 0; k < 300; ++k) {
    RhoTuple t = random_tuple(rng, 1 + k % 3);
    EXPECT_EQ(atypicality(t), atypicality_oracle(t)) << t.str();
  }
  // equivalent to counting mutually orthogonal odd roots with (lambda + rho, alpha) = 0
  RhoTuple t = T(2, {1, 1, 1, 2});
  int zero_pairings = 0;
  for (int i = 1; i <= 2; ++i)
    for (int j = 3; j <= 4; ++j)
      if (bilinear_form(tuple_weight(t), Root{2, i, j}) == 0) ++zero_pairings;
  EXPECT_EQ(zero_pairings, 2);  // e1-d1 and e2-d1 share d1
  EXPECT_EQ(atypicality(t), 1);
}

TEST(Weightlat, Antidominance) {
  EXPECT_TRUE(is_antidominant(T(2, {1, 2, 2, 1})));
  EXPECT_EQ(antidominant_representative(T(2, {2, 1, 1, 2})), T(2, {1, 2, 2, 1}));
  std::mt19937 rng(5);
  for (int k = 0; k < 100; ++k) {
    RhoTuple r = antidominant_representative(random_tuple(rng, 3));
    EXPECT_TRUE(is_antidominant(r));
    EXPECT_EQ(antidominant_representative(r), r);
  }
}

TEST(Weightlat, Parity) {
  EXPECT_EQ(par(Weight(2)), Parity::Even);
  EXPECT_EQ(par(Weight::ber(3)), Parity::Odd);
  EXPECT_EQ(par(Weight::ber(2)), Parity::Even);
  Weight w(2, {1, 4, -3, 2});
  for (const auto& r : all_roots(2))
    if (r.is_odd()) {
      EXPECT_NE(par(w - r), par(w));
    }
}

TEST(Weightlat, Projections) {
  Weight ab = tuple_weight(T(2, {3, -2, 3, -2}));
  EXPECT_EQ(pr_alpha(ab, Root{2, 1, 3}), tuple_weight(T(1, {-2, -2})));
  EXPECT_EQ(pr_alpha(Weight(2), Root{2, 1, 3}), Weight(1));
  EXPECT_EQ(pr_alpha(Weight(2, {1, 2, 3, 4}), Root{2, 2, 3}), Weight(1, {1, 4}));
  EXPECT_EQ(pr_I(ab), tuple_weight(T(1, {3, 3})));
  EXPECT_EQ(pr_J(ab), tuple_weight(T(1, {-2, -2})));
  EXPECT_EQ(tuple_pr_J(T(3, {1, 2, 3, 4, 5, 6})), T(2, {2, 3, 5, 6}));
  // projecting rho^b along an odd simple root gives rho of the restricted Borel
  for (int n = 2; n <= 3; ++n)
    for (const auto& b : enumerate_borels(n))
      for (const auto& a : odd_simple_roots(b)) EXPECT_EQ(pr_alpha(rho(b), a), rho(restrict_label(b, a))) << b.str();
}

TEST(Weightlat, LambdaSets) {
  EXPECT_TRUE(in_lambda_maBG(T(2, {4, -1, 4, -1})));
  EXPECT_FALSE(in_lambda_maBG(T(2, {1, 1, 1, 2})));
  EXPECT_TRUE(in_lambda_BG(T(2, {1, 1, 1, 2})));
  EXPECT_FALSE(in_lambda_BG(T(2, {1, 2, 2, 1})));
}

TEST(Weightlat, VermaCharacterMatchesKostantCount) {
  for (int n = 1; n <= 2; ++n)
    for (const auto& b : enumerate_borels(n)) {
      std::vector<Root> neg;
      for (const auto& r : positive_roots(b)) neg.push_back(r.negated());
      RhoTuple t = T(n, std::vector<long>(static_cast<std::size_t>(2 * n), 1));
      Character ch = verma_character(b, t, 4);
      Weight top = from_tuple(t, b);
      for (const auto& [mu, d] : ch.support) {
        ASSERT_TRUE(ch.region.contains(mu));
        EXPECT_EQ(d.total(), kostant(neg, 0, top - mu)) << b.str() << " " << mu.str();
        EXPECT_EQ(d.super(), par(mu) == Parity::Even ? d.total() : -d.total());
      }
    }
}

TEST(Weightlat, SmallCharacters) {
  Character m = verma_character(BorelLabel(1, {}), T(1, {2, 2}), 5);
  ASSERT_EQ(m.support.size(), 2u);
  Weight top = tuple_weight(T(1, {2, 2}));
  EXPECT_EQ(m.at(top).total(), 1);
  EXPECT_EQ(m.at(top - Root{1, 1, 2}).total(), 1);

  // depth-one layer of M^()(lambda) at n=2: one vector below each simple root
  Character c = verma_character(BorelLabel(2, {}), T(2, {0, 0, 0, 0}), 1);
  Weight l = from_tuple(T(2, {0, 0, 0, 0}), BorelLabel(2, {}));
  EXPECT_EQ(c.support.size(), 4u);
  for (const auto& s : simple_roots(BorelLabel(2, {}))) EXPECT_EQ(c.at(l - s).total(), 1);

  EXPECT_EQ(gl11_simple_character(3, 3).support.size(), 1u);
  EXPECT_EQ(gl11_simple_character(3, 1).support.size(), 2u);
  Character bg = bg_character(T(1, {2, 2}), 6);
  EXPECT_EQ(bg.support.size(), 1u);
}

TEST(Weightlat, CharacterIndependenceOfBorel) {
  for (const auto& t : {T(2, {1, 0, 1, 0}), T(2, {2, -1, 0, 1})}) {
    auto borels = enumerate_borels(2);
    std::vector<Character> chars;
    for (const auto& b : borels) chars.push_back(verma_character(b, t, 4));
    for (const auto& [mu, d] : chars[0].support)
      for (const auto& c : chars)
        if (c.region.contains(mu)) {
          EXPECT_EQ(c.at(mu), d);
        }
  }
}

TEST(Weightlat, BGMultiplicities) {
  EXPECT_EQ(bg_multiplicity(T(1, {2, 2}), T(1, {2, 2})), 1);
  EXPECT_EQ(bg_multiplicity(T(1, {2, 2}), T(1, {1, 1})), 1);
  EXPECT_EQ(bg_multiplicity(T(1, {2, 3}), T(1, {1, 2})), 0);
  EXPECT_EQ(bg_multiplicity(T(2, {3, 1, 3, 1}), T(2, {2, 1, 2, 1})), 1);
}
