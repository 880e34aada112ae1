#include <gtest/gtest.h>

#include <cstdlib>

#include "dsgl/harness.hpp"

using namespace dsgl;

TEST(Harness, Grids) {
  EXPECT_EQ(tuple_grid(1, -2, 2).size(), 25u);
  EXPECT_EQ(tuple_grid(2, -1, 1).size(), 81u);
  auto a = tuple_sample(3, -2, 2, 20, 4), b = tuple_sample(3, -2, 2, 20, 4);
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 20u);
  // every other sample is atypical in the first odd pair
  for (std::size_t k = 0; k < a.size(); k += 2) EXPECT_EQ(a[k][1], a[k][4]);
  EXPECT_EQ(default_depth(2), 6);
}

TEST(Harness, ConjectureSmallGrid) {
  ConjectureParams p;
  p.n = 1;
  auto rep = verify_conjecture(p);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.cases.size(), 50u);  // two Borels, one odd simple root each, 25 tuples
  EXPECT_EQ(rep.count(Verdict::Certified), 50);
}

TEST(Harness, ConjectureCaseKeysAndDetail) {
  auto c = conjecture_case(BorelLabel(2, {1}), Root{2, 1, 3}, RhoTuple(2, {1, 0, 1, 2}), 4);
  EXPECT_EQ(c.key, "(1)|e1-d1|(1,0|1,2)");
  EXPECT_EQ(c.verdict, Verdict::Certified);
  EXPECT_EQ(c.detail.rfind("(l,a)=0: ", 0), 0u);
}

TEST(Harness, StarAndMaBG) {
  auto star = verify_star(3, 3, 3);
  EXPECT_TRUE(star.ok());
  EXPECT_EQ(star.cases.size(), 18u);
  auto mabg = verify_maBG(2, -1, 1, 6);
  EXPECT_TRUE(mabg.ok());
  EXPECT_GT(mabg.cases.size(), 0u);
  EXPECT_THROW(mabg_case(RhoTuple(2, {1, 1, 1, 2}), 4), std::invalid_argument);
}

TEST(Harness, Gl22Examples) {
  auto rep = verify_gl22_examples(0, 0, 6);
  EXPECT_TRUE(rep.ok());
  long seq = 0, formula = 0;
  for (const auto& c : rep.cases) {
    if (c.key.rfind("seq", 0) == 0) ++seq;
    if (c.key.rfind("formula", 0) == 0) ++formula;
  }
  EXPECT_EQ(seq, 8);
  EXPECT_EQ(formula, 3);
}

TEST(Harness, StructureQuick) {
  auto rep = verify_structure(true);
  for (const auto& c : rep.cases) EXPECT_TRUE(verdict_ok(c.verdict)) << c.key << ": " << c.detail;
}

TEST(Harness, JsonIsDeterministicAcrossThreadCounts) {
  ConjectureParams p;
  p.n = 2;
  p.lo = 0;
  p.hi = 1;
  setenv("DSGL_THREADS", "1", 1);
  std::string one = to_json(verify_conjecture(p), false).dump();
  setenv("DSGL_THREADS", "3", 1);
  std::string three = to_json(verify_conjecture(p), false).dump();
  unsetenv("DSGL_THREADS");
  EXPECT_EQ(one, three);
  EXPECT_EQ(one.find("wall_time_ms"), std::string::npos);
}

TEST(Harness, ExceptionsBecomeFailures) {
  auto cases = run_cases(3, [](std::size_t k) -> CaseResult {
    if (k == 1) throw std::runtime_error("boom");
    return make_case("ok", true, "");
  });
  ASSERT_EQ(cases.size(), 3u);
  EXPECT_EQ(cases[1].verdict, Verdict::Fail);
  EXPECT_EQ(cases[1].key, "case 1");
  EXPECT_NE(cases[1].detail.find("boom"), std::string::npos);
}
