#include <gtest/gtest.h>

#include <random>

#include "k3bps/kawaiyoshioka.hpp"
#include "k3bps/multicover.hpp"

using namespace k3bps;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::vector<FracSeries> random_inputs(std::mt19937& rng, int m, long order) {
  std::uniform_int_distribution<int> c(-9, 9);
  std::uniform_int_distribution<int> low(-2, 1);
  std::vector<FracSeries> out;
  for (int k = 1; k <= m; ++k) {
    std::map<long, Rational> t;
    for (long e = low(rng); e < order; ++e) t[e] = make_rational(c(rng), 1 + (c(rng) + 9) % 3);
    out.emplace_back(1, std::move(t), order);
  }
  return out;
}

}  // namespace

TEST(Rtilde, Primitive) {
  EXPECT_EQ(rtilde_primitive(0, 6).series, i_series(0, 6));
  EXPECT_TRUE(rtilde_primitive(-3, 6).series.is_zero());
  const auto r1 = rtilde_primitive(1, 4).series;
  EXPECT_EQ(r1, FracSeries(1, {{0, q(-2)}, {1, q(24)}, {2, q(-48)}, {3, q(72)}}, 4));
}

TEST(Rtilde, Multiple) {
  const long order = 8;
  EXPECT_EQ(rtilde_multiple(1, 2, order).series, rtilde_primitive(2, order).series);
  const auto r1 = rtilde_primitive(1, order).series;
  EXPECT_EQ(rtilde_multiple(2, 1, order).series, r1 + q(1, 2) * substitute_cover(r1, 2));
  const auto expect = rtilde_primitive(5, order).series + q(1, 2) * substitute_cover(rtilde_primitive(2, order).series, 2);
  EXPECT_EQ(rtilde_multiple(2, 2, order).series, expect);
}

TEST(DivisibilityIndependence, SmallCases) {
  EXPECT_TRUE(divisibility_independence_check(1, 3, 10));
  EXPECT_TRUE(divisibility_independence_check(2, 1, 10));
  EXPECT_TRUE(divisibility_independence_check(3, 1, 12));
}

TEST(EffCone, ExpansionTerms) {
  std::mt19937 rng(5);
  const auto r = random_inputs(rng, 2, 5);
  const auto p = eff_exp(r);
  EXPECT_EQ(p.star[0], r[0]);
  EXPECT_TRUE(agree(p.star[1], r[1] + q(1, 2) * (r[0] * r[0])));
}

TEST(EffCone, LogInvertsExp) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = random_inputs(rng, 4, 6);
    const auto back = eff_log(eff_exp(r));
    ASSERT_EQ(back.size(), r.size());
    for (std::size_t k = 0; k < r.size(); ++k) EXPECT_TRUE(agree(back[k], r[k]));
  }
}

TEST(Recursion, MultipleCoverInputs) {
  EXPECT_TRUE(recursion_check(1, 1, 8));
  EXPECT_TRUE(recursion_check(3, 1, 8));
}

TEST(Recursion, SyntheticInputs) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 5; ++trial) EXPECT_TRUE(recursion_check(random_inputs(rng, 3, 6)));
}

TEST(Recursion, DetectsBrokenExponential) {
  std::mt19937 rng(2);
  auto r = random_inputs(rng, 2, 5);
  auto p = eff_exp(r);
  // P*_2 - R~_2 must equal R~_1^2 / 2
  EXPECT_FALSE(agree(p.star[1] - r[1], r[0] * r[0]));
  EXPECT_TRUE(agree(p.star[1] - r[1], q(1, 2) * (r[0] * r[0])));
}
