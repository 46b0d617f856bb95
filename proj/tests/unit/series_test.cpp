#include <gtest/gtest.h>

#include <random>

#include "k3bps/nlnumbers.hpp"
#include "k3bps/series.hpp"
#include "support/oracles.hpp"

using namespace k3bps;

namespace {

FracSeries poly(std::map<long, Rational> t, std::optional<long> trunc = std::nullopt) {
  return FracSeries(1, std::move(t), trunc);
}

Rational q(long p, long d = 1) { return make_rational(p, d); }

FracSeries random_series(std::mt19937& rng, long lo, long hi, long trunc) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::map<long, Rational> t;
  for (long k = lo; k <= hi; ++k) t[k] = Rational(c(rng));
  return poly(std::move(t), trunc);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_EQ(parse_rational("-10/4"), q(-5, 2));
  EXPECT_THROW(parse_rational("1/-2"), Error);
  EXPECT_THROW(make_rational(1, 0), Error);
  EXPECT_EQ(floor(q(-7, 2)), -4);
  EXPECT_EQ(ceil(q(-7, 2)), -3);
}

TEST(Series, Multiply) {
  const auto a = poly({{0, q(1)}, {1, q(1)}});
  const auto b = poly({{0, q(1)}, {1, q(-1)}});
  EXPECT_EQ(a * b, poly({{0, q(1)}, {2, q(-1)}}));
  const auto one = FracSeries::constant(q(1));
  EXPECT_EQ(a * one, a);
}

TEST(Series, TruncationOfProduct) {
  // min(Ta + val b, Tb + val a)
  const auto a = poly({{0, q(1)}}, 5);
  const auto b = poly({{2, q(1)}}, 4);
  EXPECT_EQ((a * b).truncation_num(), 4);
  EXPECT_EQ((a + b).truncation_num(), 4);
}

TEST(Series, ThetaSquareAgainstPairEnumeration) {
  const auto a = theta_a(4);
  const auto sq = a * a;
  const auto ref = oracle::theta_square(4);
  ASSERT_EQ(sq.truncation_num(), 4);
  for (long k = 0; k < 4; ++k) EXPECT_EQ(sq.coeff_num(k), Rational(ref[k])) << k;
  EXPECT_EQ(sq.coeff_num(1), 4);
  EXPECT_EQ(sq.coeff_num(2), 4);
}

TEST(Series, Inverse) {
  const auto geo = inv(poly({{0, q(1)}, {1, q(-1)}}), q(6));
  for (long k = 0; k < 6; ++k) EXPECT_EQ(geo.coeff_num(k), 1);
  EXPECT_EQ(geo.truncation_num(), 6);

  EXPECT_EQ(inv(poly({{1, q(1)}}), q(4)), poly({{-1, q(1)}}, 4));

  const auto b = poly({{-1, q(1)}, {0, q(2)}, {1, q(1)}});
  const auto i = inv(b, q(6));
  for (long k = 1; k < 6; ++k) EXPECT_EQ(i.coeff_num(k), Rational(k % 2 == 1 ? k : -k)) << k;
  EXPECT_EQ(i.coeff_num(0), 0);
}

TEST(Series, InverseErrors) {
  EXPECT_THROW(inv(FracSeries::zero(1, 5)), Error);
  try {
    inv(FracSeries::zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroLeadingTerm);
  }
}

TEST(Series, LogExp) {
  EXPECT_TRUE(log1(FracSeries::constant(q(1)), q(5)).is_zero());
  const auto e = exp0(poly({{1, q(1)}}), q(3));
  EXPECT_EQ(e, poly({{0, q(1)}, {1, q(1)}, {2, q(1, 2)}}, 3));
  const auto l = log1(poly({{0, q(1)}, {1, q(24)}, {2, q(324)}}), q(3));
  EXPECT_EQ(l.coeff_num(1), 24);
  EXPECT_EQ(l.coeff_num(2), 36);
  try {
    log1(poly({{0, q(2)}}), q(3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::BadConstantTerm);
  }
}

TEST(Series, InfiniteProduct) {
  const auto yz = infinite_product([](long) { return -24L; }, 5);
  EXPECT_EQ(yz, poly({{0, q(1)}, {1, q(24)}, {2, q(324)}, {3, q(3200)}, {4, q(25650)}}, 5));
  EXPECT_EQ(infinite_product([](long) { return 0L; }, 7), poly({{0, q(1)}}, 7));
  const auto p = infinite_product([](long) { return -1L; }, 12);
  for (int n = 0; n < 12; ++n) EXPECT_EQ(p.coeff_num(n), Rational(oracle::partitions(n))) << n;
}

TEST(Series, SubstituteCover) {
  const auto a = poly({{1, q(1)}, {2, q(-1)}});
  EXPECT_EQ(substitute_cover(a, 1), a);
  EXPECT_EQ(substitute_cover(a, 2), poly({{2, q(-1)}, {4, q(-1)}}));
  EXPECT_EQ(substitute_cover(poly({{-1, q(1)}}), 3), poly({{-3, q(1)}}));
}

TEST(Series, CoefficientAccess) {
  const auto a = poly({{0, q(1)}, {1, q(24)}}, 2);
  EXPECT_EQ(a.coeff(q(1)), 24);
  try {
    a.coeff(q(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BeyondTruncation);
  }
  EXPECT_EQ(theta_quartic(10).coeff(q(9, 8)), 320);
  EXPECT_EQ(a.coeff(q(1, 3)), 0);
  try {
    substitute_cover(theta_a(4), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FractionalExponent);
  }
}

TEST(SeriesProperty, RingLaws) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_series(rng, -2, 4, 7);
    const auto b = random_series(rng, 0, 5, 8);
    const auto c = random_series(rng, -1, 3, 6);
    EXPECT_TRUE(agree(a * b, b * a));
    EXPECT_TRUE(agree((a * b) * c, a * (b * c)));
    EXPECT_TRUE(agree(a * (b + c), a * b + a * c));
  }
}

TEST(SeriesProperty, InverseLogExp) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_series(rng, 1, 6, 9);
    const auto unit = FracSeries::constant(q(1)) + a;
    const auto prod = unit * inv(unit, q(9));
    EXPECT_TRUE(agree(prod, FracSeries::constant(q(1)))) << trial;
    EXPECT_TRUE(agree(log1(exp0(a, q(9)), q(9)), a)) << trial;
    EXPECT_TRUE(agree(exp0(log1(unit, q(9)), q(9)), unit)) << trial;
    EXPECT_TRUE(agree(pow(unit, 3, q(9)), unit * unit * unit)) << trial;
  }
}

TEST(SeriesProperty, CoverComposition) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, -2, 5, 7);
    EXPECT_EQ(substitute_cover(substitute_cover(a, 2), 3), substitute_cover(a, 6));
    const auto b = random_series(rng, 0, 4, 6);
    EXPECT_TRUE(agree(substitute_cover(a * b, 2), substitute_cover(a, 2) * substitute_cover(b, 2)));
  }
}

TEST(Series, TextForm) {
  const auto t = to_text(theta_quartic(10));
  EXPECT_EQ(t.grid, 8);
  EXPECT_EQ(t.truncation, "5/4");
  ASSERT_FALSE(t.terms.empty());
  EXPECT_EQ(t.terms.front().first, "0/8");
  EXPECT_EQ(t.terms.front().second, "-1");
}
