#include <gtest/gtest.h>

#include <random>

#include "k3bps/nlnumbers.hpp"
#include "support/gwnl_synth.hpp"

using namespace k3bps;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

}  // namespace

TEST(Theta, Components) {
  const auto a = theta_a(10);
  const auto b = theta_b(10);
  EXPECT_EQ(a.coeff(q(0)), 1);
  EXPECT_EQ(a.coeff(q(1, 8)), 2);
  EXPECT_EQ(b.coeff(q(1, 8)), -2);
  EXPECT_EQ(a.coeff(q(1, 2)), 2);
  EXPECT_EQ(b.coeff(q(1, 2)), 2);
}

TEST(Theta, DisplayedCoefficients) {
  const auto t = theta_quartic(17);
  EXPECT_EQ(t.grid(), 8);
  EXPECT_EQ(t.coeff(q(0)), -1);
  EXPECT_EQ(t.coeff(q(1)), 108);
  EXPECT_EQ(t.coeff(q(9, 8)), 320);
  EXPECT_EQ(t.coeff(q(2)), 76950);
}

TEST(Theta, LongExpansionDividesExactly) { EXPECT_NO_THROW(theta_quartic(200)); }

TEST(Theta, BadOrder) { EXPECT_THROW(theta_quartic(0), Error); }

TEST(NLQuartic, Values) {
  EXPECT_EQ(nl_quartic(1, 0), -1);
  EXPECT_EQ(nl_quartic(0, 1), 320);
  EXPECT_EQ(nl_quartic(3, 1), 0);
  for (long h = -1; h <= 4; ++h)
    for (long d = 0; d <= 5; ++d) EXPECT_EQ(nl_quartic(h, d), nl_quartic(h, -d));
}

TEST(NLNumber, DegenerateRules) {
  const auto p = pi3_provider({});
  for (long m = 1; m <= 3; ++m)
    for (long s = 1; s <= 3; ++s) {
      const long h = m * m * (s - 1) + 1;
      const auto d = pi3_degrees(m, s);
      EXPECT_EQ(nl_number(p, m, h, d), -2);
      EXPECT_EQ(nl_number(p, std::nullopt, h, d), -2);
      EXPECT_EQ(nl_number(p, m + 1, h, d), 0);
      EXPECT_EQ(nl_number(p, m, h + 1, d), 0);  // Delta < 0
    }
  EXPECT_EQ(nl_quartic(3, 4), nl_number(quartic_provider(), std::nullopt, 3, {4}));
  try {
    nl_number(quartic_provider(), std::nullopt, 1, {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllZeroDegrees);
  }
}

TEST(NLNumber, DegenerateWithoutLatticeVector) {
  // U(2) = [[0,2],[2,0]] with d = (1,2): Delta(2,d) = 0 but gram^{-1} d = (1, 1/2).
  const NLProvider p = table_provider(EvenLattice(ZMatrix{{0, 2}, {2, 0}}), Integer(-2), {});
  const ZVector d{1, 2};
  ASSERT_EQ(extended_discriminant(p.lattice, 2, d), 0);
  EXPECT_EQ(nl_number(p, std::nullopt, 2, d), 0);
  EXPECT_EQ(nl_number(p, 1, 2, d), 0);
}

TEST(NLNumber, DivisorProvider) {
  const EvenLattice L(ZMatrix{{4}});
  std::map<NLType, Rational> deg;
  for (const auto& [t, n] : nl_types(L, 1, {4})) deg[t] = Rational(t.disc);
  const auto p = divisor_provider(L, Integer(-1), deg);
  // 2*16 + 2*4 + 2*1
  EXPECT_EQ(nl_number(p, std::nullopt, 1, {4}), 42);
  // type 16: beta = a +- w has divisibility 1; type 4: (0,2), (2,-2);
  // type 1: (0,4), (2,-4)
  EXPECT_EQ(nl_number(p, 1, 1, {4}), 2 * 16);
  EXPECT_EQ(nl_number(p, 2, 1, {4}), 2 * 4 + 1);
  EXPECT_EQ(nl_number(p, 4, 1, {4}), 1);
}

TEST(GWNLForward, Quartic) {
  const auto r = extract_r_table(4);
  const auto p = quartic_provider();
  const auto theta = theta_quartic(10);
  EXPECT_EQ(Rational(gwnl_forward(r, p, 0, {1})), 320 + 24 * theta.coeff(q(1, 8)));
  EXPECT_EQ(Rational(gwnl_forward(r, p, 1, {1})), -2 * theta.coeff(q(1, 8)));
  EXPECT_EQ(gwnl_forward(r, p, 3, {1}), 0);
  EXPECT_EQ(gwnl_forward(r, p, 3, {2}), 0);
  EXPECT_THROW(gwnl_forward(extract_r_table(2), p, 0, {4}), Error);
}

TEST(GWNLForward, Linearity) {
  const auto p = quartic_provider();
  const auto a = extract_r_table(4);
  auto twice = a.entries();
  for (auto& [k, v] : twice) v *= 2;
  for (long d = 1; d <= 4; ++d)
    for (int g = 0; g <= 2; ++g)
      EXPECT_EQ(gwnl_forward(BPSTable(twice, 4), p, g, {d}), 2 * gwnl_forward(a, p, g, {d}));
}

TEST(GWNLInvert, DiagonalSystem) {
  FiberBPSTable n;
  const int gmax = 1;
  const long mmax = 2, hmax = 5;
  std::map<std::pair<int, ZVector>, Integer> values;
  for (long h = 1; h <= hmax; ++h)
    for (long m = 1; m <= mmax; ++m) {
      if ((h - 1) % (m * m) != 0) continue;
      const auto d = pi3_degrees(m, (h - 1) / (m * m) + 1);
      for (int g = 0; g <= gmax; ++g) n[{g, d}] = Integer(2 * (g + 1) * (h + m));
    }
  // The empty table makes every off-diagonal NL number vanish.
  const auto r = gwnl_invert(n, pi3_provider({}), gmax, mmax, hmax);
  for (const auto& [key, v] : r.entries()) {
    const auto& [g, m, h] = key;
    const auto d = pi3_degrees(m, (h - 1) / (m * m) + 1);
    EXPECT_EQ(v, Rational(n.at({g, d})) / -2);
  }
}

TEST(GWNLInvert, ZeroInput) {
  FiberBPSTable n;
  for (long h = 1; h <= 3; ++h)
    for (int g = 0; g <= 1; ++g) n[{g, pi3_degrees(1, h)}] = 0;
  const auto r = gwnl_invert(n, pi3_provider({}), 1, 1, 3);
  for (const auto& [k, v] : r.entries()) EXPECT_EQ(v, 0);
}

TEST(GWNLInvert, LeadingZero) {
  FiberBPSTable n;
  n[{0, pi3_degrees(1, 1)}] = 1;
  const NLProvider p = table_provider(pi3_lattice(), Integer(0), {});
  try {
    gwnl_invert(n, p, 0, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LeadingCoefficientZero);
  }
}

TEST(GWNLInvert, SyntheticRoundtrip) {
  std::mt19937 rng(77);
  for (int i = 0; i < 5; ++i) EXPECT_TRUE(gwnl_synth::roundtrip(gwnl_synth::random_instance(rng, 2, 3, 10))) << i;
}
