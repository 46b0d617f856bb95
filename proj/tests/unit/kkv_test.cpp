#include <gtest/gtest.h>

#include "k3bps/kkv.hpp"
#include "k3bps/linalg.hpp"

using namespace k3bps;

TEST(KKVProduct, LowOrderCoefficients) {
  const auto p = kkv_product(3);
  EXPECT_EQ(bi_coeff(p, 0), LaurentPolyY::one());
  const auto c1 = bi_coeff(p, 1);
  EXPECT_EQ(c1, LaurentPolyY::from_integer_exponents({{-1, 2}, {0, 20}, {1, 2}}));
  EXPECT_EQ(c1.evaluate_at_one(), 24);
  EXPECT_THROW(bi_coeff(p, 3), Error);
}

TEST(SinBasis, Decompose) {
  EXPECT_EQ(sin_basis_decompose(LaurentPolyY::one()), std::vector<Rational>{1});
  EXPECT_EQ(sin_basis_decompose(sin_basis_element(1)), (std::vector<Rational>{0, 1}));
  const auto p = LaurentPolyY::from_integer_exponents({{-1, 2}, {0, 20}, {1, 2}});
  EXPECT_EQ(sin_basis_decompose(p), (std::vector<Rational>{24, 2}));
  EXPECT_EQ(sin_basis_assemble({24, 2}), p);
}

TEST(SinBasis, RejectsAsymmetric) {
  try {
    sin_basis_decompose(LaurentPolyY::from_integer_exponents({{1, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
}

TEST(KKVTable, KnownEntries) {
  const auto r = extract_r_table(4);
  EXPECT_EQ(r.at(0, 0), 1);
  EXPECT_EQ(r.at(0, 1), 24);
  EXPECT_EQ(r.at(1, 1), -2);
  EXPECT_EQ(r.at(2, 4), 1401);
  EXPECT_EQ(r.at(3, 4), -126);
  EXPECT_EQ(r.at(4, 4), 5);
  EXPECT_EQ(r.at(3, 2), 0);
  EXPECT_EQ(r.at(0, -1), 0);
}

TEST(KKVTable, StructuralLaws) {
  const auto r = extract_r_table(10);
  for (long h = 0; h <= 10; ++h) {
    for (int g = static_cast<int>(h) + 1; g <= 12; ++g) EXPECT_EQ(r.at(g, h), 0);
    EXPECT_EQ(r.at(static_cast<int>(h), h), (h % 2 == 0 ? 1 : -1) * (h + 1));
  }
  const auto yz = yau_zaslow(11);
  for (long h = 0; h <= 10; ++h) EXPECT_EQ(Rational(r.at(0, h)), yz.coeff_num(h));
}

TEST(KKVTable, YauZaslowLeadingTerms) {
  const auto yz = yau_zaslow(6);
  EXPECT_EQ(yz.coeff_num(0), 1);
  EXPECT_EQ(yz.coeff_num(3), 3200);
  EXPECT_EQ(yz.coeff_num(4), 25650);
}

TEST(KKVTable, ZeroOrderIsSingleRow) {
  const auto r = extract_r_table(0);
  EXPECT_EQ(r.entries().size(), 1u);
  EXPECT_EQ(r.at(0, 0), 1);
}

TEST(Linalg, SolveAndInvariants) {
  const QMatrix a{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  const auto x = solve_unique(a, {Rational(3), Rational(4)});
  EXPECT_EQ(x, (std::vector<Rational>{1, 1}));
  try {
    solve_unique({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}, {Rational(1), Rational(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularSystem);
  }
  try {
    solve_unique({{Rational(1)}, {Rational(1)}}, {Rational(1), Rational(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentSystem);
  }
  EXPECT_EQ(invariant_factors(ZMatrix{{2, 3, 0}, {3, 0, 0}, {0, 0, -2}}), (std::vector<Integer>{18}));
  EXPECT_EQ(determinant(ZMatrix{{2, 3, 0}, {3, 0, 0}, {0, 0, -2}}), 18);
}
