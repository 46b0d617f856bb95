#pragma once

// Series in q whose coefficients are Laurent polynomials in y^{1/2}.

#include <map>
#include <optional>

#include "k3bps/rational.hpp"
#include "k3bps/series.hpp"

namespace k3bps {

// Finite Laurent polynomial in y with exponents on the half-integer grid.
// Keys are exponent numerators over 2, so y^1 is stored at key 2.
class LaurentPolyY {
 public:
  using Terms = std::map<long, Rational>;

  LaurentPolyY() = default;
  explicit LaurentPolyY(Terms half_terms);

  // Build from integer y-exponents.
  static LaurentPolyY from_integer_exponents(const std::map<long, Rational>& terms);
  static LaurentPolyY monomial(Rational c, long half_exponent);
  static LaurentPolyY one() { return monomial(Rational(1), 0); }

  const Terms& half_terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_integer_exponents() const;
  bool is_symmetric() const;  // p(y) == p(1/y)

  // Coefficient of y^{half_exponent/2}.
  Rational coeff_half(long half_exponent) const;
  // Coefficient of y^e for integer e.
  Rational coeff(long e) const { return coeff_half(2 * e); }

  Rational evaluate_at_one() const;
  // y -> -y; requires integer exponents.
  LaurentPolyY negate_variable() const;
  // Integer-exponent view as a series on grid 1 (exact).
  FracSeries as_series() const;

  LaurentPolyY& operator+=(const LaurentPolyY& o);
  LaurentPolyY& operator-=(const LaurentPolyY& o);
  friend LaurentPolyY operator+(LaurentPolyY a, const LaurentPolyY& b) { return a += b; }
  friend LaurentPolyY operator-(LaurentPolyY a, const LaurentPolyY& b) { return a -= b; }
  friend LaurentPolyY operator*(const LaurentPolyY& a, const LaurentPolyY& b);
  friend LaurentPolyY operator*(const Rational& s, const LaurentPolyY& a);
  friend bool operator==(const LaurentPolyY& a, const LaurentPolyY& b) { return a.terms_ == b.terms_; }

 private:
  void normalize();
  Terms terms_;
};

// (y^{1/2} - y^{-1/2})^{2g} = (y - 2 + y^{-1})^g.
LaurentPolyY sin_basis_element(int g);

// sum_h c_h(y) q^h with coefficients known exactly for h < q_truncation.
class BiSeries {
 public:
  BiSeries() = default;
  BiSeries(long q_truncation, std::map<long, LaurentPolyY> coeffs);

  static BiSeries one(long q_truncation) { return BiSeries(q_truncation, {{0, LaurentPolyY::one()}}); }

  long q_truncation() const { return q_trunc_; }
  const std::map<long, LaurentPolyY>& coeffs() const { return coeffs_; }

  // Multiply by (1 - y^{s/2} q^n)^{power}, power of either sign.
  BiSeries times_factor_power(long half_s, long n, long power, const Rational& sign = Rational(-1)) const;

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

 private:
  long q_trunc_ = 0;
  std::map<long, LaurentPolyY> coeffs_;
};

// Throws BeyondTruncation when h is not below the q-truncation.
LaurentPolyY bi_coeff(const BiSeries& s, long h);

}  // namespace k3bps
