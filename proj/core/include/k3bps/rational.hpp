#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "k3bps/error.hpp"

namespace k3bps {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds p/q in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

bool is_integer(const Rational& x);

// Throws Error(code) when x is not integral.
Integer to_integer(const Rational& x, ErrorCode code = ErrorCode::NonIntegral);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rational& x);
Integer ceil(const Rational& x);

// "p/q", or "n" when the denominator is 1.
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// Accepts "n" or "p/q"; throws Error(InvalidArgument) otherwise.
Rational parse_rational(const std::string& text);

// Exact complex rationals, used to host e^{i lambda} expansions.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int r) : re(r) {}                   // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussianRational& x);

// Uniform zero test shared by the series template.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }

}  // namespace k3bps
