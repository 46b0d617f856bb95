#include "k3bps/rational.hpp"

#include <cctype>

namespace k3bps {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroLeadingTerm: return "ZeroLeadingTerm";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::FractionalExponent: return "FractionalExponent";
    case ErrorCode::BeyondTruncation: return "BeyondTruncation";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InsufficientOrder: return "InsufficientOrder";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::DegenerateLattice: return "DegenerateLattice";
    case ErrorCode::NonpositiveDiscriminant: return "NonpositiveDiscriminant";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::AllZeroDegrees: return "AllZeroDegrees";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::LeadingCoefficientZero: return "LeadingCoefficientZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer to_integer(const Rational& x, ErrorCode code) {
  if (!is_integer(x)) throw Error(code, "value " + to_string(x) + " is not an integer");
  return x.get_num();
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor(const Rational& x) { return floor_div(x.get_num(), x.get_den()); }
Integer ceil(const Rational& x) { return ceil_div(x.get_num(), x.get_den()); }

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(text)) throw Error(ErrorCode::InvalidArgument, "bad rational '" + text + "'");
    return Rational(Integer(strip_plus(text)));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error(ErrorCode::InvalidArgument, "bad rational '" + text + "'");
  return make_rational(Integer(strip_plus(num)), Integer(strip_plus(den)));
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (sgn(n) == 0) throw Error(ErrorCode::InvalidArgument, "division by zero Gaussian rational");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string to_string(const GaussianRational& x) {
  if (x.is_real()) return to_string(x.re);
  return to_string(x.re) + (sgn(x.im) < 0 ? "-" : "+") + to_string(abs(x.im)) + "i";
}

}  // namespace k3bps
