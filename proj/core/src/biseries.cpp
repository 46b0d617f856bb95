#include "k3bps/biseries.hpp"

#include <string>
#include <vector>

namespace k3bps {

LaurentPolyY::LaurentPolyY(Terms half_terms) : terms_(std::move(half_terms)) { normalize(); }

void LaurentPolyY::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

LaurentPolyY LaurentPolyY::from_integer_exponents(const std::map<long, Rational>& terms) {
  Terms t;
  for (const auto& [e, c] : terms) t.emplace(2 * e, c);
  return LaurentPolyY(std::move(t));
}

LaurentPolyY LaurentPolyY::monomial(Rational c, long half_exponent) {
  return LaurentPolyY(Terms{{half_exponent, std::move(c)}});
}

bool LaurentPolyY::has_integer_exponents() const {
  for (const auto& [k, c] : terms_)
    if (k % 2 != 0) return false;
  return true;
}

bool LaurentPolyY::is_symmetric() const {
  for (const auto& [k, c] : terms_)
    if (coeff_half(-k) != c) return false;
  return true;
}

Rational LaurentPolyY::coeff_half(long half_exponent) const {
  auto it = terms_.find(half_exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPolyY::evaluate_at_one() const {
  Rational s;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

LaurentPolyY LaurentPolyY::negate_variable() const {
  if (!has_integer_exponents())
    throw Error(ErrorCode::FractionalExponent, "y -> -y needs integer exponents");
  Terms t;
  for (const auto& [k, c] : terms_) t.emplace(k, (k / 2) % 2 != 0 ? Rational(-c) : c);
  return LaurentPolyY(std::move(t));
}

FracSeries LaurentPolyY::as_series() const {
  if (!has_integer_exponents())
    throw Error(ErrorCode::FractionalExponent, "series view needs integer exponents");
  FracSeries::Terms t;
  for (const auto& [k, c] : terms_) t.emplace(k / 2, c);
  return FracSeries(1, std::move(t));
}

LaurentPolyY& LaurentPolyY::operator+=(const LaurentPolyY& o) {
  for (const auto& [k, c] : o.terms_) terms_[k] += c;
  normalize();
  return *this;
}

LaurentPolyY& LaurentPolyY::operator-=(const LaurentPolyY& o) {
  for (const auto& [k, c] : o.terms_) terms_[k] -= c;
  normalize();
  return *this;
}

LaurentPolyY operator*(const LaurentPolyY& a, const LaurentPolyY& b) {
  LaurentPolyY::Terms t;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) t[ka + kb] += ca * cb;
  return LaurentPolyY(std::move(t));
}

LaurentPolyY operator*(const Rational& s, const LaurentPolyY& a) {
  LaurentPolyY::Terms t;
  for (const auto& [k, c] : a.terms_) t.emplace(k, s * c);
  return LaurentPolyY(std::move(t));
}

LaurentPolyY sin_basis_element(int g) {
  const LaurentPolyY base = LaurentPolyY::from_integer_exponents({{-1, Rational(1)}, {0, Rational(-2)}, {1, Rational(1)}});
  LaurentPolyY out = LaurentPolyY::one();
  for (int i = 0; i < g; ++i) out = out * base;
  return out;
}

BiSeries::BiSeries(long q_truncation, std::map<long, LaurentPolyY> coeffs)
    : q_trunc_(q_truncation), coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [&](const auto& kv) { return kv.second.is_zero() || kv.first >= q_trunc_; });
}

BiSeries BiSeries::times_factor_power(long half_s, long n, long power, const Rational& sign) const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "factor degree must be positive");
  if (coeffs_.empty()) return *this;
  const long lo = coeffs_.begin()->first;
  const long len = q_trunc_ - lo;
  std::vector<LaurentPolyY> c(static_cast<std::size_t>(std::max(0L, len)));
  for (const auto& [h, p] : coeffs_) c[static_cast<std::size_t>(h - lo)] = p;
  // Factor is (1 + sign * y^{s/2} q^n).  Multiplication runs downward,
  // division by the factor runs upward (geometric series).
  const LaurentPolyY mono = LaurentPolyY::monomial(sign, half_s);
  const LaurentPolyY neg_mono = LaurentPolyY::monomial(-sign, half_s);
  for (long rep = 0; rep < power; ++rep)
    for (long k = len - 1; k >= n; --k) c[k] += mono * c[k - n];
  for (long rep = 0; rep < -power; ++rep)
    for (long k = n; k < len; ++k) c[k] += neg_mono * c[k - n];
  std::map<long, LaurentPolyY> out;
  for (long k = 0; k < len; ++k)
    if (!c[k].is_zero()) out.emplace(k + lo, std::move(c[k]));
  return BiSeries(q_trunc_, std::move(out));
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  auto val = [](const BiSeries& s) { return s.coeffs_.empty() ? s.q_trunc_ : s.coeffs_.begin()->first; };
  const long t = std::min(a.q_trunc_ + val(b), b.q_trunc_ + val(a));
  std::map<long, LaurentPolyY> out;
  for (const auto& [ha, pa] : a.coeffs_)
    for (const auto& [hb, pb] : b.coeffs_) {
      if (ha + hb >= t) break;
      out[ha + hb] += pa * pb;
    }
  return BiSeries(t, std::move(out));
}

LaurentPolyY bi_coeff(const BiSeries& s, long h) {
  if (h >= s.q_truncation())
    throw Error(ErrorCode::BeyondTruncation, "q^" + std::to_string(h) + " is beyond the truncation");
  auto it = s.coeffs().find(h);
  return it == s.coeffs().end() ? LaurentPolyY() : it->second;
}

}  // namespace k3bps
