#include "k3bps/kawaiyoshioka.hpp"

#include <string>

#include "k3bps/bpsconvert.hpp"

namespace k3bps {

KYTable::KYTable(std::map<std::pair<long, long>, Integer> entries, long q_order, long y_order)
    : entries_(std::move(entries)), q_order_(q_order), y_order_(y_order) {}

Integer KYTable::at(long n, long h) const {
  auto it = entries_.find({n, h});
  return it == entries_.end() ? Integer(0) : it->second;
}

namespace {

// sum_{n>=1} n y^n truncated at y^{trunc}: the ascending expansion of y/(1-y)^2.
FracSeries ascending_y_over_one_minus_y_sq(long trunc) {
  FracSeries::Terms t;
  for (long n = 1; n < trunc; ++n) t.emplace(n, Rational(n));
  return FracSeries(1, std::move(t), std::max(trunc, 1L));
}

}  // namespace

BiSeries ky_generating(long q_order, long y_order) {
  if (q_order < 1 || y_order < 1) throw Error(ErrorCode::InvalidArgument, "orders must be >= 1");
  const BiSeries product = kkv_product(q_order);
  std::map<long, LaurentPolyY> out;
  for (long h = 0; h < q_order; ++h) {
    // The q^h coefficient reaches down to y^{-h}; pad the prefactor so the
    // product is exact below y^{y_order}.
    const FracSeries poly = bi_coeff(product, h).as_series();
    const FracSeries column = (poly * ascending_y_over_one_minus_y_sq(y_order + h)).truncate_num(y_order);
    std::map<long, Rational> terms(column.terms().begin(), column.terms().end());
    out.emplace(h, LaurentPolyY::from_integer_exponents(terms));
  }
  return BiSeries(q_order, std::move(out));
}

KYTable ky_table(long q_order, long y_order) {
  const BiSeries s = ky_generating(q_order, y_order);
  std::map<std::pair<long, long>, Integer> entries;
  for (const auto& [h, poly] : s.coeffs())
    for (const auto& [k, c] : poly.half_terms())
      entries.emplace(std::make_pair(k / 2, h), to_integer(c, ErrorCode::IntegralityViolation));
  return KYTable(std::move(entries), q_order, y_order);
}

FracSeries i_series_from_product(long h, long y_order) {
  if (h < 0) return FracSeries::zero(1, y_order);
  // prod (1-q^n)^{-20} (1+y q^n)^{-2} (1+y^{-1} q^n)^{-2}
  BiSeries s = BiSeries::one(h + 1);
  for (long n = 1; n <= h; ++n) {
    s = s.times_factor_power(0, n, -20);
    s = s.times_factor_power(2, n, -2, Rational(1));
    s = s.times_factor_power(-2, n, -2, Rational(1));
  }
  const FracSeries poly = bi_coeff(s, h).as_series();
  // -(sqrt(-y) - 1/sqrt(-y))^{-2} = 1/(y + 2 + 1/y), expanded in ascending y.
  const FracSeries denom(1, {{-1, Rational(1)}, {0, Rational(2)}, {1, Rational(1)}});
  const FracSeries prefactor = inv(denom, Rational(y_order + h));
  return (poly * prefactor).truncate_num(y_order);
}

FracSeries i_series_from_table(long h, long y_order) {
  if (h < 0) return FracSeries::zero(1, y_order);
  const KYTable table = ky_table(h + 1, y_order);
  FracSeries::Terms t;
  for (long n = 1 - h; n < y_order; ++n) {
    const Integer e = table.at(n, h);
    // (-1)^{2h-1+n} = (-1)^{n-1}
    if (e != 0) t.emplace(n, Rational((n - 1) % 2 == 0 ? e : Integer(-e)));
  }
  return FracSeries(1, std::move(t), y_order);
}

FracSeries i_series(long h, long y_order) {
  FracSeries a = i_series_from_product(h, y_order);
  const FracSeries b = i_series_from_table(h, y_order);
  if (!agree(a, b))
    throw Error(ErrorCode::InvariantViolation, "product and Euler-characteristic routes disagree at h=" +
                                                   std::to_string(h));
  return a;
}

RationalityWitness rationality_witness(long h, long y_order) {
  const FracSeries s = i_series(h, y_order);
  const FracSeries mult(1, {{-1, Rational(1)}, {0, Rational(2)}, {1, Rational(1)}});
  const FracSeries prod = s * mult;
  RationalityWitness w;
  w.window_top = *prod.truncation_num();
  w.degree_bound = prod.highest_num().value_or(0);
  // Leave at least one vanishing coefficient visible above the support.
  if (w.degree_bound >= w.window_top - 1)
    throw Error(ErrorCode::WindowTooSmall, "no room above the numerator support at h=" + std::to_string(h));
  w.numerator = FracSeries(1, prod.terms());
  return w;
}

long cross_check_window(long h) { return std::max(h, 0L) + 3; }

bool kkv_cross_check(long h, const BPSTable& r, long y_order) {
  if (y_order < cross_check_window(h))
    throw Error(ErrorCode::WindowTooSmall, "y_order " + std::to_string(y_order) + " cannot see row h=" +
                                               std::to_string(h));
  if (h > r.hmax()) throw Error(ErrorCode::WindowTooSmall, "table does not reach h=" + std::to_string(h));

  // (y^{1/2} - y^{-1/2})^2 * [q^h] KY = sum_g (-1)^g r_{g,h} (y^{1/2} - y^{-1/2})^{2g}
  const FracSeries column = bi_coeff(ky_generating(h + 1, y_order), h).as_series().truncate_num(y_order);
  const FracSeries lhs = sin_basis_element(1).as_series() * column;
  std::vector<Rational> c;
  for (int g = 0; g <= h; ++g) c.push_back(Rational(g % 2 == 0 ? r.at(g, h) : Integer(-r.at(g, h))));
  const FracSeries rhs = sin_basis_assemble(c).as_series();
  if (!agree(lhs, rhs)) return false;

  // Stable-pairs BPS extraction from t*I_h with y renamed q.
  PairsPotential pot;
  pot.h = h;
  pot.by_m.emplace(1, i_series(h, y_order));
  const PairsBPSTable extracted = bps_from_pairs(pot);
  for (int g = 0; g <= h + 1; ++g)
    if (extracted.at(g, 1, h) != r.at(g, h)) return false;
  for (const auto& [key, value] : extracted.entries())
    if (std::get<0>(key) > h) return false;
  return true;
}

}  // namespace k3bps
