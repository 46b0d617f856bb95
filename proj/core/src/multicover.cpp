#include "k3bps/multicover.hpp"

#include "k3bps/kawaiyoshioka.hpp"

namespace k3bps {

RtildeSeries rtilde_primitive(long h, long order) {
  return {1, h, h < 0 ? FracSeries::zero(1, order) : i_series(h, order)};
}

RtildeSeries rtilde_multiple(int m, long h, long order) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  FracSeries sum = FracSeries::zero(1, order);
  for (int k : divisors(m)) {
    const long hk = class_h(m / k, h);
    const FracSeries cover = substitute_cover(rtilde_primitive(hk, order).series, k);
    sum = sum + make_rational(1, k) * cover;
  }
  return {m, h, sum};
}

PairsBPSTable multicover_bps_table(int m, long h, long order) {
  PairsPotential pot;
  pot.h = h;
  for (int k = 1; k <= m; ++k) pot.by_m.emplace(k, rtilde_multiple(k, h, order).series);
  return bps_from_pairs(pot);
}

bool divisibility_independence_check(int m, long h, long order) {
  const long hm = class_h(m, h);
  const PairsBPSTable multiple = multicover_bps_table(m, h, order);

  PairsPotential prim;
  prim.h = hm;
  prim.by_m.emplace(1, rtilde_primitive(hm, order).series);
  const PairsBPSTable primitive = bps_from_pairs(prim);

  int top = 0;
  for (const auto& [key, v] : multiple.entries()) top = std::max(top, std::get<0>(key));
  for (const auto& [key, v] : primitive.entries()) top = std::max(top, std::get<0>(key));
  for (int g = 0; g <= top; ++g)
    if (multiple.at(g, m, hm) != primitive.at(g, 1, hm)) return false;
  return true;
}

namespace {

// Power series in v with series coefficients, truncated after v^m.
using VPoly = std::vector<FracSeries>;  // index j is the v^j coefficient

VPoly vmul(const VPoly& a, const VPoly& b, std::size_t m) {
  VPoly out(m + 1, FracSeries::zero());
  for (std::size_t i = 0; i < a.size() && i <= m; ++i) {
    if (a[i].is_zero() && a[i].is_exact()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= m; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

}  // namespace

EffConeSeries eff_exp(const std::vector<FracSeries>& rtilde) {
  const std::size_t m = rtilde.size();
  // X has no v^0 term, so X^n vanishes below v^n and the sum stops at n = m.
  VPoly x(m + 1, FracSeries::zero());
  for (std::size_t j = 1; j <= m; ++j) x[j] = rtilde[j - 1];
  VPoly power(m + 1, FracSeries::zero());
  power[0] = FracSeries::constant(Rational(1));
  VPoly total = power;
  Integer fact(1);
  for (std::size_t n = 1; n <= m; ++n) {
    power = vmul(power, x, m);
    fact *= static_cast<unsigned long>(n);
    for (std::size_t j = 0; j <= m; ++j) total[j] = total[j] + make_rational(1, fact) * power[j];
  }
  EffConeSeries out;
  for (std::size_t k = 1; k <= m; ++k) out.star.push_back(total[k]);
  return out;
}

std::vector<FracSeries> eff_log(const EffConeSeries& p) {
  const std::size_t m = p.star.size();
  VPoly y(m + 1, FracSeries::zero());
  for (std::size_t j = 1; j <= m; ++j) y[j] = p.star[j - 1];
  VPoly power(m + 1, FracSeries::zero());
  power[0] = FracSeries::constant(Rational(1));
  VPoly total(m + 1, FracSeries::zero());
  for (std::size_t n = 1; n <= m; ++n) {
    power = vmul(power, y, m);
    const Rational c = make_rational(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
    for (std::size_t j = 0; j <= m; ++j) total[j] = total[j] + c * power[j];
  }
  return {total.begin() + 1, total.end()};
}

bool recursion_check(const std::vector<FracSeries>& rtilde) {
  const EffConeSeries p = eff_exp(rtilde);
  const auto m = static_cast<long>(rtilde.size());
  for (long k = 1; k <= m; ++k) {
    const FracSeries lhs = p.star[k - 1] - rtilde[k - 1];
    FracSeries rhs = FracSeries::zero();
    for (long k1 = 1; k1 < k; ++k1) {
      const long k2 = k - k1;
      rhs = rhs + Rational(k2) * (p.star[k1 - 1] * rtilde[k2 - 1]);
    }
    rhs = make_rational(1, k) * rhs;
    if (!agree(lhs, rhs)) return false;
  }
  return true;
}

bool recursion_check(int m, long h, long order) {
  std::vector<FracSeries> rt;
  for (int k = 1; k <= m; ++k) rt.push_back(rtilde_multiple(k, h, order).series);
  return recursion_check(rt);
}

}  // namespace k3bps
