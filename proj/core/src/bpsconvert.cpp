#include "k3bps/bpsconvert.hpp"

#include <string>
#include <vector>

#include "k3bps/linalg.hpp"

namespace k3bps {

long class_h(long k, long h) { return k * k * (h - 1) + 1; }

PairsBPSTable::PairsBPSTable(std::map<Key, Integer> entries) : entries_(std::move(entries)) {
  std::erase_if(entries_, [](const auto& kv) { return kv.second == 0; });
}

Integer PairsBPSTable::at(int g, int m, long h) const {
  auto it = entries_.find({g, m, h});
  return it == entries_.end() ? Integer(0) : it->second;
}

std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

namespace {

Rational rational_pow(const Rational& base, long e) {
  Rational out(1);
  const Rational b = e < 0 ? Rational(1 / base) : base;
  for (long i = 0; i < std::abs(e); ++i) out *= b;
  return out;
}

Rational factorial(long n) {
  Integer f(1);
  for (long i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

long sigma(int m) {
  long s = 0;
  for (int d : divisors(m)) s += d;
  return s;
}

void require_truncated(const FracSeries& s, const char* what) {
  if (s.is_exact()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs a truncated series");
}

}  // namespace

FracSeries gw_basis(int g, int d, long lambda_order) {
  if (g < 0 || d < 1) throw Error(ErrorCode::InvalidArgument, "gw_basis needs g >= 0, d >= 1");
  const long t = lambda_order + 3;
  // u = sin(d lambda/2) / (d lambda/2), an even power series with u(0) = 1.
  FracSeries::Terms u;
  const Rational half_d = make_rational(d, 2);
  for (long j = 0; 2 * j < t; ++j) {
    Rational c = rational_pow(half_d, 2 * j) / factorial(2 * j + 1);
    u.emplace(2 * j, j % 2 == 0 ? c : Rational(-c));
  }
  const FracSeries up = pow(FracSeries(1, std::move(u), t), 2L * g - 2);
  const Rational scale = rational_pow(Rational(d), 2L * g - 2);
  return shift_num(scale * up, 2L * g - 2).truncate_num(lambda_order + 1);
}

FracSeries pairs_denominator(int d) {
  const Rational s = d % 2 == 0 ? Rational(1) : Rational(-1);
  return FracSeries(1, {{-d, s}, {0, Rational(-2)}, {d, s}});
}

FracSeries pairs_basis(int g, int d, long q_window) {
  if (g < 0 || d < 1) throw Error(ErrorCode::InvalidArgument, "pairs_basis needs g >= 0, d >= 1");
  const FracSeries b = pairs_denominator(d);
  if (g == 0) return -inv(b, Rational(q_window));
  const Rational sign = (g - 1) % 2 == 0 ? Rational(1) : Rational(-1);
  return (sign * pow(b, g - 1)).truncate_num(q_window);
}

GWPotential gw_from_class_bps(const ClassBPS& r, long h, int mmax, long lambda_order) {
  GWPotential out;
  out.h = h;
  std::map<std::pair<int, int>, FracSeries> cache;
  auto basis = [&](int g, int d) -> const FracSeries& {
    auto it = cache.find({g, d});
    if (it == cache.end()) it = cache.emplace(std::make_pair(g, d), gw_basis(g, d, lambda_order)).first;
    return it->second;
  };
  for (int m = 1; m <= mmax; ++m) {
    FracSeries f = FracSeries::zero(1, lambda_order + 1);
    for (int d : divisors(m)) {
      const int k = m / d;
      for (const auto& [key, value] : r) {
        if (key.second != k || sgn(value) == 0) continue;
        f = f + Rational(value / d) * basis(key.first, d);
      }
    }
    out.by_m.emplace(m, std::move(f));
  }
  return out;
}

GWPotential gw_from_bps(const BPSTable& r, long h, int mmax, long lambda_order) {
  ClassBPS classes;
  for (int k = 1; k <= mmax; ++k) {
    const long hk = class_h(k, h);
    if (hk > r.hmax())
      throw Error(ErrorCode::InsufficientOrder,
                  "table stops at h=" + std::to_string(r.hmax()) + ", class needs h'=" + std::to_string(hk));
    for (const auto& [key, value] : r.entries())
      if (key.second == hk) classes[{key.first, k}] = Rational(value);
  }
  return gw_from_class_bps(classes, h, mmax, lambda_order);
}

ClassBPS bps_from_gw(const GWPotential& f) {
  ClassBPS out;
  for (const auto& [m, series] : f.by_m) {
    require_truncated(series, "bps_from_gw");
    const long t = *series.truncation_num();
    const long cutoff = std::max(0L, class_h(m, f.h));
    if (t - 1 < 2 * cutoff)
      throw Error(ErrorCode::InsufficientOrder, "m=" + std::to_string(m) + " needs lambda order " +
                                                    std::to_string(2 * cutoff));
    FracSeries residual = series;
    for (int d : divisors(m)) {
      if (d == 1) continue;
      if (!f.by_m.contains(m / d))
        throw Error(ErrorCode::InsufficientOrder, "missing v^" + std::to_string(m / d) + " coefficient");
      for (const auto& [key, value] : out)
        if (key.second == m / d) residual = residual - Rational(value / d) * gw_basis(key.first, d, t - 1);
    }
    // (2 sin(lambda/2))^{2g-2} starts at lambda^{2g-2} with coefficient 1.
    for (int g = 0; 2L * g - 2 < t; ++g) {
      const Rational c = residual.coeff_num(2L * g - 2);
      if (sgn(c) == 0) continue;
      out[{g, m}] = c;
      residual = residual - c * gw_basis(g, 1, t - 1);
    }
    if (!residual.is_zero())
      throw Error(ErrorCode::InconsistentSystem, "potential is not a BPS expansion at m=" + std::to_string(m));
  }
  return out;
}

PairsPotential pairs_from_class_bps(const ClassBPS& rt, long h, int mmax, long q_window) {
  PairsPotential out;
  out.h = h;
  std::map<std::pair<int, int>, FracSeries> cache;
  auto basis = [&](int g, int d) -> const FracSeries& {
    auto it = cache.find({g, d});
    if (it == cache.end()) it = cache.emplace(std::make_pair(g, d), pairs_basis(g, d, q_window)).first;
    return it->second;
  };
  for (int m = 1; m <= mmax; ++m) {
    FracSeries f = FracSeries::zero(1, q_window);
    for (int d : divisors(m)) {
      const int k = m / d;
      for (const auto& [key, value] : rt) {
        if (key.second != k || sgn(value) == 0) continue;
        f = f + Rational(value / d) * basis(key.first, d);
      }
    }
    out.by_m.emplace(m, std::move(f));
  }
  return out;
}

PairsPotential pairs_from_bps(const PairsBPSTable& rt, long h, int mmax, long q_window) {
  ClassBPS classes;
  for (const auto& [key, value] : rt.entries()) {
    const auto& [g, k, hk] = key;
    if (k <= mmax && hk == class_h(k, h)) classes[{g, k}] = Rational(value);
  }
  return pairs_from_class_bps(classes, h, mmax, q_window);
}

PairsBPSTable bps_from_pairs(const PairsPotential& f, std::optional<int> gmax) {
  ClassBPS found;
  std::map<PairsBPSTable::Key, Integer> entries;
  for (const auto& [m, series] : f.by_m) {
    require_truncated(series, "bps_from_pairs");
    const long w = *series.truncation_num();
    FracSeries residual = series;
    for (int d : divisors(m)) {
      if (d == 1) continue;
      if (!f.by_m.contains(m / d))
        throw Error(ErrorCode::InsufficientOrder, "missing v^" + std::to_string(m / d) + " coefficient");
      for (const auto& [key, value] : found)
        if (key.second == m / d) residual = residual - Rational(value / d) * pairs_basis(key.first, d, w);
    }
    // The d = 1 element of genus g reaches down to q^{-(g-1)}.
    const long lowest = residual.lowest_num().value_or(0);
    const int top = gmax ? *gmax : static_cast<int>(1 + std::max(0L, -lowest));
    const long emin = std::min(lowest, -static_cast<long>(top - 1));
    std::vector<FracSeries> basis;
    for (int g = 0; g <= top; ++g) basis.push_back(pairs_basis(g, 1, w));
    QMatrix a;
    std::vector<Rational> b;
    for (long e = emin; e < w; ++e) {
      std::vector<Rational> row;
      for (const auto& s : basis) row.push_back(s.coeff_num(e));
      a.push_back(std::move(row));
      b.push_back(residual.coeff_num(e));
    }
    const auto x = solve_unique(std::move(a), std::move(b));
    for (int g = 0; g <= top; ++g) {
      const Rational& v = x[static_cast<std::size_t>(g)];
      if (sgn(v) == 0) continue;
      if (!is_integer(v))
        throw Error(ErrorCode::NonIntegral, "r~(g=" + std::to_string(g) + ", m=" + std::to_string(m) +
                                                ") = " + to_string(v));
      found[{g, m}] = v;
      entries[{g, m, class_h(m, f.h)}] = v.get_num();
    }
  }
  return PairsBPSTable(std::move(entries));
}

PairsBPSTable pairs_table_from_bps(const BPSTable& r, long h, int mmax) {
  std::map<PairsBPSTable::Key, Integer> entries;
  for (int k = 1; k <= mmax; ++k) {
    const long hk = class_h(k, h);
    for (const auto& [key, value] : r.entries())
      if (key.second == hk) entries[{key.first, k, hk}] = value;
  }
  return PairsBPSTable(std::move(entries));
}

GaussSeries to_gauss(const FracSeries& s) {
  GaussSeries::Terms t;
  for (const auto& [k, c] : s.terms()) t.emplace(k, GaussianRational(c));
  return GaussSeries(s.grid(), std::move(t), s.truncation_num());
}

GaussSeries compose_neg_exp(const FracSeries& poly, long trunc) {
  if (!poly.is_exact() || poly.grid() != 1)
    throw Error(ErrorCode::InvalidArgument, "composition needs an exact integer-grid Laurent polynomial");
  std::vector<GaussianRational> acc(static_cast<std::size_t>(std::max(0L, trunc)));
  for (const auto& [k, c] : poly.terms()) {
    // (-1)^k c e^{i k lambda} = (-1)^k c sum_n (i k)^n lambda^n / n!
    Rational term = k % 2 == 0 ? c : Rational(-c);
    for (long n = 0; n < trunc; ++n) {
      switch (n % 4) {
        case 0: acc[n] += GaussianRational(term, Rational(0)); break;
        case 1: acc[n] += GaussianRational(Rational(0), term); break;
        case 2: acc[n] += GaussianRational(Rational(-term), Rational(0)); break;
        case 3: acc[n] += GaussianRational(Rational(0), Rational(-term)); break;
      }
      term = term * k / (n + 1);
    }
  }
  GaussSeries::Terms t;
  for (long n = 0; n < trunc; ++n) t.emplace(n, acc[n]);
  return GaussSeries(1, std::move(t), trunc);
}

GaussSeries compose_rational(const FracSeries& num, const FracSeries& den, long lambda_order) {
  long probe = 8;
  GaussSeries d = compose_neg_exp(den, probe);
  while (d.is_zero()) {
    if (probe > 4096) throw Error(ErrorCode::ZeroLeadingTerm, "denominator vanishes identically at q = -1");
    probe *= 2;
    d = compose_neg_exp(den, probe);
  }
  const long v = *d.lowest_num();
  const GaussSeries n = compose_neg_exp(num, lambda_order + 1 + v);
  d = compose_neg_exp(den, lambda_order + 1 + 2 * v);
  return (n * inv(d)).truncate_num(lambda_order + 1);
}

bool dictionary_check(int g, int d, long lambda_order) {
  const GaussSeries lhs = to_gauss(gw_basis(g, d, lambda_order));
  GaussSeries rhs;
  if (g == 0) {
    rhs = compose_rational(FracSeries::constant(Rational(-1)), pairs_denominator(d), lambda_order);
  } else {
    const Rational sign = (g - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    rhs = compose_neg_exp(sign * pow(pairs_denominator(d), g - 1), lambda_order + 1);
  }
  if (lhs.truncation_num() < lambda_order + 1 || rhs.truncation_num() < lambda_order + 1)
    throw Error(ErrorCode::InsufficientOrder, "expansion did not reach the requested lambda order");
  for (const auto& [k, c] : rhs.terms())
    if (!c.is_real()) return false;
  return agree(lhs, rhs);
}

bool theorem2_check(const BPSTable& r, long h, int mmax, long lambda_order) {
  const GWPotential gw = gw_from_bps(r, h, mmax, lambda_order);
  const PairsBPSTable rt = pairs_table_from_bps(r, h, mmax);
  int top_genus = 1;
  for (const auto& [key, value] : rt.entries()) top_genus = std::max(top_genus, std::get<0>(key));

  for (int m = 1; m <= mmax; ++m) {
    // Common denominator of every basis element that feeds v^{m alpha}.
    FracSeries den = FracSeries::constant(Rational(1));
    for (int d : divisors(m)) den = den * pairs_denominator(d);
    const long s = sigma(m);
    const long num_top = s + static_cast<long>(top_genus - 1) * m;
    const long window = num_top + s + 4;
    const FracSeries pairs = pairs_from_bps(rt, h, m, window).by_m.at(m);
    const FracSeries numer = pairs * den;
    // Rationality witness: nothing survives above the numerator degree bound.
    if (*numer.truncation_num() <= num_top + 1)
      throw Error(ErrorCode::InsufficientOrder, "window too small for rational reconstruction");
    if (auto hi = numer.highest_num(); hi && *hi > num_top) return false;
    const FracSeries exact_num(1, numer.terms());
    const GaussSeries composed = compose_rational(exact_num, den, lambda_order);
    for (const auto& [k, c] : composed.terms())
      if (!c.is_real()) return false;
    if (!agree(composed, to_gauss(gw.by_m.at(m)))) return false;
  }
  return true;
}

}  // namespace k3bps
