#include "k3bps/nlnumbers.hpp"

#include <algorithm>
#include <array>

namespace k3bps {

namespace {

bool all_zero(const ZVector& d) {
  return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 0; });
}

Integer degree_gcd(const ZVector& d) {
  Integer g = 0;
  for (const auto& x : d) g = gcd(g, x);
  return g;
}

// h ranges over 0 <= h while Delta(h,d) >= 0; Delta decreases in h exactly when
// the lattice discriminant is positive.
long h_upper(const EvenLattice& L, const ZVector& d) {
  if (sgn(lattice_discriminant(L)) <= 0)
    throw Error(ErrorCode::InvalidArgument, "h-sum is unbounded for this lattice");
  long h = -1;
  while (sgn(extended_discriminant(L, h + 1, d)) >= 0) ++h;
  return h;
}

using Dense = std::vector<Integer>;

Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense out(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

Dense theta_dense(long order, bool alternating) {
  Dense out(static_cast<std::size_t>(order), Integer(0));
  for (long n = 0; n * n < order; ++n) {
    const long sign = alternating && n % 2 == 1 ? -1 : 1;
    out[n * n] += n == 0 ? 1 : 2 * sign;
  }
  return out;
}

FracSeries to_series(const Dense& d, long order) {
  std::map<long, Rational> terms;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) terms.emplace(static_cast<long>(i), Rational(d[i]));
  return FracSeries(8, std::move(terms), order);
}

struct ThetaTerm {
  long coeff;
  int a;  // exponent of A; B has 21 - a
};

constexpr std::array<ThetaTerm, 20> kThetaTerms{{
    {3, 21},       {-81, 19},     {-627, 18},    {-14436, 17},   {-20007, 16},
    {-169092, 15}, {-120636, 14}, {-621558, 13}, {-292796, 12},  {-1038366, 11},
    {-346122, 10}, {-878388, 9},  {-207186, 8},  {-361908, 7},   {-56364, 6},
    {-60021, 5},   {-4812, 4},    {-1881, 3},    {-27, 2},       {1, 0},
}};

}  // namespace

Rational nl_number(const NLProvider& p, std::optional<long> m, long h, const ZVector& d) {
  const Integer disc = extended_discriminant(p.lattice, h, d);
  if (sgn(disc) < 0) return 0;
  if (sgn(disc) == 0) {
    if (all_zero(d)) throw Error(ErrorCode::AllZeroDegrees, "degrees vanish in the degenerate case");
    const auto v = vector_of_degrees(p.lattice, d);
    if (!v) return 0;
    if (m && divisibility(*v) != *m) return 0;
    return Rational(p.hodge_degree);
  }
  if (m && all_zero(d)) throw Error(ErrorCode::AllZeroDegrees, "refined numbers need nonzero degrees");
  return p.positive(m, h, d);
}

NLProvider table_provider(EvenLattice lattice, Integer hodge_degree, NLTable table) {
  auto rule = [table = std::move(table)](std::optional<long> m, long h, const ZVector& d) -> Rational {
    auto it = table.find({m.value_or(0), h, d});
    return it == table.end() ? Rational(0) : it->second;
  };
  return {std::move(lattice), std::move(hodge_degree), std::move(rule)};
}

NLProvider divisor_provider(EvenLattice lattice, Integer hodge_degree, std::map<NLType, Rational> degrees) {
  auto rule = [lattice, degrees = std::move(degrees)](std::optional<long> m, long h, const ZVector& d) {
    Rational sum = 0;
    for (const auto& [type, count] : nl_types(lattice, h, d, m)) {
      auto it = degrees.find(type);
      if (it != degrees.end()) sum += Rational(count) * it->second;
    }
    return sum;
  };
  return {std::move(lattice), std::move(hodge_degree), std::move(rule)};
}

FracSeries theta_a(long order_in_eighths) {
  if (order_in_eighths < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  return to_series(theta_dense(order_in_eighths, false), order_in_eighths);
}

FracSeries theta_b(long order_in_eighths) {
  if (order_in_eighths < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  return to_series(theta_dense(order_in_eighths, true), order_in_eighths);
}

FracSeries theta_quartic(long order_in_eighths) {
  if (order_in_eighths < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  const long n = order_in_eighths;
  const Dense a = theta_dense(n, false);
  const Dense b = theta_dense(n, true);
  std::vector<Dense> apow{Dense(n, Integer(0))}, bpow{Dense(n, Integer(0))};
  apow[0][0] = 1;
  bpow[0][0] = 1;
  for (int k = 1; k <= 21; ++k) {
    apow.push_back(dense_mul(apow.back(), a));
    bpow.push_back(dense_mul(bpow.back(), b));
  }
  Dense total(n, Integer(0));
  for (const auto& t : kThetaTerms) {
    const Dense prod = dense_mul(apow[t.a], bpow[21 - t.a]);
    for (long i = 0; i < n; ++i) total[i] += t.coeff * prod[i];
  }
  const Integer denom = Integer(1) << 22;
  for (auto& c : total) {
    if (c % denom != 0) throw Error(ErrorCode::InexactDivision, "2^22 does not divide a Theta coefficient");
    c /= denom;
  }
  return to_series(total, n);
}

long quartic_discriminant(long h, long d) { return d * d - 8 * h + 8; }

Rational nl_quartic(long h, long d) {
  const long disc = quartic_discriminant(h, d);
  if (disc < 0) return 0;
  return theta_quartic(disc + 1).coeff_num(disc);
}

NLProvider quartic_provider() {
  auto rule = [](std::optional<long> m, long h, const ZVector& d) -> Rational {
    if (m) throw Error(ErrorCode::InvalidArgument, "refined numbers are not available for the quartic pencil");
    return nl_quartic(h, d.at(0).get_si());
  };
  return {EvenLattice(ZMatrix{{Integer(4)}}), Integer(-1), rule};
}

EvenLattice pi3_lattice() { return EvenLattice(ZMatrix{{2, 3, 0}, {3, 0, 0}, {0, 0, -2}}); }

ZVector pi3_degrees(long m, long s) { return {2 * m * s + 3 * m, 3 * m * s, -2 * m * (s + 1)}; }

NLProvider pi3_provider(NLTable table) { return table_provider(pi3_lattice(), Integer(-2), std::move(table)); }

Rational RefinedBPSTable::at(int g, long m, long h) const {
  if (h < 0) return 0;
  if (h == 0) return g == 0 && m == 1 ? 1 : 0;
  auto it = entries_.find({g, m, h});
  return it == entries_.end() ? Rational(0) : it->second;
}

Integer gwnl_forward(const BPSTable& r, const NLProvider& p, int g, const ZVector& d) {
  const long top = h_upper(p.lattice, d);
  if (top > r.hmax()) throw Error(ErrorCode::InsufficientOrder, "BPS table does not reach h = " + std::to_string(top));
  Rational sum = 0;
  for (long h = 0; h <= top; ++h) {
    const Integer rg = r.at(g, h);
    if (rg != 0) sum += Rational(rg) * nl_number(p, std::nullopt, h, d);
  }
  return to_integer(sum);
}

Rational gwnl_forward(const RefinedBPSTable& r, const NLProvider& p, int g, const ZVector& d) {
  if (all_zero(d)) throw Error(ErrorCode::AllZeroDegrees, "refined numbers need nonzero degrees");
  const Integer div = degree_gcd(d);
  const long top = h_upper(p.lattice, d);
  Rational sum = 0;
  for (long h = 0; h <= top; ++h)
    for (long m = 1; m <= div; ++m) {
      if (div % m != 0) continue;
      const Rational rg = r.at(g, m, h);
      if (rg != 0) sum += rg * nl_number(p, m, h, d);
    }
  return sum;
}

RefinedBPSTable gwnl_invert(const FiberBPSTable& n, const NLProvider& p, int gmax, long mmax, long hmax) {
  if (p.lattice.gram() != pi3_lattice().gram())
    throw Error(ErrorCode::InvalidArgument, "inversion needs the pi3 lattice");
  RefinedBPSTable r;
  for (long h = 1; h <= hmax; ++h)
    for (long m = 1; m <= mmax; ++m) {
      if ((h - 1) % (m * m) != 0) continue;
      const long s = (h - 1) / (m * m) + 1;
      const ZVector d = pi3_degrees(m, s);
      const Rational lead = nl_number(p, m, h, d);
      if (lead == 0)
        throw Error(ErrorCode::LeadingCoefficientZero,
                    "leading NL number vanishes at m=" + std::to_string(m) + " h=" + std::to_string(h));
      for (int g = 0; g <= gmax; ++g) {
        auto it = n.find({g, d});
        if (it == n.end())
          throw Error(ErrorCode::InvalidArgument, "missing n at g=" + std::to_string(g) + " m=" +
                                                      std::to_string(m) + " h=" + std::to_string(h));
        Rational rest(it->second);
        for (long hp = 0; hp < h; ++hp)
          for (long mp = 1; mp <= m; ++mp) {
            if (m % mp != 0) continue;
            const Rational rg = r.at(g, mp, hp);
            if (rg != 0) rest -= rg * nl_number(p, mp, hp, d);
          }
        r.set(g, m, h, rest / lead);
      }
    }
  return r;
}

}  // namespace k3bps
