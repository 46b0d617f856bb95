#pragma once

// Noether-Lefschetz numbers of one-parameter families of lattice-polarized K3
// surfaces, the quartic-pencil form Theta, and the GW/NL correspondence for
// fiber classes (forward sum and triangular inversion).

#include <functional>
#include <map>
#include <optional>
#include <tuple>

#include "k3bps/kkv.hpp"
#include "k3bps/lattice.hpp"
#include "k3bps/series.hpp"

namespace k3bps {

// Value of NL_{m,h,d} (m empty: unrefined) for Delta(h,d) > 0.
using NLRule = std::function<Rational(std::optional<long> m, long h, const ZVector& d)>;

struct NLProvider {
  EvenLattice lattice;
  Integer hodge_degree;  // degree of the dual Hodge bundle on the base
  NLRule positive;
};

// Delta < 0: 0.  Delta = 0: hodge_degree when some v in the lattice has these
// degrees (of divisibility m, when given), else 0.  Delta > 0: the provider rule.
Rational nl_number(const NLProvider& p, std::optional<long> m, long h, const ZVector& d);

// Stored values keyed by (m, h, d), with m = 0 for unrefined numbers; missing keys are 0.
using NLTable = std::map<std::tuple<long, long, ZVector>, Rational>;
NLProvider table_provider(EvenLattice lattice, Integer hodge_degree, NLTable table);

// NL_{m,h,d} = sum over types of m(h,d | Delta,delta) times the degree of P_{Delta,delta}.
NLProvider divisor_provider(EvenLattice lattice, Integer hodge_degree, std::map<NLType, Rational> degrees);

// Theta on the grid q^{1/8}, exact below q^{order_in_eighths / 8}.
FracSeries theta_quartic(long order_in_eighths);
// A = sum_n q^{n^2/8}, B = sum_n (-1)^n q^{n^2/8}, same truncation.
FracSeries theta_a(long order_in_eighths);
FracSeries theta_b(long order_in_eighths);

// d^2 - 8h + 8.
long quartic_discriminant(long h, long d);
Rational nl_quartic(long h, long d);
NLProvider quartic_provider();

// Gram matrix [[2,3,0],[3,0,0],[0,0,-2]] and the degrees (2ms+3m, 3ms, -2m(s+1))
// of the class ms v1 + m v2 + m(s+1) v3.
EvenLattice pi3_lattice();
ZVector pi3_degrees(long m, long s);
NLProvider pi3_provider(NLTable table);

// n_{g,d} keyed by genus and degree tuple.
using FiberBPSTable = std::map<std::pair<int, ZVector>, Integer>;

// r_{g,m,h}; lookups return the seeds r_{0,1,0} = 1, 0 for other h <= 0, and 0
// for missing keys.
class RefinedBPSTable {
 public:
  using Key = std::tuple<int, long, long>;  // (g, m, h)
  RefinedBPSTable() = default;
  explicit RefinedBPSTable(std::map<Key, Rational> entries) : entries_(std::move(entries)) {}

  Rational at(int g, long m, long h) const;
  void set(int g, long m, long h, Rational v) { entries_[{g, m, h}] = std::move(v); }
  const std::map<Key, Rational>& entries() const { return entries_; }

 private:
  std::map<Key, Rational> entries_;
};

// sum_h r_{g,h} NL_{h,d} over all h with Delta(h,d) >= 0.
Integer gwnl_forward(const BPSTable& r, const NLProvider& p, int g, const ZVector& d);
// sum_h sum_{m | gcd(d)} r_{g,m,h} NL_{m,h,d}.
Rational gwnl_forward(const RefinedBPSTable& r, const NLProvider& p, int g, const ZVector& d);

// Solves for r_{g,m,h}, g <= gmax, m <= mmax, 1 <= h <= hmax, from n at the
// degrees pi3_degrees(m, s) with h = m^2 (s-1) + 1, by induction on h.
RefinedBPSTable gwnl_invert(const FiberBPSTable& n, const NLProvider& p, int gmax, long mmax, long hmax);

}  // namespace k3bps
