#pragma once

// Euler characteristics e(P_n(S,h)) of stable-pair moduli on a K3 surface and
// the signed residue series t*I_h built from them.

#include <map>
#include <utility>

#include "k3bps/biseries.hpp"
#include "k3bps/kkv.hpp"
#include "k3bps/series.hpp"

namespace k3bps {

// e(P_n(S,h)) keyed by (n, h); zero below n = 1 - h and outside the window.
class KYTable {
 public:
  KYTable() = default;
  KYTable(std::map<std::pair<long, long>, Integer> entries, long q_order, long y_order);

  Integer at(long n, long h) const;
  long q_order() const { return q_order_; }
  long y_order() const { return y_order_; }
  const std::map<std::pair<long, long>, Integer>& entries() const { return entries_; }

 private:
  std::map<std::pair<long, long>, Integer> entries_;
  long q_order_ = 0;
  long y_order_ = 0;
};

// sum_{h,n} e(P_n(S,h)) y^n q^h for h < q_order and n < y_order.
BiSeries ky_generating(long q_order, long y_order);
KYTable ky_table(long q_order, long y_order);

// t*I_h(y) as a Laurent series in y truncated at y^{y_order}.  Computed from
// the product formula and from the signed Euler characteristics; the two
// must agree (InvariantViolation otherwise).  Zero for h < 0.
FracSeries i_series(long h, long y_order);

// Product-formula route only.
FracSeries i_series_from_product(long h, long y_order);
// Signed Euler-characteristic route only.
FracSeries i_series_from_table(long h, long y_order);

// t*I_h * (1+y)^2 / y restricted to a Laurent polynomial.  Every coefficient
// above `degree_bound` that is visible in the truncation window must vanish
// (InvariantViolation otherwise).  Returns the polynomial.
struct RationalityWitness {
  FracSeries numerator;   // exact Laurent polynomial
  long degree_bound = 0;  // highest exponent present
  long window_top = 0;    // exclusive top of the checked window
};
RationalityWitness rationality_witness(long h, long y_order);

// Checks the Euler-characteristic series against row h of the KKV table,
// both as Laurent polynomials and through stable-pairs BPS extraction.
// Throws WindowTooSmall when y_order cannot see the whole row.
bool kkv_cross_check(long h, const BPSTable& r, long y_order);

// Smallest y_order that kkv_cross_check accepts for row h.
long cross_check_window(long h);

}  // namespace k3bps
