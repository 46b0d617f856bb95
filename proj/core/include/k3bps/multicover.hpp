#pragma once

// Multiple-cover structure of the stable-pairs series R~_{m alpha}(q) and the
// exponential/logarithm relation with the star-restricted partition function,
// modelled on the rank-one effective cone {alpha, 2 alpha, ..., m alpha}.

#include <vector>

#include "k3bps/bpsconvert.hpp"
#include "k3bps/series.hpp"

namespace k3bps {

struct RtildeSeries {
  int m = 1;
  long h = 0;  // <alpha, alpha> = 2h - 2 for the primitive class alpha
  FracSeries series;
};

// Star-restricted partition function coefficients P*_1, ..., P*_m.
struct EffConeSeries {
  std::vector<FracSeries> star;  // star[k-1] is the v^{k alpha} coefficient
};

// R~_h(q) = t*I_h with y renamed q; zero for h < 0.  `order` is the q truncation.
RtildeSeries rtilde_primitive(long h, long order);

// sum_{k|m} (1/k) R~_{(m/k)^2 (h-1) + 1}(-(-q)^k).
RtildeSeries rtilde_multiple(int m, long h, long order);

// Extracts r~_{g, m, m^2(h-1)+1} from the multiple-cover series and compares
// with r~_{g, 1, m^2(h-1)+1} from the primitive series.
bool divisibility_independence_check(int m, long h, long order);

// Stable-pairs BPS table of the classes alpha, ..., m alpha built from the
// multiple-cover series.
PairsBPSTable multicover_bps_table(int m, long h, long order);

// P*_k = [v^k] exp(sum_j v^j R~_j), evaluated as the exponential power series in v.
EffConeSeries eff_exp(const std::vector<FracSeries>& rtilde);
// Inverse of eff_exp: [v^k] log(1 + sum_j v^j P*_j).
std::vector<FracSeries> eff_log(const EffConeSeries& p);

// P*_k - R~_k = (1/k) sum_{k1+k2=k} P*_{k1} k2 R~_{k2} for every k <= m, with
// P* = eff_exp(R~).  The pairing <delta, k alpha> = k c has its scalar c cancelled.
bool recursion_check(const std::vector<FracSeries>& rtilde);
// Same, with R~_k = rtilde_multiple(k, h, order) for k = 1..m.
bool recursion_check(int m, long h, long order);

}  // namespace k3bps
