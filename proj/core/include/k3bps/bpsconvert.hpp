#pragma once

// BPS expansions of the Gromov-Witten potential (variable lambda, sine basis)
// and of the stable-pairs potential (variable q, ((-q)^d - 2 + (-q)^{-d}) basis),
// and the formal check of the -q = e^{i lambda} dictionary between them.
//
// Orders: `lambda_order` means "through lambda^{lambda_order}" (truncation
// lambda_order + 1); `q_window` is a truncation exponent on the q side.

#include <map>
#include <optional>
#include <tuple>
#include <utility>

#include "k3bps/kkv.hpp"
#include "k3bps/rational.hpp"
#include "k3bps/series.hpp"

namespace k3bps {

// Norm-square label h' of the class k*alpha when <alpha,alpha> = 2h-2:
// 2h'-2 = k^2 (2h-2).
long class_h(long k, long h);

// BPS counts per class: (g, k) -> r_{g, k alpha}.
using ClassBPS = std::map<std::pair<int, int>, Rational>;

// v^{m alpha} coefficients of F_alpha, each a Laurent series in lambda.
struct GWPotential {
  long h = 0;
  std::map<int, FracSeries> by_m;
};

// v^{m alpha} coefficients of the stable-pairs potential, Laurent series in q.
struct PairsPotential {
  long h = 0;
  std::map<int, FracSeries> by_m;
};

// Stable-pairs BPS counts keyed by (g, m, h); lookups outside return 0.
class PairsBPSTable {
 public:
  using Key = std::tuple<int, int, long>;
  PairsBPSTable() = default;
  explicit PairsBPSTable(std::map<Key, Integer> entries);

  Integer at(int g, int m, long h) const;
  const std::map<Key, Integer>& entries() const { return entries_; }

 private:
  std::map<Key, Integer> entries_;
};

// Positive divisors of m in ascending order.
std::vector<int> divisors(int m);

// (2 sin(d lambda/2))^{2g-2} = lambda^{2g-2} (sin(d lambda/2)/(lambda/2))^{2g-2},
// through lambda^{lambda_order}.
FracSeries gw_basis(int g, int d, long lambda_order);

// (-q)^d - 2 + (-q)^{-d} as an exact Laurent polynomial.
FracSeries pairs_denominator(int d);

// (-1)^{g-1} ((-q)^d - 2 + (-q)^{-d})^{g-1}; for g = 0 the ascending-q
// expansion truncated at q_window.
FracSeries pairs_basis(int g, int d, long q_window);

GWPotential gw_from_class_bps(const ClassBPS& r, long h, int mmax, long lambda_order);

// Reads r_{g,(m/d) alpha} from the table through the class norm square.
// Throws InsufficientOrder when the table does not reach a needed h'.
GWPotential gw_from_bps(const BPSTable& r, long h, int mmax, long lambda_order);

// Recovers r_{g, m alpha} by induction on m and a triangular solve in g.
ClassBPS bps_from_gw(const GWPotential& f);

PairsPotential pairs_from_class_bps(const ClassBPS& rt, long h, int mmax, long q_window);
PairsPotential pairs_from_bps(const PairsBPSTable& rt, long h, int mmax, long q_window);

// Recovers the stable-pairs BPS counts, m ascending.  gmax defaults to the
// value inferred from the most negative q-exponent of each residual.
PairsBPSTable bps_from_pairs(const PairsPotential& f, std::optional<int> gmax = std::nullopt);

// Stable-pairs counts read off a Gromov-Witten table (r~ = r).
PairsBPSTable pairs_table_from_bps(const BPSTable& r, long h, int mmax);

GaussSeries to_gauss(const FracSeries& s);

// Exact Laurent polynomial in q composed with q = -e^{i lambda}, truncated at lambda^{trunc}.
GaussSeries compose_neg_exp(const FracSeries& poly, long trunc);

// num(q)/den(q) for exact Laurent polynomials composed with q = -e^{i lambda},
// through lambda^{lambda_order}.
GaussSeries compose_rational(const FracSeries& num, const FracSeries& den, long lambda_order);

// Formal check that gw_basis(g, d) equals pairs_basis(g, d) under -q = e^{i lambda}.
bool dictionary_check(int g, int d, long lambda_order);

// Builds the pairs potential from r (read as r~), composes each v^{m alpha}
// coefficient with q = -e^{i lambda} and compares against gw_from_bps.
bool theorem2_check(const BPSTable& r, long h, int mmax, long lambda_order);

}  // namespace k3bps
