#pragma once

// The KKV generating function and its BPS table r_{g,h}.

#include <map>
#include <utility>
#include <vector>

#include "k3bps/biseries.hpp"
#include "k3bps/rational.hpp"
#include "k3bps/series.hpp"

namespace k3bps {

// Integer BPS counts r_{g,h}, keyed by genus and arithmetic genus of the class.
// Lookups outside the stored range return 0.  Since the counts depend on a
// class only through its norm square, this table is also the source for
// r_{g,m,h} at every divisibility m.
class BPSTable {
 public:
  BPSTable() = default;
  BPSTable(std::map<std::pair<int, long>, Integer> entries, long hmax);

  Integer at(int g, long h) const;
  Integer at(int g, int /*m*/, long h) const { return at(g, h); }

  long hmax() const { return hmax_; }
  const std::map<std::pair<int, long>, Integer>& entries() const { return entries_; }

  // The genus-g row as a function of h, through hmax.
  std::vector<Integer> row(int g) const;

 private:
  std::map<std::pair<int, long>, Integer> entries_;
  long hmax_ = -1;
};

// prod_{n>=1} (1-q^n)^{-20} (1-y q^n)^{-2} (1-y^{-1} q^n)^{-2} through q^{order-1}.
BiSeries kkv_product(long order);

// Coefficients c_0..c_G with p = sum_g c_g (y^{1/2} - y^{-1/2})^{2g}.
std::vector<Rational> sin_basis_decompose(const LaurentPolyY& p);

// Inverse of sin_basis_decompose.
LaurentPolyY sin_basis_assemble(const std::vector<Rational>& c);

// r_{g,h} for 0 <= h <= hmax, with integrality and the structural laws
// r_{g>h} = 0, r_{g,g} = (-1)^g (g+1) verified.
BPSTable extract_r_table(long hmax);

// prod (1-q^n)^{-24} through q^{order-1}.
FracSeries yau_zaslow(long order);

}  // namespace k3bps
