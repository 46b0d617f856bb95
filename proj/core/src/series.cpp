#include "k3bps/series.hpp"

namespace k3bps {

FracSeries infinite_product(const std::function<long(long)>& exponent_of, long order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
  if (order == 0) return FracSeries::zero(1, 0);
  std::vector<Integer> c(static_cast<std::size_t>(order), Integer(0));
  c[0] = 1;
  for (long n = 1; n < order; ++n) {
    const long e = exponent_of(n);
    // Multiplying by (1 - q^n) runs downward; dividing (geometric series) runs upward.
    for (long rep = 0; rep < e; ++rep)
      for (long k = order - 1; k >= n; --k) c[k] -= c[k - n];
    for (long rep = 0; rep < -e; ++rep)
      for (long k = n; k < order; ++k) c[k] += c[k - n];
  }
  FracSeries::Terms terms;
  for (long k = 0; k < order; ++k)
    if (c[k] != 0) terms.emplace(k, Rational(c[k]));
  return FracSeries(1, std::move(terms), order);
}

}  // namespace k3bps
