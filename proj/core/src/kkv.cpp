#include "k3bps/kkv.hpp"

#include <string>

namespace k3bps {

BPSTable::BPSTable(std::map<std::pair<int, long>, Integer> entries, long hmax)
    : entries_(std::move(entries)), hmax_(hmax) {
  std::erase_if(entries_, [](const auto& kv) { return kv.second == 0; });
}

Integer BPSTable::at(int g, long h) const {
  if (g < 0 || h < 0) return 0;
  auto it = entries_.find({g, h});
  return it == entries_.end() ? Integer(0) : it->second;
}

std::vector<Integer> BPSTable::row(int g) const {
  std::vector<Integer> out;
  for (long h = 0; h <= hmax_; ++h) out.push_back(at(g, h));
  return out;
}

BiSeries kkv_product(long order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "kkv_product order must be >= 1");
  BiSeries s = BiSeries::one(order);
  for (long n = 1; n < order; ++n) {
    s = s.times_factor_power(0, n, -20);
    s = s.times_factor_power(2, n, -2);
    s = s.times_factor_power(-2, n, -2);
  }
  return s;
}

std::vector<Rational> sin_basis_decompose(const LaurentPolyY& p) {
  if (!p.has_integer_exponents())
    throw Error(ErrorCode::NotSymmetric, "sin basis decomposition needs integer y-exponents");
  if (!p.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "polynomial is not invariant under y -> 1/y");
  if (p.is_zero()) return {};
  const long top = p.half_terms().rbegin()->first / 2;
  std::vector<Rational> c(static_cast<std::size_t>(top + 1));
  LaurentPolyY rest = p;
  // (y - 2 + 1/y)^g has leading term y^g, so peel from the top exponent down.
  for (long g = top; g >= 0; --g) {
    const Rational lead = rest.coeff(g);
    c[static_cast<std::size_t>(g)] = lead;
    if (sgn(lead) != 0) rest -= lead * sin_basis_element(static_cast<int>(g));
  }
  if (!rest.is_zero()) throw Error(ErrorCode::InvariantViolation, "nonzero remainder after decomposition");
  return c;
}

LaurentPolyY sin_basis_assemble(const std::vector<Rational>& c) {
  LaurentPolyY out;
  for (std::size_t g = 0; g < c.size(); ++g)
    if (sgn(c[g]) != 0) out += c[g] * sin_basis_element(static_cast<int>(g));
  return out;
}

BPSTable extract_r_table(long hmax) {
  if (hmax < 0) throw Error(ErrorCode::InvalidArgument, "hmax must be >= 0");
  const BiSeries product = kkv_product(hmax + 1);
  std::map<std::pair<int, long>, Integer> entries;
  for (long h = 0; h <= hmax; ++h) {
    const auto c = sin_basis_decompose(bi_coeff(product, h));
    if (static_cast<long>(c.size()) != h + 1)
      throw Error(ErrorCode::InvariantViolation, "row h=" + std::to_string(h) + " has the wrong top genus");
    for (std::size_t g = 0; g < c.size(); ++g) {
      const std::string where = "(g=" + std::to_string(g) + ", h=" + std::to_string(h) + ")";
      if (!is_integer(c[g]))
        throw Error(ErrorCode::IntegralityViolation, "r" + where + " = " + to_string(c[g]));
      Integer r = c[g].get_num();
      if (g % 2 == 1) r = -r;
      if (static_cast<long>(g) > h && r != 0)
        throw Error(ErrorCode::InvariantViolation, "r" + where + " should vanish");
      if (static_cast<long>(g) == h) {
        const Integer expected = (g % 2 == 0 ? 1 : -1) * Integer(static_cast<long>(g) + 1);
        if (r != expected) throw Error(ErrorCode::InvariantViolation, "r" + where + " != (-1)^g (g+1)");
      }
      if (r != 0) entries.emplace(std::make_pair(static_cast<int>(g), h), r);
    }
  }
  return BPSTable(std::move(entries), hmax);
}

FracSeries yau_zaslow(long order) {
  return infinite_product([](long) { return -24L; }, order);
}

}  // namespace k3bps
