#pragma once

// Exact truncated Laurent series in one formal variable.
//
// Exponents live on the grid (1/N)Z and are stored by their numerator k, so
// the monomial q^{k/N} is the pair (k, coeff).  A series is either exact (a
// Laurent polynomial) or truncated: every coefficient with exponent strictly
// below the truncation T is known exactly, nothing at or above T is stored.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "k3bps/error.hpp"
#include "k3bps/rational.hpp"

namespace k3bps {

template <class C>
class BasicSeries {
 public:
  using Coeff = C;
  using Terms = std::map<long, C>;

  BasicSeries() = default;

  BasicSeries(long grid, Terms terms, std::optional<long> trunc_num = std::nullopt)
      : grid_(grid), terms_(std::move(terms)), trunc_(trunc_num) {
    if (grid_ < 1) throw Error(ErrorCode::InvalidArgument, "grid must be >= 1");
    normalize();
  }

  static BasicSeries zero(long grid = 1, std::optional<long> trunc_num = std::nullopt) {
    return BasicSeries(grid, {}, trunc_num);
  }
  static BasicSeries constant(C c, long grid = 1) { return BasicSeries(grid, {{0, std::move(c)}}); }
  static BasicSeries monomial(C c, long k, long grid = 1) {
    return BasicSeries(grid, {{k, std::move(c)}});
  }

  long grid() const { return grid_; }
  const Terms& terms() const { return terms_; }
  bool is_exact() const { return !trunc_.has_value(); }
  bool is_zero() const { return terms_.empty(); }

  // Truncation numerator on this series' grid; nullopt when exact.
  std::optional<long> truncation_num() const { return trunc_; }
  std::optional<Rational> truncation() const {
    if (!trunc_) return std::nullopt;
    return make_rational(*trunc_, grid_);
  }

  // Lowest stored exponent numerator, if any term is stored.
  std::optional<long> lowest_num() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<long> highest_num() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  C coeff_num(long k) const {
    if (trunc_ && k >= *trunc_)
      throw Error(ErrorCode::BeyondTruncation,
                  "exponent " + std::to_string(k) + "/" + std::to_string(grid_) +
                      " is at or beyond the truncation");
    auto it = terms_.find(k);
    return it == terms_.end() ? C(0) : it->second;
  }

  C coeff(const Rational& e) const {
    if (trunc_ && e >= make_rational(*trunc_, grid_))
      throw Error(ErrorCode::BeyondTruncation, "exponent " + to_string(e) + " is at or beyond the truncation");
    const Rational scaled = e * grid_;
    if (!is_integer(scaled)) return C(0);
    return coeff_num(scaled.get_num().get_si());
  }

  // Re-express on a finer grid; new_grid must be a multiple of grid().
  BasicSeries regrid(long new_grid) const {
    if (new_grid % grid_ != 0)
      throw Error(ErrorCode::InvalidArgument, "regrid target must be a multiple of the grid");
    const long f = new_grid / grid_;
    Terms t;
    for (const auto& [k, c] : terms_) t.emplace(k * f, c);
    std::optional<long> tr;
    if (trunc_) tr = *trunc_ * f;
    return BasicSeries(new_grid, std::move(t), tr);
  }

  // Drop everything at or above exponent num/grid and mark the result truncated there.
  BasicSeries truncate_num(long num) const {
    const long t = trunc_ ? std::min(*trunc_, num) : num;
    return BasicSeries(grid_, terms_, t);
  }
  BasicSeries truncate(const Rational& T) const {
    const Integer k = ceil(T * grid_);
    return truncate_num(k.get_si());
  }

  BasicSeries operator-() const {
    Terms t;
    for (const auto& [k, c] : terms_) t.emplace(k, -c);
    return BasicSeries(grid_, std::move(t), trunc_);
  }

  friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
    return a.grid_ == b.grid_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

 private:
  void normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (is_zero_coeff(it->second) || (trunc_ && it->first >= *trunc_))
        it = terms_.erase(it);
      else
        ++it;
    }
  }
  static bool is_zero_coeff(const C& c) { return k3bps::is_zero(c); }

  long grid_ = 1;
  Terms terms_;
  std::optional<long> trunc_;
};

using FracSeries = BasicSeries<Rational>;
using GaussSeries = BasicSeries<GaussianRational>;

namespace detail {

inline std::optional<long> min_trunc(std::optional<long> a, std::optional<long> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

template <class C>
std::pair<BasicSeries<C>, BasicSeries<C>> unify(const BasicSeries<C>& a, const BasicSeries<C>& b) {
  if (a.grid() == b.grid()) return {a, b};
  const long n = std::lcm(a.grid(), b.grid());
  return {a.regrid(n), b.regrid(n)};
}

// Valuation lower bound in grid units: lowest stored term, else the truncation.
template <class C>
std::optional<long> valuation_bound(const BasicSeries<C>& a) {
  if (auto lo = a.lowest_num()) return lo;
  return a.truncation_num();
}

// Dense coefficient window [lo, lo + n) on the series' grid.
template <class C>
std::vector<C> dense(const BasicSeries<C>& a, long lo, long n) {
  std::vector<C> out(static_cast<std::size_t>(std::max(0L, n)), C(0));
  for (const auto& [k, c] : a.terms())
    if (k >= lo && k < lo + n) out[static_cast<std::size_t>(k - lo)] = c;
  return out;
}

// Resolve the working truncation of a unary operation: the operand's own
// truncation, tightened by an optional request.
template <class C>
long unary_target(const BasicSeries<C>& a, std::optional<Rational> requested, const char* what) {
  std::optional<long> req;
  if (requested) req = ceil(*requested * a.grid()).get_si();
  auto t = min_trunc(a.truncation_num(), req);
  if (!t)
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " of an exact series needs an explicit truncation");
  return *t;
}

}  // namespace detail

template <class C>
BasicSeries<C> operator+(const BasicSeries<C>& x, const BasicSeries<C>& y) {
  auto [a, b] = detail::unify(x, y);
  auto terms = a.terms();
  for (const auto& [k, c] : b.terms()) terms[k] += c;
  return BasicSeries<C>(a.grid(), std::move(terms), detail::min_trunc(a.truncation_num(), b.truncation_num()));
}

template <class C>
BasicSeries<C> operator-(const BasicSeries<C>& x, const BasicSeries<C>& y) {
  return x + (-y);
}

template <class C>
BasicSeries<C> operator*(const C& s, const BasicSeries<C>& a) {
  typename BasicSeries<C>::Terms t;
  for (const auto& [k, c] : a.terms()) t.emplace(k, s * c);
  return BasicSeries<C>(a.grid(), std::move(t), a.truncation_num());
}

// GMP expression templates (e.g. `r / d`) as scalars.
template <class C, class T, class U>
  requires(!std::is_same_v<__gmp_expr<T, U>, C>)
BasicSeries<C> operator*(const __gmp_expr<T, U>& s, const BasicSeries<C>& a) {
  return C(s) * a;
}

template <class C>
BasicSeries<C> operator*(const BasicSeries<C>& x, const BasicSeries<C>& y) {
  auto [a, b] = detail::unify(x, y);
  using S = BasicSeries<C>;
  if ((a.is_exact() && a.is_zero()) || (b.is_exact() && b.is_zero())) return S::zero(a.grid());
  // Sound bound: a = A + O(q^Ta), b = B + O(q^Tb) gives a*b exact below
  // min(Ta + val(b), Tb + val(a)).
  std::optional<long> t;
  if (auto ta = a.truncation_num()) t = *ta + *detail::valuation_bound(b);
  if (auto tb = b.truncation_num()) t = detail::min_trunc(t, *tb + *detail::valuation_bound(a));
  typename S::Terms out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const long k = ka + kb;
      if (t && k >= *t) break;
      out[k] += ca * cb;
    }
  }
  return S(a.grid(), std::move(out), t);
}

// Multiply by q^{num/grid}.
template <class C>
BasicSeries<C> shift_num(const BasicSeries<C>& a, long num) {
  typename BasicSeries<C>::Terms t;
  for (const auto& [k, c] : a.terms()) t.emplace(k + num, c);
  std::optional<long> tr;
  if (auto x = a.truncation_num()) tr = *x + num;
  return BasicSeries<C>(a.grid(), std::move(t), tr);
}

// Multiplicative inverse.  For a truncated input with leading exponent v and
// truncation T the result is exact below T - 2v; exact inputs need `trunc`.
template <class C>
BasicSeries<C> inv(const BasicSeries<C>& a, std::optional<Rational> trunc = std::nullopt) {
  const auto lo = a.lowest_num();
  if (!lo) throw Error(ErrorCode::ZeroLeadingTerm, "series vanishes to its truncation");
  const long v = *lo;
  std::optional<long> target;
  if (auto ta = a.truncation_num()) target = *ta - 2 * v;
  if (trunc) target = detail::min_trunc(target, ceil(*trunc * a.grid()).get_si());
  if (!target) throw Error(ErrorCode::InvalidArgument, "inverse of an exact series needs an explicit truncation");
  const long n = *target + v;  // coefficients b_{-v}, ..., b_{target-1}
  using S = BasicSeries<C>;
  if (n <= 0) return S::zero(a.grid(), *target);
  const auto da = detail::dense(a, v, n);
  std::vector<C> b(static_cast<std::size_t>(n), C(0));
  const C lead_inv = C(1) / da[0];
  b[0] = lead_inv;
  for (long j = 1; j < n; ++j) {
    C acc(0);
    for (long i = 1; i <= j; ++i) {
      const auto& ai = da[static_cast<std::size_t>(i)];
      if (!k3bps::is_zero(ai)) acc += ai * b[static_cast<std::size_t>(j - i)];
    }
    b[static_cast<std::size_t>(j)] = -(lead_inv * acc);
  }
  typename S::Terms out;
  for (long j = 0; j < n; ++j) out.emplace(j - v, b[static_cast<std::size_t>(j)]);
  return S(a.grid(), std::move(out), *target);
}

// log of a series with constant term 1 and no negative exponents.
template <class C>
BasicSeries<C> log1(const BasicSeries<C>& a, std::optional<Rational> trunc = std::nullopt) {
  const long t = detail::unary_target(a, trunc, "log1");
  if (auto lo = a.lowest_num(); lo && *lo < 0)
    throw Error(ErrorCode::BadConstantTerm, "log1 needs a power series without negative exponents");
  if (t <= 0 || a.coeff_num(0) != C(1))
    throw Error(ErrorCode::BadConstantTerm, "log1 needs constant term 1");
  const auto da = detail::dense(a, 0, t);
  std::vector<C> l(static_cast<std::size_t>(t), C(0));
  // Euler operator identity: k L_k = k a_k - sum_{j<k} j L_j a_{k-j}.
  for (long k = 1; k < t; ++k) {
    C acc = C(k) * da[static_cast<std::size_t>(k)];
    for (long j = 1; j < k; ++j) {
      const auto& ak = da[static_cast<std::size_t>(k - j)];
      if (!k3bps::is_zero(ak)) acc -= C(j) * l[static_cast<std::size_t>(j)] * ak;
    }
    l[static_cast<std::size_t>(k)] = acc / C(k);
  }
  typename BasicSeries<C>::Terms out;
  for (long k = 1; k < t; ++k) out.emplace(k, l[static_cast<std::size_t>(k)]);
  return BasicSeries<C>(a.grid(), std::move(out), t);
}

// exp of a series with zero constant term and no negative exponents.
template <class C>
BasicSeries<C> exp0(const BasicSeries<C>& a, std::optional<Rational> trunc = std::nullopt) {
  const long t = detail::unary_target(a, trunc, "exp0");
  if (auto lo = a.lowest_num(); lo && *lo <= 0)
    throw Error(ErrorCode::BadConstantTerm, "exp0 needs zero constant term and no negative exponents");
  const auto da = detail::dense(a, 0, t);
  std::vector<C> e(static_cast<std::size_t>(std::max(t, 1L)), C(0));
  e[0] = C(1);
  for (long k = 1; k < t; ++k) {
    C acc(0);
    for (long j = 1; j <= k; ++j) {
      const auto& aj = da[static_cast<std::size_t>(j)];
      if (!k3bps::is_zero(aj)) acc += C(j) * aj * e[static_cast<std::size_t>(k - j)];
    }
    e[static_cast<std::size_t>(k)] = acc / C(k);
  }
  typename BasicSeries<C>::Terms out;
  for (long k = 0; k < t; ++k) out.emplace(k, e[static_cast<std::size_t>(k)]);
  return BasicSeries<C>(a.grid(), std::move(out), t);
}

// Integer power; negative exponents go through inv (exact inputs need `trunc`).
template <class C>
BasicSeries<C> pow(const BasicSeries<C>& a, long n, std::optional<Rational> trunc = std::nullopt) {
  if (n < 0) return inv(pow(a, -n, std::nullopt), trunc);
  BasicSeries<C> result = BasicSeries<C>::constant(C(1), a.grid());
  BasicSeries<C> base = a;
  if (trunc) {
    // Keep intermediate sizes bounded for exact inputs with a requested cap.
    // Padding by the valuation keeps the final product exact below trunc.
    const long lo = a.lowest_num().value_or(0);
    const Rational pad = make_rational(std::abs(lo) * std::max(n, 1L), a.grid());
    base = base.truncate(*trunc + pad);
  }
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  if (trunc) result = result.truncate(*trunc);
  return result;
}

// q -> -(-q)^k on an integer-grid series: c q^e -> c (-1)^{(k+1)e} q^{ke}.
template <class C>
BasicSeries<C> substitute_cover(const BasicSeries<C>& a, long k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "cover degree must be positive");
  if (a.grid() != 1) throw Error(ErrorCode::FractionalExponent, "substitute_cover needs integer exponents");
  typename BasicSeries<C>::Terms t;
  for (const auto& [e, c] : a.terms()) {
    const bool odd = ((k + 1) * e) % 2 != 0;
    t.emplace(k * e, odd ? -c : c);
  }
  std::optional<long> tr;
  if (auto x = a.truncation_num()) tr = *x * k;
  return BasicSeries<C>(1, std::move(t), tr);
}

// True when the two series agree on every exponent below both truncations.
template <class C>
bool agree(const BasicSeries<C>& x, const BasicSeries<C>& y) {
  auto [a, b] = detail::unify(x, y);
  const auto t = detail::min_trunc(a.truncation_num(), b.truncation_num());
  auto in_range = [&](long k) { return !t || k < *t; };
  for (const auto& [k, c] : a.terms())
    if (in_range(k) && !(b.coeff_num(k) == c)) return false;
  for (const auto& [k, c] : b.terms())
    if (in_range(k) && !(a.coeff_num(k) == c)) return false;
  return true;
}

// First exponent (as a rational) where the series disagree below the common truncation.
template <class C>
std::optional<Rational> first_mismatch(const BasicSeries<C>& x, const BasicSeries<C>& y) {
  auto [a, b] = detail::unify(x, y);
  const auto t = detail::min_trunc(a.truncation_num(), b.truncation_num());
  std::optional<long> best;
  auto check = [&](const BasicSeries<C>& p, const BasicSeries<C>& q) {
    for (const auto& [k, c] : p.terms()) {
      if (t && k >= *t) break;
      if (!(q.coeff_num(k) == c)) {
        if (!best || k < *best) best = k;
        break;
      }
    }
  };
  check(a, b);
  check(b, a);
  if (!best) return std::nullopt;
  return make_rational(*best, a.grid());
}

// prod_{n>=1} (1 - q^n)^{e_n}, exact through q^{order-1}.
FracSeries infinite_product(const std::function<long(long)>& exponent_of, long order);

// Canonical text form: ("k/N", "p/q") pairs in ascending exponent order.
struct SeriesText {
  long grid = 1;
  std::optional<std::string> truncation;  // "p/q"; absent for exact series
  std::vector<std::pair<std::string, std::string>> terms;
};

template <class C>
SeriesText to_text(const BasicSeries<C>& a) {
  SeriesText out;
  out.grid = a.grid();
  if (auto t = a.truncation()) out.truncation = to_string(*t);
  for (const auto& [k, c] : a.terms())
    out.terms.emplace_back(std::to_string(k) + "/" + std::to_string(a.grid()), to_string(c));
  return out;
}

}  // namespace k3bps
