#pragma once

// Brute-force references used only by the tests.  Nothing here calls into the
// library's series or lattice algorithms.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// Number of partitions of n with parts <= max_part.
inline std::int64_t partitions(int n, int max_part) {
  if (n == 0) return 1;
  if (n < 0 || max_part == 0) return 0;
  return partitions(n - max_part, max_part) + partitions(n, max_part - 1);
}
inline std::int64_t partitions(int n) { return partitions(n, n); }

// Coefficients of (sum_n q^{n^2/8})^2 by enumerating pairs (n1, n2); index is
// the exponent in eighths.
inline std::vector<std::int64_t> theta_square(int order_in_eighths) {
  std::vector<std::int64_t> c(order_in_eighths, 0);
  for (int a = -order_in_eighths; a <= order_in_eighths; ++a)
    for (int b = -order_in_eighths; b <= order_in_eighths; ++b)
      if (a * a + b * b < order_in_eighths) ++c[a * a + b * b];
  return c;
}

// Laurent coefficients of 1/(4 sin^2(x/2)) from x^{-2} through x^{2k-2},
// by long division of the sine series with exact fractions over int64.
struct Frac {
  std::int64_t p = 0, q = 1;
  Frac(std::int64_t a = 0, std::int64_t b = 1) : p(a), q(b) { norm(); }
  void norm() {
    if (q < 0) p = -p, q = -q;
    const auto g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) p /= g, q /= g;
  }
  friend Frac operator+(Frac a, Frac b) { return {a.p * b.q + b.p * a.q, a.q * b.q}; }
  friend Frac operator-(Frac a, Frac b) { return {a.p * b.q - b.p * a.q, a.q * b.q}; }
  friend Frac operator*(Frac a, Frac b) { return {a.p * b.p, a.q * b.q}; }
  friend Frac operator/(Frac a, Frac b) { return {a.p * b.q, a.q * b.p}; }
  friend bool operator==(Frac a, Frac b) { return a.p == b.p && a.q == b.q; }
};

inline std::vector<Frac> inverse_sin_squared(int k) {
  // (2 sin(x/2)/x)^2 = sum_j s_j x^{2j}; 4 sin^2(x/2) = 2 - 2 cos x.
  std::vector<Frac> s(k);
  std::int64_t fact = 2;  // (2j+2)!
  for (int j = 0; j < k; ++j) {
    if (j > 0) fact *= (2 * j + 1) * (2 * j + 2);
    s[j] = Frac(j % 2 == 0 ? 2 : -2, fact);
  }
  std::vector<Frac> inv(k);
  for (int j = 0; j < k; ++j) {
    Frac acc = j == 0 ? Frac(1) : Frac(0);
    for (int i = 1; i <= j; ++i) acc = acc - s[i] * inv[j - i];
    inv[j] = acc / s[0];
  }
  return inv;
}

// Lattice vectors are plain int64 here.
using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

inline std::int64_t pair(const Mat& g, const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
  return s;
}

// Exhaustive search over |coord_i| <= bound[i] for beta with
// <beta, e_i> = d_i (i < r) and <beta, beta> = norm in the lattice `g`.
// Returns (count, count with the given divisibility, 0 meaning no filter).
inline std::int64_t box_count(const Mat& g, const Vec& d, std::int64_t norm, const Vec& bound, std::int64_t div = 0) {
  const std::size_t n = g.size();
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  std::int64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < d.size() && ok; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += g[i][j] * x[j];
      ok = s == d[i];
    }
    if (ok && pair(g, x, x) == norm) {
      std::int64_t gg = 0;
      for (auto c : x) gg = std::gcd(gg, c < 0 ? -c : c);
      if (div == 0 || gg == div) ++count;
    }
    std::size_t i = 0;
    while (i < n && x[i] == bound[i]) x[i] = -bound[i], ++i;
    if (i == n) break;
    ++x[i];
  }
  return count;
}

// Weighted count of even overlattices M of L + Z v (v with degrees d and norm
// 2h-2) in which L stays primitive: M = L + Z w with v = b w + lambda,
// b >= 1, lambda in L mod bL.  The weight is 2 when 2 <w, .>|_L lies in the
// image of L (the type then has an extra automorphism w -> -w + lambda').
inline std::int64_t overlattice_weight(const Mat& gram, const Vec& d, std::int64_t h) {
  const std::size_t r = gram.size();
  const std::int64_t vv = 2 * h - 2;
  // det and adjugate for r <= 2
  std::int64_t det;
  Mat adj(r, Vec(r));
  if (r == 1) {
    det = gram[0][0];
    adj[0][0] = 1;
  } else {
    det = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0];
    adj = {{gram[1][1], -gram[0][1]}, {-gram[1][0], gram[0][0]}};
  }
  // Delta(h,d) bounds b^2.
  std::int64_t big;
  if (r == 1)
    big = d[0] * d[0] - gram[0][0] * vv;
  else
    big = det * vv - (d[0] * (adj[0][0] * d[0] + adj[0][1] * d[1]) + d[1] * (adj[1][0] * d[0] + adj[1][1] * d[1]));
  std::int64_t total = 0;
  for (std::int64_t b = 1; b * b <= big; ++b) {
    Vec lam(r, 0);
    while (true) {
      Vec f(r);
      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i) {
        std::int64_t gl = 0;
        for (std::size_t j = 0; j < r; ++j) gl += gram[i][j] * lam[j];
        ok = (d[i] - gl) % b == 0;
        f[i] = (d[i] - gl) / b;
      }
      if (ok) {
        std::int64_t dl = 0;
        for (std::size_t i = 0; i < r; ++i) dl += d[i] * lam[i];
        const std::int64_t num = vv - 2 * dl + pair(gram, lam, lam);
        if (num % (b * b) == 0 && (num / (b * b)) % 2 == 0) {
          // 2 f in gram * Z^r  <=>  adj * (2 f) divisible by det
          bool two_torsion = true;
          for (std::size_t i = 0; i < r; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < r; ++j) s += adj[i][j] * 2 * f[j];
            two_torsion = two_torsion && s % det == 0;
          }
          total += two_torsion ? 2 : 1;
        }
      }
      std::size_t i = 0;
      while (i < r && lam[i] == b - 1) lam[i] = 0, ++i;
      if (i == r) break;
      ++lam[i];
    }
  }
  return total;
}

}  // namespace oracle
