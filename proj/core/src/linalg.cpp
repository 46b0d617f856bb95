#include "k3bps/linalg.hpp"

#include <algorithm>
#include <utility>

namespace k3bps {

QMatrix to_rational(const ZMatrix& m) {
  QMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) out[i].emplace_back(x);
  return out;
}

Rational determinant(QMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Integer determinant(const ZMatrix& m) { return to_integer(determinant(to_rational(m)), ErrorCode::InvariantViolation); }

QMatrix inverse(QMatrix m) {
  const std::size_t n = m.size();
  QMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::DegenerateLattice, "matrix is singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

std::vector<Rational> mat_vec(const QMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

std::vector<Rational> solve_unique(QMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv][col]) == 0) ++piv;
    if (piv == rows) throw Error(ErrorCode::SingularSystem, "column " + std::to_string(col) + " is dependent");
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col] / a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[i][c] -= f * a[r][c];
      b[i] -= f * b[r];
    }
    ++r;
  }
  if (rows < cols) throw Error(ErrorCode::SingularSystem, "fewer equations than unknowns");
  for (std::size_t i = cols; i < rows; ++i)
    if (sgn(b[i]) != 0) throw Error(ErrorCode::InconsistentSystem, "right-hand side is not in the column span");
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::vector<Integer> invariant_factors(ZMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t,t) and
    // clear its row and column; repeat until it divides everything left.
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Integer q = floor_div(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Integer q = floor_div(m[t][j], m[t][t]);
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  std::vector<Integer> out;
  for (const auto& d : diag)
    if (d != 1) out.push_back(d);
  return out;
}

}  // namespace k3bps
