#pragma once

// Small exact linear algebra over Q and Z.

#include <vector>

#include "k3bps/rational.hpp"

namespace k3bps {

using QMatrix = std::vector<std::vector<Rational>>;
using ZMatrix = std::vector<std::vector<Integer>>;

QMatrix to_rational(const ZMatrix& m);

Rational determinant(QMatrix m);
Integer determinant(const ZMatrix& m);

// Throws Error(DegenerateLattice) when singular.
QMatrix inverse(QMatrix m);

std::vector<Rational> mat_vec(const QMatrix& m, const std::vector<Rational>& v);

// Solves A x = b for a possibly overdetermined system with a unique solution.
// Throws SingularSystem when the columns are dependent and
// InconsistentSystem when b is not in the column span.
std::vector<Rational> solve_unique(QMatrix a, std::vector<Rational> b);

// Nontrivial invariant factors (> 1) of an integer matrix, in divisibility order.
// Zero diagonal entries of the normal form are reported as 0.
std::vector<Integer> invariant_factors(ZMatrix m);

}  // namespace k3bps
