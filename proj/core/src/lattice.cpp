#include "k3bps/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace k3bps {

namespace {

Rational frac_part(const Rational& x) { return x - Rational(floor(x)); }

std::vector<Rational> reduce(std::vector<Rational> x) {
  for (auto& c : x) c = frac_part(c);
  return x;
}

std::vector<Rational> negate_reduced(const std::vector<Rational>& x) {
  std::vector<Rational> out;
  out.reserve(x.size());
  for (const auto& c : x) out.push_back(frac_part(-c));
  return out;
}

CosetClass canonical(const std::vector<Rational>& reduced) {
  auto neg = negate_reduced(reduced);
  return {std::min(reduced, neg)};
}

QMatrix gram_inverse(const EvenLattice& L) {
  if (determinant(L.gram()) == 0) throw Error(ErrorCode::DegenerateLattice, "degenerate gram matrix");
  return inverse(to_rational(L.gram()));
}

std::vector<Rational> to_q(const ZVector& v) { return {v.begin(), v.end()}; }

void check_length(const EvenLattice& L, const ZVector& d) {
  if (d.size() != L.rank()) throw Error(ErrorCode::InvalidArgument, "degree vector has wrong length");
}

}  // namespace

EvenLattice::EvenLattice(ZMatrix gram) : gram_(std::move(gram)) {
  const std::size_t r = gram_.size();
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "empty gram matrix");
  for (std::size_t i = 0; i < r; ++i) {
    if (gram_[i].size() != r) throw Error(ErrorCode::InvalidArgument, "gram matrix is not square");
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (gram_[i][i] % 2 != 0) throw Error(ErrorCode::InvalidArgument, "odd diagonal entry");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw Error(ErrorCode::InvalidArgument, "gram matrix is not symmetric");
  }
}

Integer EvenLattice::pairing(const ZVector& a, const ZVector& b) const {
  Integer s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

EvenLattice::Signature EvenLattice::signature() const {
  // Congruence diagonalization over Q.
  QMatrix m = to_rational(gram_);
  const std::size_t r = rank();
  Signature sig;
  for (std::size_t t = 0; t < r; ++t) {
    std::size_t p = t;
    while (p < r && m[p][p] == 0) ++p;
    if (p == r) {
      // All remaining diagonal entries vanish; an off-diagonal entry gives
      // a nonzero diagonal after adding one basis vector to another.
      std::size_t pi = r, pj = r;
      for (std::size_t i = t; i < r && pi == r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
          if (m[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == r) {
        sig.zero += static_cast<int>(r - t);
        break;
      }
      for (std::size_t k = 0; k < r; ++k) m[pi][k] += m[pj][k];
      for (std::size_t k = 0; k < r; ++k) m[k][pi] += m[k][pj];
      p = pi;
    }
    std::swap(m[t], m[p]);
    for (auto& row : m) std::swap(row[t], row[p]);
    for (std::size_t i = t + 1; i < r; ++i) {
      const Rational c = m[i][t] / m[t][t];
      for (std::size_t k = t; k < r; ++k) m[i][k] -= c * m[t][k];
    }
    for (std::size_t j = t + 1; j < r; ++j) m[t][j] = 0;
    if (sgn(m[t][t]) > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

bool EvenLattice::is_polarization_type() const {
  const auto s = signature();
  return s.zero == 0 && s.positive == 1;
}

Integer lattice_discriminant(const EvenLattice& L) {
  const Integer det = determinant(L.gram());
  return L.rank() % 2 == 1 ? det : Integer(-det);
}

Integer extended_discriminant(const EvenLattice& L, long h, const ZVector& degrees) {
  check_length(L, degrees);
  const std::size_t r = L.rank();
  ZMatrix b(r + 1, ZVector(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) b[i][j] = L.gram()[i][j];
    b[i][r] = degrees[i];
    b[r][i] = degrees[i];
  }
  b[r][r] = 2 * h - 2;
  const Integer det = determinant(b);
  return r % 2 == 0 ? det : Integer(-det);
}

bool CosetClass::is_identity() const {
  return std::all_of(representative.begin(), representative.end(), [](const Rational& c) { return c == 0; });
}

ZVector CosetClass::lift(const EvenLattice& L) const {
  const auto f = mat_vec(to_rational(L.gram()), representative);
  ZVector out;
  for (const auto& c : f) out.push_back(to_integer(c, ErrorCode::InvariantViolation));
  return out;
}

std::string CosetClass::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < representative.size(); ++i) {
    if (i) s += ",";
    s += k3bps::to_string(representative[i]);
  }
  return s + "]";
}

DiscriminantGroup discriminant_group(const EvenLattice& L) {
  const QMatrix inv = gram_inverse(L);
  const std::size_t r = L.rank();
  DiscriminantGroup out;
  out.invariant_factors = invariant_factors(L.gram());

  // G is generated by the columns of gram^{-1} modulo Z^r.
  std::set<std::vector<Rational>> seen;
  std::deque<std::vector<Rational>> queue;
  std::vector<Rational> zero(r, Rational(0));
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < r; ++c) {
      std::vector<Rational> y = x;
      for (std::size_t i = 0; i < r; ++i) y[i] += inv[i][c];
      y = reduce(std::move(y));
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  out.elements.assign(seen.begin(), seen.end());
  out.order = static_cast<unsigned long>(out.elements.size());
  std::set<CosetClass> classes;
  for (const auto& x : out.elements) classes.insert(canonical(x));
  out.classes.assign(classes.begin(), classes.end());
  if (out.order != abs(lattice_discriminant(L)))
    throw Error(ErrorCode::InvariantViolation, "discriminant group order differs from |det|");
  return out;
}

CosetClass coset_of_degrees(const EvenLattice& L, const ZVector& degrees) {
  check_length(L, degrees);
  return canonical(reduce(mat_vec(gram_inverse(L), to_q(degrees))));
}

Integer divisibility(const ZVector& beta) {
  Integer g = 0;
  for (const auto& c : beta) g = gcd(g, c);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "divisibility of the zero vector");
  return g;
}

std::optional<ZVector> vector_of_degrees(const EvenLattice& L, const ZVector& degrees) {
  check_length(L, degrees);
  const auto x = mat_vec(gram_inverse(L), to_q(degrees));
  ZVector out;
  for (const auto& c : x) {
    if (!is_integer(c)) return std::nullopt;
    out.push_back(c.get_num());
  }
  return out;
}

std::optional<ZMatrix> type_lattice(const EvenLattice& L, const NLType& type) {
  if (sgn(type.disc) <= 0) return std::nullopt;
  const std::size_t r = L.rank();
  const ZVector f = type.coset.lift(L);
  Rational fx = 0;
  for (std::size_t i = 0; i < r; ++i) fx += Rational(f[i]) * type.coset.representative[i];
  // (-1)^r det = -Delta(L) (<w,w> - f^T gram^{-1} f) must equal Delta.
  const Rational nw = fx - Rational(type.disc) / Rational(lattice_discriminant(L));
  if (!is_integer(nw) || nw.get_num() % 2 != 0) return std::nullopt;
  ZMatrix g(r + 1, ZVector(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) g[i][j] = L.gram()[i][j];
    g[i][r] = f[i];
    g[r][i] = f[i];
  }
  g[r][r] = nw.get_num();
  return g;
}

Integer refined_multiplicity(const EvenLattice& L, long h, const ZVector& degrees, const NLType& type,
                             std::optional<long> div) {
  const Integer big = extended_discriminant(L, h, degrees);
  if (sgn(big) <= 0) throw Error(ErrorCode::NonpositiveDiscriminant, "Delta(h,d) must be positive");
  // The index of L + Z beta in the type lattice is |b|, so b^2 Delta = Delta(h,d).
  if (sgn(type.disc) <= 0 || big % type.disc != 0) return 0;
  const Integer ratio = big / type.disc;
  if (!mpz_perfect_square_p(ratio.get_mpz_t())) return 0;
  const auto g = type_lattice(L, type);
  if (!g) return 0;
  const Integer b0 = sqrt(ratio);
  const std::size_t r = L.rank();
  const auto base = mat_vec(gram_inverse(L), to_q(degrees));
  Integer count = 0;
  for (const Integer& b : {b0, Integer(-b0)}) {
    ZVector beta;
    bool integral = true;
    for (std::size_t i = 0; i < r && integral; ++i) {
      const Rational a = base[i] - Rational(b) * type.coset.representative[i];
      integral = is_integer(a);
      if (integral) beta.push_back(a.get_num());
    }
    if (!integral) continue;
    beta.push_back(b);
    Integer norm = 0;
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j <= r; ++j) norm += beta[i] * (*g)[i][j] * beta[j];
    if (norm != 2 * h - 2) throw Error(ErrorCode::InvariantViolation, "norm condition failed");
    if (div && divisibility(beta) != *div) continue;
    ++count;
  }
  return count;
}

Integer refined_multiplicity(const EvenLattice& L, long h, const ZVector& degrees, const Integer& target_disc,
                             const CosetClass& target_coset) {
  return refined_multiplicity(L, h, degrees, NLType{target_disc, target_coset});
}

std::vector<std::pair<NLType, Integer>> nl_types(const EvenLattice& L, long h, const ZVector& degrees,
                                                 std::optional<long> div) {
  const Integer big = extended_discriminant(L, h, degrees);
  if (sgn(big) <= 0) throw Error(ErrorCode::NonpositiveDiscriminant, "Delta(h,d) must be positive");
  const auto group = discriminant_group(L);
  std::vector<std::pair<NLType, Integer>> out;
  for (Integer b = 1; b * b <= big; ++b) {
    if (big % (b * b) != 0) continue;
    for (const auto& cls : group.classes) {
      NLType t{big / (b * b), cls};
      Integer c = refined_multiplicity(L, h, degrees, t, div);
      if (c != 0) out.emplace_back(std::move(t), std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace k3bps
