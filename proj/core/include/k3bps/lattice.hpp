#pragma once

// Even lattices, discriminant groups and the refined multiplicities
// m(h, d | Delta, delta) of the Noether-Lefschetz divisors.

#include <optional>
#include <string>
#include <vector>

#include "k3bps/linalg.hpp"
#include "k3bps/rational.hpp"

namespace k3bps {

using ZVector = std::vector<Integer>;

class EvenLattice {
 public:
  // Requires a nonempty square symmetric matrix with even diagonal.
  explicit EvenLattice(ZMatrix gram);

  std::size_t rank() const { return gram_.size(); }
  const ZMatrix& gram() const { return gram_; }
  Integer pairing(const ZVector& a, const ZVector& b) const;
  std::string label(std::size_t i) const { return "v" + std::to_string(i + 1); }

  // (positive, negative, zero) counts of the diagonalized form.
  struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
  };
  Signature signature() const;
  // Signature (1, r-1).
  bool is_polarization_type() const;

 private:
  ZMatrix gram_;
};

// (-1)^{r-1} det(gram).
Integer lattice_discriminant(const EvenLattice& L);

// (-1)^r det of the gram matrix bordered by the degrees and the corner 2h-2.
Integer extended_discriminant(const EvenLattice& L, long h, const ZVector& degrees);

// A class of G = L^* / L up to sign, stored in dual coordinates x = gram^{-1} f
// reduced into [0,1)^r; the lexicographically smaller of x, -x is kept.
struct CosetClass {
  std::vector<Rational> representative;

  bool is_identity() const;
  // The integer functional f = gram * x lifting the class.
  ZVector lift(const EvenLattice& L) const;
  std::string to_string() const;

  friend bool operator==(const CosetClass&, const CosetClass&) = default;
  friend bool operator<(const CosetClass& a, const CosetClass& b) {
    return a.representative < b.representative;
  }
};

struct DiscriminantGroup {
  std::vector<Integer> invariant_factors;  // those different from 1
  Integer order;
  std::vector<std::vector<Rational>> elements;  // reduced dual coordinates, sorted
  std::vector<CosetClass> classes;              // G / +-, sorted
};

DiscriminantGroup discriminant_group(const EvenLattice& L);

// Class of the functional v_i -> d_i.
CosetClass coset_of_degrees(const EvenLattice& L, const ZVector& degrees);

// Greatest common divisor of the coordinates.
Integer divisibility(const ZVector& beta);

// The unique v in L with <v_i, v> = d_i, if integral.
std::optional<ZVector> vector_of_degrees(const EvenLattice& L, const ZVector& degrees);

struct NLType {
  Integer disc;
  CosetClass coset;

  friend bool operator==(const NLType&, const NLType&) = default;
  friend bool operator<(const NLType& a, const NLType& b) {
    if (a.disc != b.disc) return a.disc < b.disc;
    return a.coset < b.coset;
  }
};

// The rank r+1 lattice L + Z w of type (Delta, delta), with <w, v_i> given by the
// lift of delta and <w, w> fixed by Delta.  Empty if no even lattice has that type.
std::optional<ZMatrix> type_lattice(const EvenLattice& L, const NLType& type);

// Number of beta = a + b w in the lattice of the given type with <beta, v_i> = d_i
// and <beta, beta> = 2h - 2; with `div`, only those of that divisibility.
Integer refined_multiplicity(const EvenLattice& L, long h, const ZVector& degrees,
                             const NLType& type, std::optional<long> div = std::nullopt);
Integer refined_multiplicity(const EvenLattice& L, long h, const ZVector& degrees,
                             const Integer& target_disc, const CosetClass& target_coset);

// All types with nonzero multiplicity, in increasing order.
std::vector<std::pair<NLType, Integer>> nl_types(const EvenLattice& L, long h, const ZVector& degrees,
                                                 std::optional<long> div = std::nullopt);

}  // namespace k3bps
