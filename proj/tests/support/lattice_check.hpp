#pragma once

// Random small even lattices and the comparison of refined multiplicities
// against the box search and the overlattice count.

#include <random>
#include <string>

#include "k3bps/lattice.hpp"
#include "support/oracles.hpp"

namespace lattice_check {

struct Case {
  k3bps::ZMatrix gram;
  long h = 0;
  k3bps::ZVector degrees;
};

inline oracle::Mat to_mat(const k3bps::ZMatrix& m) {
  oracle::Mat out;
  for (const auto& row : m) {
    oracle::Vec r;
    for (const auto& c : row) r.push_back(c.get_si());
    out.push_back(r);
  }
  return out;
}

// Rank 1 or 2, |entries| <= 6, nondegenerate, Delta(h,d) > 0.
inline Case random_case(std::mt19937& rng) {
  std::uniform_int_distribution<int> rank(1, 2), half(-3, 3), off(-6, 6), deg(-3, 3), hh(-1, 3);
  while (true) {
    Case c;
    if (rank(rng) == 1) {
      c.gram = {{2 * half(rng)}};
      c.degrees = {deg(rng)};
    } else {
      const int b = off(rng);
      c.gram = {{2 * half(rng), b}, {b, 2 * half(rng)}};
      c.degrees = {deg(rng), deg(rng)};
    }
    c.h = hh(rng);
    if (k3bps::determinant(c.gram) == 0) continue;
    k3bps::EvenLattice L(c.gram);
    if (sgn(k3bps::extended_discriminant(L, c.h, c.degrees)) <= 0) continue;
    return c;
  }
}

struct Report {
  bool ok = true;
  std::string detail;
  long types = 0;
};

inline Report check(const Case& c) {
  using namespace k3bps;
  Report rep;
  const EvenLattice L(c.gram);
  const Integer big = extended_discriminant(L, c.h, c.degrees);
  const auto group = discriminant_group(L);
  const auto inv = inverse(to_rational(c.gram));
  const auto base = mat_vec(inv, std::vector<Rational>(c.degrees.begin(), c.degrees.end()));
  long b_max = 0;
  while (Integer((b_max + 1) * (b_max + 1)) <= big) ++b_max;

  Integer total = 0;
  for (long b = 1; b <= b_max; ++b) {
    if (big % (b * b) != 0) continue;
    for (const auto& cls : group.classes) {
      const NLType t{big / (b * b), cls};
      const Integer got = refined_multiplicity(L, c.h, c.degrees, t);
      total += got;
      const auto tl = type_lattice(L, t);
      if (!tl) {
        if (got != 0) rep.ok = false, rep.detail = "count without a type lattice";
        continue;
      }
      // |a_i| <= |(gram^{-1} d)_i| + |b| since a = gram^{-1} d - b x, 0 <= x < 1.
      oracle::Vec bound;
      for (const auto& v : base) bound.push_back(ceil(abs(v)).get_si() + b_max);
      bound.push_back(b_max);
      oracle::Vec d;
      for (const auto& x : c.degrees) d.push_back(x.get_si());
      const auto n = oracle::box_count(to_mat(*tl), d, 2 * c.h - 2, bound);
      if (got != n) {
        rep.ok = false;
        rep.detail = "type " + to_string(t.disc) + cls.to_string() + ": " + to_string(got) + " vs box " +
                     std::to_string(n);
      }
      for (long div = 1; div <= 3; ++div) {
        const auto nd = oracle::box_count(to_mat(*tl), d, 2 * c.h - 2, bound, div);
        if (refined_multiplicity(L, c.h, c.degrees, t, div) != nd) {
          rep.ok = false;
          rep.detail = "divisibility " + std::to_string(div) + " differs";
        }
      }
      if (got != 0) {
        ++rep.types;
        if (big % t.disc != 0) rep.ok = false, rep.detail = "type discriminant does not divide";
      }
    }
  }
  oracle::Vec d;
  for (const auto& x : c.degrees) d.push_back(x.get_si());
  const auto weight = oracle::overlattice_weight(to_mat(c.gram), d, c.h);
  if (total != weight) {
    rep.ok = false;
    rep.detail = "sum over types " + to_string(total) + " vs overlattices " + std::to_string(weight);
  }
  Integer listed = 0;
  for (const auto& [t, n] : nl_types(L, c.h, c.degrees)) listed += n;
  if (listed != total) rep.ok = false, rep.detail = "nl_types total differs";
  if (total < 1) rep.ok = false, rep.detail = "beta = v missing";
  return rep;
}

}  // namespace lattice_check
