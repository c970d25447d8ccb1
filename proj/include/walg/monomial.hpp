#pragma once

#include <cstdint>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

// Normal-form word g_0^{a_0} ... g_{n-1}^{a_{n-1}}. Exponents of all but the
// last generator are naturals; the last slot is a HalfInt so a localized
// final generator can carry negative or half-integer powers. Presentations
// without localization simply keep that slot a nonnegative integer.
struct Monomial {
  std::vector<std::uint32_t> head;  // exponents of generators 0 .. n-2
  HalfInt last;                     // exponent of generator n-1

  static Monomial one(std::size_t ngens) {
    Monomial m;
    m.head.assign(ngens == 0 ? 0 : ngens - 1, 0);
    return m;
  }

  std::size_t width() const { return head.size() + 1; }

  bool is_one() const {
    if (!last.is_zero()) return false;
    for (auto e : head)
      if (e) return false;
    return true;
  }

  // Doubled unweighted degree: 2 * sum(head) + |doubled last|. Half powers of
  // the final generator contribute |k|, negative powers likewise.
  mpz_class deg2_plain() const {
    mpz_class d = 0;
    for (auto e : head) d += 2 * static_cast<unsigned long>(e);
    d += ::abs(last.doubled());
    return d;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.head == b.head && a.last == b.last;
  }
};

// Graded-lex compare, degree first then exponents left to right. Returns
// <0, 0, >0 like strcmp. Used both for the term order inside NCPoly and for
// leading-monomial tie-breaking in echelon routines.
inline int glex_cmp(const Monomial& a, const Monomial& b) {
  if (a.head.size() != b.head.size())
    return a.head.size() < b.head.size() ? -1 : 1;
  mpz_class da = a.deg2_plain(), db = b.deg2_plain();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.head.size(); ++i)
    if (a.head[i] != b.head[i]) return a.head[i] < b.head[i] ? -1 : 1;
  if (a.last != b.last) return a.last < b.last ? -1 : 1;
  return 0;
}

// Map comparator placing the glex-largest monomial first, so that the first
// term of a polynomial is its leading term and serialization is canonical.
struct GlexFirst {
  bool operator()(const Monomial& a, const Monomial& b) const { return glex_cmp(a, b) > 0; }
};

}  // namespace walg
