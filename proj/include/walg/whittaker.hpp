#pragma once

#include <string>
#include <vector>

#include "walg/algebras.hpp"
#include "walg/liealg.hpp"
#include "walg/linalg.hpp"
#include "walg/presentation.hpp"

namespace walg {

// Eigenvalue grading by the semisimple element of the triple spanned by the
// extreme root vectors: h = [e, f], values required to sit in -2..2 with
// one-dimensional extreme slices.
struct ExtremeGrading {
  int e = -1, f = -1;         // basis positions of the extreme vectors
  Vec h;                      // coordinates of [e, f]
  std::vector<long> value;    // ad h eigenvalue per basis vector
};
ExtremeGrading grade_by_extremes(const LieAlgebra& L, int e_idx, int f_idx);
// default placement: f first, e last (the layout of sl_n / sp4)
ExtremeGrading grade_by_extremes(const LieAlgebra& L);

// Greedy isotropic half of the -1 slice under <x, y> = f-coefficient of
// [x, y]; throws when the result is not half-dimensional.
std::vector<int> greedy_lagrangian(const LieAlgebra& L, const ExtremeGrading& gr);

// Enveloping algebra reordered so the shifted subalgebra l + span(f) sits at
// the tail of the generator order.  The left ideal generated by (a - chi(a))
// then reduces any normal-ordered monomial by evaluating its trailing
// factors, leaving polynomials in the kept generators.
struct WhittakerModel {
  LieAlgebra g;                // reordered basis, kept generators first
  Presentation U;              // enveloping algebra of the reordered basis
  std::size_t kept = 0;        // generators surviving reduction
  std::vector<Rational> chi;   // character per tail generator
  ExtremeGrading grading;      // grading in the reordered basis
  std::vector<Vec> flat;       // basis of the slice-0 centralizer of e and f

  std::vector<int> slice(long v) const;  // kept indices of grading value v
};
WhittakerModel build_whittaker_model(const LieAlgebra& L);

// Image modulo the shifted left ideal: trailing factors become characters.
NCPoly reduce(const WhittakerModel& M, const NCPoly& p);

// One-letter element of U from basis coordinates.
NCPoly vec_poly(const WhittakerModel& M, const Vec& coords);

// Monomials supported on the kept generators, plain degree <= degree.
std::vector<Monomial> kept_monomials(const WhittakerModel& M, int degree);

// Parity under the involution that negates the odd slices.
bool monomial_odd(const WhittakerModel& M, const Monomial& m);

// Filtration weight where a generator of grading value v counts as v + 2.
long kazhdan_degree(const WhittakerModel& M, const Monomial& m);

// Canonical basis (echelonized) of the elements of bounded plain degree
// killed by the reduced adjoint action of every tail generator.
std::vector<NCPoly> invariant_basis(const WhittakerModel& M, int degree);

// Quadratic Casimir of the Killing form as an element of the enveloping
// algebra U of L; commutes with every generator.
NCPoly casimir_element(const Presentation& U, const LieAlgebra& L);

// Distinguished invariants: one lift per flat basis vector, one per odd
// (+1 slice) generator, and the reduced Casimir.  Lifts live in the
// filtration window of weight <= 3; flat lifts are pinned by their full
// degree-<=1 coordinates, odd lifts by their value-one coordinates (their
// value-minus-one linear tail is forced, not chosen).
struct WhittakerGenerators {
  std::vector<NCPoly> even;    // aligned with WhittakerModel::flat
  std::vector<NCPoly> odd;     // aligned with slice(+1)
  NCPoly center;               // reduced Casimir
  std::size_t invariant_dim = 0, even_dim = 0, odd_dim = 0;
};
WhittakerGenerators derive_generators(const WhittakerModel& M);

// Full pipeline: derive generators, recentre the flat lifts so their
// brackets close without constants, read off the action and the odd-odd
// products, and emit presentation data (flat names n1.., odd names w1..,
// central name C).  Throws when a commutator refuses to land in the
// expected span.
MinimalWData derive_minimal_w(const WhittakerModel& M);

// Standard triple in an abstract Lie algebra, found deterministically from
// nilpotent candidates among (sums and differences of) basis vectors.
struct CoordTriple {
  Vec f, h, e;
};
CoordTriple find_sl2_triple(const LieAlgebra& L);

}  // namespace walg
