#pragma once

#include <map>
#include <optional>
#include <vector>

#include "walg/hat.hpp"
#include "walg/linalg.hpp"
#include "walg/presentation.hpp"

namespace walg {

// Standard triple inside an arbitrary presentation: [h,e] = 2e, [h,f] = -2f,
// [e,f] = h, enforced by validate_sl2_triple.
struct Sl2Triple {
  NCPoly f, h, e;
};

void validate_sl2_triple(const Presentation& H, const Sl2Triple& t);  // throws RelationDefect

// Self-reducing row set of polynomials, leading monomial = glex-largest.
// Insertion order does not affect the final span; rows are kept mutually
// reduced and monic, so the row set is a canonical basis of the span.
class PolyEchelon {
public:
  // Reduces p against the rows; inserts the remainder if nonzero.
  // Returns true when p enlarged the span.
  bool insert(NCPoly p);
  NCPoly reduce(NCPoly p) const;
  bool contains(const NCPoly& p) const { return reduce(p).is_zero(); }
  std::size_t rank() const { return rows_.size(); }
  // Rows sorted by leading monomial, largest first.
  std::vector<NCPoly> sorted_rows() const;

private:
  std::map<Monomial, NCPoly, GlexFirst> rows_;  // keyed by leading monomial
};

// Coordinates of target in the given spanning set, if it lies in the span.
std::optional<Vec> express_in_span(const std::vector<NCPoly>& basis, const NCPoly& target);

// Two coefficient polynomials as one, with a leading flag coordinate; used
// to run rank computations on fold classes (pairs over t^0 and t^{1/2}).
NCPoly pair_embed(const NCPoly& a, const NCPoly& b);

// Basis of { x of filtration degree <= degree : [a, x] = 0 }, canonical
// (echelonized, leading monomials decreasing).
std::vector<NCPoly> centralizer_basis(const Presentation& H, const NCPoly& a, int degree);

// ad h eigenspace decomposition of span(basis); requires the span to be ad
// h invariant (NotExpressible otherwise) with integer eigenvalues summing to
// the full dimension (NonSemisimpleH otherwise).
struct HGrading {
  std::map<long, std::vector<NCPoly>> pieces;
};
HGrading h_grading(const Presentation& H, const NCPoly& h, const std::vector<NCPoly>& basis);

// h^2 + 2(ef + fe).
NCPoly casimir(const Presentation& H, const Sl2Triple& t);

// After inverting e, (1/4)(theta - h^2 - 2h) t^{-1} is congruent to f: the
// lost generator is recovered from the Casimir and e^{-1}.
bool casimir_recovers_f(const HatContext& ctx, const Sl2Triple& t);

// t^{-1} h^k t is congruent to (h+2)^k: conjugation by the inverted element
// shifts the Cartan variable by 2.
bool shift_identity(const HatContext& ctx, const Sl2Triple& t, long k);

// a t^{-w/2} for a of ad h weight w.
HatElement psi(const HatContext& ctx, const NCPoly& a, long weight);

// Rank certificate for the family t^{i/2} h^j psi(a_k), 0 <= i <= imax,
// 0 <= j <= jmax, a_k running over a deduplicated basis of the psi-image of
// the centralizer of e up to cent_degree.
struct GammaReport {
  std::size_t centralizer = 0;  // graded basis elements of the centralizer
  std::size_t psi_basis = 0;    // after deduplicating psi images
  std::size_t family = 0;       // elements put into the rank check
  std::size_t rank = 0;
  bool independent = false;
};
GammaReport gamma_check(const HatContext& ctx, const Sl2Triple& t, int cent_degree, int imax,
                        int jmax);

}  // namespace walg
