#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walg/presentation.hpp"

namespace walg {

// Algebra map given by generator images. Construction checks shapes only;
// whether the images satisfy the source relations is a separate certificate
// (relation_defect / certify), so deliberately broken maps can be built and
// inspected in tests.
//
// A localized source forces a localized target, and the image of the
// inverted generator must be a single term c * u^{+-1} in the inverted
// generator u of the target, so that arbitrary (negative, half) exponents
// have a well-defined image c^q u^{+-q}. The half lattice additionally
// forces c = 1: there is no consistent square root of the scalar otherwise.
class GenMorphism {
public:
  GenMorphism(const Presentation& source, const Presentation& target,
              std::vector<NCPoly> images);

  const Presentation& source() const { return *src_; }
  const Presentation& target() const { return *tgt_; }
  const NCPoly& image(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  const std::vector<NCPoly>& images() const { return images_; }

  NCPoly apply(const NCPoly& p) const;

  // phi(g_j) phi(g_i) - phi(g_i) phi(g_j) - phi([g_j, g_i]) for j > i.
  NCPoly relation_defect(int j, int i) const;

  // True when every relation defect vanishes; on failure *witness names the
  // offending pair and prints the defect.
  bool is_homomorphism(std::string* witness = nullptr) const;
  void certify() const;  // throws RelationDefect with the witness

  friend bool operator==(const GenMorphism& a, const GenMorphism& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const GenMorphism& a, const GenMorphism& b) { return !(a == b); }

private:
  const Presentation* src_;
  const Presentation* tgt_;
  std::vector<NCPoly> images_;
  // decomposition of the localized image: c * u^{loc_sign_}
  Rational loc_coeff_;
  int loc_sign_ = 1;
};

GenMorphism identity_morphism(const Presentation& H);

// f after g; g's target must be f's source (same generator names).
GenMorphism compose(const GenMorphism& f, const GenMorphism& g);

// f(g) = id and g(f) = id on generators.
bool are_mutually_inverse(const GenMorphism& f, const GenMorphism& g);

// phi tau phi^{-1}: transports an involution of phi's source to phi's
// target. Validates that phi_inv inverts phi, certifies the result, and
// checks it squares to the identity.
GenMorphism conjugate_involution(const GenMorphism& tau, const GenMorphism& phi,
                                 const GenMorphism& phi_inv);

// Closure of the seeds (endomorphisms of one algebra) under composition,
// identity included. Throws OrderBoundExceeded past `bound` elements.
std::vector<GenMorphism> group_closure(const std::vector<GenMorphism>& seeds,
                                       std::size_t bound = 8);

// Basis of the joint fixed space of the group on the filtered piece of
// degree <= degree, via averaging; canonical (echelonized). The group must
// be closed (use group_closure) or averaging would not project.
std::vector<NCPoly> fixed_subalgebra_basis(const Presentation& H,
                                           const std::vector<GenMorphism>& group, int degree);

// [a, b] == bracket * 1.
bool verify_weyl_pair(const Presentation& H, const NCPoly& a, const NCPoly& b,
                      const Rational& bracket);

}  // namespace walg
