#pragma once

#include <string>
#include <vector>

#include "walg/liealg.hpp"
#include "walg/presentation.hpp"

namespace walg {

// Sign of [var_i, der_i]. PlusOne is the polynomial-coefficient convention
// ([z, d/dz] = 1 after writing d for the derivation acting on the right);
// MinusOne is the differential-operator convention [x, d/dx] = -1.
enum class WeylSign { PlusOne, MinusOne };

// Rank-d Weyl algebra on generators var_1..var_d, der_1..der_d (bare names
// when d == 1). Variables come first in the normal order.
Presentation build_weyl(int d, WeylSign sign = WeylSign::PlusOne, const std::string& var = "z",
                        const std::string& der = "d");

// Same algebra with var_d moved to the end of the generator order and
// inverted: generators var_1..var_{d-1}, der_1..der_d, var_d^{+-1}.
Presentation build_weyl_var_localized(int d, WeylSign sign = WeylSign::PlusOne,
                                      const std::string& var = "z", const std::string& der = "d");

// Universal enveloping algebra on the Lie algebra's own basis order. The
// structure constants are re-checked for antisymmetry and Jacobi first.
Presentation build_enveloping(const LieAlgebra& L);

// A (x) B with A's generators first; generators from different factors
// commute. A must be polynomial; a localized last generator of B stays the
// localized last generator of the product.
Presentation tensor(const Presentation& A, const Presentation& B);

// Finite W-algebra presentation data: a degree-0 Lie algebra piece, an odd
// piece it acts on, a central C, and the odd-odd products landing in the
// even subalgebra. Generator weights are 2 / 3 / 4 so every relation lowers
// the filtration strictly.
struct MinimalWData {
  LieAlgebra g0;
  std::vector<std::string> g1_names;
  // action[i] is the matrix of x_i on the odd piece: column a holds the
  // coordinates of x_i . u_a in the basis u_b.
  std::vector<RationalMatrix> action;
  // B_lower[a][b] (a > b) is [u_a, u_b] written in the generator names of
  // the finished presentation (g0 names, "C", scalars only).
  std::vector<std::vector<std::string>> B_lower;
  std::string central_name = "C";
};

// Builds the presentation and validates the input: Jacobi on g0, the action
// being a Lie homomorphism (EquivarianceViolation otherwise), and the B
// entries staying inside the even subalgebra. Associativity of the result is
// what check_consistency is for; this does not run it.
Presentation build_minimal_w(const MinimalWData& data);

}  // namespace walg
