#pragma once

#include <string>
#include <vector>

#include "walg/errors.hpp"
#include "walg/linalg.hpp"

namespace walg {

// Finite-dimensional Lie algebra over Q as structure constants on an ordered
// basis, optionally backed by the matrices the constants were computed from.
struct LieAlgebra {
  std::vector<std::string> names;
  std::vector<std::vector<Vec>> br;  // br[i][j] = coordinates of [x_i, x_j]
  std::vector<RationalMatrix> mats;  // matrix realization; may be empty

  std::size_t dim() const { return names.size(); }
  int index_of(const std::string& name) const;  // throws UnknownGenerator
  Vec coords_of(int i) const;

  Vec bracket(const Vec& a, const Vec& b) const;
  void check_jacobi() const;  // throws JacobiViolation with a witness triple

  // Same algebra on the permuted basis: new index k is old index perm[k].
  LieAlgebra reorder(const std::vector<std::size_t>& perm) const;
};

// Structure constants from pairwise-commutator expansion; throws if the
// matrices are linearly dependent or their commutators leave the span.
LieAlgebra lie_from_matrices(std::vector<std::string> names, std::vector<RationalMatrix> mats);

// Trace-free (n x n)-matrices on the basis E_ij / H_i = E_ii - E_{i+1,i+1},
// ordered: negative root vectors by height descending (E_n1 first), then the
// H_i, then positive root vectors by height ascending (E_1n last).
LieAlgebra sl_n(int n);

// Rank-2 symplectic algebra in 4x4 matrices, same ordering scheme; names
// carry the simple-root content (e1, e2, e12, e112 and f-partners).
LieAlgebra sp4();

}  // namespace walg
