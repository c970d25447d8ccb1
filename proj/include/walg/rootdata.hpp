#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

enum class SimpleType { A, B, C, D, E, F, G };

struct TypeRank {
  SimpleType type;
  int rank;
  std::string str() const;
  friend bool operator==(const TypeRank& a, const TypeRank& b) {
    return a.type == b.type && a.rank == b.rank;
  }
  friend bool operator!=(const TypeRank& a, const TypeRank& b) { return !(a == b); }
};

using LongMat = std::vector<std::vector<long>>;

// A[i][j] = <alpha_j, alpha_i^vee>, rows indexed by coroots; Bourbaki node
// numbering. Throws on ranks outside the simple types (D needs 4, E is
// 6..8, F is 4, G is 2, A needs 1, B and C need 2).
LongMat cartan_matrix(TypeRank tr);

// Half square lengths d_i with (alpha_i, alpha_j) = d_i A[i][j], normalized
// to minimum 1 on every connected component.
std::vector<long> symmetrizers(const LongMat& A);

// All positive roots in simple-root coordinates, by increasing height,
// generated by root strings from the simple roots.
std::vector<std::vector<long>> positive_roots(const LongMat& A);

struct RootSystem {
  TypeRank label;
  LongMat A;
  std::vector<long> d;
  std::vector<std::vector<long>> positive;

  int rank() const { return static_cast<int>(A.size()); }
  // <beta, alpha_i^vee> for beta in simple-root coordinates
  long pairing(const std::vector<long>& beta, int i) const;
  long height(const std::vector<long>& beta) const;
  const std::vector<long>& highest_root() const;  // the unique root of top height
};
RootSystem build_root_system(TypeRank tr);

// Connected component of a node subset, identified as a simple type with an
// explicit matching: nodes[k] is the original index playing Bourbaki node
// k+1. The match is verified against cartan_matrix(label) before returning.
struct DiagramComponent {
  TypeRank label;
  std::vector<int> nodes;
};
std::vector<DiagramComponent> classify_subdiagram(const LongMat& A, const std::vector<long>& d,
                                                  const std::vector<int>& nodes);

// Dimension of the irreducible with highest weight sum labels[i] * w_i, by
// the Weyl product formula. Works for block-diagonal (reducible) diagrams.
mpz_class weyl_dim(const LongMat& A, const std::vector<long>& d,
                   const std::vector<long>& labels);

// Weights with multiplicities by the Freudenthal recursion; weights are in
// fundamental-weight coordinates.
struct WeightTable {
  std::vector<std::pair<std::vector<long>, long>> entries;
  mpz_class dim() const;
};
WeightTable weight_table(const LongMat& A, const std::vector<long>& d,
                         const std::vector<long>& labels);

// Coefficients c with sum c_i alpha_i^vee pairing to 2 against every simple
// root (the regular semisimple element of a principal triple).
std::vector<Rational> principal_coroot(const LongMat& A);

// Decomposition data at the highest root theta: the grading of g by
// <., theta^vee> has pieces -2..2; g(0) splits off the span of theta^vee
// and a center, g(1) is a module over the rest.
struct HighestRootRow {
  TypeRank g;
  std::vector<int> orthogonal;                 // simple nodes with <alpha_i, theta^vee> = 0
  std::vector<DiagramComponent> components;    // diagram on those nodes
  int center_dim = 0;                          // rank - 1 - #orthogonal
  // highest weights of g(1), each as <beta, alpha_i^vee> over orthogonal
  // nodes in ascending node order
  std::vector<std::vector<long>> module_labels;
  // the same restriction applied to every g(1) root, sorted; the module
  // claim is exactly that these are the weights of the listed irreducibles
  std::vector<std::vector<long>> g1_restricted;
  std::size_t dim_g1 = 0;
  std::size_t d_invariant = 0;                 // dim g(1) + 1
  std::size_t dim_g = 0;                       // 2 #positive + rank
  bool dim_cross_check = false;   // dim g == (table g0) + 2 dim g1 + 3
  bool module_dim_check = false;  // sum of Weyl dimensions == dim g(1)
};
HighestRootRow highest_root_row(TypeRank g);

// Eigenvalues of the principal element of the orthogonal subdiagram on the
// g(1) roots; the split into even and odd spectra decides whether a parity
// automorphism can separate the module.
struct ParityReport {
  std::vector<long> eigenvalues;  // sorted, one per g(1) root
  bool all_odd = false;
};
ParityReport parity_check(TypeRank g);

}  // namespace walg
