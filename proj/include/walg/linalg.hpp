#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

using Vec = std::vector<Rational>;

// Dense matrix over Q, row-major. Everything downstream that needs linear
// algebra over an explicit basis (kernels of ad maps, Reynolds images,
// independence ranks) lands here.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static RationalMatrix identity(std::size_t n);
};

RationalMatrix matmul(const RationalMatrix& x, const RationalMatrix& y);
Vec matvec(const RationalMatrix& m, const Vec& v);

struct RrefResult {
  RationalMatrix r;               // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

// Fraction-free forward elimination (Bareiss, deterministic first-nonzero
// pivot scanned in row-major order), rational back-substitution. No floating
// point anywhere, so two runs on the same input are bit-identical.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of the right null space { v : Mv = 0 }. One vector per free column,
// free coordinate set to 1, ordered by free column index.
std::vector<Vec> kernel_basis(const RationalMatrix& m);

// One solution of Mx = b, or nullopt when inconsistent.
std::optional<Vec> solve(const RationalMatrix& m, const Vec& b);

}  // namespace walg
