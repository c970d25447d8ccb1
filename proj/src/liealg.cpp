#include "walg/liealg.hpp"

#include <algorithm>

namespace walg {

int LieAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw UnknownGenerator("no basis element named '" + name + "'");
}

Vec LieAlgebra::coords_of(int i) const {
  Vec v(dim(), Rational(0));
  v.at(static_cast<std::size_t>(i)) = Rational(1);
  return v;
}

Vec LieAlgebra::bracket(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw WalgError("bracket: coordinate size mismatch");
  Vec out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Rational c = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += c * br[i][j][k];
    }
  }
  return out;
}

void LieAlgebra::check_jacobi() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // antisymmetry first; Jacobi below assumes it
      for (std::size_t k = 0; k < n; ++k)
        if (br[i][j][k] != -br[j][i][k])
          throw JacobiViolation("bracket is not antisymmetric on (" + names[i] + ", " + names[j] +
                                ")");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = bracket(coords_of(static_cast<int>(i)), br[j][k]);
        Vec t = bracket(coords_of(static_cast<int>(j)), br[k][i]);
        Vec u = bracket(coords_of(static_cast<int>(k)), br[i][j]);
        for (std::size_t m = 0; m < n; ++m) {
          if (s[m] + t[m] + u[m] != Rational(0))
            throw JacobiViolation("Jacobi identity fails on (" + names[i] + ", " + names[j] +
                                  ", " + names[k] + ")");
        }
      }
}

LieAlgebra LieAlgebra::reorder(const std::vector<std::size_t>& perm) const {
  const std::size_t n = dim();
  if (perm.size() != n) throw WalgError("reorder: permutation size mismatch");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (perm[k] >= n || inv[perm[k]] != n) throw WalgError("reorder: not a permutation");
    inv[perm[k]] = k;
  }
  LieAlgebra out;
  out.names.resize(n);
  out.br.assign(n, std::vector<Vec>(n, Vec(n, Rational(0))));
  if (!mats.empty()) out.mats.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.names[k] = names[perm[k]];
    if (!mats.empty()) out.mats[k] = mats[perm[k]];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.br[i][j][inv[k]] = br[perm[i]][perm[j]][k];
  return out;
}

LieAlgebra lie_from_matrices(std::vector<std::string> names, std::vector<RationalMatrix> mats) {
  const std::size_t n = names.size();
  if (mats.size() != n || n == 0) throw WalgError("need one matrix per basis name");
  const std::size_t rows = mats[0].rows, cols = mats[0].cols;
  for (const auto& m : mats)
    if (m.rows != rows || m.cols != cols) throw WalgError("matrix sizes differ");

  // Columns of S are the flattened basis matrices.
  RationalMatrix S(rows * cols, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) S.at(r * cols + c, k) = mats[k].at(r, c);
  if (rank(S) != n) throw WalgError("matrices are linearly dependent");

  LieAlgebra L;
  L.names = std::move(names);
  L.br.assign(n, std::vector<Vec>(n, Vec(n, Rational(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RationalMatrix comm = matmul(mats[i], mats[j]);
      RationalMatrix ji = matmul(mats[j], mats[i]);
      Vec rhs(rows * cols, Rational(0));
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          rhs[r * cols + c] = comm.at(r, c) - ji.at(r, c);
      auto x = solve(S, rhs);
      if (!x) throw WalgError("commutator of basis matrices leaves their span");
      L.br[i][j] = *x;
      for (std::size_t k = 0; k < n; ++k) L.br[j][i][k] = -(*x)[k];
    }
  L.mats = std::move(mats);
  return L;
}

namespace {

RationalMatrix zeros(std::size_t n) { return RationalMatrix(n, n); }

}  // namespace

LieAlgebra sl_n(int n) {
  if (n < 2) throw WalgError("sl_n needs n >= 2");
  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<std::string> names;
  std::vector<RationalMatrix> mats;
  auto elem = [&](std::size_t i, std::size_t j) {
    RationalMatrix m = zeros(N);
    m.at(i - 1, j - 1) = Rational(1);
    return m;
  };
  for (int h = n - 1; h >= 1; --h)
    for (int j = 1; j + h <= n; ++j) {
      names.push_back("E" + std::to_string(j + h) + std::to_string(j));
      mats.push_back(elem(static_cast<std::size_t>(j + h), static_cast<std::size_t>(j)));
    }
  for (int i = 1; i < n; ++i) {
    names.push_back("H" + std::to_string(i));
    RationalMatrix m = zeros(N);
    m.at(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(i) - 1) = Rational(1);
    m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = Rational(-1);
    mats.push_back(m);
  }
  for (int h = 1; h <= n - 1; ++h)
    for (int i = 1; i + h <= n; ++i) {
      names.push_back("E" + std::to_string(i) + std::to_string(i + h));
      mats.push_back(elem(static_cast<std::size_t>(i), static_cast<std::size_t>(i + h)));
    }
  return lie_from_matrices(std::move(names), std::move(mats));
}

LieAlgebra sp4() {
  // 4x4 blocks [[A, B], [C, -A^T]] with B, C symmetric; long root 2e1 sits
  // in the top-right corner, so e112 is the highest root vector.
  std::vector<std::string> names{"f112", "f12", "f1", "f2", "h1",
                                 "h2",   "e1",  "e2", "e12", "e112"};
  std::vector<RationalMatrix> mats(10, zeros(4));
  auto set = [&](std::size_t k, std::size_t r, std::size_t c, long v) {
    mats[k].at(r - 1, c - 1) = Rational(v);
  };
  set(0, 3, 1, 1);                            // f112: C = E11
  set(1, 3, 2, 1), set(1, 4, 1, 1);           // f12:  C = E12 + E21
  set(2, 2, 1, 1), set(2, 3, 4, -1);          // f1:   A = E21
  set(3, 4, 2, 1);                            // f2:   C = E22
  set(4, 1, 1, 1), set(4, 2, 2, -1), set(4, 3, 3, -1), set(4, 4, 4, 1);  // h1
  set(5, 2, 2, 1), set(5, 4, 4, -1);          // h2
  set(6, 1, 2, 1), set(6, 4, 3, -1);          // e1:   A = E12
  set(7, 2, 4, 1);                            // e2:   B = E22
  set(8, 1, 4, 1), set(8, 2, 3, 1);           // e12:  B = E12 + E21
  set(9, 1, 3, 1);                            // e112: B = E11
  return lie_from_matrices(std::move(names), std::move(mats));
}

}  // namespace walg
