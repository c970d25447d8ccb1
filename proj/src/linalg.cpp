#include "walg/linalg.hpp"

#include <stdexcept>

namespace walg {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RationalMatrix matmul(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
  RationalMatrix out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Rational& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out.at(i, j) += xik * y.at(k, j);
    }
  return out;
}

Vec matvec(const RationalMatrix& m, const Vec& v) {
  if (m.cols != v.size()) throw std::invalid_argument("matvec: shape mismatch");
  Vec out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) out[i] += m.at(i, j) * v[j];
  return out;
}

namespace {

// Clear denominators row by row so the Bareiss recurrence stays in Z.
std::vector<std::vector<mpz_class>> to_integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<mpz_class>> z(m.rows, std::vector<mpz_class>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < m.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols; ++j) z[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
  }
  return z;
}

struct Echelon {
  std::vector<std::vector<mpz_class>> z;
  std::vector<std::size_t> pivots;  // column of the pivot in row k
};

// Bareiss fraction-free elimination. Pivot: first row (top down) with a
// nonzero entry in the current column; divisions are exact by the Sylvester
// identity.
Echelon forward(const RationalMatrix& m) {
  Echelon e{to_integer_rows(m), {}};
  auto& z = e.z;
  mpz_class prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && z[p][c] == 0) ++p;
    if (p == m.rows) continue;
    std::swap(z[p], z[r]);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        mpz_class t = z[r][c] * z[i][j] - z[i][c] * z[r][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

RrefResult rref(const RationalMatrix& m) {
  Echelon e = forward(m);
  const std::size_t nr = e.pivots.size();
  RationalMatrix r(m.rows, m.cols);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r.at(i, j) = Rational(mpz_class(e.z[i][j]));
  // Normalize pivots to 1 and clear entries above them, bottom row first.
  for (std::size_t k = nr; k-- > 0;) {
    const std::size_t pc = e.pivots[k];
    Rational inv = Rational(1) / r.at(k, pc);
    for (std::size_t j = pc; j < m.cols; ++j) r.at(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      Rational f = r.at(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < m.cols; ++j) r.at(i, j) -= f * r.at(k, j);
    }
  }
  return {std::move(r), std::move(e.pivots)};
}

std::size_t rank(const RationalMatrix& m) { return forward(m).pivots.size(); }

std::vector<Vec> kernel_basis(const RationalMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols);
    v[f] = Rational(1);
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.r.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const RationalMatrix& m, const Vec& b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve: shape mismatch");
  RationalMatrix aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  RrefResult rr = rref(aug);
  for (std::size_t c : rr.pivots)
    if (c == m.cols) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
  Vec x(m.cols);
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) x[rr.pivots[k]] = rr.r.at(k, m.cols);
  return x;
}

}  // namespace walg
