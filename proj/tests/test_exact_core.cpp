#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "walg/linalg.hpp"
#include "walg/rational.hpp"

using namespace walg;

namespace {

// Independent oracle: plain textbook Gauss-Jordan over Q, no fraction-free
// tricks, same first-nonzero pivot rule. RREF is canonical, so the production
// routine must reproduce this exactly.
RationalMatrix naive_rref(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return m;
}

RationalMatrix from_ints(std::size_t r, std::size_t c, std::initializer_list<long> xs) {
  RationalMatrix m(r, c);
  std::size_t k = 0;
  for (long x : xs) m.a[k++] = Rational(x);
  return m;
}

bool same_matrix(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] != y.a[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).den() == 2);  // denominator stays positive
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(-3, 6).str() == "-1/2");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::from_string("-10/4") == Rational(-5, 2));
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK_THROWS(Rational::from_string("abc"));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational arithmetic and pow") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 18));
  CHECK((a / b) == Rational(2));
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK_THROWS(Rational(0).pow(-1));
}

TEST_CASE("halfint representation") {
  HalfInt h = HalfInt::half();
  CHECK(!h.is_integral());
  CHECK(h.str() == "1/2");
  CHECK((h + h).is_integral());
  CHECK((h + h).to_long() == 1);
  CHECK(HalfInt(-2).str() == "-2");
  CHECK(HalfInt::parse("-3/2").doubled() == -3);
  CHECK(HalfInt::parse("4").doubled() == 8);
  CHECK_THROWS(HalfInt::parse("1/3"));
  CHECK_THROWS(HalfInt::from_doubled(3).to_integer());

  // floor/half-part split used by the hat-algebra fold: -3/2 = -2 + 1/2.
  HalfInt neg = HalfInt::from_doubled(-3);
  CHECK(neg.floor() == -2);
  CHECK(neg.has_half_part());
  CHECK(HalfInt(-2).floor() == -2);
  CHECK(!HalfInt(-2).has_half_part());
}

TEST_CASE("generalized binomial frozen values") {
  CHECK(gen_binomial(HalfInt::half(), 2) == Rational(-1, 8));
  CHECK(gen_binomial(HalfInt(3), 2) == Rational(3));
  CHECK(gen_binomial(HalfInt(-1), 3) == Rational(-1));
  CHECK(gen_binomial(HalfInt(-1), 0) == Rational(1));
  CHECK(gen_binomial(HalfInt::from_doubled(-1), 1) == Rational(-1, 2));
  // integer n below i vanishes, as for ordinary binomials
  CHECK(gen_binomial(HalfInt(2), 5) == Rational(0));
}

TEST_CASE("generalized binomial pascal identity") {
  for (long dbl = -9; dbl <= 9; ++dbl) {
    HalfInt n = HalfInt::from_doubled(dbl);
    HalfInt n1 = n - HalfInt(1);
    for (unsigned long i = 1; i <= 6; ++i) {
      CHECK(gen_binomial(n, i) == gen_binomial(n1, i) + gen_binomial(n1, i - 1));
    }
  }
}

TEST_CASE("generalized binomial stays exact at depth") {
  // binom(100, 50) via the product formula vs a Pascal-triangle build.
  std::vector<Rational> row = {Rational(1)};
  for (int n = 1; n <= 100; ++n) {
    std::vector<Rational> next(n + 1, Rational(1));
    for (int k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  CHECK(gen_binomial(HalfInt(100), 50) == row[50]);
}

TEST_CASE("kernel of a rank-deficient matrix") {
  // Oracle first: naive RREF of [[1,2],[2,4]] is [[1,2],[0,0]], so the null
  // space is the line through (-2, 1), equivalently spanned by (2, -1).
  RationalMatrix m = from_ints(2, 2, {1, 2, 2, 4});
  RationalMatrix o = naive_rref(m);
  CHECK(o.at(0, 0) == Rational(1));
  CHECK(o.at(0, 1) == Rational(2));
  CHECK(o.at(1, 0) == Rational(0));
  CHECK(o.at(1, 1) == Rational(0));

  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == Rational(-2));
  CHECK(ker[0][1] == Rational(1));
  // (2, -1) spans the same line
  CHECK(Rational(2) * ker[0][1] == Rational(-1) * ker[0][0]);
  CHECK(rank(m) == 1);
}

TEST_CASE("rref matches the naive oracle on seeded matrices") {
  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    RationalMatrix m(r, c);
    for (auto& x : m.a) {
      long num = static_cast<long>(rng() % 11) - 5;
      long den = 1 + static_cast<long>(rng() % 4);
      x = Rational(num, den);
    }
    RrefResult rr = rref(m);
    CHECK(same_matrix(rr.r, naive_rref(m)));
    CHECK(rank(m) == rr.pivots.size());

    auto ker = kernel_basis(m);
    CHECK(ker.size() + rank(m) == c);
    for (const auto& v : ker) {
      Vec mv = matvec(m, v);
      for (const auto& x : mv) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("solve finds particular solutions and detects inconsistency") {
  RationalMatrix m = from_ints(2, 2, {1, 1, 1, -1});
  auto x = solve(m, {Rational(3), Rational(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(2));
  CHECK((*x)[1] == Rational(1));

  RationalMatrix s = from_ints(2, 2, {1, 2, 2, 4});
  CHECK(!solve(s, {Rational(1), Rational(3)}).has_value());
  auto y = solve(s, {Rational(1), Rational(2)});
  REQUIRE(y.has_value());
  Vec sy = matvec(s, *y);
  CHECK(sy[0] == Rational(1));
  CHECK(sy[1] == Rational(2));
}

TEST_CASE("matmul and identity") {
  RationalMatrix i3 = RationalMatrix::identity(3);
  RationalMatrix m(3, 3);
  for (std::size_t k = 0; k < 9; ++k) m.a[k] = Rational(static_cast<long>(k), 3);
  CHECK(same_matrix(matmul(i3, m), m));
  CHECK(same_matrix(matmul(m, i3), m));
}
