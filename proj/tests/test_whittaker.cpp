#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "walg/algebras.hpp"
#include "walg/errors.hpp"
#include "walg/liealg.hpp"
#include "walg/sl2.hpp"
#include "walg/whittaker.hpp"

using namespace walg;

namespace {

LieAlgebra abelian2() {
  LieAlgebra L;
  L.names = {"a", "b"};
  L.br.assign(2, std::vector<Vec>(2, Vec(2, Rational(0))));
  return L;
}

LieAlgebra affine2() {
  LieAlgebra L = abelian2();  // [a, b] = a
  L.br[0][1][0] = Rational(1);
  L.br[1][0][0] = Rational(-1);
  return L;
}

std::vector<std::string> name_list(const LieAlgebra& L, const std::vector<int>& idxs) {
  std::vector<std::string> out;
  for (int i : idxs) out.push_back(L.names[static_cast<std::size_t>(i)]);
  return out;
}

// Degree<=1 invariant count straight from the structure constants: x is
// invariant iff for every tail generator a the bracket [a, x] has no kept
// component and the character kills its tail components.
std::size_t linear_invariant_count(const WhittakerModel& M) {
  const std::size_t n = M.g.dim(), kept = M.kept, tails = n - kept;
  RationalMatrix A(tails * (kept + 1), kept);
  for (std::size_t a = 0; a < tails; ++a)
    for (std::size_t j = 0; j < kept; ++j) {
      const Vec& v = M.g.br[kept + a][j];
      for (std::size_t r = 0; r < kept; ++r) A.at(a * (kept + 1) + r, j) = v[r];
      Rational s(0);
      for (std::size_t t = 0; t < tails; ++t) s += M.chi[t] * v[kept + t];
      A.at(a * (kept + 1) + kept, j) = s;
    }
  return kept - rank(A) + 1;  // +1 for the constants
}

// Centralizer of the two extreme root vectors inside the value-zero slice,
// computed on the original algebra with its own indexing.
std::size_t flat_dim_oracle(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const int e = static_cast<int>(n) - 1, f = 0;
  Vec h = L.br[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
  std::vector<int> zero;
  for (std::size_t i = 0; i < n; ++i) {
    Vec b = L.bracket(h, L.coords_of(static_cast<int>(i)));
    if (b[i].is_zero()) zero.push_back(static_cast<int>(i));
  }
  RationalMatrix A(2 * n, zero.size());
  for (std::size_t c = 0; c < zero.size(); ++c) {
    Vec be = L.br[static_cast<std::size_t>(zero[c])][static_cast<std::size_t>(e)];
    Vec bf = L.br[static_cast<std::size_t>(zero[c])][static_cast<std::size_t>(f)];
    for (std::size_t r = 0; r < n; ++r) {
      A.at(r, c) = be[r];
      A.at(n + r, c) = bf[r];
    }
  }
  return zero.size() - rank(A);
}

std::size_t slice_dim_oracle(const LieAlgebra& L, long value) {
  const std::size_t n = L.dim();
  Vec h = L.br[n - 1][0];
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (L.bracket(h, L.coords_of(static_cast<int>(i)))[i] == Rational(value)) ++count;
  return count;
}

bool invariant_under_tails(const WhittakerModel& M, const NCPoly& p) {
  for (std::size_t t = M.kept; t < M.g.dim(); ++t)
    if (!reduce(M, M.U.commutator(M.U.gen(static_cast<int>(t)), p)).is_zero()) return false;
  return true;
}

NCPoly low_part(const NCPoly& p) {
  NCPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.deg2_plain() <= 2) out += NCPoly::term(m, c);
  return out;
}

long max_kazhdan(const WhittakerModel& M, const NCPoly& p) {
  long k = 0;
  for (const auto& [m, c] : p.terms()) {
    (void)c;
    k = std::max(k, kazhdan_degree(M, m));
  }
  return k;
}

NCPoly random_poly(const WhittakerModel& M, std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> gd(0, static_cast<int>(M.g.dim()) - 1);
  std::uniform_int_distribution<long> cd(-3, 3);
  NCPoly out;
  for (int t = 0; t < 4; ++t) {
    NCPoly term = M.U.scalar(Rational(cd(rng)));
    for (int k = 0; k < degree; ++k) term = M.U.multiply(term, M.U.gen(gd(rng)));
    out += term;
  }
  return out;
}

// The ad-matrix of a coordinate vector on the value-one slice, columns in
// kept order; checks the action stays inside the slice.
RationalMatrix ad_on_slice1(const WhittakerModel& M, const Vec& x) {
  std::vector<int> sl = M.slice(1);
  RationalMatrix out(sl.size(), sl.size());
  for (std::size_t a = 0; a < sl.size(); ++a) {
    Vec b = M.g.bracket(x, M.g.coords_of(sl[a]));
    for (std::size_t r = 0; r < b.size(); ++r) {
      bool in_slice = false;
      for (std::size_t q = 0; q < sl.size(); ++q)
        if (sl[q] == static_cast<int>(r)) {
          out.at(q, a) = b[r];
          in_slice = true;
        }
      if (!in_slice) REQUIRE(b[r].is_zero());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("grading by extreme root vectors") {
  LieAlgebra L = sl_n(3);
  ExtremeGrading gr = grade_by_extremes(L);
  CHECK(gr.e == 7);
  CHECK(gr.f == 0);
  std::vector<std::pair<std::string, long>> expected{
      {"E31", -2}, {"E21", -1}, {"E32", -1}, {"H1", 0},
      {"H2", 0},   {"E12", 1},  {"E23", 1},  {"E13", 2}};
  for (const auto& [nm, v] : expected)
    CHECK(gr.value[static_cast<std::size_t>(L.index_of(nm))] == v);
  // h = [E13, E31] = E11 - E33 = H1 + H2
  CHECK(gr.h[static_cast<std::size_t>(L.index_of("H1"))] == Rational(1));
  CHECK(gr.h[static_cast<std::size_t>(L.index_of("H2"))] == Rational(1));

  CHECK_THROWS_AS(grade_by_extremes(L, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(grade_by_extremes(L, -1, 0), std::invalid_argument);
  // [E21, E31] = 0, so the bracket of the wrong pair grades nothing by 2
  CHECK_THROWS_AS(grade_by_extremes(L, 1, 0), WalgError);
  // non-semisimple adjoint action
  CHECK_THROWS_AS(grade_by_extremes(affine2(), 1, 0), NonSemisimpleH);
  // zero bracket on an abelian pair
  CHECK_THROWS_AS(grade_by_extremes(abelian2(), 1, 0), WalgError);
}

TEST_CASE("lagrangian peeling") {
  LieAlgebra L3 = sl_n(3);
  ExtremeGrading g3 = grade_by_extremes(L3);
  CHECK(name_list(L3, greedy_lagrangian(L3, g3)) == std::vector<std::string>{"E21"});

  LieAlgebra L4 = sl_n(4);
  ExtremeGrading g4 = grade_by_extremes(L4);
  CHECK(name_list(L4, greedy_lagrangian(L4, g4)) ==
        std::vector<std::string>{"E31", "E42"});

  LieAlgebra C2 = sp4();
  ExtremeGrading gc = grade_by_extremes(C2);
  CHECK(name_list(C2, greedy_lagrangian(C2, gc)) == std::vector<std::string>{"f12"});

  // mislabel a Cartan direction as value -1: its brackets leave the bottom
  ExtremeGrading bad = g3;
  bad.value[static_cast<std::size_t>(L3.index_of("H1"))] = -1;
  CHECK_THROWS_AS(greedy_lagrangian(L3, bad), WalgError);
}

TEST_CASE("model assembly") {
  WhittakerModel M = build_whittaker_model(sl_n(3));
  CHECK(M.kept == 6);
  CHECK(M.g.names == std::vector<std::string>{"E32", "H1", "H2", "E12", "E23", "E13",
                                              "E21", "E31"});
  REQUIRE(M.chi.size() == 2);
  CHECK(M.chi[0] == Rational(0));
  CHECK(M.chi[1] == Rational(1));
  CHECK(M.grading.e == 5);
  CHECK(M.grading.f == 7);
  CHECK(M.slice(1) == std::vector<int>{3, 4});
  CHECK(M.slice(2) == std::vector<int>{5});
  CHECK(M.slice(-1) == std::vector<int>{0});

  // flat = kernel of x -> ([x,e],[x,f]) on the Cartan: the difference of the
  // two simple coroots, whichever way the kernel is normalized
  REQUIRE(M.flat.size() == 1);
  const Vec& v = M.flat[0];
  CHECK(!v[1].is_zero());
  CHECK(v[1] == -v[2]);
  for (std::size_t i : {0ul, 3ul, 4ul, 5ul, 6ul, 7ul}) CHECK(v[i].is_zero());

  WhittakerModel Mc = build_whittaker_model(sp4());
  CHECK(Mc.kept == 8);
  CHECK(Mc.g.names[8] == "f12");
  CHECK(Mc.g.names[9] == "f112");
  CHECK(Mc.flat.size() == 3);
  CHECK(Mc.slice(1).size() == 2);

  WhittakerModel M4 = build_whittaker_model(sl_n(4));
  CHECK(M4.kept == 12);
  CHECK(M4.g.names[12] == "E31");
  CHECK(M4.g.names[13] == "E42");
  CHECK(M4.g.names[14] == "E41");
  REQUIRE(M4.chi.size() == 3);
  CHECK(M4.chi[0] == Rational(0));
  CHECK(M4.chi[1] == Rational(0));
  CHECK(M4.chi[2] == Rational(1));
  CHECK(M4.flat.size() == 4);
  CHECK(M4.slice(1).size() == 4);
}

TEST_CASE("character reduction") {
  for (const LieAlgebra& L : {sl_n(3), sp4()}) {
    WhittakerModel M = build_whittaker_model(L);
    const std::size_t n = M.g.dim();

    // tail generators evaluate to their character
    for (std::size_t t = M.kept; t < n; ++t) {
      NCPoly r = reduce(M, M.U.gen(static_cast<int>(t)));
      CHECK(r == M.U.scalar(M.chi[t - M.kept]));
    }
    // kept monomials are fixed
    for (const Monomial& m : kept_monomials(M, 2))
      CHECK(reduce(M, NCPoly::term(m, Rational(3))) == NCPoly::term(m, Rational(3)));

    // defining property of the shifted left ideal: p (a - chi(a)) dies
    std::mt19937_64 rng(0x5eed);
    for (std::size_t t = M.kept; t < n; ++t) {
      NCPoly shifted = M.U.gen(static_cast<int>(t)) - M.U.scalar(M.chi[t - M.kept]);
      for (int rep = 0; rep < 8; ++rep) {
        NCPoly p = random_poly(M, rng, 2);
        CHECK(reduce(M, M.U.multiply(p, shifted)).is_zero());
      }
    }
    // the character kills tail brackets
    for (std::size_t a = M.kept; a < n; ++a)
      for (std::size_t b = M.kept; b < n; ++b)
        CHECK(reduce(M, M.U.commutator(M.U.gen(static_cast<int>(a)),
                                       M.U.gen(static_cast<int>(b))))
                  .is_zero());
  }
}

TEST_CASE("linear invariants match the bracket oracle") {
  for (const LieAlgebra& L : {sl_n(3), sl_n(4), sp4()}) {
    WhittakerModel M = build_whittaker_model(L);
    std::vector<NCPoly> inv1 = invariant_basis(M, 1);
    CHECK(inv1.size() == linear_invariant_count(M));
    for (const NCPoly& p : inv1) CHECK(invariant_under_tails(M, p));
  }

  // on sl(3) the slot-by-slot picture is small enough to pin down fully:
  // constants, the flat Cartan direction, and one of the two value-one root
  // vectors (whose raising bracket the character kills)
  WhittakerModel M = build_whittaker_model(sl_n(3));
  std::vector<NCPoly> inv1 = invariant_basis(M, 1);
  REQUIRE(inv1.size() == 3);
  PolyEchelon span;
  for (const NCPoly& p : inv1) span.insert(p);
  CHECK(span.contains(M.U.one()));
  CHECK(span.contains(vec_poly(M, M.flat[0])));
  CHECK(span.contains(M.U.gen(M.g.index_of("E23"))));
  CHECK(!span.contains(M.U.gen(M.g.index_of("E12"))));
  CHECK(!span.contains(M.U.gen(M.g.index_of("E13"))));
  CHECK(!span.contains(M.U.gen(M.g.index_of("E32"))));
}

TEST_CASE("invariant windows") {
  WhittakerModel M = build_whittaker_model(sl_n(3));
  CHECK(kept_monomials(M, 1).size() == 7);
  CHECK(kept_monomials(M, 2).size() == 28);

  // parity and filtration weight of a few handmade monomials
  Monomial m = Monomial::one(8);
  CHECK(kazhdan_degree(M, m) == 0);
  CHECK(!monomial_odd(M, m));
  m.head[0] = 1;  // E32, value -1
  CHECK(kazhdan_degree(M, m) == 1);
  CHECK(monomial_odd(M, m));
  m.head[3] = 1;  // E12, value +1
  CHECK(kazhdan_degree(M, m) == 4);
  CHECK(!monomial_odd(M, m));
  m.head[0] = 0;
  m.head[5] = 1;  // E13, value +2
  CHECK(kazhdan_degree(M, m) == 7);
  CHECK(monomial_odd(M, m));

  std::vector<NCPoly> inv2 = invariant_basis(M, 2);
  PolyEchelon span2;
  for (const NCPoly& p : inv2) {
    CHECK(invariant_under_tails(M, p));
    span2.insert(p);
    // both parity parts are invariant on their own
    NCPoly even, odd;
    for (const auto& [mono, c] : p.terms()) {
      if (monomial_odd(M, mono))
        odd += NCPoly::term(mono, c);
      else
        even += NCPoly::term(mono, c);
    }
    CHECK(invariant_under_tails(M, even));
    CHECK(invariant_under_tails(M, odd));
  }
  CHECK(span2.rank() == inv2.size());
  for (const NCPoly& p : invariant_basis(M, 1)) CHECK(span2.contains(p));

  // products of degree-one invariants stay invariant and inside the window
  NCPoly h = vec_poly(M, M.flat[0]);
  NCPoly v = M.U.gen(M.g.index_of("E23"));
  for (const NCPoly& prod : {M.U.multiply(h, h), M.U.multiply(h, v), M.U.multiply(v, v)}) {
    CHECK(invariant_under_tails(M, prod));
    CHECK(span2.contains(prod));
  }
  CHECK(span2.contains(reduce(M, casimir_element(M.U, M.g))));
  CHECK(inv2.size() == 8);
}

TEST_CASE("quadratic central element") {
  for (const LieAlgebra& L : {sl_n(3), sp4()}) {
    Presentation U = build_enveloping(L);
    NCPoly omega = casimir_element(U, L);
    CHECK(!omega.is_zero());
    for (std::size_t i = 0; i < L.dim(); ++i)
      CHECK(U.commutator(U.gen(static_cast<int>(i)), omega).is_zero());
  }
  LieAlgebra A = abelian2();
  Presentation UA = build_enveloping(A);
  CHECK_THROWS_AS(casimir_element(UA, A), WalgError);
}

TEST_CASE("filtration window generators") {
  for (const LieAlgebra& L : {sl_n(3), sp4(), sl_n(4)}) {
    WhittakerModel M = build_whittaker_model(L);
    WhittakerGenerators G = derive_generators(M);

    const std::size_t m = flat_dim_oracle(L);
    const std::size_t k2 = slice_dim_oracle(L, 1) - M.flat.size() + m;  // == slice(1)
    CHECK(M.flat.size() == m);
    CHECK(G.even.size() == m);
    CHECK(G.odd.size() == slice_dim_oracle(L, 1));
    CHECK(G.odd.size() == k2);
    CHECK(G.even_dim == 1 + m);
    CHECK(G.odd_dim == G.odd.size());
    CHECK(G.invariant_dim == G.even_dim + G.odd_dim);

    for (std::size_t i = 0; i < G.even.size(); ++i) {
      CHECK(invariant_under_tails(M, G.even[i]));
      CHECK(low_part(G.even[i]) == vec_poly(M, M.flat[i]));
      CHECK(max_kazhdan(M, G.even[i]) <= 2);
    }
    std::vector<int> sl1 = M.slice(1);
    for (std::size_t a = 0; a < G.odd.size(); ++a) {
      CHECK(invariant_under_tails(M, G.odd[a]));
      CHECK(max_kazhdan(M, G.odd[a]) <= 3);
      // value-one coordinates are the indicator of the matching generator
      for (std::size_t r = 0; r < sl1.size(); ++r) {
        Monomial w = Monomial::one(M.g.dim());
        w.head[static_cast<std::size_t>(sl1[r])] = 1;
        auto it = G.odd[a].terms().find(w);
        Rational got = it == G.odd[a].terms().end() ? Rational(0) : it->second;
        CHECK(got == (r == a ? Rational(1) : Rational(0)));
      }
    }
    CHECK(invariant_under_tails(M, G.center));
    CHECK(max_kazhdan(M, G.center) <= 4);
    bool center_even = true;
    for (const auto& [mono, c] : G.center.terms()) {
      (void)c;
      if (monomial_odd(M, mono)) center_even = false;
    }
    CHECK(center_even);
    // the reduced Casimir reaches the top generator linearly
    Monomial top = Monomial::one(M.g.dim());
    top.head[static_cast<std::size_t>(M.grading.e)] = 1;
    auto it = G.center.terms().find(top);
    REQUIRE(it != G.center.terms().end());
    CHECK(!it->second.is_zero());
  }
}

TEST_CASE("flat generators close") {
  WhittakerModel M = build_whittaker_model(sl_n(3));
  MinimalWData data = derive_minimal_w(M);

  REQUIRE(data.g0.names == std::vector<std::string>{"n1"});
  REQUIRE(data.g1_names == std::vector<std::string>{"w1", "w2"});
  CHECK(data.central_name == "C");
  CHECK(data.g0.br[0][0] == Vec{Rational(0)});

  // action of the single flat generator = ad of the flat vector on the
  // value-one slice, read straight from the structure constants
  RationalMatrix expect = ad_on_slice1(M, M.flat[0]);
  REQUIRE(data.action.size() == 1);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(data.action[0].at(r, c) == expect.at(r, c));
  // that matrix is diag(+-3, -+3) on the two root vectors
  CHECK(data.action[0].at(0, 1) == Rational(0));
  CHECK(data.action[0].at(1, 0) == Rational(0));
  CHECK(data.action[0].at(0, 0) == -data.action[0].at(1, 1));
  CHECK(data.action[0].at(0, 0) * data.action[0].at(0, 0) == Rational(9));

  REQUIRE(data.B_lower.size() == 2);
  REQUIRE(data.B_lower[1].size() == 1);
  CHECK(!data.B_lower[1][0].empty());

  Presentation W = build_minimal_w(data);
  REQUIRE(W.size() == 4);
  CHECK(W.names() == std::vector<std::string>{"n1", "w1", "w2", "C"});
  CHECK(W.weight(0) == 2);
  CHECK(W.weight(1) == 3);
  CHECK(W.weight(3) == 4);
  ConsistencyReport rep = W.check_consistency(4);
  CHECK(rep.ok);
  CHECK(rep.witness.empty());
}

TEST_CASE("rank-two symplectic pipeline") {
  WhittakerModel M = build_whittaker_model(sp4());
  MinimalWData data = derive_minimal_w(M);
  REQUIRE(data.g0.names.size() == 3);
  REQUIRE(data.g1_names.size() == 2);
  data.g0.check_jacobi();

  // each action matrix matches the flat vector acting on the value-one slice
  for (std::size_t i = 0; i < 3; ++i) {
    RationalMatrix expect = ad_on_slice1(M, M.flat[i]);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        CHECK(data.action[i].at(r, c) == expect.at(r, c));
  }

  // the flat part carries a standard triple
  CoordTriple t = find_sl2_triple(data.g0);
  Vec he = data.g0.bracket(t.h, t.e);
  Vec hf = data.g0.bracket(t.h, t.f);
  Vec ef = data.g0.bracket(t.e, t.f);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(he[r] == Rational(2) * t.e[r]);
    CHECK(hf[r] == Rational(-2) * t.f[r]);
    CHECK(ef[r] == t.h[r]);
  }

  Presentation W = build_minimal_w(data);
  REQUIRE(W.size() == 6);
  CHECK(W.check_consistency(4).ok);

  // the same triple holds inside the presentation
  auto lin = [&](const Vec& v) {
    NCPoly p;
    for (std::size_t r = 0; r < v.size(); ++r)
      if (!v[r].is_zero()) p += W.gen(static_cast<int>(r)) * v[r];
    return p;
  };
  validate_sl2_triple(W, Sl2Triple{lin(t.f), lin(t.h), lin(t.e)});
}

TEST_CASE("rank-three special linear pipeline") {
  WhittakerModel M = build_whittaker_model(sl_n(4));
  MinimalWData data = derive_minimal_w(M);
  REQUIRE(data.g0.names.size() == 4);
  REQUIRE(data.g1_names.size() == 4);
  data.g0.check_jacobi();

  for (std::size_t i = 0; i < 4; ++i) {
    RationalMatrix expect = ad_on_slice1(M, M.flat[i]);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        CHECK(data.action[i].at(r, c) == expect.at(r, c));
  }

  CoordTriple t = find_sl2_triple(data.g0);
  Vec ef = data.g0.bracket(t.e, t.f);
  for (std::size_t r = 0; r < 4; ++r) CHECK(ef[r] == t.h[r]);

  Presentation W = build_minimal_w(data);
  REQUIRE(W.size() == 9);
  CHECK(W.check_consistency(3).ok);
}

TEST_CASE("triple search") {
  LieAlgebra L2 = sl_n(2);
  CoordTriple t2 = find_sl2_triple(L2);
  Vec he = L2.bracket(t2.h, t2.e);
  Vec hf = L2.bracket(t2.h, t2.f);
  Vec ef = L2.bracket(t2.e, t2.f);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(he[r] == Rational(2) * t2.e[r]);
    CHECK(hf[r] == Rational(-2) * t2.f[r]);
    CHECK(ef[r] == t2.h[r]);
  }

  LieAlgebra L3 = sl_n(3);
  CoordTriple t3 = find_sl2_triple(L3);
  Vec he3 = L3.bracket(t3.h, t3.e);
  Vec ef3 = L3.bracket(t3.e, t3.f);
  for (std::size_t r = 0; r < 8; ++r) {
    CHECK(he3[r] == Rational(2) * t3.e[r]);
    CHECK(ef3[r] == t3.h[r]);
  }

  CHECK_THROWS_AS(find_sl2_triple(abelian2()), WalgError);
}
