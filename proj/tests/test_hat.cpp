#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "walg/algebras.hpp"
#include "walg/hat.hpp"

using namespace walg;

namespace {

// Oracle: realize the Laurent layer inside an honest localized presentation
// whose final generator commutes like e. The rewriting engine reduces words
// there by a completely different code path (adjacent swaps) than the
// component convolution under test, so exact agreement is strong evidence.
NCPoly to_companion(const Presentation& comp, const Presentation& H, const HatElement& a) {
  const int t = static_cast<int>(H.size());
  NCPoly out;
  for (const auto& [m, x] : a.comp)
    out += comp.multiply(lift_to_companion(H, x), comp.gen_pow(t, m));
  return out;
}

long rnd(std::mt19937_64& g, long lo, long hi) {
  return lo + static_cast<long>(g() % static_cast<unsigned long>(hi - lo + 1));
}

NCPoly random_poly(std::mt19937_64& g, const Presentation& P, int nterms, int len, long maxexp) {
  NCPoly out;
  for (int i = 0; i < nterms; ++i) {
    Word w;
    for (int j = 0; j < len; ++j)
      w.emplace_back(static_cast<int>(rnd(g, 0, static_cast<long>(P.size()) - 1)),
                     HalfInt(rnd(g, 0, maxexp)));
    NCPoly t = P.normal_order(w);
    t *= Rational(rnd(g, -3, 3));
    out += t;
  }
  return out;
}

HatElement random_hat(std::mt19937_64& g, const Presentation& P, int ncomp, long maxexp = 2,
                      long maxd2 = 4) {
  HatElement a;
  for (int i = 0; i < ncomp; ++i)
    a.add(HalfInt::from_doubled(rnd(g, -maxd2, maxd2)), random_poly(g, P, 2, 2, maxexp));
  return a;
}

// Sign on the generators listed as odd; an involution of H when the
// relations respect that parity.
NCPoly negate_listed(const NCPoly& p, const std::vector<std::size_t>& odd_heads) {
  NCPoly out;
  for (const auto& [m, c] : p.terms()) {
    unsigned long s = 0;
    for (std::size_t g : odd_heads) s += m.head[g];
    out.add(m, (s % 2) ? -c : c);
  }
  return out;
}

Presentation make_w_huvc() {
  MinimalWData data;
  data.g0.names = {"h"};
  data.g0.br.assign(1, std::vector<Vec>(1, Vec(1, Rational(0))));
  data.action.emplace_back(2, 2);
  data.action[0].at(0, 0) = Rational(1);
  data.action[0].at(1, 1) = Rational(-1);
  data.g1_names = {"u", "v"};
  data.B_lower = {{}, {"h^2 + C + 1/2"}};
  return build_minimal_w(data);
}

}  // namespace

TEST_CASE("laurent product matches the localized-presentation realization") {
  Presentation U = build_enveloping(sl_n(2));
  HatContext ctx(U, U.gen(2));  // invert e = E12
  Presentation comp = localized_companion(U, U.gen(2), Lattice::Half);
  CHECK(comp.names() == std::vector<std::string>{"E21", "H1", "E12", "t"});
  CHECK(comp.check_consistency(2).ok);

  std::mt19937_64 g(0x1A7E17);
  for (int iter = 0; iter < 30; ++iter) {
    HatElement a = random_hat(g, U, 2);
    HatElement b = random_hat(g, U, 2);
    NCPoly lhs = to_companion(comp, U, ctx.multiply(a, b));
    NCPoly rhs = comp.multiply(to_companion(comp, U, a), to_companion(comp, U, b));
    CHECK(lhs == rhs);
  }

  Presentation H = make_w_huvc();
  HatContext wctx(H, H.gen(1));  // invert the odd generator u
  Presentation wcomp = localized_companion(H, H.gen(1), Lattice::Half);
  CHECK(wcomp.check_consistency(2).ok);
  for (int iter = 0; iter < 15; ++iter) {
    HatElement a = random_hat(g, H, 2, 1, 2);
    HatElement b = random_hat(g, H, 2, 1, 2);
    NCPoly lhs = to_companion(wcomp, H, wctx.multiply(a, b));
    NCPoly rhs = wcomp.multiply(to_companion(wcomp, H, a), to_companion(wcomp, H, b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("binomial coefficients assemble associative products") {
  Presentation U = build_enveloping(sl_n(2));
  HatContext ctx(U, U.gen(2));
  std::mt19937_64 g(0xA550C1A7);
  for (int iter = 0; iter < 30; ++iter) {
    HatElement a = random_hat(g, U, 2);
    HatElement b = random_hat(g, U, 2);
    HatElement c = random_hat(g, U, 2);
    CHECK(ctx.multiply(ctx.multiply(a, b), c) == ctx.multiply(a, ctx.multiply(b, c)));
  }
  HatElement one = ctx.t_power(HalfInt(0));
  HatElement a = random_hat(g, U, 3);
  CHECK(ctx.multiply(one, a) == a);
  CHECK(ctx.multiply(a, one) == a);
}

TEST_CASE("half-power commutators and the identification of t with e") {
  Presentation U = build_enveloping(sl_n(2));
  NCPoly f = U.gen(0), h = U.gen(1), e = U.gen(2);
  HatContext ctx(U, e);

  // [h, t^1/2] = e t^-1/2, which is congruent to t^1/2 itself.
  HatElement ht = hat_term(h, HalfInt(0));
  HatElement thalf = ctx.t_power(HalfInt::half());
  HatElement comm = ctx.multiply(ht, thalf) - ctx.multiply(thalf, ht);
  CHECK(comm == hat_term(e, -HalfInt::half()));
  CHECK(ctx.equal_mod_span(comm, thalf));

  // e t^-1 == 1 and t e^-1-style cancellation via the span.
  CHECK(ctx.equal_mod_span(hat_term(e, HalfInt(-1)), ctx.t_power(HalfInt(0))));
  CHECK(ctx.equal_mod_span(hat_term(e, HalfInt(0)), ctx.t_power(HalfInt(1))));
  CHECK(ctx.equal_mod_span(hat_term(f, HalfInt(2)),
                           hat_term(U.multiply(f, U.multiply(e, e)), HalfInt(0))));
}

TEST_CASE("spanning elements vanish and the base embeds faithfully") {
  Presentation U = build_enveloping(sl_n(2));
  HatContext ctx(U, U.gen(2));
  const HatElement zero;

  for (const Monomial& mono : U.monomial_basis(3)) {
    NCPoly x = NCPoly::term(mono, Rational(1));
    for (long n = 0; n <= 2; ++n)
      for (long dm = -2; dm <= 2; ++dm)
        CHECK(ctx.equal_mod_span(ctx.spanning_element(x, n, HalfInt::from_doubled(dm)), zero));
    CHECK_FALSE(ctx.equal_mod_span(hat_term(x, HalfInt(0)), zero));
  }

  std::mt19937_64 g(0xBA5EBA11);
  for (int iter = 0; iter < 20; ++iter) {
    NCPoly x = random_poly(g, U, 3, 2, 2);
    NCPoly y = random_poly(g, U, 3, 2, 2);
    CHECK(ctx.equal_mod_span(hat_term(x, HalfInt(0)), hat_term(y, HalfInt(0))) == (x == y));
  }
}

TEST_CASE("fold components and explicit shifts") {
  Presentation U = build_enveloping(sl_n(2));
  NCPoly f = U.gen(0), e = U.gen(2);
  HatContext ctx(U, e);

  auto p0 = ctx.fold(hat_term(f, HalfInt(0)));
  CHECK(p0.first == f);
  CHECK(p0.second.is_zero());

  auto ph = ctx.fold(hat_term(f, HalfInt::half()));
  CHECK(ph.first.is_zero());
  CHECK(ph.second == f);

  auto p32 = ctx.fold(hat_term(f, HalfInt::from_doubled(3)));
  CHECK(p32.second == U.multiply(f, e));

  auto shifted = ctx.fold(hat_term(f, HalfInt(0)), 2);
  CHECK(shifted.first == U.multiply(f, U.multiply(e, e)));

  CHECK_THROWS_AS(ctx.fold(hat_term(f, HalfInt(-3)), 1), WalgError);

  // With one common shift the fold is linear.
  std::mt19937_64 g(0xF01DF01D);
  for (int iter = 0; iter < 10; ++iter) {
    HatElement a = random_hat(g, U, 2);
    HatElement b = random_hat(g, U, 2);
    auto fa = ctx.fold(a, 4), fb = ctx.fold(b, 4), fab = ctx.fold(a + b, 4);
    CHECK(fab.first == fa.first + fb.first);
    CHECK(fab.second == fa.second + fb.second);
  }
}

TEST_CASE("the difference e - t generates every spanning element") {
  Presentation U = build_enveloping(sl_n(2));
  HatContext ctx(U, U.gen(2));
  HatElement emt = ctx.e_minus_t();

  std::vector<NCPoly> xs{U.one(), U.gen(0), U.parse("E21*H1^2 - 3*E12")};
  std::vector<HalfInt> ms{HalfInt(-1), -HalfInt::half() - HalfInt(1), HalfInt(0), HalfInt::half(),
                          HalfInt(2)};
  for (const NCPoly& x : xs)
    for (long n = 0; n <= 3; ++n)
      for (const HalfInt& m : ms) {
        HatElement sum;
        for (const auto& [a, b] : ctx.span_witness(x, n, m))
          sum += ctx.multiply(ctx.multiply(a, emt), b);
        CHECK(sum == ctx.spanning_element(x, n, m));
      }
}

TEST_CASE("the span is stable under multiplication on both sides") {
  Presentation U = build_enveloping(sl_n(2));
  HatContext ctx(U, U.gen(2));
  const HatElement zero;

  std::vector<HatElement> multipliers;
  for (int g = 0; g < 3; ++g) multipliers.push_back(hat_term(U.gen(g), HalfInt(0)));
  multipliers.push_back(ctx.t_power(HalfInt::half()));
  multipliers.push_back(ctx.t_power(-HalfInt::half()));
  multipliers.push_back(ctx.t_power(HalfInt(-2)));
  HatElement mixed = hat_term(U.parse("E21*H1"), HalfInt(-1));
  mixed.add(HalfInt::half(), U.parse("E12 - 2"));
  multipliers.push_back(mixed);

  for (const Monomial& mono : U.monomial_basis(2)) {
    NCPoly x = NCPoly::term(mono, Rational(1));
    for (long n = 1; n <= 2; ++n)
      for (long dm : {-1L, 0L, 1L}) {
        HatElement s = ctx.spanning_element(x, n, HalfInt::from_doubled(dm));
        for (const HatElement& m : multipliers) {
          CHECK(ctx.equal_mod_span(ctx.multiply(m, s), zero));
          CHECK(ctx.equal_mod_span(ctx.multiply(s, m), zero));
        }
      }
  }
}

TEST_CASE("sign-twisted lift over a fixed inverted element") {
  Presentation U = build_enveloping(sl_n(2));
  HatContext ctx(U, U.gen(2));
  auto st = lift_with_sign(ctx, [](const NCPoly& x) { return x; });

  NCPoly f = U.gen(0);
  CHECK(st(hat_term(f, HalfInt::half())) == hat_term(-f, HalfInt::half()));
  CHECK(st(hat_term(f, HalfInt(1))) == hat_term(f, HalfInt(1)));
  CHECK(st(hat_term(f, -HalfInt::half())) == hat_term(-f, -HalfInt::half()));

  std::mt19937_64 g(0x51617);
  const HatElement zero;
  for (int iter = 0; iter < 20; ++iter) {
    HatElement a = random_hat(g, U, 2);
    HatElement b = random_hat(g, U, 2);
    CHECK(st(st(a)) == a);
    CHECK(st(ctx.multiply(a, b)) == ctx.multiply(st(a), st(b)));
  }
  for (long n = 0; n <= 2; ++n)
    for (long dm : {-1L, 0L, 1L})
      CHECK(ctx.equal_mod_span(
          st(ctx.spanning_element(U.gen(0), n, HalfInt::from_doubled(dm))), zero));

  CHECK_THROWS_AS(lift_with_sign(ctx,
                                 [](const NCPoly& x) {
                                   NCPoly y = x;
                                   y *= Rational(2);
                                   return y;
                                 }),
                  DoesNotFixE);
}

TEST_CASE("sign-twisted lift over a negated inverted element") {
  Presentation H = make_w_huvc();
  HatContext ctx(H, H.gen(1));  // e = u, odd
  AlgMap sigma = [](const NCPoly& x) { return negate_listed(x, {1, 2}); };
  CHECK(sigma(H.gen(1)) == -H.gen(1));
  CHECK(sigma(H.gen(0)) == H.gen(0));

  auto st = lift_with_sign(ctx, sigma);
  NCPoly h = H.gen(0);
  // (-1)^{floor(m)}: components over t^1 and t^3/2 flip, t^0 and t^1/2 do not.
  CHECK(st(hat_term(h, HalfInt(0))) == hat_term(h, HalfInt(0)));
  CHECK(st(hat_term(h, HalfInt::half())) == hat_term(h, HalfInt::half()));
  CHECK(st(hat_term(h, HalfInt(1))) == hat_term(-h, HalfInt(1)));
  CHECK(st(hat_term(h, HalfInt::from_doubled(3))) == hat_term(-h, HalfInt::from_doubled(3)));
  CHECK(st(hat_term(h, HalfInt(-1))) == hat_term(-h, HalfInt(-1)));

  std::mt19937_64 g(0x0DDE);
  const HatElement zero;
  for (int iter = 0; iter < 20; ++iter) {
    HatElement a = random_hat(g, H, 2);
    CHECK(st(st(a)) == a);
  }
  for (const Monomial& mono : H.monomial_basis(4)) {
    NCPoly x = NCPoly::term(mono, Rational(1));
    for (long n = 1; n <= 2; ++n)
      for (long dm : {-1L, 0L, 1L})
        CHECK(ctx.equal_mod_span(st(ctx.spanning_element(x, n, HalfInt::from_doubled(dm))),
                                 zero));
  }
}
