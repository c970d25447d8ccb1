#include "walg/suites.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "walg/errors.hpp"
#include "walg/hat.hpp"
#include "walg/liealg.hpp"
#include "walg/morphism.hpp"
#include "walg/rootdata.hpp"
#include "walg/sl2.hpp"
#include "walg/whittaker.hpp"

namespace walg {

namespace {

using CheckBody = std::function<std::optional<std::string>()>;

// Collects check outcomes; a body returns nullopt to pass or a witness to
// fail, and any escaping exception fails the check with what() as witness.
struct Runner {
  SuiteResult res;

  explicit Runner(std::string suite) { res.suite = std::move(suite); }

  void add(std::string name, std::string anchor, const CheckBody& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    try {
      std::optional<std::string> w = body();
      if (w) {
        c.status = "fail";
        c.witness = std::move(*w);
      } else {
        c.status = "pass";
      }
    } catch (const std::exception& e) {
      c.status = "fail";
      c.witness = e.what();
    }
    if (std::getenv("WALG_TRACE"))
      std::fprintf(stderr, "[trace] %s: %ld ms\n", c.name.c_str(),
                   static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count()));
    res.checks.push_back(std::move(c));
  }

  void report(std::string name, std::string anchor, std::string value) {
    res.checks.push_back({std::move(name), std::move(anchor), "reported", std::move(value)});
  }
};

std::optional<std::string> ok() { return std::nullopt; }

GenMorphism sign_map(const Presentation& H, const std::vector<int>& flip) {
  std::vector<NCPoly> imgs;
  for (int i = 0; i < static_cast<int>(H.size()); ++i) {
    NCPoly g = H.gen(i);
    if (flip[static_cast<std::size_t>(i)]) g *= Rational(-1);
    imgs.push_back(std::move(g));
  }
  return GenMorphism(H, H, std::move(imgs));
}

GenMorphism parse_map(const Presentation& S, const Presentation& T,
                      const std::vector<std::string>& images) {
  std::vector<NCPoly> imgs;
  for (const std::string& s : images) imgs.push_back(T.parse(s));
  return GenMorphism(S, T, std::move(imgs));
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

// ---------------------------------------------------------------- branching

long component_dim(const DiagramComponent& c) {
  RootSystem rs = build_root_system(c.label);
  return 2 * static_cast<long>(rs.positive.size()) + rs.rank();
}

long g0_dim(const HighestRootRow& row) {
  long dim = row.center_dim;
  for (const DiagramComponent& c : row.components) dim += component_dim(c);
  return dim;
}

SuiteResult suite_branching(const SuiteOptions&) {
  Runner r("branching");
  struct Row {
    std::string name;
    SimpleType type;
    std::vector<int> ranks;
    std::function<long(long)> g1;
    std::string anchor;
  };
  const std::vector<Row> rows = {
      {"row-a", SimpleType::A, {2, 3, 4, 5}, [](long n) { return 2 * (n - 1); },
       "dim g(1) = 2(n-1)"},
      {"row-b", SimpleType::B, {2, 3, 4, 5}, [](long n) { return 2 * (2 * n - 3); },
       "dim g(1) = 2(2n-3)"},
      {"row-c", SimpleType::C, {2, 3, 4, 5}, [](long n) { return 2 * (n - 1); },
       "dim g(1) = 2(n-1)"},
      {"row-d", SimpleType::D, {4, 5, 6}, [](long n) { return 4 * (n - 2); },
       "dim g(1) = 4(n-2)"},
      {"row-e6", SimpleType::E, {6}, [](long) { return 20; }, "dim g(1) = 20"},
      {"row-e7", SimpleType::E, {7}, [](long) { return 32; }, "dim g(1) = 32"},
      {"row-e8", SimpleType::E, {8}, [](long) { return 56; }, "dim g(1) = 56"},
      {"row-f4", SimpleType::F, {4}, [](long) { return 14; }, "dim g(1) = 14"},
      {"row-g2", SimpleType::G, {2}, [](long) { return 4; }, "dim g(1) = 4"},
  };
  for (const Row& row : rows) {
    r.add(row.name,
          row.anchor + "; d = dim g(1) + 1; dim g = dim g(0) + 2 dim g(1) + 3; module "
                       "dimensions add up",
          [&]() -> std::optional<std::string> {
            for (int n : row.ranks) {
              HighestRootRow hr = highest_root_row({row.type, n});
              const std::string at = hr.g.str();
              if (static_cast<long>(hr.dim_g1) != row.g1(n))
                return at + ": dim g(1) = " + std::to_string(hr.dim_g1) + ", formula gives " +
                       std::to_string(row.g1(n));
              if (hr.d_invariant != hr.dim_g1 + 1)
                return at + ": d = " + std::to_string(hr.d_invariant);
              if (!hr.dim_cross_check)
                return at + ": dim g != dim g(0) + 2 dim g(1) + 3";
              if (!hr.module_dim_check)
                return at + ": highest-weight module dimensions do not sum to dim g(1)";
              if (static_cast<long>(hr.dim_g) !=
                  g0_dim(hr) + 2 * static_cast<long>(hr.dim_g1) + 3)
                return at + ": recomputed dim g(0) breaks the dimension identity";
            }
            return ok();
          });
  }
  return r.res;
}

// ------------------------------------------------------------------- parity

SuiteResult suite_parity(const SuiteOptions&) {
  Runner r("parity");
  const std::string anchor =
      "every eigenvalue of the principal h of g(0) on g(1) is odd";
  const std::vector<TypeRank> asserted = {
      {SimpleType::B, 3}, {SimpleType::B, 4}, {SimpleType::C, 2}, {SimpleType::C, 3},
      {SimpleType::D, 4}, {SimpleType::E, 6}, {SimpleType::E, 7}, {SimpleType::E, 8},
      {SimpleType::F, 4}, {SimpleType::G, 2}};
  for (const TypeRank& tr : asserted) {
    std::string name = tr.str();
    for (char& ch : name) ch = static_cast<char>(std::tolower(ch));
    r.add("odd-spectrum-" + name, anchor, [&]() -> std::optional<std::string> {
      ParityReport rep = parity_check(tr);
      if (rep.all_odd) return ok();
      std::string w = tr.str() + ": eigenvalues";
      for (long v : rep.eigenvalues) w += " " + std::to_string(v);
      return w;
    });
  }
  for (int n = 2; n <= 5; ++n) {
    TypeRank tr{SimpleType::A, n};
    ParityReport rep = parity_check(tr);
    std::string w = "all_odd = ";
    w += rep.all_odd ? "true" : "false";
    w += "; eigenvalues";
    for (long v : rep.eigenvalues) w += " " + std::to_string(v);
    r.report("spectrum-a" + std::to_string(n), anchor + " (measured, not asserted)", w);
  }
  return r.res;
}

// ---------------------------------------------------------------- weyl-maps

SuiteResult suite_weyl_maps(const SuiteOptions& opt) {
  Runner r("weyl-maps");
  for (int d = 2; d <= 5; ++d) {
    const std::string tag = std::to_string(d);
    Presentation W = build_weyl_var_localized(d, WeylSign::PlusOne, "z", "d");
    const std::string zd = "z" + tag;

    std::string plus, minus;
    for (int i = 1; i < d; ++i) {
      const std::string euler = zd + "^-1*z" + std::to_string(i) + "*d" + std::to_string(i);
      plus += " + " + euler;
      minus += " - " + euler;
    }
    std::vector<std::string> fwd, bwd;
    for (int i = 1; i < d; ++i) fwd.push_back("z" + std::to_string(i) + "*" + zd + "^-1");
    for (int i = 1; i < d; ++i) fwd.push_back(zd + "*d" + std::to_string(i));
    fwd.push_back("d" + tag + plus);
    fwd.push_back(zd);
    for (int i = 1; i < d; ++i) bwd.push_back("z" + std::to_string(i) + "*" + zd);
    for (int i = 1; i < d; ++i) bwd.push_back(zd + "^-1*d" + std::to_string(i));
    bwd.push_back("d" + tag + minus);
    bwd.push_back(zd);

    GenMorphism phi = parse_map(W, W, fwd);
    GenMorphism psi = parse_map(W, W, bwd);

    r.add("substitution-defects-" + tag,
          "z_i -> z_i z_d^-1, d_i -> z_d d_i, d_d -> d_d + z_d^-1 sum z_i d_i preserves "
          "[z_i, d_j] = delta_ij",
          [&]() -> std::optional<std::string> {
            std::string w;
            if (!phi.is_homomorphism(&w)) return "forward: " + w;
            if (!psi.is_homomorphism(&w)) return "backward: " + w;
            return ok();
          });
    r.add("substitution-inverse-" + tag, "the displayed inverse undoes the substitution",
          [&]() -> std::optional<std::string> {
            if (!are_mutually_inverse(phi, psi)) return std::string("compositions are not the identity");
            return ok();
          });
    r.add("involution-transport-" + tag,
          "conjugating the all-sign involution fixes z_i, d_i for i < d and negates z_d, d_d",
          [&]() -> std::optional<std::string> {
            GenMorphism tau = sign_map(W, std::vector<int>(W.size(), 1));
            GenMorphism moved = conjugate_involution(tau, phi, psi);
            std::vector<int> last_only(W.size(), 0);
            last_only[2 * static_cast<std::size_t>(d) - 2] = 1;
            last_only[2 * static_cast<std::size_t>(d) - 1] = 1;
            GenMorphism expect = sign_map(W, last_only);
            for (int i = 0; i < static_cast<int>(W.size()); ++i)
              if (moved.image(i) != expect.image(i))
                return "generator " + W.name(i) + " maps to " + W.str(moved.image(i));
            return ok();
          });
    if (d <= 3) {
      r.add("substitution-multiplicative-" + tag, "plumbing",
            [&]() -> std::optional<std::string> {
              std::mt19937_64 rng(opt.seed ^ (0xB14A7EULL + static_cast<unsigned long>(d)));
              for (int iter = 0; iter < 25; ++iter) {
                Monomial ma = Monomial::one(W.size()), mb = Monomial::one(W.size());
                for (std::size_t g = 0; g + 1 < W.size(); ++g) {
                  ma.head[g] = static_cast<std::uint32_t>(rnd(rng, 0, 2));
                  mb.head[g] = static_cast<std::uint32_t>(rnd(rng, 0, 2));
                }
                ma.last = HalfInt(rnd(rng, -1, 2));
                mb.last = HalfInt(rnd(rng, -1, 2));
                NCPoly a = NCPoly::term(ma, Rational(2));
                NCPoly b = NCPoly::term(mb, Rational(1, 2));
                if (phi.apply(W.multiply(a, b)) != W.multiply(phi.apply(a), phi.apply(b)))
                  return "iteration " + std::to_string(iter);
              }
              return ok();
            });
    }
  }
  return r.res;
}

// -------------------------------------------------------------- plane-split

// plane with x inverted, [x, dx] = [y, dy] = -1
Presentation make_plane() {
  std::vector<Generator> gens{{"y"}, {"dx"}, {"dy"}, {"x"}};
  std::vector<RelationSpec> rels;
  auto one = [] { return NCPoly::term(Monomial::one(4), Rational(1)); };
  rels.push_back({2, 0, one()});
  rels.push_back({3, 1, one() * Rational(-1)});
  return Presentation(std::move(gens), std::move(rels), Lattice::Integer);
}

// abstract split: one plain line in (z, dz), one in (x, dxp) with x inverted
Presentation make_split_plane() {
  std::vector<Generator> gens{{"z"}, {"dz"}, {"dxp"}, {"x"}};
  std::vector<RelationSpec> rels;
  auto one = [] { return NCPoly::term(Monomial::one(4), Rational(1)); };
  rels.push_back({1, 0, one()});
  rels.push_back({3, 2, one() * Rational(-1)});
  return Presentation(std::move(gens), std::move(rels), Lattice::Integer);
}

SuiteResult suite_plane_split(const SuiteOptions& opt) {
  Runner r("plane-split");
  const int degree = opt.degree > 0 ? opt.degree : 6;
  Presentation L = make_plane();
  Presentation S = make_split_plane();

  r.add("changed-variable-commutators",
        "z = y x^-1, dz = x dy, dxp = dx + y x^-1 dy: [x, dxp] = [z, dz] = -1, the four "
        "cross commutators vanish",
        [&]() -> std::optional<std::string> {
          NCPoly Z = L.parse("y*x^-1"), DZ = L.parse("x*dy");
          NCPoly DXP = L.parse("dx + y*x^-1*dy"), X = L.parse("x");
          auto expect = [&](const char* what, const NCPoly& got,
                            const NCPoly& want) -> std::optional<std::string> {
            if (got != want) return std::string(what) + " = " + L.str(got);
            return ok();
          };
          if (auto w = expect("[x, dxp]", L.commutator(X, DXP), L.scalar(Rational(-1)))) return w;
          if (auto w = expect("[z, dz]", L.commutator(Z, DZ), L.scalar(Rational(-1)))) return w;
          if (auto w = expect("[x, z]", L.commutator(X, Z), NCPoly())) return w;
          if (auto w = expect("[x, dz]", L.commutator(X, DZ), NCPoly())) return w;
          if (auto w = expect("[z, dxp]", L.commutator(Z, DXP), NCPoly())) return w;
          if (auto w = expect("[dz, dxp]", L.commutator(DZ, DXP), NCPoly())) return w;
          return ok();
        });

  GenMorphism phi = parse_map(S, L, {"y*x^-1", "x*dy", "dx + y*x^-1*dy", "x"});
  GenMorphism psi = parse_map(L, S, {"z*x", "dxp - z*x^-1*dz", "x^-1*dz", "x"});

  r.add("changed-variable-isomorphism", "the change of variables is invertible",
        [&]() -> std::optional<std::string> {
          std::string w;
          if (!phi.is_homomorphism(&w)) return "forward: " + w;
          if (!psi.is_homomorphism(&w)) return "backward: " + w;
          if (!are_mutually_inverse(phi, psi)) return std::string("compositions are not the identity");
          return ok();
        });

  auto image_check = [&](const GenMorphism& m,
                         const std::vector<std::string>& want) -> std::optional<std::string> {
    for (int i = 0; i < static_cast<int>(S.size()); ++i)
      if (m.image(i) != S.parse(want[static_cast<std::size_t>(i)]))
        return S.name(i) + " maps to " + S.str(m.image(i)) + ", expected " +
               want[static_cast<std::size_t>(i)];
    return ok();
  };
  r.add("sign-y-transport", "negating y, dy moves exactly the (z, dz) line: z -> -z, dz -> -dz",
        [&]() -> std::optional<std::string> {
          GenMorphism sy = sign_map(L, {1, 0, 1, 0});
          sy.certify();
          return image_check(conjugate_involution(sy, psi, phi), {"-z", "-dz", "dxp", "x"});
        });
  r.add("sign-xy-transport",
        "negating x, dx, y, dy moves exactly the (x, dxp) line: x -> -x, dxp -> -dxp",
        [&]() -> std::optional<std::string> {
          GenMorphism sxy = sign_map(L, {1, 1, 1, 1});
          sxy.certify();
          return image_check(conjugate_involution(sxy, psi, phi), {"z", "dz", "-dxp", "-x"});
        });

  r.add("sign-group-order-four", "the two sign involutions generate a group of order 4",
        [&]() -> std::optional<std::string> {
          GenMorphism sx = sign_map(L, {0, 1, 0, 1});
          GenMorphism sy = sign_map(L, {1, 0, 1, 0});
          std::vector<GenMorphism> G = group_closure({sx, sy});
          if (G.size() != 4) return "closure has order " + std::to_string(G.size());
          for (const GenMorphism& g : G)
            if (!(compose(g, g) == identity_morphism(L)))
              return std::string("an element does not square to the identity");
          return ok();
        });

  r.add("half-line-weyl-pair",
        "[x^2, 1/2 x^-1 dxp] = -1 and both members are fixed by the sign involution",
        [&]() -> std::optional<std::string> {
          std::vector<Generator> gens{{"dxp"}, {"x"}};
          std::vector<RelationSpec> rels;
          rels.push_back({1, 0, NCPoly::term(Monomial::one(2), Rational(-1))});
          Presentation Wx(std::move(gens), std::move(rels), Lattice::Integer);
          NCPoly a = Wx.parse("x^2");
          NCPoly b = Wx.parse("1/2*x^-1*dxp");
          if (!verify_weyl_pair(Wx, a, b, Rational(-1)))
            return std::string("[x^2, 1/2 x^-1 dxp] is not -1");
          GenMorphism sx = sign_map(Wx, {1, 1});
          sx.certify();
          if (sx.apply(a) != a || sx.apply(b) != b)
            return std::string("a pair member moves under the sign involution");
          std::vector<Generator> ug{{"u"}, {"du"}};
          std::vector<RelationSpec> ur;
          ur.push_back({1, 0, NCPoly::term(Monomial::one(2), Rational(1))});
          Presentation U(std::move(ug), std::move(ur));
          GenMorphism embed(U, Wx, {a, b});
          std::string w;
          if (!embed.is_homomorphism(&w)) return "embedding: " + w;
          return ok();
        });

  r.add("fixed-dimensions-by-factor",
        "both lines and the commutative model have the same sign-fixed dimensions in every "
        "degree up to " +
            std::to_string(degree),
        [&]() -> std::optional<std::string> {
          std::vector<Generator> g1{{"z"}, {"dz"}};
          std::vector<RelationSpec> r1;
          r1.push_back({1, 0, NCPoly::term(Monomial::one(2), Rational(1))});
          Presentation F1(std::move(g1), std::move(r1));

          std::vector<Generator> g2{{"dxp"}, {"x"}};
          std::vector<RelationSpec> r2;
          r2.push_back({1, 0, NCPoly::term(Monomial::one(2), Rational(-1))});
          Presentation F2(std::move(g2), std::move(r2));

          std::vector<Generator> gc{{"c0"}, {"c1"}};
          Presentation FC(std::move(gc), {});

          std::vector<GenMorphism> G1 = group_closure({sign_map(F1, {1, 1})});
          std::vector<GenMorphism> G2 = group_closure({sign_map(F2, {1, 1})});
          std::vector<GenMorphism> GC = group_closure({sign_map(FC, {1, 1})});
          for (int k = 0; k <= degree; ++k) {
            const std::size_t d1 = fixed_subalgebra_basis(F1, G1, k).size();
            const std::size_t d2 = fixed_subalgebra_basis(F2, G2, k).size();
            const std::size_t dc = fixed_subalgebra_basis(FC, GC, k).size();
            std::size_t even = 0;
            for (int a = 0; a <= k; ++a)
              for (int b = 0; a + b <= k; ++b)
                if ((a + b) % 2 == 0) ++even;
            if (d1 != d2 || d1 != dc || d1 != even)
              return "degree " + std::to_string(k) + ": " + std::to_string(d1) + " / " +
                     std::to_string(d2) + " / " + std::to_string(dc) + " vs count " +
                     std::to_string(even);
          }
          return ok();
        });
  return r.res;
}

// -------------------------------------------------------------- hat-algebra

NCPoly to_companion(const Presentation& comp, const Presentation& H, const HatElement& a) {
  const int t = static_cast<int>(H.size());
  NCPoly out;
  for (const auto& [m, x] : a.comp) out += comp.multiply(lift_to_companion(H, x), comp.gen_pow(t, m));
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

SuiteResult suite_hat(const SuiteOptions& opt) {
  Runner r("hat-algebra");
  const int degree = opt.degree > 0 ? opt.degree : 5;
  Presentation U = build_enveloping(sl_n(2));
  HatContext ctx(U, U.gen(2));
  const HatElement zero;

  r.add("laurent-associativity", "(a b) c = a (b c) for 200 seeded random triples",
        [&]() -> std::optional<std::string> {
          std::mt19937_64 g(opt.seed ^ 0xA550C1A7EULL);
          for (int iter = 0; iter < 200; ++iter) {
            // every tenth triple draws from the wider window
            const bool wide = iter % 10 == 0;
            const long maxexp = wide ? 2 : 1;
            const long maxd2 = wide ? 4 : 3;
            HatElement a = random_hat(g, U, 2, maxexp, maxd2);
            HatElement b = random_hat(g, U, 2, maxexp, maxd2);
            HatElement c = random_hat(g, U, 2, maxexp, maxd2);
            if (ctx.multiply(ctx.multiply(a, b), c) != ctx.multiply(a, ctx.multiply(b, c)))
              return "iteration " + std::to_string(iter);
          }
          return ok();
        });

  r.add("laurent-companion-agreement",
        "the binomial product agrees with the localized-presentation product",
        [&]() -> std::optional<std::string> {
          Presentation comp = localized_companion(U, U.gen(2), Lattice::Half);
          std::mt19937_64 g(opt.seed ^ 0xC0117A7EULL);
          for (int iter = 0; iter < 40; ++iter) {
            HatElement a = random_hat(g, U, 2);
            HatElement b = random_hat(g, U, 2);
            if (to_companion(comp, U, ctx.multiply(a, b)) !=
                comp.multiply(to_companion(comp, U, a), to_companion(comp, U, b)))
              return "iteration " + std::to_string(iter);
          }
          return ok();
        });

  r.add("ideal-two-sided", "x (e - t) y stays in the identification ideal on both sides",
        [&]() -> std::optional<std::string> {
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
                  if (!ctx.equal_mod_span(ctx.multiply(m, s), zero))
                    return "left multiplier escapes on " + U.str(x);
                  if (!ctx.equal_mod_span(ctx.multiply(s, m), zero))
                    return "right multiplier escapes on " + U.str(x);
                }
              }
          }
          return ok();
        });

  r.add("ideal-from-e-minus-t", "every spanning element is a two-sided combination of e - t",
        [&]() -> std::optional<std::string> {
          HatElement emt = ctx.e_minus_t();
          std::vector<NCPoly> xs{U.one(), U.gen(0), U.parse("E21*H1^2 - 3*E12")};
          std::vector<HalfInt> ms{HalfInt(-1), -HalfInt::half() - HalfInt(1), HalfInt(0),
                                  HalfInt::half(), HalfInt(2)};
          for (const NCPoly& x : xs)
            for (long n = 0; n <= 3; ++n)
              for (const HalfInt& m : ms) {
                HatElement sum;
                for (const auto& [a, b] : ctx.span_witness(x, n, m))
                  sum += ctx.multiply(ctx.multiply(a, emt), b);
                if (sum != ctx.spanning_element(x, n, m))
                  return "witness mismatch at n = " + std::to_string(n);
              }
          return ok();
        });

  r.add("base-embedding-injective",
        "x -> x t^0 is injective on filtration degree <= " + std::to_string(degree) +
            ": no basis class vanishes and right multiplication by e^2 keeps full rank",
        [&]() -> std::optional<std::string> {
          PolyEchelon ech;
          std::size_t count = 0;
          for (const Monomial& mono : U.monomial_basis(degree)) {
            NCPoly x = NCPoly::term(mono, Rational(1));
            HatElement image = hat_term(x, HalfInt(0));
            if (ctx.equal_mod_span(image, zero)) return U.str(x) + " t^0 falls into the ideal";
            auto fold = ctx.fold(ctx.multiply(image, ctx.t_power(HalfInt(2))), 0);
            if (!fold.second.is_zero()) return std::string("unexpected half component");
            ech.insert(fold.first);
            ++count;
          }
          if (ech.rank() != count)
            return "rank " + std::to_string(ech.rank()) + " of " + std::to_string(count);
          return ok();
        });

  r.add("sign-lift-even", "sigma_t(x t^m) = (-1)^{2m} x t^m: order two, multiplicative, "
                          "and it preserves the ideal",
        [&]() -> std::optional<std::string> {
          auto st = lift_with_sign(ctx, [](const NCPoly& x) { return x; });
          std::mt19937_64 g(opt.seed ^ 0x51617ULL);
          for (int iter = 0; iter < 40; ++iter) {
            HatElement a = random_hat(g, U, 2);
            HatElement b = random_hat(g, U, 2);
            if (st(st(a)) != a) return "square is not the identity";
            if (st(ctx.multiply(a, b)) != ctx.multiply(st(a), st(b)))
              return "lift is not multiplicative";
          }
          for (long n = 0; n <= 2; ++n)
            for (long dm : {-1L, 0L, 1L})
              if (!ctx.equal_mod_span(
                      st(ctx.spanning_element(U.gen(0), n, HalfInt::from_doubled(dm))), zero))
                return std::string("image of a spanning element escapes the ideal");
          return ok();
        });

  r.add("sign-lift-odd", "a sign involution with sigma(e) = -e lifts by (-1)^floor(m), "
                         "squares to the identity, and preserves the ideal",
        [&]() -> std::optional<std::string> {
          Presentation H = make_w_huvc();
          HatContext hctx(H, H.gen(1));
          AlgMap sigma = [](const NCPoly& p) {
            NCPoly out;
            for (const auto& [m, c] : p.terms()) {
              unsigned long s = m.head[1] + m.head[2];
              out.add(m, (s % 2) ? -c : c);
            }
            return out;
          };
          auto st = lift_with_sign(hctx, sigma);
          std::mt19937_64 g(opt.seed ^ 0x0DDEULL);
          const HatElement hzero;
          for (int iter = 0; iter < 20; ++iter) {
            HatElement a = random_hat(g, H, 2);
            if (st(st(a)) != a) return "square is not the identity";
          }
          for (const Monomial& mono : H.monomial_basis(4)) {
            NCPoly x = NCPoly::term(mono, Rational(1));
            for (long n = 1; n <= 2; ++n)
              for (long dm : {-1L, 0L, 1L})
                if (!hctx.equal_mod_span(st(hctx.spanning_element(x, n, HalfInt::from_doubled(dm))),
                                         hzero))
                  return std::string("image of a spanning element escapes the ideal");
          }
          return ok();
        });

  r.add("cartan-half-power", "[h, t^1/2] is congruent to t^1/2",
        [&]() -> std::optional<std::string> {
          HatElement h0 = hat_term(U.gen(1), HalfInt(0));
          HatElement th = ctx.t_power(HalfInt::half());
          HatElement comm = ctx.multiply(h0, th) - ctx.multiply(th, h0);
          if (!ctx.equal_mod_span(comm, th)) return std::string("commutator is not t^1/2");
          return ok();
        });

  return r.res;
}

// ------------------------------------------------------------ sl2-structure

SuiteResult suite_sl2(const SuiteOptions& opt) {
  Runner r("sl2-structure");
  const int cent_degree = opt.degree > 0 ? opt.degree : 4;
  Presentation U = build_enveloping(sl_n(2));
  Sl2Triple T{U.gen(0), U.gen(1), U.gen(2)};
  validate_sl2_triple(U, T);
  NCPoly theta = casimir(U, T);
  HatContext ctx(U, T.e);

  r.add("casimir-normal-form", "theta - h^2 - 2h = 4 f e",
        [&]() -> std::optional<std::string> {
          NCPoly lhs = theta - U.multiply(T.h, T.h) - T.h * Rational(2);
          NCPoly rhs = U.multiply(T.f, T.e) * Rational(4);
          if (lhs != rhs) return "difference " + U.str(lhs - rhs);
          return ok();
        });

  r.add("lowering-recovery", "f is congruent to 1/4 (theta - h^2 - 2h) e^-1",
        [&]() -> std::optional<std::string> {
          if (!casimir_recovers_f(ctx, T)) return std::string("congruence fails");
          NCPoly num = theta - U.multiply(T.h, T.h) - T.h * Rational(2);
          num *= Rational(1, 4);
          if (ctx.equal_mod_span(hat_term(num, HalfInt(-1)), hat_term(T.h, HalfInt(0))))
            return std::string("congruence is not separating");
          return ok();
        });

  r.add("conjugation-shift", "e^-1 h^k e is congruent to (h+2)^k for k <= 6",
        [&]() -> std::optional<std::string> {
          for (long k = 0; k <= 6; ++k)
            if (!shift_identity(ctx, T, k)) return "k = " + std::to_string(k);
          return ok();
        });

  r.add("centralizer-window",
        "the centralizer of e in degree <= " + std::to_string(cent_degree) +
            " is spanned by theta^a e^b",
        [&]() -> std::optional<std::string> {
          std::vector<NCPoly> cb = centralizer_basis(U, T.e, cent_degree);
          std::size_t expected = 0;
          for (int a = 0; 2 * a <= cent_degree; ++a)
            for (int b = 0; 2 * a + b <= cent_degree; ++b) ++expected;
          if (cb.size() != expected)
            return "dimension " + std::to_string(cb.size()) + ", family gives " +
                   std::to_string(expected);
          PolyEchelon span;
          for (int a = 0; 2 * a <= cent_degree; ++a)
            for (int b = 0; 2 * a + b <= cent_degree; ++b)
              span.insert(U.multiply(U.power(theta, a), U.power(T.e, b)));
          for (const NCPoly& p : cb)
            if (!span.contains(p)) return "a centralizer element leaves the family span";
          return ok();
        });

  r.add("psi-multiplicative",
        "psi(a) psi(b) = psi(ab) on the centralizer window; images commute with e exactly "
        "and with h modulo the ideal",
        [&]() -> std::optional<std::string> {
          std::vector<std::pair<NCPoly, long>> weighted;
          for (int p = 0; 2 * p <= cent_degree; ++p)
            for (int b = 0; 2 * p + b <= cent_degree; ++b)
              weighted.emplace_back(U.multiply(U.power(theta, p), U.power(T.e, b)), 2 * b);
          HatElement ei = hat_term(T.e, HalfInt(0)), hi = hat_term(T.h, HalfInt(0));
          for (const auto& [a, wa] : weighted) {
            NCPoly scaled = a;
            scaled *= Rational(wa);
            if (U.commutator(T.h, a) != scaled) return std::string("weight bookkeeping is off");
            HatElement pa = psi(ctx, a, wa);
            if (ctx.multiply(ei, pa) != ctx.multiply(pa, ei))
              return std::string("image fails to commute with e");
            if (!ctx.equal_mod_span(ctx.multiply(hi, pa), ctx.multiply(pa, hi)))
              return std::string("image fails to commute with h modulo the ideal");
          }
          for (const auto& [a, wa] : weighted)
            for (const auto& [b, wb] : weighted) {
              if (U.degree2(a) + U.degree2(b) > 8) continue;
              if (ctx.multiply(psi(ctx, a, wa), psi(ctx, b, wb)) !=
                  psi(ctx, U.multiply(a, b), wa + wb))
                return std::string("multiplicativity fails");
            }
          if (!ctx.equal_mod_span(psi(ctx, T.e, 2), psi(ctx, U.one(), 0)))
            return std::string("psi(e) does not collapse onto psi(1)");
          if (ctx.equal_mod_span(psi(ctx, theta, 0), psi(ctx, U.one(), 0)))
            return std::string("psi(theta) collapses onto psi(1)");
          return ok();
        });

  r.add("gamma-family-rank",
        "the family t^{i/2} h^j psi(a_k), i, j <= 3 over the centralizer window, is free",
        [&]() -> std::optional<std::string> {
          GammaReport rep = gamma_check(ctx, T, cent_degree, 3, 3);
          if (!rep.independent)
            return "rank " + std::to_string(rep.rank) + " of " + std::to_string(rep.family);
          if (cent_degree == 4 && (rep.centralizer != 9 || rep.psi_basis != 3 || rep.family != 48))
            return "family shape " + std::to_string(rep.centralizer) + "/" +
                   std::to_string(rep.psi_basis) + "/" + std::to_string(rep.family);
          return ok();
        });
  (void)opt;
  return r.res;
}

// ---------------------------------------------------------------- whittaker

NCPoly coords_to_poly(const Presentation& W, const Vec& v) {
  NCPoly p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    NCPoly t = W.gen(static_cast<int>(i));
    t *= v[i];
    p += t;
  }
  return p;
}

void whittaker_case(Runner& r, const std::string& tag, const LieAlgebra& L, TypeRank tr,
                    const SuiteOptions& opt, bool pipeline) {
  const int cons_degree = opt.degree > 0 ? opt.degree : 4;

  HighestRootRow row = highest_root_row(tr);
  const long even_expected = g0_dim(row);
  const long odd_expected = static_cast<long>(row.dim_g1);

  WhittakerModel M = build_whittaker_model(L);
  WhittakerGenerators G = derive_generators(M);
  MinimalWData data = derive_minimal_w(M);
  Presentation W = build_minimal_w(data);
  const std::size_t m = data.g0.names.size();
  const std::size_t k2 = data.g1_names.size();

  r.add("generator-count-" + tag,
        "generators = dim g(0) + dim g(1) + 1 with the dimensions taken from the root system",
        [&]() -> std::optional<std::string> {
          if (static_cast<long>(G.even.size()) != even_expected)
            return "even generators " + std::to_string(G.even.size()) + ", root system gives " +
                   std::to_string(even_expected);
          if (static_cast<long>(G.odd.size()) != odd_expected)
            return "odd generators " + std::to_string(G.odd.size()) + ", root system gives " +
                   std::to_string(odd_expected);
          const std::size_t total = G.even.size() + G.odd.size() + 1;
          if (total != static_cast<std::size_t>(even_expected + odd_expected + 1) ||
              W.size() != total)
            return "presentation has " + std::to_string(W.size()) + " generators";
          return ok();
        });

  // Span of the even filtration window; used to express odd-odd brackets.
  std::vector<NCPoly> span;
  span.push_back(M.U.one());
  for (const NCPoly& x : G.even) span.push_back(x);
  span.push_back(G.center);
  for (std::size_t i = 0; i < G.even.size(); ++i)
    for (std::size_t j = i; j < G.even.size(); ++j)
      span.push_back(reduce(M, M.U.multiply(G.even[i], G.even[j])));

  r.add("bracket-antisymmetry-" + tag,
        "[u, v] = -[v, u] lands in the even window spanned by g(0) products and C",
        [&]() -> std::optional<std::string> {
          PolyEchelon ech;
          for (const NCPoly& p : span) ech.insert(p);
          if (ech.rank() != span.size()) return std::string("even window spans are dependent");
          for (std::size_t a = 0; a < G.odd.size(); ++a)
            for (std::size_t b = 0; b < a; ++b) {
              auto va = express_in_span(span, reduce(M, M.U.commutator(G.odd[a], G.odd[b])));
              auto vb = express_in_span(span, reduce(M, M.U.commutator(G.odd[b], G.odd[a])));
              if (!va || !vb) return std::string("a bracket leaves the even window");
              for (std::size_t k = 0; k < va->size(); ++k)
                if (!(((*va)[k] + (*vb)[k]).is_zero()))
                  return "pair (" + std::to_string(a) + ", " + std::to_string(b) +
                         ") is not antisymmetric";
            }
          return ok();
        });

  r.add("bracket-equivariance-" + tag,
        "ad x [u, v] = [ad x u, v] + [u, ad x v] with ad taken from the derived action "
        "matrices; residual exactly 0",
        [&]() -> std::optional<std::string> {
          std::vector<std::vector<NCPoly>> br(G.odd.size(),
                                              std::vector<NCPoly>(G.odd.size()));
          for (std::size_t a = 0; a < G.odd.size(); ++a)
            for (std::size_t b = 0; b < G.odd.size(); ++b)
              br[a][b] = reduce(M, M.U.commutator(G.odd[a], G.odd[b]));
          for (std::size_t i = 0; i < G.even.size(); ++i)
            for (std::size_t a = 0; a < G.odd.size(); ++a)
              for (std::size_t b = 0; b < a; ++b) {
                NCPoly lhs = reduce(M, M.U.commutator(G.even[i], br[a][b]));
                NCPoly rhs;
                for (std::size_t c = 0; c < G.odd.size(); ++c) {
                  NCPoly t1 = br[c][b];
                  t1 *= data.action[i].at(c, a);
                  rhs += t1;
                  NCPoly t2 = br[a][c];
                  t2 *= data.action[i].at(c, b);
                  rhs += t2;
                }
                if (lhs != rhs)
                  return "residual " + M.U.str(lhs - rhs) + " at (" + data.g0.names[i] + ", " +
                         std::to_string(a) + ", " + std::to_string(b) + ")";
              }
          return ok();
        });

  r.add("diamond-" + tag,
        "overlap ambiguities of the derived table resolve; words to length " +
            std::to_string(cons_degree) + " rewrite confluently",
        [&]() -> std::optional<std::string> {
          ConsistencyReport rep = W.check_consistency(cons_degree);
          if (!rep.ok) return rep.witness;
          if (rep.overlaps_checked <= 0) return std::string("no overlaps were checked");
          return ok();
        });

  r.add("graded-dimensions-" + tag,
        "monomial counts match the symmetric algebra on the generator weights",
        [&]() -> std::optional<std::string> {
          const int top = 4;
          std::vector<long> ways(static_cast<std::size_t>(top) + 1, 0);
          ways[0] = 1;
          for (std::size_t i = 0; i < W.size(); ++i) {
            const int w = W.weight(static_cast<int>(i));
            for (int t = w; t <= top; ++t)
              ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - w)];
          }
          long cumulative = 0;
          for (int k = 0; k <= top; ++k) {
            cumulative += ways[static_cast<std::size_t>(k)];
            const std::size_t got = W.monomial_basis(k).size();
            if (static_cast<long>(got) != cumulative)
              return "degree " + std::to_string(k) + ": " + std::to_string(got) + " vs " +
                     std::to_string(cumulative);
          }
          return ok();
        });

  r.add("sign-automorphism-" + tag, "negating the g(1) generators fixes every relation",
        [&]() -> std::optional<std::string> {
          std::vector<NCPoly> imgs;
          for (std::size_t i = 0; i < W.size(); ++i) {
            NCPoly g = W.gen(static_cast<int>(i));
            if (i >= m && i < m + k2) g *= Rational(-1);
            imgs.push_back(std::move(g));
          }
          GenMorphism s(W, W, std::move(imgs));
          std::string w;
          if (!s.is_homomorphism(&w)) return w;
          if (!(compose(s, s) == identity_morphism(W)))
            return std::string("square is not the identity");
          return ok();
        });

  if (!pipeline) return;

  // The derived algebra contains its own triple; the half-power layer and
  // the Casimir identities are rerun on top of it unchanged.
  CoordTriple ct = find_sl2_triple(data.g0);
  Vec fw(W.size(), Rational(0)), hw(W.size(), Rational(0)), ew(W.size(), Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    fw[i] = ct.f[i];
    hw[i] = ct.h[i];
    ew[i] = ct.e[i];
  }
  Sl2Triple T{coords_to_poly(W, fw), coords_to_poly(W, hw), coords_to_poly(W, ew)};

  r.add("pipeline-triple-" + tag, "[h, e] = 2e, [h, f] = -2f, [e, f] = h inside the derived algebra",
        [&]() -> std::optional<std::string> {
          validate_sl2_triple(W, T);
          return ok();
        });

  HatContext ctx(W, T.e);
  NCPoly theta = casimir(W, T);
  const HatElement zero;

  r.add("pipeline-casimir-" + tag, "theta - h^2 - 2h = 4 f e in the derived algebra",
        [&]() -> std::optional<std::string> {
          NCPoly lhs = theta - W.multiply(T.h, T.h) - T.h * Rational(2);
          NCPoly rhs = W.multiply(T.f, T.e) * Rational(4);
          if (lhs != rhs) return "difference " + W.str(lhs - rhs);
          return ok();
        });

  r.add("pipeline-lowering-recovery-" + tag,
        "f is congruent to 1/4 (theta - h^2 - 2h) e^-1 in the derived algebra",
        [&]() -> std::optional<std::string> {
          if (!casimir_recovers_f(ctx, T)) return std::string("congruence fails");
          return ok();
        });

  r.add("pipeline-conjugation-shift-" + tag,
        "e^-1 h^k e is congruent to (h+2)^k in the derived algebra, k <= 6",
        [&]() -> std::optional<std::string> {
          for (long k = 0; k <= 6; ++k)
            if (!shift_identity(ctx, T, k)) return "k = " + std::to_string(k);
          return ok();
        });

  r.add("pipeline-half-power-" + tag, "[h, t^1/2] is congruent to t^1/2 over the derived algebra",
        [&]() -> std::optional<std::string> {
          HatElement h0 = hat_term(T.h, HalfInt(0));
          HatElement th = ctx.t_power(HalfInt::half());
          if (!ctx.equal_mod_span(ctx.multiply(h0, th) - ctx.multiply(th, h0), th))
            return std::string("commutator is not t^1/2");
          return ok();
        });

  r.add("pipeline-associativity-" + tag,
        "(a b) c = a (b c) for 60 seeded random triples over the derived algebra",
        [&]() -> std::optional<std::string> {
          std::mt19937_64 g(opt.seed ^ 0x5B4A55ULL);
          for (int iter = 0; iter < 60; ++iter) {
            HatElement a = random_hat(g, W, 2, 1, 3);
            HatElement b = random_hat(g, W, 2, 1, 3);
            HatElement c = random_hat(g, W, 2, 1, 3);
            if (ctx.multiply(ctx.multiply(a, b), c) != ctx.multiply(a, ctx.multiply(b, c)))
              return "iteration " + std::to_string(iter);
          }
          return ok();
        });

  r.add("pipeline-ideal-" + tag,
        "the identification ideal is two-sided and generated by e - t over the derived algebra",
        [&]() -> std::optional<std::string> {
          for (const Monomial& mono : W.monomial_basis(4)) {
            NCPoly x = NCPoly::term(mono, Rational(1));
            for (long n = 0; n <= 2; ++n)
              for (long dm : {-1L, 0L, 1L})
                if (!ctx.equal_mod_span(ctx.spanning_element(x, n, HalfInt::from_doubled(dm)),
                                        zero))
                  return "spanning element of " + W.str(x) + " is nonzero";
          }
          std::vector<HatElement> multipliers;
          for (std::size_t g = 0; g < W.size(); ++g)
            multipliers.push_back(hat_term(W.gen(static_cast<int>(g)), HalfInt(0)));
          multipliers.push_back(ctx.t_power(HalfInt::half()));
          multipliers.push_back(ctx.t_power(-HalfInt::half()));
          HatElement emt = ctx.e_minus_t();
          for (long n = 1; n <= 2; ++n)
            for (long dm : {-1L, 0L, 1L}) {
              HatElement s = ctx.spanning_element(T.h, n, HalfInt::from_doubled(dm));
              for (const HatElement& mu : multipliers)
                if (!ctx.equal_mod_span(ctx.multiply(mu, s), zero) ||
                    !ctx.equal_mod_span(ctx.multiply(s, mu), zero))
                  return std::string("a multiplier escapes the ideal");
              HatElement sum;
              for (const auto& [a, b] : ctx.span_witness(T.h, n, HalfInt::from_doubled(dm)))
                sum += ctx.multiply(ctx.multiply(a, emt), b);
              if (sum != s) return std::string("e - t does not generate a spanning element");
            }
          return ok();
        });

  r.add("pipeline-sign-lift-" + tag,
        "the derived sign involution fixes e and lifts to an order-two map preserving the ideal",
        [&]() -> std::optional<std::string> {
          AlgMap sigma = [m, k2](const NCPoly& p) {
            NCPoly out;
            for (const auto& [mono, c] : p.terms()) {
              unsigned long s = 0;
              for (std::size_t a = 0; a < k2; ++a) s += mono.head[m + a];
              out.add(mono, (s % 2) ? -c : c);
            }
            return out;
          };
          auto st = lift_with_sign(ctx, sigma);
          std::mt19937_64 g(opt.seed ^ 0x517F7ULL);
          for (int iter = 0; iter < 20; ++iter) {
            HatElement a = random_hat(g, W, 2, 1, 3);
            HatElement b = random_hat(g, W, 2, 1, 3);
            if (st(st(a)) != a) return std::string("square is not the identity");
            if (st(ctx.multiply(a, b)) != ctx.multiply(st(a), st(b)))
              return std::string("lift is not multiplicative");
          }
          for (long n = 1; n <= 2; ++n)
            for (long dm : {-1L, 0L, 1L})
              if (!ctx.equal_mod_span(
                      st(ctx.spanning_element(W.gen(static_cast<int>(m)), n,
                                              HalfInt::from_doubled(dm))),
                      zero))
                return std::string("image of a spanning element escapes the ideal");
          return ok();
        });

  r.add("pipeline-psi-" + tag,
        "psi is multiplicative on theta^p e^b and its images commute with e exactly, "
        "with h modulo the ideal",
        [&]() -> std::optional<std::string> {
          std::vector<std::pair<NCPoly, long>> weighted;
          for (int p = 0; p <= 1; ++p)
            for (int b = 0; b <= 2; ++b)
              weighted.emplace_back(W.multiply(W.power(theta, p), W.power(T.e, b)), 2 * b);
          HatElement ei = hat_term(T.e, HalfInt(0)), hi = hat_term(T.h, HalfInt(0));
          for (const auto& [a, wa] : weighted) {
            NCPoly scaled = a;
            scaled *= Rational(wa);
            if (W.commutator(T.h, a) != scaled) return std::string("weight bookkeeping is off");
            HatElement pa = psi(ctx, a, wa);
            if (ctx.multiply(ei, pa) != ctx.multiply(pa, ei))
              return std::string("image fails to commute with e");
            if (!ctx.equal_mod_span(ctx.multiply(hi, pa), ctx.multiply(pa, hi)))
              return std::string("image fails to commute with h modulo the ideal");
          }
          for (const auto& [a, wa] : weighted)
            for (const auto& [b, wb] : weighted) {
              if (W.degree2(a) + W.degree2(b) > 16) continue;
              if (ctx.multiply(psi(ctx, a, wa), psi(ctx, b, wb)) !=
                  psi(ctx, W.multiply(a, b), wa + wb))
                return std::string("multiplicativity fails");
            }
          if (!ctx.equal_mod_span(psi(ctx, T.e, 2), psi(ctx, W.one(), 0)))
            return std::string("psi(e) does not collapse onto psi(1)");
          return ok();
        });

  r.add("pipeline-gamma-" + tag,
        "the family t^{i/2} h^j psi(a_k), i, j <= 2 over the derived centralizer, is free",
        [&]() -> std::optional<std::string> {
          GammaReport rep = gamma_check(ctx, T, 4, 2, 2);
          if (!rep.independent)
            return "rank " + std::to_string(rep.rank) + " of " + std::to_string(rep.family);
          return ok();
        });
}

SuiteResult suite_whittaker(const SuiteOptions& opt) {
  Runner r("whittaker");
  struct Case {
    std::string tag;
    LieAlgebra L;
    TypeRank tr;
    bool pipeline;
  };
  const std::vector<Case> cases = {
      {"a2", sl_n(3), {SimpleType::A, 2}, false},
      {"a3", sl_n(4), {SimpleType::A, 3}, false},
      {"c2", sp4(), {SimpleType::C, 2}, true},
  };
  for (const Case& c : cases) {
    try {
      whittaker_case(r, c.tag, c.L, c.tr, opt, c.pipeline);
    } catch (const std::exception& e) {
      r.res.checks.push_back({"derivation-" + c.tag,
                              "the reduction pipeline produces a finite presentation", "fail",
                              e.what()});
    }
  }
  return r.res;
}

// -------------------------------------------------------------- consistency

Word random_word(std::mt19937_64& g, const Presentation& P, int len, long maxexp) {
  Word w;
  for (int j = 0; j < len; ++j)
    w.emplace_back(static_cast<int>(rnd(g, 0, static_cast<long>(P.size()) - 1)),
                   HalfInt(rnd(g, 0, maxexp)));
  return w;
}

SuiteResult suite_consistency(const SuiteOptions& opt) {
  Runner r("consistency");
  const int degree = opt.degree > 0 ? opt.degree : 4;

  for (int d = 1; d <= 4; ++d)
    r.add("diamond-weyl-" + std::to_string(d),
          "overlap ambiguities of [z_i, d_j] = delta_ij resolve",
          [&, d]() -> std::optional<std::string> {
            ConsistencyReport rep = build_weyl(d).check_consistency(degree);
            if (!rep.ok) return rep.witness;
            if (d >= 2 && rep.overlaps_checked <= 0) return std::string("no overlaps were checked");
            return ok();
          });

  for (int n = 2; n <= 3; ++n)
    r.add("diamond-enveloping-sl" + std::to_string(n),
          "overlap ambiguities of the Chevalley multiplication table resolve",
          [&, n]() -> std::optional<std::string> {
            ConsistencyReport rep = build_enveloping(sl_n(n)).check_consistency(degree);
            if (!rep.ok) return rep.witness;
            if (rep.overlaps_checked <= 0) return std::string("no overlaps were checked");
            return ok();
          });

  r.add("diamond-broken-table",
        "[a,b] = c, [b,c] = a, [c,a] = a breaks the Jacobi identity and the overlap "
        "(c, b, a) refuses to resolve",
        [&]() -> std::optional<std::string> {
          std::vector<Generator> gens{{"a"}, {"b"}, {"c"}};
          auto unit = [](int idx, long k) {
            Monomial m = Monomial::one(3);
            if (idx == 2)
              m.last = HalfInt(1);
            else
              m.head[static_cast<std::size_t>(idx)] = 1;
            return NCPoly::term(m, Rational(k));
          };
          std::vector<RelationSpec> rels;
          rels.push_back({1, 0, unit(2, -1)});  // [b, a] = -c
          rels.push_back({2, 0, unit(0, 1)});   // [c, a] = a
          rels.push_back({2, 1, unit(0, -1)});  // [c, b] = -a
          Presentation broken(std::move(gens), std::move(rels));
          ConsistencyReport rep = broken.check_consistency(2);
          if (rep.ok) return std::string("broken table passed");
          if (rep.witness.find("overlap (c, b, a)") == std::string::npos)
            return "witness does not name the overlap: " + rep.witness;
          return ok();
        });

  r.add("normal-order-homomorphism",
        "normal_order(uv) = normal_order(u) normal_order(v) for 500 seeded word pairs",
        [&]() -> std::optional<std::string> {
          Presentation W2 = build_weyl(2);
          Presentation U3 = build_enveloping(sl_n(3));
          std::mt19937_64 g(opt.seed ^ 0x503D17ULL);
          for (int iter = 0; iter < 500; ++iter) {
            const Presentation& P = (iter % 2) ? U3 : W2;
            Word w1 = random_word(g, P, 3, 2);
            Word w2 = random_word(g, P, 3, 2);
            Word cat = w1;
            cat.insert(cat.end(), w2.begin(), w2.end());
            if (P.normal_order(cat) != P.multiply(P.normal_order(w1), P.normal_order(w2)))
              return "iteration " + std::to_string(iter);
          }
          return ok();
        });
  return r.res;
}

}  // namespace

// ------------------------------------------------------------------ catalog

bool SuiteResult::ok() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const CheckResult& c : checks)
    if (c.status == "fail") ++n;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "branching",     "parity",    "weyl-maps", "plane-split",
      "hat-algebra",   "sl2-structure", "whittaker", "consistency"};
  return names;
}

bool is_suite(const std::string& name) {
  for (const std::string& s : suite_names())
    if (s == name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  SuiteResult res;
  if (name == "branching")
    res = suite_branching(opt);
  else if (name == "parity")
    res = suite_parity(opt);
  else if (name == "weyl-maps")
    res = suite_weyl_maps(opt);
  else if (name == "plane-split")
    res = suite_plane_split(opt);
  else if (name == "hat-algebra")
    res = suite_hat(opt);
  else if (name == "sl2-structure")
    res = suite_sl2(opt);
  else if (name == "whittaker")
    res = suite_whittaker(opt);
  else if (name == "consistency")
    res = suite_consistency(opt);
  else
    throw UnknownSuite("unknown suite '" + name + "'");
  res.elapsed_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
  return res;
}

// ------------------------------------------------------------------ reports

std::string report_json(const std::vector<SuiteResult>& results, const SuiteOptions& opt) {
  nlohmann::json doc;
  doc["report_version"] = 1;
  doc["options"]["seed"] = opt.seed;
  doc["options"]["degree"] = opt.degree;
  std::size_t checks = 0, failed = 0;
  nlohmann::json suites = nlohmann::json::array();
  for (const SuiteResult& s : results) {
    nlohmann::json js;
    js["suite"] = s.suite;
    js["ok"] = s.ok();
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : s.checks) {
      arr.push_back({{"name", c.name},
                     {"anchor", c.anchor},
                     {"status", c.status},
                     {"witness", c.witness}});
      ++checks;
      if (c.status == "fail") ++failed;
    }
    js["checks"] = arr;
    suites.push_back(js);
  }
  doc["suites"] = suites;
  doc["checks"] = checks;
  doc["failed"] = failed;
  return doc.dump(2) + "\n";
}

std::string report_text(const std::vector<SuiteResult>& results, const SuiteOptions& opt) {
  std::ostringstream out;
  out << "verification report (seed " << opt.seed << ", degree "
      << (opt.degree > 0 ? std::to_string(opt.degree) : std::string("defaults")) << ")\n";
  std::size_t checks = 0, failed = 0;
  for (const SuiteResult& s : results) {
    out << "\n" << s.suite << " (" << s.elapsed_ms << " ms)\n";
    for (const CheckResult& c : s.checks) {
      ++checks;
      if (c.status == "fail") ++failed;
      std::string tag = c.status == "pass" ? "pass" : (c.status == "fail" ? "FAIL" : "info");
      out << "  " << tag << "  " << c.name << "  --  " << c.anchor << "\n";
      if (!c.witness.empty()) out << "        " << c.witness << "\n";
    }
  }
  out << "\n" << results.size() << " suites, " << checks << " checks, " << failed
      << " failures\n";
  return out.str();
}

// ----------------------------------------------------- definition documents

namespace {

Monomial word_to_monomial(const Word& w, std::size_t n, bool localized, Lattice lat) {
  Monomial m = Monomial::one(n);
  int prev = -1;
  for (const auto& [g, e] : w) {
    if (g < prev)
      throw ParseError("relations: normal form term is not in ascending generator order");
    prev = g;
    if (static_cast<std::size_t>(g) + 1 == n) {
      if (!localized && (!e.is_integral() || e.to_long() < 0))
        throw ParseError("relations: exponent must be a nonnegative integer");
      if (localized && lat == Lattice::Integer && !e.is_integral())
        throw ParseError("relations: half exponents need the half lattice");
      m.last += e;
    } else {
      if (!e.is_integral() || e.to_long() < 0)
        throw ParseError("relations: exponent must be a nonnegative integer");
      m.head[static_cast<std::size_t>(g)] += static_cast<std::uint32_t>(e.to_long());
    }
  }
  return m;
}

NCPoly parse_normal_text(const std::string& text, const std::vector<std::string>& names,
                         bool localized, Lattice lat) {
  std::vector<std::pair<Rational, Word>> terms;
  try {
    terms = parse_terms(text, names);
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    if (msg.find("unknown generator") != std::string::npos) throw UnknownGenerator(msg);
    throw ParseError("relations: " + msg);
  }
  NCPoly out;
  for (const auto& [c, w] : terms) out.add(word_to_monomial(w, names.size(), localized, lat), c);
  return out;
}

}  // namespace

AlgebraDef parse_algebra_def(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("definition: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("definition: top level must be an object");
  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
    throw ParseError("definition: field 'generators' must be a nonempty array");

  std::vector<std::string> names;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw ParseError("definition: generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw ParseError("definition: duplicate generator '" + names[i] + "'");

  std::optional<Lattice> lat;
  if (doc.contains("localized_final")) {
    const std::string s = doc["localized_final"].get<std::string>();
    if (s == "integer")
      lat = Lattice::Integer;
    else if (s == "half")
      lat = Lattice::Half;
    else
      throw ParseError("definition: 'localized_final' must be \"integer\" or \"half\"");
  }

  auto index_of = [&](const std::string& g) -> int {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == g) return static_cast<int>(i);
    throw UnknownGenerator("definition: unknown generator '" + g + "'");
  };

  std::vector<Generator> gens;
  for (const std::string& nm : names) gens.push_back({nm, 1});
  std::vector<RelationSpec> rels;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) throw ParseError("definition: 'relations' must be an array");
    for (const auto& rel : doc["relations"]) {
      if (!rel.is_object() || !rel.contains("pair") || !rel.contains("normal") ||
          !rel["pair"].is_array() || rel["pair"].size() != 2)
        throw ParseError("definition: each relation needs 'pair' of two names and 'normal'");
      const int hi = index_of(rel["pair"][0].get<std::string>());
      const int lo = index_of(rel["pair"][1].get<std::string>());
      if (hi <= lo)
        throw ParseError("definition: 'pair' must list the later generator first");
      NCPoly normal = parse_normal_text(rel["normal"].get<std::string>(), names,
                                        lat.has_value(), lat.value_or(Lattice::Integer));
      Monomial base = Monomial::one(names.size());
      if (static_cast<std::size_t>(hi) + 1 == names.size())
        base.last = HalfInt(1);
      else
        base.head[static_cast<std::size_t>(hi)] = 1;
      base.head[static_cast<std::size_t>(lo)] = 1;
      rels.push_back({hi, lo, normal - NCPoly::term(base, Rational(1))});
    }
  }
  std::string name = doc.contains("name") ? doc["name"].get<std::string>() : "";
  return {std::move(name), Presentation(std::move(gens), std::move(rels), lat)};
}

std::string serialize_algebra_def(const Presentation& P, const std::string& name) {
  nlohmann::json doc;
  doc["name"] = name;
  doc["generators"] = P.names();
  nlohmann::json rels = nlohmann::json::array();
  const auto names = P.names();
  for (int j = 1; j < static_cast<int>(P.size()); ++j)
    for (int i = 0; i < j; ++i) {
      const NCPoly& corr = P.rewrite(j, i);
      if (corr.is_zero()) continue;
      Monomial base = Monomial::one(P.size());
      if (static_cast<std::size_t>(j) + 1 == P.size())
        base.last = HalfInt(1);
      else
        base.head[static_cast<std::size_t>(j)] = 1;
      base.head[static_cast<std::size_t>(i)] = 1;
      rels.push_back({{"pair", {names[static_cast<std::size_t>(j)], names[static_cast<std::size_t>(i)]}},
                      {"normal", poly_to_string(NCPoly::term(base, Rational(1)) + corr, names)}});
    }
  doc["relations"] = rels;
  if (P.localized()) doc["localized_final"] = P.lattice() == Lattice::Half ? "half" : "integer";
  return doc.dump(2) + "\n";
}

std::string serialize_minimal_w(const MinimalWData& data) {
  nlohmann::json doc;
  doc["kind"] = "minimal-w";
  doc["g0"]["names"] = data.g0.names;
  nlohmann::json br = nlohmann::json::array();
  for (const auto& row : data.g0.br) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const Vec& v : row) {
      nlohmann::json jv = nlohmann::json::array();
      for (const Rational& c : v) jv.push_back(c.str());
      jrow.push_back(jv);
    }
    br.push_back(jrow);
  }
  doc["g0"]["brackets"] = br;
  doc["g1_names"] = data.g1_names;
  nlohmann::json act = nlohmann::json::array();
  for (const RationalMatrix& mat : data.action) {
    nlohmann::json jm = nlohmann::json::array();
    for (std::size_t i = 0; i < mat.rows; ++i) {
      nlohmann::json jrow = nlohmann::json::array();
      for (std::size_t j = 0; j < mat.cols; ++j) jrow.push_back(mat.at(i, j).str());
      jm.push_back(jrow);
    }
    act.push_back(jm);
  }
  doc["action"] = act;
  doc["b_lower"] = data.B_lower;
  doc["central_name"] = data.central_name;
  return doc.dump(2) + "\n";
}

MinimalWData parse_minimal_w(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
  if (!doc.is_object() || doc.value("kind", "") != std::string("minimal-w"))
    throw ParseError("document: expected kind \"minimal-w\"");
  MinimalWData data;
  try {
    data.g0.names = doc.at("g0").at("names").get<std::vector<std::string>>();
    const std::size_t n = data.g0.names.size();
    const auto& br = doc.at("g0").at("brackets");
    if (br.size() != n) throw ParseError("document: bracket table has the wrong shape");
    data.g0.br.assign(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (br[i].size() != n) throw ParseError("document: bracket table has the wrong shape");
      for (std::size_t j = 0; j < n; ++j) {
        const auto& jv = br[i][j];
        if (jv.size() != n) throw ParseError("document: bracket table has the wrong shape");
        Vec v;
        for (const auto& c : jv) v.push_back(Rational::from_string(c.get<std::string>()));
        data.g0.br[i][j] = std::move(v);
      }
    }
    data.g1_names = doc.at("g1_names").get<std::vector<std::string>>();
    const std::size_t k2 = data.g1_names.size();
    const auto& act = doc.at("action");
    if (act.size() != n) throw ParseError("document: one action matrix per g(0) generator");
    for (const auto& jm : act) {
      if (jm.size() != k2) throw ParseError("document: action matrices must be square of odd size");
      RationalMatrix mat(k2, k2);
      for (std::size_t i = 0; i < k2; ++i) {
        if (jm[i].size() != k2)
          throw ParseError("document: action matrices must be square of odd size");
        for (std::size_t j = 0; j < k2; ++j)
          mat.at(i, j) = Rational::from_string(jm[i][j].get<std::string>());
      }
      data.action.push_back(std::move(mat));
    }
    data.B_lower = doc.at("b_lower").get<std::vector<std::vector<std::string>>>();
    if (data.B_lower.size() != k2) throw ParseError("document: b_lower needs one row per odd generator");
    for (std::size_t a = 0; a < k2; ++a)
      if (data.B_lower[a].size() != a)
        throw ParseError("document: b_lower must be strictly lower triangular");
    data.central_name = doc.value("central_name", "C");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
  return data;
}

}  // namespace walg
