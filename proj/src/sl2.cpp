#include "walg/sl2.hpp"

#include <algorithm>

#include "walg/linalg.hpp"

namespace walg {

void validate_sl2_triple(const Presentation& H, const Sl2Triple& t) {
  NCPoly two_e = t.e;
  two_e *= Rational(2);
  NCPoly mtwo_f = t.f;
  mtwo_f *= Rational(-2);
  if (H.commutator(t.h, t.e) != two_e)
    throw RelationDefect("[h, e] = 2e fails: got " + H.str(H.commutator(t.h, t.e)));
  if (H.commutator(t.h, t.f) != mtwo_f)
    throw RelationDefect("[h, f] = -2f fails: got " + H.str(H.commutator(t.h, t.f)));
  if (H.commutator(t.e, t.f) != t.h)
    throw RelationDefect("[e, f] = h fails: got " + H.str(H.commutator(t.e, t.f)));
}

bool PolyEchelon::insert(NCPoly p) {
  p = reduce(std::move(p));
  if (p.is_zero()) return false;
  Rational lc = p.leading_coeff();
  p *= Rational(1) / lc;
  Monomial lead = p.leading_monomial();
  // keep earlier rows reduced against the new one
  for (auto& [lm, row] : rows_) {
    (void)lm;
    auto it = row.terms().find(lead);
    if (it != row.terms().end()) {
      NCPoly sub = p;
      sub *= it->second;
      row -= sub;
    }
  }
  rows_.emplace(std::move(lead), std::move(p));
  return true;
}

NCPoly PolyEchelon::reduce(NCPoly p) const {
  for (;;) {
    if (p.is_zero()) return p;
    auto it = rows_.find(p.leading_monomial());
    if (it == rows_.end()) {
      // leading term survives; reduce the tail terms only
      NCPoly out;
      out.add(p.leading_monomial(), p.leading_coeff());
      NCPoly tail = p;
      tail.add(p.leading_monomial(), -p.leading_coeff());
      while (!tail.is_zero()) {
        auto jt = rows_.find(tail.leading_monomial());
        if (jt == rows_.end()) {
          out.add(tail.leading_monomial(), tail.leading_coeff());
          tail.add(tail.leading_monomial(), -tail.leading_coeff());
        } else {
          NCPoly sub = jt->second;
          sub *= tail.leading_coeff();
          tail -= sub;
        }
      }
      return out;
    }
    NCPoly sub = it->second;
    sub *= p.leading_coeff();
    p -= sub;
  }
}

std::vector<NCPoly> PolyEchelon::sorted_rows() const {
  std::vector<NCPoly> out;
  out.reserve(rows_.size());
  for (const auto& [lm, row] : rows_) {
    (void)lm;
    out.push_back(row);
  }
  return out;
}

std::optional<Vec> express_in_span(const std::vector<NCPoly>& basis, const NCPoly& target) {
  std::map<Monomial, std::size_t, GlexFirst> rows;
  auto note = [&rows](const NCPoly& p) {
    for (const auto& [m, c] : p.terms()) {
      (void)c;
      rows.emplace(m, rows.size());
    }
  };
  for (const NCPoly& b : basis) note(b);
  note(target);
  // rows.size() settles only now; re-number by map order for determinism
  std::size_t idx = 0;
  for (auto& [m, r] : rows) {
    (void)m;
    r = idx++;
  }
  RationalMatrix M(rows.size(), basis.size());
  Vec rhs(rows.size(), Rational(0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [m, c] : basis[j].terms()) M.at(rows.at(m), j) = c;
  for (const auto& [m, c] : target.terms()) rhs[rows.at(m)] = c;
  return solve(M, rhs);
}

NCPoly pair_embed(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  auto put = [&out](const NCPoly& p, std::uint32_t flag) {
    for (const auto& [m, c] : p.terms()) {
      Monomial mm = Monomial::one(m.width() + 1);
      mm.head[0] = flag;
      for (std::size_t i = 0; i < m.head.size(); ++i) mm.head[i + 1] = m.head[i];
      mm.last = m.last;
      out.add(mm, c);
    }
  };
  put(a, 0);
  put(b, 1);
  return out;
}

std::vector<NCPoly> centralizer_basis(const Presentation& H, const NCPoly& a, int degree) {
  const std::vector<Monomial> dom = H.monomial_basis(degree);
  const mpz_class da2 = H.degree2(a);
  const int target_degree = degree + static_cast<int>(mpz_class(da2 / 2).get_si()) + 1;
  const std::vector<Monomial> codom = H.monomial_basis(target_degree);
  std::map<Monomial, std::size_t, GlexFirst> row_of;
  for (std::size_t i = 0; i < codom.size(); ++i) row_of.emplace(codom[i], i);

  RationalMatrix M(codom.size(), dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    NCPoly img = H.commutator(a, NCPoly::term(dom[j], Rational(1)));
    for (const auto& [m, c] : img.terms()) M.at(row_of.at(m), j) = c;
  }

  PolyEchelon ech;
  for (const Vec& k : kernel_basis(M)) {
    NCPoly p;
    for (std::size_t j = 0; j < dom.size(); ++j)
      if (!k[j].is_zero()) p.add(dom[j], k[j]);
    ech.insert(std::move(p));
  }
  return ech.sorted_rows();
}

HGrading h_grading(const Presentation& H, const NCPoly& h, const std::vector<NCPoly>& basis) {
  const std::size_t n = basis.size();
  RationalMatrix M(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    NCPoly img = H.commutator(h, basis[j]);
    auto coords = express_in_span(basis, img);
    if (!coords)
      throw NotExpressible("the span is not invariant: [h, v_" + std::to_string(j) +
                           "] = " + H.str(img) + " is outside it");
    for (std::size_t i = 0; i < n; ++i) M.at(i, j) = (*coords)[i];
  }

  HGrading out;
  if (n == 0) return out;

  bool diagonal = true;
  for (std::size_t i = 0; i < n && diagonal; ++i)
    for (std::size_t j = 0; j < n && diagonal; ++j)
      if (i != j && !M.at(i, j).is_zero()) diagonal = false;

  std::size_t total = 0;
  if (diagonal) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& ev = M.at(j, j);
      if (!ev.is_integer())
        throw NonSemisimpleH("non-integer weight " + ev.str());
      out.pieces[ev.num().get_si()].push_back(basis[j]);
      ++total;
    }
  } else {
    // All integer candidates within the Gershgorin disc bound.
    Rational bound(0);
    for (std::size_t i = 0; i < n; ++i) {
      Rational row(0);
      for (std::size_t j = 0; j < n; ++j) row += M.at(i, j).abs();
      if (row > bound) bound = row;
    }
    long B = mpz_class(bound.num() / bound.den()).get_si() + 1;
    for (long ev = -B; ev <= B; ++ev) {
      RationalMatrix shifted = M;
      for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) -= Rational(ev);
      std::vector<Vec> ker = kernel_basis(shifted);
      if (ker.empty()) continue;
      PolyEchelon ech;
      for (const Vec& k : ker) {
        NCPoly p;
        for (std::size_t j = 0; j < n; ++j)
          if (!k[j].is_zero()) {
            NCPoly s = basis[j];
            s *= k[j];
            p += s;
          }
        ech.insert(std::move(p));
      }
      auto rows = ech.sorted_rows();
      total += rows.size();
      out.pieces.emplace(ev, std::move(rows));
    }
    if (total != n)
      throw NonSemisimpleH("eigenspace dimensions sum to " + std::to_string(total) + " of " +
                           std::to_string(n));
  }
  return out;
}

NCPoly casimir(const Presentation& H, const Sl2Triple& t) {
  NCPoly quad = H.multiply(t.h, t.h);
  NCPoly cross = H.multiply(t.e, t.f) + H.multiply(t.f, t.e);
  cross *= Rational(2);
  return quad + cross;
}

bool casimir_recovers_f(const HatContext& ctx, const Sl2Triple& t) {
  const Presentation& H = ctx.algebra();
  NCPoly num = casimir(H, t) - H.multiply(t.h, t.h);
  NCPoly two_h = t.h;
  two_h *= Rational(2);
  num -= two_h;
  num *= Rational(1, 4);
  return ctx.equal_mod_span(hat_term(num, HalfInt(-1)), hat_term(t.f, HalfInt(0)));
}

bool shift_identity(const HatContext& ctx, const Sl2Triple& t, long k) {
  const Presentation& H = ctx.algebra();
  HatElement lhs = ctx.multiply(
      ctx.multiply(ctx.t_power(HalfInt(-1)), hat_term(H.power(t.h, k), HalfInt(0))),
      ctx.t_power(HalfInt(1)));
  NCPoly shifted = H.power(t.h + H.scalar(Rational(2)), k);
  return ctx.equal_mod_span(lhs, hat_term(shifted, HalfInt(0)));
}

HatElement psi(const HatContext& ctx, const NCPoly& a, long weight) {
  (void)ctx;
  return hat_term(a, HalfInt::from_doubled(-weight));
}

GammaReport gamma_check(const HatContext& ctx, const Sl2Triple& t, int cent_degree, int imax,
                        int jmax) {
  const Presentation& H = ctx.algebra();
  GammaReport rep;

  std::vector<std::pair<NCPoly, long>> graded;
  {
    auto cent = centralizer_basis(H, t.e, cent_degree);
    HGrading gr = h_grading(H, t.h, cent);
    for (const auto& [w, vs] : gr.pieces)
      for (const NCPoly& v : vs) graded.emplace_back(v, w);
  }
  rep.centralizer = graded.size();

  // One shift that clears every exponent this family can produce: psi
  // contributes -w/2 and multiplying by h^j can drop another jmax steps
  // through the binomial rule.
  long wmax = 0;
  for (const auto& [v, w] : graded) {
    (void)v;
    wmax = std::max(wmax, std::abs(w));
  }
  const long N = wmax / 2 + jmax + 1;

  // Deduplicate psi images: psi is far from injective (e t^{-1} folds to the
  // same class as 1), so keep an echelon basis of the image first.
  std::vector<std::pair<NCPoly, long>> kept;
  PolyEchelon image;
  for (const auto& [v, w] : graded) {
    auto [c0, ch] = ctx.fold(psi(ctx, v, w), N);
    if (image.insert(pair_embed(c0, ch))) kept.emplace_back(v, w);
  }
  rep.psi_basis = kept.size();

  PolyEchelon family;
  for (long i = 0; i <= imax; ++i)
    for (long j = 0; j <= jmax; ++j) {
      HatElement hj = hat_term(H.power(t.h, j), HalfInt(0));
      HatElement pre = ctx.multiply(ctx.t_power(HalfInt::from_doubled(i)), hj);
      for (const auto& [v, w] : kept) {
        HatElement el = ctx.multiply(pre, psi(ctx, v, w));
        auto [c0, ch] = ctx.fold(el, N);
        ++rep.family;
        if (family.insert(pair_embed(c0, ch))) ++rep.rank;
      }
    }
  rep.independent = rep.rank == rep.family;
  return rep;
}

}  // namespace walg
