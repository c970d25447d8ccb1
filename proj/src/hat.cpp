#include "walg/hat.hpp"

#include <algorithm>

namespace walg {

HatElement hat_term(const NCPoly& x, const HalfInt& m) {
  HatElement r;
  r.add(m, x);
  return r;
}

HatContext::HatContext(const Presentation& H, NCPoly e, int chain_bound)
    : H_(&H), e_(std::move(e)), chain_bound_(chain_bound) {
  if (H.localized()) throw WalgError("the base of the Laurent layer must be polynomial");
  epow_.push_back(H_->one());
  // Local nilpotency on every generator now, not at first multiply.
  for (std::size_t g = 0; g < H_->size(); ++g) (void)ad_chain_of(H_->gen(static_cast<int>(g)));
}

std::vector<NCPoly> HatContext::ad_chain_of(const NCPoly& y) const {
  std::vector<NCPoly> chain;
  NCPoly cur = y;
  while (!cur.is_zero()) {
    if (static_cast<int>(chain.size()) > chain_bound_)
      throw NotNilpotent("ad of the inverted element does not vanish on " + H_->str(y) +
                         " within " + std::to_string(chain_bound_) + " steps");
    chain.push_back(cur);
    cur = H_->commutator(e_, cur);
  }
  return chain;
}

HatElement HatContext::multiply(const HatElement& a, const HatElement& b) const {
  HatElement out;
  for (const auto& [q, y] : b.comp) {
    const std::vector<NCPoly> chain = ad_chain_of(y);
    for (const auto& [m, x] : a.comp) {
      for (std::size_t i = 0; i < chain.size(); ++i) {
        Rational bc = gen_binomial(m, static_cast<unsigned long>(i));
        if (bc.is_zero()) continue;
        NCPoly prod = H_->multiply(x, chain[i]);
        prod *= bc;
        out.add(m - HalfInt(static_cast<long>(i)) + q, prod);
      }
    }
  }
  return out;
}

HatElement HatContext::e_minus_t() const {
  HatElement r = hat_term(e_, HalfInt(0));
  r.add(HalfInt(1), -H_->one());
  return r;
}

const NCPoly& HatContext::e_power(long k) const {
  if (k < 0) throw WalgError("e_power: negative exponent");
  while (static_cast<long>(epow_.size()) <= k) epow_.push_back(H_->multiply(epow_.back(), e_));
  return epow_[static_cast<std::size_t>(k)];
}

std::pair<NCPoly, NCPoly> HatContext::fold(const HatElement& a,
                                           std::optional<long> shift) const {
  long N = 0;
  for (const auto& [m, x] : a.comp) {
    (void)x;
    // need m + N >= 0; the smallest integer N is ceil(-m) = -floor(m)
    mpz_class need = -m.floor();
    if (need > N) N = need.get_si();
  }
  if (shift) {
    if (*shift < N) throw WalgError("fold: shift leaves a negative exponent");
    N = *shift;
  }
  NCPoly c0, ch;
  for (const auto& [m, x] : a.comp) {
    HalfInt q = m + HalfInt(N);
    mpz_class fl = q.floor();
    NCPoly xe = H_->multiply(x, e_power(fl.get_si()));
    if (q.has_half_part())
      ch += xe;
    else
      c0 += xe;
  }
  return {c0, ch};
}

bool HatContext::equal_mod_span(const HatElement& a, const HatElement& b) const {
  HatElement d = a;
  d -= b;
  auto [c0, ch] = fold(d);
  return c0.is_zero() && ch.is_zero();
}

HatElement HatContext::spanning_element(const NCPoly& x, long n, const HalfInt& m) const {
  if (n < 0) throw WalgError("spanning_element: n must be nonnegative");
  HatElement s = hat_term(x, m + HalfInt(n));
  s.add(m, -H_->multiply(x, e_power(n)));
  return s;
}

std::vector<std::pair<HatElement, HatElement>> HatContext::span_witness(const NCPoly& x, long n,
                                                                        const HalfInt& m) const {
  if (n < 0) throw WalgError("span_witness: n must be nonnegative");
  std::vector<std::pair<HatElement, HatElement>> out;
  for (long j = 0; j < n; ++j) {
    NCPoly a = -H_->multiply(x, e_power(j));
    out.emplace_back(hat_term(a, HalfInt(0)), t_power(m + HalfInt(n - 1 - j)));
  }
  return out;
}

std::function<HatElement(const HatElement&)> lift_with_sign(const HatContext& ctx, AlgMap sigma) {
  const NCPoly se = sigma(ctx.inverted());
  bool fixes;
  if (se == ctx.inverted())
    fixes = true;
  else if (se == -ctx.inverted())
    fixes = false;
  else
    throw DoesNotFixE("the map sends the inverted element to " + ctx.algebra().str(se) +
                      ", which is neither e nor -e");
  return [fixes, sigma](const HatElement& a) {
    HatElement out;
    for (const auto& [m, x] : a.comp) {
      bool flip;
      if (fixes) {
        flip = !m.is_integral();  // (-1)^{2m}
      } else {
        flip = mpz_odd_p(m.floor().get_mpz_t()) != 0;  // (-1)^{floor(m)}
      }
      NCPoly y = sigma(x);
      if (flip) y = -y;
      out.add(m, y);
    }
    return out;
  };
}

std::string hat_str(const HatContext& ctx, const HatElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [m, x] : a.comp) {
    if (!out.empty()) out += " + ";
    out += "(" + ctx.algebra().str(x) + ")";
    if (!m.is_zero()) out += "*t^" + m.str();
  }
  return out;
}

Presentation localized_companion(const Presentation& H, const NCPoly& e, Lattice lat,
                                 const std::string& tname) {
  if (H.localized()) throw WalgError("base algebra must be polynomial");
  const std::size_t n = H.size();
  std::vector<Generator> gens = H.generators();

  const std::size_t width = n + 1;
  auto lift = [&](const NCPoly& p) {
    NCPoly out;
    for (const auto& [m, c] : p.terms()) {
      Monomial mm = Monomial::one(width);
      for (std::size_t i = 0; i < m.head.size(); ++i) mm.head[i] = m.head[i];
      if (!m.last.is_zero()) mm.head[n - 1] = static_cast<std::uint32_t>(m.last.to_long());
      out.add(mm, c);
    }
    return out;
  };

  std::vector<RelationSpec> rels;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const NCPoly& r = H.rewrite(static_cast<int>(j), static_cast<int>(i));
      if (!r.is_zero()) rels.push_back({static_cast<int>(j), static_cast<int>(i), lift(r)});
    }

  // t commutes like e; its weight is made large enough that every one of
  // these relations still lowers the filtration.
  long wt = 1;
  std::vector<NCPoly> tr(n);
  for (std::size_t g = 0; g < n; ++g) {
    tr[g] = H.commutator(e, H.gen(static_cast<int>(g)));
    if (tr[g].is_zero()) continue;
    mpz_class d2 = H.degree2(tr[g]);  // unchanged by the lift
    mpz_class need = d2 / 2 - H.weight(static_cast<int>(g)) + 1;
    if (need > wt) wt = need.get_si();
  }
  gens.push_back({tname, static_cast<int>(wt)});
  for (std::size_t g = 0; g < n; ++g)
    if (!tr[g].is_zero())
      rels.push_back({static_cast<int>(n), static_cast<int>(g), lift(tr[g])});

  return Presentation(std::move(gens), std::move(rels), lat, H.default_budget());
}

NCPoly lift_to_companion(const Presentation& H, const NCPoly& x) {
  const std::size_t n = H.size();
  NCPoly out;
  for (const auto& [m, c] : x.terms()) {
    Monomial mm = Monomial::one(n + 1);
    for (std::size_t i = 0; i < m.head.size(); ++i) mm.head[i] = m.head[i];
    if (!m.last.is_zero()) mm.head[n - 1] = static_cast<std::uint32_t>(m.last.to_long());
    out.add(mm, c);
  }
  return out;
}

}  // namespace walg
