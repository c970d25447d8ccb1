#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "walg/presentation.hpp"

namespace walg {

// Finitely supported Laurent layer over an algebra H: sum of x_m t^m with
// m in (1/2)Z and x_m in H.
struct HatElement {
  std::map<HalfInt, NCPoly> comp;

  bool is_zero() const { return comp.empty(); }

  void add(const HalfInt& m, const NCPoly& x) {
    if (x.is_zero()) return;
    auto it = comp.find(m);
    if (it == comp.end()) {
      comp.emplace(m, x);
    } else {
      it->second += x;
      if (it->second.is_zero()) comp.erase(it);
    }
  }

  HatElement& operator+=(const HatElement& o) {
    for (const auto& [m, x] : o.comp) add(m, x);
    return *this;
  }
  HatElement& operator-=(const HatElement& o) {
    for (const auto& [m, x] : o.comp) add(m, -x);
    return *this;
  }
  HatElement operator-() const {
    HatElement r;
    for (const auto& [m, x] : comp) r.comp.emplace(m, -x);
    return r;
  }
  HatElement& operator*=(const Rational& c) {
    if (c.is_zero()) {
      comp.clear();
      return *this;
    }
    for (auto& [m, x] : comp) x *= c;
    return *this;
  }
  friend HatElement operator+(HatElement a, const HatElement& b) { return a += b; }
  friend HatElement operator-(HatElement a, const HatElement& b) { return a -= b; }
  bool operator==(const HatElement& o) const { return comp == o.comp; }
  bool operator!=(const HatElement& o) const { return !(*this == o); }
};

HatElement hat_term(const NCPoly& x, const HalfInt& m);

// H extended by a formal invertible t that commutes exactly like a chosen
// element e: (x t^n)(y t^m) = sum_i binom(n, i) x (ad e)^i(y) t^{n+m-i}.
// The quotient by span{ x t^{n+m} - x e^n t^m : n >= 0 } identifies t with
// e, which is how an ad-nilpotent element gets inverted.
class HatContext {
public:
  HatContext(const Presentation& H, NCPoly e, int chain_bound = 64);

  const Presentation& algebra() const { return *H_; }
  const NCPoly& inverted() const { return e_; }

  // (y, [e,y], [e,[e,y]], ...) stopping before the first zero; throws
  // NotNilpotent past the bound.
  std::vector<NCPoly> ad_chain_of(const NCPoly& y) const;

  HatElement multiply(const HatElement& a, const HatElement& b) const;
  HatElement t_power(const HalfInt& m) const { return hat_term(H_->one(), m); }
  HatElement e_minus_t() const;

  // Class of a modulo the span, as the pair of components over t^0 and
  // t^{1/2}: shift all exponents up by N (>= the default minimal shift),
  // then replace x t^q by x e^{floor(q)} over t^{q - floor(q)}. Two
  // elements are congruent iff the folds of their difference vanish; for
  // comparing folds across elements pass one common N.
  std::pair<NCPoly, NCPoly> fold(const HatElement& a,
                                 std::optional<long> shift = std::nullopt) const;
  bool equal_mod_span(const HatElement& a, const HatElement& b) const;

  HatElement spanning_element(const NCPoly& x, long n, const HalfInt& m) const;
  // Pairs (a_j, b_j) with sum_j a_j (e - t) b_j = spanning_element(x, n, m),
  // exactly, not just modulo the span.
  std::vector<std::pair<HatElement, HatElement>> span_witness(const NCPoly& x, long n,
                                                              const HalfInt& m) const;

  const NCPoly& e_power(long k) const;

private:
  const Presentation* H_;
  NCPoly e_;
  int chain_bound_;
  mutable std::vector<NCPoly> epow_;
};

using AlgMap = std::function<NCPoly(const NCPoly&)>;

// Sign-twisted lift of sigma to the Laurent layer. sigma(e) = e gives the
// component sign (-1)^{2m} and the lift is multiplicative; sigma(e) = -e
// gives (-1)^{floor(m)}, an order-2 linear map that still preserves the
// span. Anything else throws DoesNotFixE.
std::function<HatElement(const HatElement&)> lift_with_sign(const HatContext& ctx, AlgMap sigma);

std::string hat_str(const HatContext& ctx, const HatElement& a);

// The same construction as an honest presentation: H's generators plus a
// localized final generator whose commutation table is ad e. Useful as an
// independent realization of the product above.
Presentation localized_companion(const Presentation& H, const NCPoly& e, Lattice lat,
                                 const std::string& tname = "t");

// Embedding of H into the companion (one more generator at the end).
NCPoly lift_to_companion(const Presentation& H, const NCPoly& x);

}  // namespace walg
