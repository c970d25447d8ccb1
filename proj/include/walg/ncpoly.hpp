#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "walg/monomial.hpp"

namespace walg {

// A word in the free algebra: factors (generator index, exponent) read left
// to right. This is what the rewriting engine consumes.
using Word = std::vector<std::pair<int, HalfInt>>;

// Noncommutative polynomial in normal form: finitely many monomials with
// nonzero rational coefficients, leading term first. Addition and scalar
// operations live here; products need a Presentation (they rewrite).
class NCPoly {
public:
  using Terms = std::map<Monomial, Rational, GlexFirst>;

  NCPoly() = default;

  static NCPoly term(Monomial m, Rational c) {
    NCPoly p;
    p.add(std::move(m), std::move(c));
    return p;
  }

  void add(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const Terms& terms() const { return t_; }

  const Monomial& leading_monomial() const { return t_.begin()->first; }
  const Rational& leading_coeff() const { return t_.begin()->second; }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
  }
  NCPoly operator-() const {
    NCPoly p;
    for (const auto& [m, c] : t_) p.t_.emplace(m, -c);
    return p;
  }
  NCPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      t_.clear();
      return *this;
    }
    for (auto& [m, c] : t_) c *= s;
    return *this;
  }

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Rational& s) { return a *= s; }
  friend NCPoly operator*(const Rational& s, NCPoly a) { return a *= s; }

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

private:
  Terms t_;
};

// Word factors of a normal monomial, zero exponents skipped.
Word monomial_factors(const Monomial& m);

// Text form: terms joined by " + " / " - ", each "coef*g1^a1*...".
// Exponents print as "k" or "k/2"; coefficient 1 is omitted next to factors.
std::string poly_to_string(const NCPoly& p, const std::vector<std::string>& names);

// Parse of the same syntax into (coefficient, word) pairs. Words are kept
// verbatim (not normal-ordered); callers either feed them to the engine or
// require sortedness. Throws std::invalid_argument with a position note.
std::vector<std::pair<Rational, Word>> parse_terms(const std::string& text,
                                                   const std::vector<std::string>& names);

}  // namespace walg
