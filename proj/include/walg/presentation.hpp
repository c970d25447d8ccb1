#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walg/errors.hpp"
#include "walg/ncpoly.hpp"

namespace walg {

struct Generator {
  std::string name;
  int weight = 1;
};

// Exponent lattice of a localized final generator.
enum class Lattice { Integer, Half };

// g_j * g_i = g_i * g_j + rhs, for j > i in the generator order. Pairs not
// listed commute on the nose.
struct RelationSpec {
  int j = 0;
  int i = 0;
  NCPoly rhs;
};

enum class Strategy { Leftmost, Rightmost };

struct ConsistencyReport {
  bool ok = true;
  long overlaps_checked = 0;
  long words_checked = 0;
  std::string witness;  // first failure, with both normal forms printed
};

// Ordered-generator presentation with a filtration-lowering rewrite table.
// The rewriting engine (normal_order) is the single code path every product
// in the project goes through. Optionally the last generator is localized:
// its exponents then live in Z or (1/2)Z, and moving t^k across a generator
// uses t^k y = sum_i gen_binomial(k, i) (ad t)^i(y) t^{k-i}, a finite sum
// because ad t is checked to be locally nilpotent at construction.
class Presentation {
public:
  Presentation(std::vector<Generator> gens, std::vector<RelationSpec> rels,
               std::optional<Lattice> localized_last = std::nullopt,
               long default_budget = 1000000);

  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const std::string& name(int i) const { return gens_.at(static_cast<std::size_t>(i)).name; }
  int weight(int i) const { return gens_.at(static_cast<std::size_t>(i)).weight; }
  std::vector<std::string> names() const;
  int index_of(const std::string& name) const;  // throws UnknownGenerator

  bool localized() const { return localized_.has_value(); }
  Lattice lattice() const { return *localized_; }
  int localized_gen() const { return static_cast<int>(size()) - 1; }

  // Rewrite table entry for j > i; equals [g_j, g_i] by construction.
  const NCPoly& rewrite(int j, int i) const;

  NCPoly one() const { return NCPoly::term(Monomial::one(size()), Rational(1)); }
  NCPoly scalar(const Rational& c) const { return NCPoly::term(Monomial::one(size()), c); }
  NCPoly gen(int i) const;
  NCPoly gen_pow(int i, const HalfInt& e) const;

  // Weighted (doubled) filtration degree.
  mpz_class degree2(const Monomial& m) const;
  mpz_class degree2(const NCPoly& p) const;  // 0 for the zero polynomial

  NCPoly normal_order(const Word& w, Strategy s = Strategy::Leftmost,
                      std::optional<long> budget = std::nullopt) const;
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
  NCPoly commutator(const NCPoly& a, const NCPoly& b) const;
  NCPoly power(const NCPoly& a, long k) const;  // k >= 0
  NCPoly eval_terms(const std::vector<std::pair<Rational, Word>>& ts) const;
  NCPoly parse(const std::string& text) const;  // parse_terms + normal_order
  std::string str(const NCPoly& p) const { return poly_to_string(p, names()); }

  // All normal monomials of weighted degree <= d. Localized presentations
  // have infinitely many, so this requires a polynomial presentation.
  std::vector<Monomial> monomial_basis(int degree) const;

  // Diamond-lemma style check: every descending triple g_k g_j g_i resolved
  // two ways, plus every word up to the given length reduced under both
  // scan strategies. Any disagreement is returned as a witness.
  ConsistencyReport check_consistency(int degree) const;

  // Smallest r with (ad a)^r(y) = 0; throws NotNilpotent past the bound.
  int ad_nilpotency_order(const NCPoly& a, const NCPoly& y, int bound = 64) const;

  // (ad t)^i chain of the localized generator on generator g: entry [0] is
  // (ad t)^1(g), the list stops before the first zero.
  const std::vector<NCPoly>& ad_chain(int g) const;

  long default_budget() const { return budget_; }

private:
  void validate_word(const Word& w) const;
  NCPoly normal_order_impl(Word w, const Rational& c, Strategy s, long budget) const;

  std::vector<Generator> gens_;
  std::vector<std::vector<NCPoly>> rw_;  // rw_[j][i], j > i
  std::optional<Lattice> localized_;
  std::vector<std::vector<NCPoly>> chains_;
  long budget_;
};

}  // namespace walg
