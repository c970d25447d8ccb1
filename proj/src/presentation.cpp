#include "walg/presentation.hpp"

#include <algorithm>
#include <set>

namespace walg {

namespace {

std::string word_str(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& [g, e] : w) {
    if (!s.empty()) s += "*";
    s += names.at(static_cast<std::size_t>(g));
    if (e != HalfInt(1)) s += "^" + e.str();
  }
  return s;
}

}  // namespace

Presentation::Presentation(std::vector<Generator> gens, std::vector<RelationSpec> rels,
                           std::optional<Lattice> localized_last, long default_budget)
    : gens_(std::move(gens)), localized_(localized_last), budget_(default_budget) {
  const std::size_t n = gens_.size();
  if (n == 0) throw WalgError("presentation needs at least one generator");
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty()) throw WalgError("empty generator name");
    if (!seen.insert(g.name).second) throw WalgError("duplicate generator name: " + g.name);
    if (g.weight <= 0) throw WalgError("nonpositive weight for generator " + g.name);
  }

  rw_.assign(n, {});
  for (std::size_t j = 1; j < n; ++j) rw_[j].assign(j, NCPoly());
  for (auto& r : rels) {
    if (r.i < 0 || r.j <= r.i || static_cast<std::size_t>(r.j) >= n)
      throw WalgError("relation needs generator indices j > i within range");
    for (const auto& [m, c] : r.rhs.terms()) {
      (void)c;
      if (m.width() != n) throw WalgError("relation term has wrong generator count");
      if (m.last.sign() < 0 || !m.last.is_integral())
        throw WalgError("rewrite table entries must be polynomial");
    }
    if (!rw_[r.j][r.i].is_zero())
      throw WalgError("duplicate relation for pair (" + name(r.j) + ", " + name(r.i) + ")");
    rw_[r.j][r.i] = std::move(r.rhs);
  }

  // Rewriting terminates because every swap strictly lowers the filtration:
  // deg(R_ji) < weight(i) + weight(j) is enforced here, not assumed.
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const NCPoly& r = rw_[j][i];
      if (r.is_zero()) continue;
      mpz_class lim = 2 * (weight(static_cast<int>(i)) + weight(static_cast<int>(j)));
      if (degree2(r) >= lim)
        throw NonLoweringRelation("relation " + name(static_cast<int>(j)) + "*" +
                                  name(static_cast<int>(i)) + " has right side of degree >= " +
                                  "sum of weights: " + str(r));
    }

  if (localized_) {
    // Local nilpotency of ad t on every generator, computed up front. The
    // chain entries only ever contain nonnegative integer powers of t, so
    // this plain-swap recursion never needs the chains it is building.
    chains_.assign(n, {});
    const int t = static_cast<int>(n) - 1;
    for (int g = 0; g < t; ++g) {
      NCPoly cur = rw_[t][g];
      int guard = 0;
      while (!cur.is_zero()) {
        chains_[static_cast<std::size_t>(g)].push_back(cur);
        if (++guard > 64)
          throw NotNilpotent("ad " + name(t) + " does not vanish on " + name(g) +
                             " within 64 steps");
        NCPoly next;
        for (const auto& [m, c] : cur.terms()) {
          Word left{{t, HalfInt(1)}};
          Word f = monomial_factors(m);
          left.insert(left.end(), f.begin(), f.end());
          Word right = f;
          right.emplace_back(t, HalfInt(1));
          next += normal_order_impl(std::move(left), c, Strategy::Leftmost, budget_);
          next -= normal_order_impl(std::move(right), c, Strategy::Leftmost, budget_);
        }
        cur = std::move(next);
      }
    }
  }
}

std::vector<std::string> Presentation::names() const {
  std::vector<std::string> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.name);
  return out;
}

int Presentation::index_of(const std::string& nm) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == nm) return static_cast<int>(i);
  throw UnknownGenerator("no generator named '" + nm + "'");
}

const NCPoly& Presentation::rewrite(int j, int i) const {
  if (i < 0 || j <= i || static_cast<std::size_t>(j) >= size())
    throw WalgError("rewrite table lookup needs j > i");
  return rw_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
}

NCPoly Presentation::gen(int i) const { return gen_pow(i, HalfInt(1)); }

NCPoly Presentation::gen_pow(int i, const HalfInt& e) const {
  if (i < 0 || static_cast<std::size_t>(i) >= size()) throw UnknownGenerator("generator index out of range");
  return normal_order({{i, e}});
}

mpz_class Presentation::degree2(const Monomial& m) const {
  mpz_class d = 0;
  for (std::size_t i = 0; i < m.head.size(); ++i)
    d += mpz_class(2 * static_cast<unsigned long>(m.head[i])) * weight(static_cast<int>(i));
  d += ::abs(m.last.doubled()) * weight(static_cast<int>(size()) - 1);
  return d;
}

mpz_class Presentation::degree2(const NCPoly& p) const {
  mpz_class d = 0;
  for (const auto& [m, c] : p.terms()) {
    (void)c;
    d = std::max(d, degree2(m));
  }
  return d;
}

void Presentation::validate_word(const Word& w) const {
  const int last = static_cast<int>(size()) - 1;
  for (const auto& [g, e] : w) {
    if (g < 0 || g > last) throw UnknownGenerator("word mentions generator index out of range");
    if (g < last || !localized_) {
      if (!e.is_integral() || e.sign() < 0)
        throw BadExponent("generator " + name(g) + " takes nonnegative integer exponents, got " +
                          e.str());
    } else if (*localized_ == Lattice::Integer && !e.is_integral()) {
      throw BadExponent("localized generator " + name(g) + " has integer lattice, got " + e.str());
    }
  }
}

NCPoly Presentation::normal_order(const Word& w, Strategy s, std::optional<long> budget) const {
  validate_word(w);
  return normal_order_impl(w, Rational(1), s, budget.value_or(budget_));
}

NCPoly Presentation::normal_order_impl(Word w0, const Rational& c0, Strategy s,
                                       long budget) const {
  struct Item {
    Rational c;
    Word w;
  };
  const int tgen = static_cast<int>(size()) - 1;
  const bool loc = localized_.has_value();

  NCPoly out;
  std::vector<Item> todo;
  todo.push_back({c0, std::move(w0)});
  long steps = 0;

  while (!todo.empty()) {
    Item it = std::move(todo.back());
    todo.pop_back();
    Word& w = it.w;

    // Compact: drop zero exponents, merge adjacent equal generators. This is
    // where t^k t^{-k} collapses to 1.
    {
      Word cw;
      cw.reserve(w.size());
      for (auto& f : w) {
        if (f.second.is_zero()) continue;
        if (!cw.empty() && cw.back().first == f.first) {
          cw.back().second += f.second;
          if (cw.back().second.is_zero()) cw.pop_back();
        } else {
          cw.push_back(std::move(f));
        }
      }
      w = std::move(cw);
    }

    int pos = -1;
    if (s == Strategy::Leftmost) {
      for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p)
        if (w[p].first > w[p + 1].first) {
          pos = p;
          break;
        }
    } else {
      for (int p = static_cast<int>(w.size()) - 2; p >= 0; --p)
        if (w[p].first > w[p + 1].first) {
          pos = p;
          break;
        }
    }

    if (pos < 0) {
      Monomial m = Monomial::one(size());
      for (const auto& [g, e] : w) {
        if (g == tgen && loc) {
          m.last = e;
        } else if (g == tgen) {
          if (!e.is_integral() || e.sign() < 0)
            throw BadExponent("non-localized exponent " + e.str() + " on " + name(g));
          m.last = e;
        } else {
          mpz_class v = e.to_integer();
          if (v < 0 || !v.fits_ulong_p() || v.get_ui() > 0xffffffffUL)
            throw BadExponent("exponent out of range on " + name(g));
          m.head[static_cast<std::size_t>(g)] = static_cast<std::uint32_t>(v.get_ui());
        }
      }
      out.add(m, it.c);
      continue;
    }

    if (++steps > budget)
      throw NonTerminating("rewrite budget of " + std::to_string(budget) +
                           " steps exceeded at word " + word_str(w, names()));

    const auto [x, a] = w[static_cast<std::size_t>(pos)];
    const auto [y, b] = w[static_cast<std::size_t>(pos) + 1];
    Word prefix(w.begin(), w.begin() + pos);
    Word suffix(w.begin() + pos + 2, w.end());
    const HalfInt bm1 = b - HalfInt(1);

    const bool plain_power = a.is_integral() && a.sign() > 0;
    if (!(loc && x == tgen) || plain_power) {
      // One swap: x^a y^b -> x^{a-1} (y x + R_xy) y^{b-1}.
      Word base = prefix;
      HalfInt am1 = a - HalfInt(1);
      if (!am1.is_zero()) base.emplace_back(x, am1);

      Word w1 = base;
      w1.emplace_back(y, HalfInt(1));
      w1.emplace_back(x, HalfInt(1));
      if (!bm1.is_zero()) w1.emplace_back(y, bm1);
      w1.insert(w1.end(), suffix.begin(), suffix.end());
      todo.push_back({it.c, std::move(w1)});

      for (const auto& [m, cm] : rw_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)].terms()) {
        Word w2 = base;
        Word f = monomial_factors(m);
        w2.insert(w2.end(), f.begin(), f.end());
        if (!bm1.is_zero()) w2.emplace_back(y, bm1);
        w2.insert(w2.end(), suffix.begin(), suffix.end());
        todo.push_back({it.c * cm, std::move(w2)});
      }
    } else {
      // Localized move past one y: t^a y = sum_i binom(a, i) (ad t)^i(y) t^{a-i}.
      // The sum is finite because the ad chain of y terminates.
      const auto& ch = chains_[static_cast<std::size_t>(y)];
      for (std::size_t i = 0; i <= ch.size(); ++i) {
        Rational bc = gen_binomial(a, i);
        if (bc.is_zero()) continue;
        HalfInt rem = a - HalfInt(static_cast<long>(i));
        auto emit = [&](const Word& mono_factors, const Rational& cm) {
          Word w2 = prefix;
          w2.insert(w2.end(), mono_factors.begin(), mono_factors.end());
          if (!rem.is_zero()) w2.emplace_back(x, rem);
          if (!bm1.is_zero()) w2.emplace_back(y, bm1);
          w2.insert(w2.end(), suffix.begin(), suffix.end());
          todo.push_back({it.c * bc * cm, std::move(w2)});
        };
        if (i == 0) {
          emit({{y, HalfInt(1)}}, Rational(1));
        } else {
          for (const auto& [m, cm] : ch[i - 1].terms()) emit(monomial_factors(m), cm);
        }
      }
    }
  }
  return out;
}

NCPoly Presentation::multiply(const NCPoly& a, const NCPoly& b) const {
  NCPoly out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Word w = monomial_factors(ma);
      Word f = monomial_factors(mb);
      w.insert(w.end(), f.begin(), f.end());
      out += normal_order_impl(std::move(w), ca * cb, Strategy::Leftmost, budget_);
    }
  return out;
}

NCPoly Presentation::commutator(const NCPoly& a, const NCPoly& b) const {
  return multiply(a, b) - multiply(b, a);
}

NCPoly Presentation::power(const NCPoly& a, long k) const {
  if (k < 0) throw WalgError("power: negative exponent on a general element");
  NCPoly out = one();
  for (long i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

NCPoly Presentation::eval_terms(const std::vector<std::pair<Rational, Word>>& ts) const {
  NCPoly out;
  for (const auto& [c, w] : ts) {
    validate_word(w);
    out += normal_order_impl(w, c, Strategy::Leftmost, budget_);
  }
  return out;
}

NCPoly Presentation::parse(const std::string& text) const {
  return eval_terms(parse_terms(text, names()));
}

std::vector<Monomial> Presentation::monomial_basis(int degree) const {
  if (localized_)
    throw WalgError("monomial_basis: localized presentations have infinite filtered pieces");
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(size());
  const mpz_class cap = 2 * mpz_class(degree);

  // Depth-first over exponent vectors with weighted degree <= degree.
  auto rec = [&](auto&& self, std::size_t g, mpz_class used) -> void {
    if (g == size()) {
      out.push_back(cur);
      return;
    }
    const mpz_class step = 2 * mpz_class(weight(static_cast<int>(g)));
    for (mpz_class v = 0; used + v * step <= cap; ++v) {
      if (g + 1 == size()) {
        cur.last = HalfInt::from_doubled(2 * v);
      } else {
        cur.head[g] = static_cast<std::uint32_t>(v.get_ui());
      }
      self(self, g + 1, used + v * step);
    }
    if (g + 1 == size())
      cur.last = HalfInt(0);
    else
      cur.head[g] = 0;
  };
  rec(rec, 0, mpz_class(0));

  std::sort(out.begin(), out.end(), GlexFirst{});
  return out;
}

ConsistencyReport Presentation::check_consistency(int degree) const {
  ConsistencyReport rep;
  const int n = static_cast<int>(size());
  const auto nm = names();

  // Every descending triple, resolved through either of its two ambiguous
  // first steps and then normalized fully.
  for (int k = 2; k < n && rep.ok; ++k)
    for (int j = 1; j < k && rep.ok; ++j)
      for (int i = 0; i < j && rep.ok; ++i) {
        NCPoly a = normal_order({{j, HalfInt(1)}, {k, HalfInt(1)}, {i, HalfInt(1)}});
        for (const auto& [m, c] : rw_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].terms()) {
          Word w = monomial_factors(m);
          w.emplace_back(i, HalfInt(1));
          a += normal_order_impl(std::move(w), c, Strategy::Leftmost, budget_);
        }
        NCPoly b = normal_order({{k, HalfInt(1)}, {i, HalfInt(1)}, {j, HalfInt(1)}});
        for (const auto& [m, c] : rw_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].terms()) {
          Word w{{k, HalfInt(1)}};
          Word f = monomial_factors(m);
          w.insert(w.end(), f.begin(), f.end());
          b += normal_order_impl(std::move(w), c, Strategy::Leftmost, budget_);
        }
        ++rep.overlaps_checked;
        if (a != b) {
          rep.ok = false;
          rep.witness = "overlap (" + nm[static_cast<std::size_t>(k)] + ", " + nm[static_cast<std::size_t>(j)] +
                        ", " + nm[static_cast<std::size_t>(i)] + ") resolves to " + str(a) + " vs " +
                        str(b) + "; difference " + str(a - b);
        }
      }
  if (!rep.ok) return rep;

  // All words up to the length bound, alternate scan strategies. Letters are
  // the generators, plus inverse (and half) powers of a localized tail.
  std::vector<std::pair<int, HalfInt>> letters;
  for (int g = 0; g < n; ++g) letters.emplace_back(g, HalfInt(1));
  if (localized_) {
    letters.emplace_back(n - 1, HalfInt(-1));
    if (*localized_ == Lattice::Half) {
      letters.emplace_back(n - 1, HalfInt::half());
      letters.emplace_back(n - 1, -HalfInt::half());
    }
  }
  Word w;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (!rep.ok) return;
    if (!w.empty()) {
      NCPoly l = normal_order_impl(w, Rational(1), Strategy::Leftmost, budget_);
      NCPoly r = normal_order_impl(w, Rational(1), Strategy::Rightmost, budget_);
      ++rep.words_checked;
      if (l != r) {
        rep.ok = false;
        rep.witness = "word " + word_str(w, nm) + " reduces to " + str(l) + " (leftmost) vs " +
                      str(r) + " (rightmost)";
        return;
      }
    }
    if (remaining == 0) return;
    for (const auto& f : letters) {
      w.push_back(f);
      self(self, remaining - 1);
      w.pop_back();
      if (!rep.ok) return;
    }
  };
  rec(rec, degree);
  return rep;
}

int Presentation::ad_nilpotency_order(const NCPoly& a, const NCPoly& y, int bound) const {
  NCPoly cur = y;
  int r = 0;
  while (!cur.is_zero()) {
    if (r >= bound)
      throw NotNilpotent("ad did not vanish within " + std::to_string(bound) +
                         " steps; last value " + str(cur));
    cur = commutator(a, cur);
    ++r;
  }
  return r;
}

const std::vector<NCPoly>& Presentation::ad_chain(int g) const {
  if (!localized_) throw WalgError("ad_chain: presentation is not localized");
  if (g < 0 || static_cast<std::size_t>(g) >= size())
    throw UnknownGenerator("ad_chain: bad generator index");
  return chains_[static_cast<std::size_t>(g)];
}

}  // namespace walg
