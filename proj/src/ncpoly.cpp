#include "walg/ncpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace walg {

Word monomial_factors(const Monomial& m) {
  Word w;
  for (std::size_t i = 0; i < m.head.size(); ++i)
    if (m.head[i]) w.emplace_back(static_cast<int>(i), HalfInt(static_cast<long>(m.head[i])));
  if (!m.last.is_zero()) w.emplace_back(static_cast<int>(m.head.size()), m.last);
  return w;
}

namespace {

std::string exp_str(const HalfInt& e) { return e.str(); }

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (const auto& [g, e] : monomial_factors(m)) {
    if (!s.empty()) s += "*";
    s += names.at(static_cast<std::size_t>(g));
    if (e != HalfInt(1)) s += "^" + exp_str(e);
  }
  return s;
}

}  // namespace

std::string poly_to_string(const NCPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    std::string ms = monomial_str(m, names);
    if (ms.empty()) {
      out += a.str();
    } else if (a.is_one()) {
      out += ms;
    } else {
      out += a.str() + "*" + ms;
    }
    first = false;
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what +
                                " in '" + s + "'");
  }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::string read_ident(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && ident_char(c.s[c.i])) ++c.i;
  return c.s.substr(start, c.i - start);
}

mpz_class read_integer(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
  std::size_t digits = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == digits) c.fail("expected integer");
  return mpz_class(c.s.substr(start, c.i - start));
}

// "k" or "k/2" (sign allowed), directly after '^'.
HalfInt read_exponent(Cursor& c) {
  mpz_class n = read_integer(c);
  if (c.peek() == '/') {
    ++c.i;
    mpz_class d = read_integer(c);
    if (d != 2) c.fail("exponent denominator must be 2");
    return HalfInt::from_doubled(n);
  }
  return HalfInt::from_doubled(2 * n);
}

// "p" or "p/q" as a factor or coefficient.
Rational read_rational(Cursor& c) {
  mpz_class n = read_integer(c);
  if (c.peek() == '/') {
    ++c.i;
    mpz_class d = read_integer(c);
    if (d == 0) c.fail("zero denominator");
    return Rational(mpq_class(n, d));
  }
  return Rational(n);
}

int gen_index(const std::string& name, const std::vector<std::string>& names, Cursor& c) {
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return static_cast<int>(k);
  c.fail("unknown generator '" + name + "'");
}

}  // namespace

std::vector<std::pair<Rational, Word>> parse_terms(const std::string& text,
                                                   const std::vector<std::string>& names) {
  std::vector<std::pair<Rational, Word>> out;
  Cursor c{text};
  if (c.eof()) c.fail("empty expression");
  bool negate = false;
  if (c.peek() == '-') {
    negate = true;
    ++c.i;
  } else if (c.peek() == '+') {
    ++c.i;
  }
  for (;;) {
    // one term: factors separated by '*'
    Rational coeff = negate ? Rational(-1) : Rational(1);
    Word w;
    for (;;) {
      char ch = c.peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= read_rational(c);
      } else if (ident_start(ch)) {
        int g = gen_index(read_ident(c), names, c);
        HalfInt e(1);
        if (c.peek() == '^') {
          ++c.i;
          e = read_exponent(c);
        }
        w.emplace_back(g, e);
      } else {
        c.fail("expected factor");
      }
      if (c.peek() == '*') {
        ++c.i;
        continue;
      }
      break;
    }
    out.emplace_back(std::move(coeff), std::move(w));
    if (c.eof()) break;
    char ch = c.peek();
    if (ch == '+') {
      negate = false;
      ++c.i;
    } else if (ch == '-') {
      negate = true;
      ++c.i;
    } else {
      c.fail("expected '+' or '-'");
    }
    if (c.eof()) c.fail("dangling sign");
  }
  return out;
}

}  // namespace walg
