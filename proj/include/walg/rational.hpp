#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace walg {

// Exact rational scalar over GMP. mpq_class keeps the canonical form
// (gcd-reduced, denominator > 0) after every operation, so this wrapper
// only has to enforce it on raw construction and parsing.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational from_string(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // n^k for integer k, k < 0 requires n != 0.
  Rational pow(long k) const;

  // Serialized as "p" or "p/q" with q > 1.
  std::string str() const;

private:
  mpq_class v_;
};

inline Rational Rational::pow(long k) const {
  if (k == 0) return Rational(1);
  mpq_class base = v_;
  if (k < 0) {
    if (is_zero()) throw std::domain_error("Rational: 0 to a negative power");
    base = 1 / base;
    k = -k;
  }
  mpq_class acc(1);
  for (long i = 0; i < k; ++i) acc *= base;
  return Rational(std::move(acc));
}

inline std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

inline Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

// Element of (1/2)Z stored as its doubled value, so all arithmetic stays in Z.
// Used for exponents of a localized generator and for hat-algebra supports.
class HalfInt {
public:
  HalfInt() : d_(0) {}
  HalfInt(long n) : d_(2 * mpz_class(n)) {}
  HalfInt(int n) : d_(2 * mpz_class(n)) {}

  static HalfInt from_doubled(mpz_class d) {
    HalfInt h;
    h.d_ = std::move(d);
    return h;
  }
  static HalfInt half() { return from_doubled(1); }

  const mpz_class& doubled() const { return d_; }
  bool is_integral() const { return mpz_even_p(d_.get_mpz_t()) != 0; }
  bool is_zero() const { return d_ == 0; }
  int sign() const { return sgn(d_); }

  // Integral value; throws on a genuine half.
  mpz_class to_integer() const {
    if (!is_integral()) throw std::domain_error("HalfInt: not an integer: " + str());
    return d_ / 2;
  }
  long to_long() const { return mpz_class(to_integer()).get_si(); }

  // floor(value) and value - floor(value) (the latter is 0 or 1/2).
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q_ui(q.get_mpz_t(), d_.get_mpz_t(), 2);
    return q;
  }
  bool has_half_part() const { return !is_integral(); }

  Rational to_rational() const { return Rational(mpz_class(d_)) / Rational(2); }

  HalfInt operator-() const { return from_doubled(-d_); }
  HalfInt& operator+=(const HalfInt& o) { d_ += o.d_; return *this; }
  HalfInt& operator-=(const HalfInt& o) { d_ -= o.d_; return *this; }
  friend HalfInt operator+(HalfInt a, const HalfInt& b) { return a += b; }
  friend HalfInt operator-(HalfInt a, const HalfInt& b) { return a -= b; }

  friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.d_ == b.d_; }
  friend bool operator!=(const HalfInt& a, const HalfInt& b) { return a.d_ != b.d_; }
  friend bool operator<(const HalfInt& a, const HalfInt& b) { return a.d_ < b.d_; }
  friend bool operator<=(const HalfInt& a, const HalfInt& b) { return a.d_ <= b.d_; }
  friend bool operator>(const HalfInt& a, const HalfInt& b) { return a.d_ > b.d_; }
  friend bool operator>=(const HalfInt& a, const HalfInt& b) { return a.d_ >= b.d_; }

  HalfInt abs() const { return from_doubled(::abs(d_)); }

  // Serialized as "k" when integral, "d/2" with d odd otherwise.
  std::string str() const {
    if (is_integral()) return mpz_class(d_ / 2).get_str();
    return d_.get_str() + "/2";
  }

  static HalfInt parse(const std::string& s);

private:
  mpz_class d_;
};

inline HalfInt HalfInt::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    mpz_class n;
    if (n.set_str(s, 10) != 0) throw std::invalid_argument("HalfInt: bad integer '" + s + "'");
    return from_doubled(2 * n);
  }
  mpz_class n, d;
  if (n.set_str(s.substr(0, slash), 10) != 0 || d.set_str(s.substr(slash + 1), 10) != 0 || d != 2)
    throw std::invalid_argument("HalfInt: expected 'k' or 'k/2', got '" + s + "'");
  return from_doubled(std::move(n));
}

// Generalized binomial coefficient: n(n-1)...(n-i+1) / i! for n in (1/2)Z.
// The localization rewrite rule and the hat-algebra product both feed on this.
inline Rational gen_binomial(const HalfInt& n, unsigned long i) {
  Rational acc(1);
  Rational top = n.to_rational();
  for (unsigned long j = 0; j < i; ++j) {
    acc *= (top - Rational(static_cast<long>(j)));
    acc /= Rational(static_cast<long>(j + 1));
  }
  return acc;
}

}  // namespace walg
