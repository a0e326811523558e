#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace schroalg {

// Exact arbitrary-precision fraction, always in lowest terms with a
// positive denominator. The coefficient field for everything algebraic
// in this library; no operation ever rounds.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Parses "p", "p/q" or "-p/q". Rejects zero denominators and junk.
  static Rational from_string(std::string_view s);

  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  // Integer power; negative exponents invert (error on zero base).
  Rational pow(long e) const;

  double to_double() const { return q_.get_d(); }

  // "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

 private:
  mpq_class q_;
};

Rational abs(const Rational& a);

// n! as an exact Rational (n >= 0).
Rational factorial(long n);

// Binomial coefficient C(n, k); zero for k < 0 or k > n.
Rational binomial(long n, long k);

// Rising factorial (c)_n = c (c+1) ... (c+n-1), with (c)_0 = 1.
Rational rising_factorial(const Rational& c, long n);

// Falling factorial n (n-1) ... (n-k+1); zero when k > n.
Rational falling_factorial(long n, long k);

// Odd double factorial n!! for odd n >= -1, with (-1)!! = 1.
Rational double_factorial(long n);

}  // namespace schroalg
