#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schroalg/rational.hpp"

namespace schroalg {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Truncated multivariate formal power series over Rational.
//
// Terms live in a sparse exponent-vector map; every stored term has total
// degree <= cap and a nonzero coefficient. All arithmetic is exact, and the
// truncation contract is strict: asking for a coefficient beyond the cap is
// an error (the series does not know it), never a silent zero.
class MultiSeries {
 public:
  MultiSeries(int num_vars, int cap);

  static MultiSeries constant(int num_vars, int cap, const Rational& value);
  static MultiSeries variable(int num_vars, int cap, int var);
  static MultiSeries monomial(int num_vars, int cap, const Exponents& exps,
                              const Rational& coeff);

  int num_vars() const { return num_vars_; }
  int cap() const { return cap_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational constant_term() const;

  // Stored coefficient, or zero within the cap. Beyond the cap the value is
  // unknown (truncated away), so it throws instead.
  Rational coeff(const Exponents& exps) const;

  MultiSeries operator-() const;
  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  MultiSeries operator*(const MultiSeries& o) const;
  MultiSeries& operator*=(const MultiSeries& o) { return *this = *this * o; }

  MultiSeries scaled(const Rational& s) const;

  // Equal iff num_vars, caps and term maps all agree.
  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.num_vars_ == b.num_vars_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiSeries& a, const MultiSeries& b) { return !(a == b); }

  // sum a^n / n! up to the cap. Requires zero constant term (the sum is then
  // finite because a has valuation >= 1).
  MultiSeries exp() const;

  // Multiplicative inverse up to the cap. Requires nonzero constant term.
  MultiSeries invert_unit() const;

  // Formal composition: each assigned variable is replaced by its series.
  // Substituted series must have zero constant term; a nonzero one would pull
  // in coefficients beyond the cap of an already-truncated series.
  MultiSeries substitute(const std::vector<std::pair<int, MultiSeries>>& assignments) const;

  // Term-wise partial derivative; exponents shift down, the cap is kept.
  // Callers that care about top-degree honesty manage it themselves.
  MultiSeries derivative(int var) const;

  MultiSeries truncated(int new_cap) const;

  // Exact evaluation of the stored polynomial part.
  Rational eval(const std::vector<Rational>& point) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void insert(const Exponents& exps, const Rational& coeff);
  void check_shape(const MultiSeries& o) const;

  int num_vars_;
  int cap_;
  std::map<Exponents, Rational> terms_;
};

// sum_n (c)_n / n! * v^n up to the cap: the expansion of (1 - v)^(-c) for a
// rational exponent c, driven by rising factorials.
MultiSeries binom_series(int num_vars, int cap, int var, const Rational& c);

// (1 - u)^(-c) for a series u with zero constant term.
MultiSeries binom_of(const MultiSeries& u, const Rational& c);

}  // namespace schroalg
