#pragma once

#include <map>
#include <string>
#include <vector>

#include "schroalg/lie.hpp"
#include "schroalg/multiseries.hpp"
#include "schroalg/rational.hpp"

namespace schroalg {

// Univariate truncated power series in x: a MultiSeries with one variable.
using PolySeries = MultiSeries;

PolySeries poly_series(int cap);
PolySeries poly_monomial(int cap, int degree, const Rational& coeff);

// Dense univariate polynomial, lowest degree first. Coefficient ring for
// differential-operator coefficients; never truncated.
using Poly = std::vector<Rational>;

Poly poly_derivative(const Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);

// Finite sum of terms p_n(x) * (d/dx)^n acting on series in x.
class DiffOp {
 public:
  DiffOp() = default;

  static DiffOp scalar(const Rational& c);
  static DiffOp deriv(int n);
  static DiffOp mul_by(Poly p);           // multiplication operator p(x)*
  static DiffOp term(Poly p, int n);      // p(x) * d^n

  const std::map<int, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp scaled(const Rational& s) const;

  // Operator composition: d^n ∘ p(x) = sum_k C(n,k) p^(k)(x) d^(n-k).
  DiffOp operator*(const DiffOp& o) const;

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }

  void add_term(int order, const Poly& p);

 private:
  std::map<int, Poly> terms_;
};

DiffOp commutator(const DiffOp& a, const DiffOp& b);

// Exact action on a truncated series. The output keeps the input cap;
// derivatives only move coefficients downward, so top-degree honesty is the
// caller's joint-truncation obligation.
PolySeries apply_diffop(const DiffOp& op, const PolySeries& f);

// The differential realization on functions of x:
//   G = m x, Px = d/dx, Pt = (1/2m) d^2/dx^2, K = m x^2/2, D = x d/dx + 1/2.
DiffOp realize_diff(Generator g, const Rational& m);

// exp(B1/(2m) d^2/dx^2 + B2 d/dx) applied to f, expanded to total B-order M:
// sum over p + q <= M of B1^p B2^q / (p! q! (2m)^p) d^(2p+q) f.
// Exact for output x-degree <= f.cap() - 2M.
PolySeries exp_diffop(const Rational& b1, const Rational& b2, const Rational& m,
                      int order, const PolySeries& f);

struct GroupLawReport {
  bool ok = false;
  int coefficients_compared = 0;
  std::vector<std::string> mismatches;
};

// Two-route check of the partial group law
//   exp(B1/(2m) d^2 + B2 d) exp(V1 m x^2/2 + V2 m x)
//     = exp(V1' m x^2/2 + V3' m x) (1-B1V1)^{-1/2} exp((m/2)(...)/(1-B1V1))
// as a formal-series identity in (x, B1, B2, V1, V2), compared coefficient by
// coefficient for x-degree <= N and total (B,V)-order <= M.
GroupLawReport verify_partial_group_law(const Rational& m, int degree_n, int order_m);

struct SymmetryReport {
  bool ok = false;
  std::vector<std::string> checks;      // human-readable pass lines
  std::vector<std::string> failures;
};

// Concrete symmetry-algebra instances for V = d/dx on polynomials:
// commutation [X, V] = Lambda(X) V, preservation of the degree filtration,
// and strictness of derived-algebra commutators.
SymmetryReport symmetry_instance_checks(int degree_n);

}  // namespace schroalg
