#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "schroalg/lie.hpp"
#include "schroalg/rational.hpp"

namespace schroalg {

// Scalars of the representation: mass m (nonzero), vacuum dilation
// eigenvalue c, tilt beta. cdot = c - 1/2 shows up in every norm formula.
struct Params {
  Rational m = Rational(1);
  Rational c = Rational(1);
  Rational beta = Rational(1);

  Params() = default;
  Params(Rational m_, Rational c_, Rational beta_ = Rational(1))
      : m(std::move(m_)), c(std::move(c_)), beta(std::move(beta_)) {
    if (m.is_zero()) throw std::domain_error("Params: m must be nonzero");
  }

  Rational cdot() const { return c - Rational(1, 2); }
};

struct WeightOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Normal-ordered word R1^r1 R2^r2 V1^v1 V2^v2 in the canonical bosons
// ([Vi, Rj] = delta_ij, modes commute otherwise).
struct FockWord {
  int r1 = 0, r2 = 0, v1 = 0, v2 = 0;

  // Change of weight w(j,k) = 2j + k under the word's action.
  int weight_delta() const { return 2 * (r1 - v1) + (r2 - v2); }

  friend bool operator==(const FockWord& a, const FockWord& b) {
    return a.r1 == b.r1 && a.r2 == b.r2 && a.v1 == b.v1 && a.v2 == b.v2;
  }
  friend bool operator<(const FockWord& a, const FockWord& b) {
    return std::tie(a.r1, a.r2, a.v1, a.v2) < std::tie(b.r1, b.r2, b.v1, b.v2);
  }
};

// Sparse vector on the basis |jk>, truncated at weight 2j + k <= cutoff.
class FockVector {
 public:
  explicit FockVector(int cutoff);
  static FockVector basis(int cutoff, int j, int k);

  int cutoff() const { return cutoff_; }
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int j, int k) const;
  int max_weight() const;  // -1 for the zero vector

  void add_term(int j, int k, const Rational& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  FockVector scaled(const Rational& s) const;
  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
  }

 private:
  int cutoff_;
  std::map<std::pair<int, int>, Rational> terms_;
};

// Element of the boson (Weyl) algebra, stored in normal order: all R's to
// the left of all V's. Normal forms are unique, so equality of operators is
// literal map equality.
class FockOperator {
 public:
  FockOperator() = default;

  static FockOperator scalar(const Rational& c);
  static FockOperator word(const FockWord& w, const Rational& c = Rational(1));
  static FockOperator raise1() { return word({1, 0, 0, 0}); }
  static FockOperator raise2() { return word({0, 1, 0, 0}); }
  static FockOperator lower1() { return word({0, 0, 1, 0}); }
  static FockOperator lower2() { return word({0, 0, 0, 1}); }

  const std::map<FockWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FockOperator& operator+=(const FockOperator& o);
  FockOperator& operator-=(const FockOperator& o);
  friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
  friend FockOperator operator-(FockOperator a, const FockOperator& b) { return a -= b; }
  FockOperator scaled(const Rational& s) const;

  // Product with normal-ordering rewrite via [Vi, Rj] = delta_ij; the modes
  // contract independently.
  FockOperator operator*(const FockOperator& o) const;
  FockOperator& operator*=(const FockOperator& o) { return *this = *this * o; }

  FockOperator pow(int n) const;

  friend bool operator==(const FockOperator& a, const FockOperator& b) {
    return a.terms_ == b.terms_;
  }

  // Largest weight raise over the stored words (0 for the zero operator).
  int weight_delta() const;

  void add_term(const FockWord& w, const Rational& c);

  std::string to_string() const;

 private:
  std::map<FockWord, Rational> terms_;
};

FockOperator commutator(const FockOperator& a, const FockOperator& b);

// Exact linear action. Throws WeightOverflow if any produced basis vector
// exceeds the cutoff; use apply_truncated to accept interior-only semantics.
FockVector apply(const FockOperator& op, const FockVector& v);

// Same action, but silently drops terms past the cutoff.
FockVector apply_truncated(const FockOperator& op, const FockVector& v);

// Boson realization of a generator:
//   K = R1, G = R2, M = m, D = c + 2 R1 V1 + R2 V2,
//   Px = m V2 + R2 V1,
//   Pt = c V1 + R1 V1^2 + (m/2) V2^2 + R2 V1 V2.
FockOperator realize(Generator g, const Params& p);

FockOperator realize(const LieElement& x, const Params& p);

struct CommutatorCheckFailure {
  Generator x, y;
  int j, k;
};

struct CommutatorCheckReport {
  int states_checked = 0;
  int pairs_checked = 0;
  std::vector<CommutatorCheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Verifies [realize(X), realize(Y)] |jk> == realize([X, Y]) |jk> for all 36
// ordered generator pairs on every interior state 2j + k <= W - 4.
CommutatorCheckReport commutator_check(const Params& p, int cutoff);

// (L0, R0, rho0): the sl(2) copy commuting with the HW part,
//   R0 = K - G^2/(2m), rho0 = D - (G Px / m + 1/2), L0 = Pt - Px^2/(2m).
std::tuple<FockOperator, FockOperator, FockOperator> standard_form(const Params& p);

// Normal form of Pt - Px^2/(2m); equals cdot*V1 + (R1 - R2^2/(2m)) V1^2.
FockOperator schrodinger_operator(const Params& p);

// The commuting tilted pair X1 = K + beta D + beta^2 Pt, X2 = G + beta Px.
std::pair<FockOperator, FockOperator> tilted_observables(const Params& p);

// |00>-coefficient of op applied to the vacuum: the vacuum expectation,
// since <00|jk> vanishes for (j,k) != (0,0).
Rational vacuum_expectation(const FockOperator& op, int cutoff);

}  // namespace schroalg
