#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "schroalg/fock.hpp"

namespace schroalg {

// Moment map of the driving two-component process at time tau. Moments are
// exact monomials in tau: E[w1^p w2^q] = coeff * tau^power.
struct LevySpec {
  enum class Kind { Gaussian, Drift };

  Kind kind = Kind::Gaussian;
  Rational drift1 = Rational(0), drift2 = Rational(0);

  static LevySpec gaussian() { return {}; }
  static LevySpec drift(Rational c1, Rational c2) {
    return {Kind::Drift, std::move(c1), std::move(c2)};
  }

  struct TauMonomial {
    Rational coeff;
    int tau_power = 0;
  };

  // Independent centered Gaussians of variance tau:
  //   E[w1^p w2^q] = (p-1)!! (q-1)!! tau^{(p+q)/2} for p, q even, else 0.
  // Deterministic drift w_i = c_i tau: E[w1^p w2^q] = c1^p c2^q tau^{p+q}.
  TauMonomial moment(int p, int q) const;
};

// Series in (w1, w2, v0, v2) with FockVector coefficients: the expansion of
//   exp(v0 R0/(1 - v0 w1)) (1 - v0 w1)^{-cdot} exp(v2 (G + m w2) + m w1 v2^2/2)
// applied to the vacuum.
struct EvolutionSeries {
  int cap = 0;
  int fock_cutoff = 0;
  std::map<std::array<int, 4>, FockVector> terms;  // key: (w1, w2, v0, v2) exponents
};

// Exact for every coefficient of v0^a v2^b with 3a + 4b <= cap and
// 2a + b <= fock_cutoff.
EvolutionSeries evolution_generating(const Params& p, int cap, int fock_cutoff);

int evolution_cap_for(int a, int b);

// Monomials in w replaced by their expectations; keys become
// (tau power, v0, v2).
struct AveragedSeries {
  int fock_cutoff = 0;
  std::map<std::array<int, 3>, FockVector> terms;
};

AveragedSeries average(const EvolutionSeries& series, const LevySpec& spec);

// Polynomial in tau with FockVector coefficients; h_ab(0) = |ab>.
class HeatAppell {
 public:
  HeatAppell(int a, int b, std::vector<FockVector> tau_coeffs);

  int a() const { return a_; }
  int b() const { return b_; }
  int degree() const { return static_cast<int>(tau_coeffs_.size()) - 1; }
  const FockVector& coefficient(int n) const { return tau_coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<FockVector>& coefficients() const { return tau_coeffs_; }

  FockVector at_tau(const Rational& tau) const;

  friend bool operator==(const HeatAppell& x, const HeatAppell& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.tau_coeffs_ == y.tau_coeffs_;
  }

 private:
  int a_, b_;
  std::vector<FockVector> tau_coeffs_;
};

// H = (Pt^2 + Px^2)/2, the generator of the Gaussian evolution.
FockOperator heat_hamiltonian(const Params& p);

// e^{tau H}|ab>, computed as the terminating operator exponential (H lowers
// weight by at least 2, so the sum is finite).
HeatAppell heat_appell(const Params& p, int a, int b);

// Same polynomial through the generating function: Gaussian-average the
// evolution series and read off a! b! [v0^a v2^b].
HeatAppell heat_appell_generating(const Params& p, int a, int b);

struct HeatEquationReport {
  bool ok = false;
  int systems_checked = 0;
  std::vector<std::string> failures;
};

// d/dtau h_ab = H h_ab as exact tau-polynomial identities, plus agreement of
// the two construction routes, for all 2a + b <= cutoff - 4.
HeatEquationReport verify_heat_equation(const Params& p, int cutoff);

}  // namespace schroalg
