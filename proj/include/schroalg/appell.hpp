#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schroalg/fock.hpp"
#include "schroalg/multiseries.hpp"

namespace schroalg {

// The coherent-state inner-product generating function
//   Upsilon = (1 - B1 V1)^{-c} exp((m/2)(B1 V2^2 + 2 B2 V2 + B2^2 V1)/(1 - B1 V1))
// expanded exactly in the variables (B1, B2, V1, V2).
struct LeibnizSeries {
  Params params;
  MultiSeries series;  // variable order: B1, B2, V1, V2
};

LeibnizSeries leibniz_series(const Params& p, int cap);

enum class BasisFlavor { jk, ab };

// Inner products between basis vectors up to weight cutoff; only nonzero
// entries are stored.
class GramMatrix {
 public:
  GramMatrix(BasisFlavor flavor, int cutoff) : flavor_(flavor), cutoff_(cutoff) {}

  BasisFlavor flavor() const { return flavor_; }
  int cutoff() const { return cutoff_; }

  Rational at(int j, int k, int j2, int k2) const;
  void set(int j, int k, int j2, int k2, const Rational& value);

  using Key = std::pair<std::pair<int, int>, std::pair<int, int>>;
  const std::map<Key, Rational>& entries() const { return entries_; }

  bool is_symmetric() const;

  // All (j, k) with 2j + k <= cutoff, weight-major order.
  static std::vector<std::pair<int, int>> indices(int cutoff);

 private:
  BasisFlavor flavor_;
  int cutoff_;
  std::map<Key, Rational> entries_;
};

// <jk|j'k'> = j! k! j'! k'! [B1^j B2^k V1^j' V2^k'] Upsilon, exactly, for all
// pairs with 2j + k <= W and 2j' + k' <= W.
GramMatrix gram_jk(const Params& p, int cutoff);

// R0^a G^b applied to the vacuum, in |jk> coordinates.
FockVector ab_vector(const Params& p, int a, int b, int cutoff);

struct GramAbResult {
  GramMatrix gram;
  bool degenerate = false;  // cdot <= 0 collapses some squared norms to zero
  std::vector<std::pair<int, int>> zero_norms;
};

// Gram matrix of the basis |ab> = R0^a G^b Omega, computed by change of
// basis from gram_jk. Diagonal with entries (cdot)_a a! b! m^b.
GramAbResult gram_ab(const Params& p, int cutoff);

// Bilinear pairing sum_{u,v} u_jk v_j'k' <jk|j'k'>.
Rational gram_pairing(const GramMatrix& gram, const FockVector& u, const FockVector& v);

struct AdjointnessReport {
  bool ok = false;
  int pairs_checked = 0;
  std::vector<std::string> failures;
};

// <Pt u, v> = <u, K v>, <Px u, v> = <u, G v> on the cutoff block, and
// symmetry of the beta = 1 observables X1 = Pt + D + K, X2 = G + Px.
AdjointnessReport adjointness_check(const Params& p, int cutoff);

struct AppellPolynomial {
  int j = 0, k = 0;
  MultiSeries poly;  // variables (x1, x2)
};

// The canonical Appell generating function
//   exp(x1 v1/(1+b v1)) exp(x2 v2/(1+b v1)) (1+b v1)^{-c} exp(-(mb/2) v2^2/(1+b v1))
// as a series in (x1, x2, v1, v2).
MultiSeries appell_generating(const Params& p, int cap);

// psi_jk = [v1^j v2^k] of the generating function, for all j + k <= order.
std::vector<AppellPolynomial> appell_polynomials(const Params& p, int order);

// Lowering operators on polynomials in (x1, x2): the resolvent expands as a
// geometric series in beta * d/dx1, which terminates on polynomials.
//   lower1 = (1 - b d1)^{-1} d1,   lower2 = (1 - b d1)^{-1} d2.
MultiSeries lower1(const MultiSeries& poly, const Rational& beta);
MultiSeries lower2(const MultiSeries& poly, const Rational& beta);

struct LoweringReport {
  bool ok = false;
  int relations_checked = 0;
  std::vector<std::string> failures;
  // The d/dx2-resolvent variant of lower2 breaks the lowering relation on
  // psi_02 whenever beta != 0; recorded as evidence for the adopted form.
  bool alt_resolvent_fails = false;
};

// V1 psi_jk = psi_{j-1,k}, V2 psi_jk = psi_{j,k-1} and the Appell space
// memberships, exact for all j + k <= order.
LoweringReport lowering_check(const Params& p, int order);

struct DecoupledReport {
  bool ok = false;
  int laguerre_degree = 0;
  int hermite_degree = 0;
  std::string laguerre_scaling;
  std::string hermite_scaling;
  std::vector<std::string> failures;
};

// Expands exp(x0 v0/(1+b v0)) (1+b v0)^{-cdot} exp(x2 v2 - b m v2^2/2) and
// matches the v0-family against a Laguerre three-term recurrence and the
// v2-family against a Hermite recurrence, up to explicit rescalings.
DecoupledReport decoupled_generating(const Params& p, int order);

// <Omega, X1^j X2^k Omega> evaluated through the Gram form (pairing the
// vacuum row of gram_jk against the operator image of the vacuum).
Rational vacuum_moment_gram(const Params& p, int j, int k);

}  // namespace schroalg
