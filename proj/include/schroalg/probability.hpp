#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schroalg/rational.hpp"

namespace schroalg {

// Parameters of the joint law of (X1, X2): X2 ~ N(0, m*beta) and, given X2,
// X1 - X2^2/(2m) ~ Gamma(shape c - 1/2, scale beta), independent of X2.
struct DensityParams {
  Rational m;
  Rational beta;
  Rational c;

  DensityParams(Rational m_, Rational beta_, Rational c_);

  Rational cdot() const { return c - Rational(1, 2); }
};

// Joint density
//   p(x1, x2) = e^{-x1/beta} (x1 - x2^2/(2m))^{cdot-1} beta^{-cdot}
//               theta(x1 - x2^2/(2m)) / (Gamma(cdot) sqrt(2 pi m beta)).
// Requires c > 1/2; at c = 1/2 the law degenerates onto the parabola.
double density(const DensityParams& p, double x1, double x2);

// Same density evaluated at x1 = u + x2^2/(2m) with the parabola offset u
// passed directly. Near the support boundary the subtraction inside
// density() cancels catastrophically; quadrature in (u, x2) coordinates
// needs this form.
double density_at_offset(const DensityParams& p, double u, double x2);

// E[X1^j X2^k], exact. Zero for odd k; otherwise
//   sum_i C(j,i) beta^{j-i} (cdot)_{j-i} (m beta)^{i+k/2} (2i+k-1)!! / (2m)^i.
Rational exact_moment(const DensityParams& p, int j, int k);

struct MomentTable {
  int order = 0;
  std::map<std::pair<int, int>, Rational> moments;  // (j, k) -> E[X1^j X2^k]

  Rational at(int j, int k) const;
};

// Moments through the moment generating function
//   (1 - beta z1)^{-c} exp((m/2) beta z2^2 / (1 - beta z1)),
// read off as j! k! [z1^j z2^k]; all (j, k) with j + k <= order.
MomentTable mgf_moments(const DensityParams& p, int order);

struct Sample {
  double x1, x2;
};

// Exact-factorization sampler: X2 normal, U gamma (identically 0 when
// c = 1/2), X1 = U + X2^2/(2m). Fully deterministic for a given seed; the
// distributions are hand-rolled on top of mt19937_64 so the stream does not
// depend on the standard library.
std::vector<Sample> sample(const DensityParams& p, std::size_t n, std::uint64_t seed);

struct QuadratureReport {
  bool ok = false;
  double normalization = 0.0;
  double normalization_error = 0.0;
  // (j, k, absolute error vs exact_moment)
  std::vector<std::string> moment_lines;
  double max_moment_error = 0.0;
};

// Numerical integration of the density in the factorizing coordinates
// (u, x2) = (x1 - x2^2/(2m), x2): normalization within 1e-6 and the low
// moments (j + k <= 2) within 1e-5 of exact_moment.
QuadratureReport quadrature_check(const DensityParams& p, int panels = 16, int nodes = 32);

}  // namespace schroalg
