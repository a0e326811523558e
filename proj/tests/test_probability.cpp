#include <cmath>

#include "doctest.h"
#include "schroalg/appell.hpp"
#include "schroalg/probability.hpp"

using namespace schroalg;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DensityParams(Rational(-1), Rational(1), Rational(1)), std::domain_error);
  CHECK_THROWS_AS(DensityParams(Rational(1), Rational(0), Rational(1)), std::domain_error);
  CHECK_THROWS_AS(DensityParams(Rational(1), Rational(1), Rational(1, 4)), std::domain_error);
  const DensityParams ok(Rational(1), Rational(1), Rational(1, 2));  // delta case allowed
  CHECK(ok.cdot() == Rational(0));
}

TEST_CASE("density pointwise") {
  // cdot = 1: p = e^{-x1} theta(x1 - x2^2/2) / sqrt(2 pi)
  const DensityParams p(Rational(1), Rational(1), Rational(3, 2));
  CHECK(density(p, 0.4, 1.0) == 0.0);  // below the parabola
  const double inv_sqrt2pi = 1.0 / std::sqrt(2.0 * M_PI);
  CHECK(density(p, 1.0, 0.5) == doctest::Approx(std::exp(-1.0) * inv_sqrt2pi).epsilon(1e-14));
  CHECK(density(p, 3.0, -2.0) == doctest::Approx(std::exp(-3.0) * inv_sqrt2pi).epsilon(1e-14));
  CHECK(density(p, 0.125, 0.5) == doctest::Approx(std::exp(-0.125) * inv_sqrt2pi).epsilon(1e-14));

  // the delta case has no density function
  CHECK_THROWS_AS(density(DensityParams(Rational(1), Rational(1), Rational(1, 2)), 1.0, 0.0),
                  std::domain_error);

  // nonnegative on a grid, zero exactly below the parabola
  const DensityParams q(Rational(2), Rational(1, 2), Rational(3, 4));
  for (double x1 = -1.0; x1 <= 3.0; x1 += 0.25)
    for (double x2 = -2.0; x2 <= 2.0; x2 += 0.25) {
      const double v = density(q, x1, x2);
      if (x1 < x2 * x2 / 4.0) CHECK(v == 0.0);
      else CHECK(v >= 0.0);
    }
}

TEST_CASE("exact moments") {
  const DensityParams p(Rational(2), Rational(1, 2), Rational(3, 4));
  CHECK(exact_moment(p, 0, 0) == Rational(1));
  CHECK(exact_moment(p, 1, 0) == p.c * p.beta);
  CHECK(exact_moment(p, 0, 1) == Rational(0));
  CHECK(exact_moment(p, 0, 2) == p.m * p.beta);
  CHECK(exact_moment(p, 0, 3) == Rational(0));
  CHECK(exact_moment(p, 0, 4) == (p.m * p.beta).pow(2) * Rational(3));
  // gamma marginal: E[X1^j] = beta^j (c)_j
  for (int j = 0; j <= 6; ++j)
    CHECK(exact_moment(p, j, 0) == p.beta.pow(j) * rising_factorial(p.c, j));
}

TEST_CASE("mgf route equals decomposition route") {
  for (const auto& p : {DensityParams(Rational(1), Rational(1), Rational(3, 2)),
                        DensityParams(Rational(2), Rational(1, 2), Rational(3, 4)),
                        DensityParams(Rational(1, 3), Rational(3), Rational(5, 2))}) {
    const MomentTable table = mgf_moments(p, 6);
    for (const auto& [jk, value] : table.moments)
      CHECK(value == exact_moment(p, jk.first, jk.second));
  }
}

TEST_CASE("moments agree with the Gram route at beta = 1") {
  const DensityParams dp(Rational(2), Rational(1), Rational(3, 4));
  const Params p(Rational(2), Rational(3, 4), Rational(1));
  for (int j = 0; j <= 3; ++j)
    for (int k = 0; j + k <= 6; ++k)
      CHECK(exact_moment(dp, j, k) == vacuum_moment_gram(p, j, k));
}

TEST_CASE("sampler") {
  const DensityParams p(Rational(2), Rational(1, 2), Rational(3, 4));
  const auto draws = sample(p, 50000, 99);
  const double m = p.m.to_double();
  for (const auto& s : draws) CHECK(s.x1 >= s.x2 * s.x2 / (2.0 * m));

  // determinism
  const auto again = sample(p, 1000, 99);
  for (std::size_t i = 0; i < again.size(); ++i) {
    CHECK(draws[i].x1 == again[i].x1);
    CHECK(draws[i].x2 == again[i].x2);
  }

  // delta case: exactly on the parabola
  for (const auto& s : sample(DensityParams(Rational(1), Rational(1), Rational(1, 2)), 500, 5))
    CHECK(s.x1 == s.x2 * s.x2 / 2.0);

  // empirical mean of X1 within 5 standard errors
  double acc = 0.0;
  for (const auto& s : draws) acc += s.x1;
  const double mean = acc / static_cast<double>(draws.size());
  const double expect = exact_moment(p, 1, 0).to_double();
  const double var = exact_moment(p, 2, 0).to_double() - expect * expect;
  const double se = std::sqrt(var / static_cast<double>(draws.size()));
  CHECK(std::abs(mean - expect) < 5.0 * se);

  CHECK_THROWS_AS(sample(p, 0, 1), std::invalid_argument);
}

TEST_CASE("quadrature normalization and moments") {
  {
    const auto r = quadrature_check(DensityParams(Rational(1), Rational(1), Rational(3, 2)));
    CHECK(r.ok);
    CHECK(r.normalization == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(r.max_moment_error < 1e-5);
  }
  {
    // cdot = 1/4 < 1: integrable singularity along the parabola
    const auto r = quadrature_check(DensityParams(Rational(2), Rational(1, 2), Rational(3, 4)));
    CHECK(r.ok);
    CHECK(r.normalization == doctest::Approx(1.0).epsilon(1e-7));
  }
  CHECK_THROWS_AS(quadrature_check(DensityParams(Rational(1), Rational(1), Rational(1, 2))),
                  std::domain_error);
}
