#include "doctest.h"
#include "schroalg/appell.hpp"
#include "schroalg/evolution.hpp"

using namespace schroalg;

namespace {

const Params kP(Rational(2), Rational(3, 4));

FockVector vec(int cutoff, std::initializer_list<std::tuple<int, int, Rational>> terms) {
  FockVector v(cutoff);
  for (const auto& [j, k, c] : terms) v.add_term(j, k, c);
  return v;
}

}  // namespace

TEST_CASE("Levy moment maps") {
  const LevySpec g = LevySpec::gaussian();
  CHECK(g.moment(0, 0).coeff == Rational(1));
  CHECK(g.moment(2, 0).coeff == Rational(1));
  CHECK(g.moment(2, 0).tau_power == 1);
  CHECK(g.moment(1, 1).coeff.is_zero());
  CHECK(g.moment(3, 0).coeff.is_zero());
  CHECK(g.moment(4, 0).coeff == Rational(3));   // 3!! = 3, tau^2
  CHECK(g.moment(4, 0).tau_power == 2);
  CHECK(g.moment(6, 0).coeff == Rational(15));  // 5!!
  CHECK(g.moment(2, 4).coeff == Rational(3));
  CHECK(g.moment(2, 4).tau_power == 3);

  const LevySpec d = LevySpec::drift(Rational(1, 2), Rational(3));
  CHECK(d.moment(1, 0).coeff == Rational(1, 2));
  CHECK(d.moment(1, 0).tau_power == 1);
  CHECK(d.moment(2, 1).coeff == Rational(3, 4));
  CHECK(d.moment(2, 1).tau_power == 3);
}

TEST_CASE("generating function slices") {
  const EvolutionSeries gen = evolution_generating(kP, evolution_cap_for(1, 2), 8);

  // w = 0 slice, [v2^2]: G^2 Omega / 2
  CHECK(gen.terms.at({0, 0, 0, 2}) == vec(8, {{0, 2, Rational(1, 2)}}));
  // [v2^2 w1]: (m/2) Omega
  CHECK(gen.terms.at({1, 0, 0, 2}) == vec(8, {{0, 0, kP.m * Rational(1, 2)}}));
  // [v0 w1]: cdot Omega
  CHECK(gen.terms.at({1, 0, 1, 0}) == vec(8, {{0, 0, kP.cdot()}}));
  // w = 0, [v0]: R0 Omega
  CHECK(gen.terms.at({0, 0, 1, 0}) == ab_vector(kP, 1, 0, 8));
  // [v2 w2]: m Omega
  CHECK(gen.terms.at({0, 1, 0, 1}) == vec(8, {{0, 0, kP.m}}));
}

TEST_CASE("the w = 0 slice is the coherent state exp(v0 R0 + v2 G) Omega") {
  const EvolutionSeries gen = evolution_generating(kP, evolution_cap_for(2, 2), 8);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      const auto it = gen.terms.find({0, 0, a, b});
      const FockVector expect =
          ab_vector(kP, a, b, 8).scaled(Rational(1) / (factorial(a) * factorial(b)));
      if (it == gen.terms.end()) CHECK(expect.is_zero());
      else CHECK(it->second == expect);
    }
}

TEST_CASE("averaging replaces w-monomials by moments") {
  const EvolutionSeries gen = evolution_generating(kP, evolution_cap_for(0, 2), 2);
  const AveragedSeries avg = average(gen, LevySpec::gaussian());
  // tau^1 coefficient of v2^2 is m^2/2 Omega: (m/2 w1 + (m w2)^2/2)v2^2 averages
  // to (m/2 + m^2/2) tau... w1 is odd -> drops; (m w2)^2/2 -> m^2 tau / 2.
  CHECK(avg.terms.at({1, 0, 2}) == vec(2, {{0, 0, kP.m * kP.m * Rational(1, 2)}}));
  CHECK(avg.terms.at({0, 0, 2}) == vec(2, {{0, 2, Rational(1, 2)}}));
}

TEST_CASE("heat Appell systems, frozen low orders") {
  const HeatAppell h00 = heat_appell(kP, 0, 0);
  CHECK(h00.degree() == 0);
  CHECK(h00.coefficient(0) == FockVector::basis(0, 0, 0));

  const HeatAppell h01 = heat_appell(kP, 0, 1);
  CHECK(h01.degree() == 0);
  CHECK(h01.coefficient(0) == FockVector::basis(1, 0, 1));

  const HeatAppell h02 = heat_appell(kP, 0, 2);
  CHECK(h02.degree() == 1);
  CHECK(h02.coefficient(0) == FockVector::basis(2, 0, 2));
  CHECK(h02.coefficient(1) == vec(2, {{0, 0, kP.m * kP.m}}));

  // h_03 = |03> + 3 m^2 tau |01>
  const HeatAppell h03 = heat_appell(kP, 0, 3);
  CHECK(h03.degree() == 1);
  CHECK(h03.coefficient(0) == FockVector::basis(3, 0, 3));
  CHECK(h03.coefficient(1) == vec(3, {{0, 1, kP.m * kP.m * Rational(3)}}));

  // h_ab(0) = |ab>
  const HeatAppell h21 = heat_appell(kP, 2, 1);
  CHECK(h21.coefficient(0) == ab_vector(kP, 2, 1, 5));
  CHECK(h21.at_tau(Rational(0)) == ab_vector(kP, 2, 1, 5));
}

TEST_CASE("the two construction routes agree") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; 2 * a + b <= 5; ++b) CHECK(heat_appell(kP, a, b) == heat_appell_generating(kP, a, b));
}

TEST_CASE("nilpotency bound") {
  const FockOperator h = heat_hamiltonian(kP);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; 2 * a + b <= 6; ++b) {
      const int w = 2 * a + b;
      FockVector v = ab_vector(kP, a, b, w);
      int n = 0;
      while (!v.is_zero()) {
        v = apply(h, v);
        ++n;
        REQUIRE(n < 20);
      }
      CHECK(n <= w / 2 + 1);
      CHECK(heat_appell(kP, a, b).degree() <= (w + 1) / 2);
    }
}

TEST_CASE("heat equation holds exactly") {
  for (const auto& p : {kP, Params(Rational(1, 3), Rational(5, 2))}) {
    const auto report = verify_heat_equation(p, 8);
    CHECK(report.ok);
    CHECK(report.failures.empty());
    CHECK(report.systems_checked == 9);  // 2a + b <= 4
  }
  CHECK_THROWS_AS(verify_heat_equation(kP, 3), std::invalid_argument);
}

TEST_CASE("drift average equals first-order transport") {
  const LevySpec spec = LevySpec::drift(Rational(1, 3), Rational(-2));
  const int a = 1, b = 1, cutoff = 3;
  const AveragedSeries avg =
      average(evolution_generating(kP, evolution_cap_for(a, b), cutoff), spec);
  const FockOperator h = realize(Generator::Pt, kP).scaled(spec.drift1) +
                         realize(Generator::Px, kP).scaled(spec.drift2);
  FockVector term = ab_vector(kP, a, b, cutoff);
  const Rational norm = factorial(a) * factorial(b);
  for (int n = 0; n < 6; ++n) {
    auto it = avg.terms.find({n, a, b});
    const FockVector got = it == avg.terms.end() ? FockVector(cutoff) : it->second.scaled(norm);
    CHECK(got == term);
    term = apply(h, term).scaled(Rational(1, n + 1));
  }
}
