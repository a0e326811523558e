#include <random>

#include "doctest.h"
#include "schroalg/multiseries.hpp"

using namespace schroalg;

namespace {

MultiSeries c1(int cap, long v) { return MultiSeries::constant(1, cap, Rational(v)); }

// Small random series for property tests; fixed-seed engine.
MultiSeries random_series(std::mt19937_64& eng, int num_vars, int cap) {
  MultiSeries s(num_vars, cap);
  std::uniform_int_distribution<int> deg(0, cap), coeff(-4, 4), den(1, 3);
  for (int t = 0; t < 6; ++t) {
    Exponents e(static_cast<std::size_t>(num_vars), 0);
    int budget = deg(eng);
    for (int i = 0; i < num_vars && budget > 0; ++i) {
      std::uniform_int_distribution<int> part(0, budget);
      e[static_cast<std::size_t>(i)] = part(eng);
      budget -= e[static_cast<std::size_t>(i)];
    }
    s += MultiSeries::monomial(num_vars, cap, e, Rational(coeff(eng), den(eng)));
  }
  return s;
}

}  // namespace

TEST_CASE("addition") {
  const MultiSeries x = MultiSeries::variable(1, 3, 0);
  CHECK((c1(3, 1) + x) + (c1(3, -1) + x) == x.scaled(Rational(2)));
  const MultiSeries s = c1(3, 1) + x.scaled(Rational(5));
  CHECK(s + MultiSeries(1, 3) == s);
  const MultiSeries x2 = MultiSeries::variable(2, 3, 0), y2 = MultiSeries::variable(2, 3, 1);
  CHECK((x2 + y2) + (x2 - y2) == x2.scaled(Rational(2)));
  CHECK_THROWS_AS(x + x2, std::invalid_argument);
  CHECK_THROWS_AS(x + MultiSeries::variable(1, 4, 0), std::invalid_argument);
}

TEST_CASE("multiplication truncates at the cap") {
  const MultiSeries x = MultiSeries::variable(1, 3, 0);
  CHECK((c1(3, 1) + x) * (c1(3, 1) - x) == c1(3, 1) - x * x);
  const MultiSeries s = c1(3, 1) + x + x * x;
  CHECK(s * c1(3, 1) == s);
  CHECK((x * x) * (x * x) == MultiSeries(1, 3));  // degree 4 beyond cap 3
}

TEST_CASE("exponential") {
  const MultiSeries x = MultiSeries::variable(1, 3, 0);
  MultiSeries expect = c1(3, 1) + x;
  expect += MultiSeries::monomial(1, 3, {2}, Rational(1, 2));
  expect += MultiSeries::monomial(1, 3, {3}, Rational(1, 6));
  CHECK(x.exp() == expect);
  CHECK(MultiSeries(1, 3).exp() == c1(3, 1));
  CHECK_THROWS_AS(c1(3, 1).exp(), std::domain_error);

  // exp(x+y) = exp(x) exp(y): the two routes agree term by term.
  const MultiSeries x2 = MultiSeries::variable(2, 4, 0), y2 = MultiSeries::variable(2, 4, 1);
  CHECK((x2 + y2).exp() == x2.exp() * y2.exp());
}

TEST_CASE("binomial series") {
  const int cap = 6;
  MultiSeries geo(1, cap);
  for (int n = 0; n <= cap; ++n) geo += MultiSeries::monomial(1, cap, {n}, Rational(1));
  CHECK(binom_series(1, cap, 0, Rational(1)) == geo);
  CHECK(binom_series(1, cap, 0, Rational(0)) == c1(cap, 1));
  // rising-factorial oracle: [v^2] (1-v)^(-1/2) = (1/2)(3/2)/2! = 3/8
  CHECK(rising_factorial(Rational(1, 2), 2) / factorial(2) == Rational(3, 8));
  CHECK(binom_series(1, cap, 0, Rational(1, 2)).coeff({2}) == Rational(3, 8));
  // and generally [v^n] (1-v)^(-c) = (c)_n / n!
  const Rational c(5, 3);
  const MultiSeries s = binom_series(1, cap, 0, c);
  for (int n = 0; n <= cap; ++n)
    CHECK(s.coeff({n}) == rising_factorial(c, n) / factorial(n));
}

TEST_CASE("inversion") {
  const int cap = 6;
  const MultiSeries x = MultiSeries::variable(1, cap, 0);
  CHECK((c1(cap, 1) - x).invert_unit() == binom_series(1, cap, 0, Rational(1)));
  CHECK(c1(cap, 2).invert_unit() == MultiSeries::constant(1, cap, Rational(1, 2)));
  CHECK_THROWS_AS(x.invert_unit(), std::domain_error);

  const MultiSeries x2 = MultiSeries::variable(2, 5, 0), y2 = MultiSeries::variable(2, 5, 1);
  const MultiSeries u = MultiSeries::constant(2, 5, Rational(1)) - x2 - y2;
  CHECK(u.invert_unit() * u == MultiSeries::constant(2, 5, Rational(1)));
  CHECK(u * u.invert_unit() == MultiSeries::constant(2, 5, Rational(1)));
}

TEST_CASE("substitution") {
  const int cap = 5;
  const MultiSeries x = MultiSeries::variable(2, cap, 0), y = MultiSeries::variable(2, cap, 1);
  CHECK((MultiSeries::constant(2, cap, Rational(1)) + x).substitute({{0, y}}) ==
        MultiSeries::constant(2, cap, Rational(1)) + y);
  CHECK((MultiSeries::constant(2, cap, Rational(1)) + x + y).substitute({{0, MultiSeries(2, cap)}}) ==
        MultiSeries::constant(2, cap, Rational(1)) + y);

  // v -> z/(1 - b z) in sum v^n reproduces the directly expanded double sum.
  const Rational b(1, 2);
  MultiSeries geo(2, cap);  // sum over n of v^n, v = variable 0, z = variable 1
  for (int n = 0; n <= cap; ++n) geo += MultiSeries::monomial(2, cap, {n, 0}, Rational(1));
  const MultiSeries z = MultiSeries::variable(2, cap, 1);
  const MultiSeries repl =
      z * (MultiSeries::constant(2, cap, Rational(1)) - z.scaled(b)).invert_unit();
  const MultiSeries via_subst = geo.substitute({{0, repl}});
  MultiSeries direct = MultiSeries::constant(2, cap, Rational(1));
  MultiSeries power = MultiSeries::constant(2, cap, Rational(1));
  for (int n = 1; n <= cap; ++n) {
    power *= repl;
    direct += power;
  }
  CHECK(via_subst == direct);

  CHECK_THROWS_AS(x.substitute({{1, MultiSeries::constant(2, cap, Rational(1))}}),
                  std::domain_error);
}

TEST_CASE("coefficient access honors the cap") {
  const MultiSeries x = MultiSeries::variable(1, 4, 0);
  CHECK((c1(4, 1) + x.scaled(Rational(2))).coeff({1}) == Rational(2));
  CHECK(x.exp().coeff({3}) == Rational(1, 6));
  CHECK(x.coeff({3}) == Rational(0));
  CHECK_THROWS_AS(x.coeff({5}), std::out_of_range);
}

TEST_CASE("truncation to a lower cap") {
  const MultiSeries x = MultiSeries::variable(1, 5, 0);
  const MultiSeries f = x.exp();
  const MultiSeries g = f.truncated(2);
  CHECK(g.cap() == 2);
  CHECK(g.coeff({2}) == Rational(1, 2));
  CHECK_THROWS_AS(g.coeff({3}), std::out_of_range);
}

TEST_CASE("derivative and evaluation") {
  const MultiSeries x = MultiSeries::variable(2, 4, 0), y = MultiSeries::variable(2, 4, 1);
  const MultiSeries f = x * x * y + y.scaled(Rational(3));
  CHECK(f.derivative(0) == (x * y).scaled(Rational(2)));
  CHECK(f.derivative(1) == x * x + MultiSeries::constant(2, 4, Rational(3)));
  CHECK(f.eval({Rational(2), Rational(1, 2)}) == Rational(7, 2));
}

TEST_CASE("ring axioms on random series") {
  std::mt19937_64 eng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    const int nv = 1 + static_cast<int>(eng() % 3), cap = 3 + static_cast<int>(eng() % 3);
    const MultiSeries a = random_series(eng, nv, cap), b = random_series(eng, nv, cap),
                      c = random_series(eng, nv, cap);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 eng(777);
  for (int trial = 0; trial < 15; ++trial) {
    const int cap = 4;
    MultiSeries a = random_series(eng, 2, cap), b = random_series(eng, 2, cap);
    MultiSeries s = random_series(eng, 2, cap);
    // force zero constant term on the substituted series
    s -= MultiSeries::constant(2, cap, s.constant_term());
    const std::vector<std::pair<int, MultiSeries>> sub = {{0, s}};
    CHECK((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub));
    CHECK((a + b).substitute(sub) == a.substitute(sub) + b.substitute(sub));
  }
}

TEST_CASE("exp is additive on commuting arguments") {
  std::mt19937_64 eng(31337);
  for (int trial = 0; trial < 10; ++trial) {
    const int cap = 4;
    MultiSeries a = random_series(eng, 2, cap), b = random_series(eng, 2, cap);
    a -= MultiSeries::constant(2, cap, a.constant_term());
    b -= MultiSeries::constant(2, cap, b.constant_term());
    CHECK((a + b).exp() == a.exp() * b.exp());
    if (!a.constant_term().is_zero()) continue;
    const MultiSeries u = MultiSeries::constant(2, cap, Rational(1)) + a;
    CHECK(u * u.invert_unit() == MultiSeries::constant(2, cap, Rational(1)));
  }
}
