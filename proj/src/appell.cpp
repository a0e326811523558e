#include "schroalg/appell.hpp"

#include <algorithm>

namespace schroalg {

namespace {

// Variable order for Upsilon: (B1, B2, V1, V2).
constexpr int kB1 = 0, kB2 = 1, kV1 = 2, kV2 = 3;

MultiSeries var4(int cap, int v) { return MultiSeries::variable(4, cap, v); }

std::string jk_name(int j, int k) {
  return "|" + std::to_string(j) + "," + std::to_string(k) + ">";
}

}  // namespace

LeibnizSeries leibniz_series(const Params& p, int cap) {
  if (cap < 2) throw std::invalid_argument("leibniz_series: cap must be >= 2");
  const MultiSeries b1 = var4(cap, kB1), b2 = var4(cap, kB2), v1 = var4(cap, kV1),
                    v2 = var4(cap, kV2);
  const MultiSeries one = MultiSeries::constant(4, cap, Rational(1));
  const MultiSeries inv = (one - b1 * v1).invert_unit();
  const MultiSeries pref = binom_of(b1 * v1, p.c);  // (1 - B1 V1)^{-c}
  const MultiSeries gauss =
      ((b1 * v2 * v2 + (b2 * v2).scaled(Rational(2)) + b2 * b2 * v1) * inv)
          .scaled(p.m * Rational(1, 2))
          .exp();
  return LeibnizSeries{p, pref * gauss};
}

Rational GramMatrix::at(int j, int k, int j2, int k2) const {
  if (2 * j + k > cutoff_ || 2 * j2 + k2 > cutoff_)
    throw std::out_of_range("GramMatrix::at: index beyond cutoff");
  auto it = entries_.find({{j, k}, {j2, k2}});
  return it == entries_.end() ? Rational(0) : it->second;
}

void GramMatrix::set(int j, int k, int j2, int k2, const Rational& value) {
  if (value.is_zero()) return;
  entries_[{{j, k}, {j2, k2}}] = value;
}

bool GramMatrix::is_symmetric() const {
  for (const auto& [key, value] : entries_) {
    auto it = entries_.find({key.second, key.first});
    if (it == entries_.end() || it->second != value) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> GramMatrix::indices(int cutoff) {
  std::vector<std::pair<int, int>> out;
  for (int w = 0; w <= cutoff; ++w)
    for (int j = 0; 2 * j <= w; ++j)
      if (int k = w - 2 * j; k >= 0) out.emplace_back(j, k);
  return out;
}

GramMatrix gram_jk(const Params& p, int cutoff) {
  const LeibnizSeries ups = leibniz_series(p, std::max(2, 2 * cutoff));
  GramMatrix gram(BasisFlavor::jk, cutoff);
  const auto idx = GramMatrix::indices(cutoff);
  for (const auto& [j, k] : idx) {
    for (const auto& [j2, k2] : idx) {
      const Rational c = ups.series.coeff({j, k, j2, k2});
      if (c.is_zero()) continue;
      gram.set(j, k, j2, k2,
               c * factorial(j) * factorial(k) * factorial(j2) * factorial(k2));
    }
  }
  return gram;
}

FockVector ab_vector(const Params& p, int a, int b, int cutoff) {
  const FockOperator r0 =
      FockOperator::raise1() -
      (FockOperator::raise2() * FockOperator::raise2()).scaled(Rational(1, 2) / p.m);
  FockVector v = FockVector::basis(cutoff, 0, 0);
  for (int i = 0; i < b; ++i) v = apply(FockOperator::raise2(), v);
  for (int i = 0; i < a; ++i) v = apply(r0, v);
  return v;
}

GramAbResult gram_ab(const Params& p, int cutoff) {
  const GramMatrix jk = gram_jk(p, cutoff);
  GramAbResult result{GramMatrix(BasisFlavor::ab, cutoff), false, {}};
  const auto idx = GramMatrix::indices(cutoff);
  std::map<std::pair<int, int>, FockVector> vectors;
  for (const auto& [a, b] : idx) vectors.emplace(std::make_pair(a, b), ab_vector(p, a, b, cutoff));
  for (const auto& [a, b] : idx) {
    for (const auto& [a2, b2] : idx) {
      const Rational v = gram_pairing(jk, vectors.at({a, b}), vectors.at({a2, b2}));
      result.gram.set(a, b, a2, b2, v);
      if (a == a2 && b == b2 && v.is_zero()) {
        result.degenerate = true;
        result.zero_norms.emplace_back(a, b);
      }
    }
  }
  return result;
}

Rational gram_pairing(const GramMatrix& gram, const FockVector& u, const FockVector& v) {
  Rational acc(0);
  for (const auto& [jk, cu] : u.terms())
    for (const auto& [jk2, cv] : v.terms())
      acc += cu * cv * gram.at(jk.first, jk.second, jk2.first, jk2.second);
  return acc;
}

AdjointnessReport adjointness_check(const Params& p, int cutoff) {
  AdjointnessReport report;
  report.ok = true;
  const int inner = cutoff + 2;
  const GramMatrix gram = gram_jk(p, inner);
  const Params p1(p.m, p.c, Rational(1));  // beta = 1 convention for X1, X2
  const FockOperator K = realize(Generator::K, p1), G = realize(Generator::G, p1),
                     Px = realize(Generator::Px, p1), Pt = realize(Generator::Pt, p1);
  const auto [X1, X2] = tilted_observables(p1);
  const auto idx = GramMatrix::indices(cutoff);
  auto fail = [&report](const std::string& msg) {
    report.ok = false;
    report.failures.push_back(msg);
  };
  for (const auto& [j, k] : idx) {
    const FockVector u = FockVector::basis(inner, j, k);
    for (const auto& [j2, k2] : idx) {
      const FockVector v = FockVector::basis(inner, j2, k2);
      ++report.pairs_checked;
      if (gram_pairing(gram, apply(Pt, u), v) != gram_pairing(gram, u, apply(K, v)))
        fail("<Pt u, v> != <u, K v> at " + jk_name(j, k) + ", " + jk_name(j2, k2));
      if (gram_pairing(gram, apply(Px, u), v) != gram_pairing(gram, u, apply(G, v)))
        fail("<Px u, v> != <u, G v> at " + jk_name(j, k) + ", " + jk_name(j2, k2));
      if (gram_pairing(gram, apply(X1, u), v) != gram_pairing(gram, u, apply(X1, v)))
        fail("X1 not symmetric at " + jk_name(j, k) + ", " + jk_name(j2, k2));
      if (gram_pairing(gram, apply(X2, u), v) != gram_pairing(gram, u, apply(X2, v)))
        fail("X2 not symmetric at " + jk_name(j, k) + ", " + jk_name(j2, k2));
    }
  }
  return report;
}

namespace {

// Variable order for generating functions: (x1, x2, v1, v2).
constexpr int kX1 = 0, kX2 = 1, kGV1 = 2, kGV2 = 3;

}  // namespace

MultiSeries appell_generating(const Params& p, int cap) {
  const MultiSeries x1 = MultiSeries::variable(4, cap, kX1),
                    x2 = MultiSeries::variable(4, cap, kX2),
                    v1 = MultiSeries::variable(4, cap, kGV1),
                    v2 = MultiSeries::variable(4, cap, kGV2);
  const MultiSeries one = MultiSeries::constant(4, cap, Rational(1));
  const MultiSeries inv = (one + v1.scaled(p.beta)).invert_unit();
  const MultiSeries pref = binom_of(v1.scaled(-p.beta), p.c);  // (1 + b v1)^{-c}
  return (x1 * v1 * inv).exp() * (x2 * v2 * inv).exp() * pref *
         ((v2 * v2 * inv).scaled(p.m * p.beta * Rational(-1, 2))).exp();
}

std::vector<AppellPolynomial> appell_polynomials(const Params& p, int order) {
  const int cap = 2 * order;
  const MultiSeries gen = appell_generating(p, cap);
  std::map<std::pair<int, int>, MultiSeries> buckets;
  for (const auto& [e, c] : gen.terms()) {
    const int j = e[kGV1], k = e[kGV2];
    if (j + k > order) continue;
    auto [it, fresh] = buckets.try_emplace(std::make_pair(j, k), MultiSeries(2, order));
    it->second += MultiSeries::monomial(2, order, {e[kX1], e[kX2]}, c);
  }
  std::vector<AppellPolynomial> out;
  for (int total = 0; total <= order; ++total) {
    for (int j = total; j >= 0; --j) {
      const int k = total - j;
      auto it = buckets.find({j, k});
      MultiSeries poly = it == buckets.end() ? MultiSeries(2, order) : it->second;
      out.push_back({j, k, std::move(poly)});
    }
  }
  return out;
}

namespace {

MultiSeries resolvent_lower(const MultiSeries& poly, const Rational& beta, int resolvent_var,
                            int deriv_var) {
  if (poly.num_vars() != 2) throw std::invalid_argument("lowering: expects (x1, x2) polynomials");
  MultiSeries g = poly.derivative(deriv_var);
  MultiSeries acc = g;
  Rational scale(1);
  while (!g.is_zero()) {
    g = g.derivative(resolvent_var);
    scale *= beta;
    acc += g.scaled(scale);
  }
  return acc;
}

}  // namespace

MultiSeries lower1(const MultiSeries& poly, const Rational& beta) {
  return resolvent_lower(poly, beta, 0, 0);
}

MultiSeries lower2(const MultiSeries& poly, const Rational& beta) {
  return resolvent_lower(poly, beta, 0, 1);
}

LoweringReport lowering_check(const Params& p, int order) {
  if (order < 2) throw std::invalid_argument("lowering_check: order must be >= 2");
  LoweringReport report;
  report.ok = true;
  const auto psis = appell_polynomials(p, order);
  auto psi = [&psis](int j, int k) -> const MultiSeries& {
    for (const auto& a : psis)
      if (a.j == j && a.k == k) return a.poly;
    throw std::out_of_range("lowering_check: missing polynomial");
  };
  auto fail = [&report](const std::string& msg) {
    report.ok = false;
    report.failures.push_back(msg);
  };
  for (const auto& a : psis) {
    if (a.j >= 1) {
      ++report.relations_checked;
      if (lower1(a.poly, p.beta) != psi(a.j - 1, a.k))
        fail("V1 psi_" + std::to_string(a.j) + std::to_string(a.k) + " mismatch");
    }
    if (a.k >= 1) {
      ++report.relations_checked;
      if (lower2(a.poly, p.beta) != psi(a.j, a.k - 1))
        fail("V2 psi_" + std::to_string(a.j) + std::to_string(a.k) + " mismatch");
    }
    // Appell space membership: V1^(j+1) and V2^(k+1) annihilate psi_jk.
    MultiSeries it1 = a.poly;
    for (int i = 0; i <= a.j; ++i) it1 = lower1(it1, p.beta);
    MultiSeries it2 = a.poly;
    for (int i = 0; i <= a.k; ++i) it2 = lower2(it2, p.beta);
    if (!it1.is_zero() || !it2.is_zero())
      fail("psi_" + std::to_string(a.j) + std::to_string(a.k) + " escapes its Appell space");
  }
  // The d/dx2-based resolvent must break on psi_02 when beta != 0.
  if (!p.beta.is_zero()) {
    const MultiSeries alt = resolvent_lower(psi(0, 2), p.beta, 1, 1);
    report.alt_resolvent_fails = !(alt == psi(0, 1));
    if (!report.alt_resolvent_fails)
      fail("alternative d/dx2 resolvent unexpectedly satisfies the lowering relation");
  }
  return report;
}

DecoupledReport decoupled_generating(const Params& p, int order) {
  if (order < 2) throw std::invalid_argument("decoupled_generating: order must be >= 2");
  if (p.beta.is_zero())
    throw std::domain_error("decoupled_generating: beta must be nonzero");
  DecoupledReport report;
  report.ok = true;
  report.laguerre_degree = order;
  report.hermite_degree = order;
  report.laguerre_scaling = "l_a(x0) = (-beta)^a L_a^{(cdot-1)}(x0/beta)";
  report.hermite_scaling = "eta_b(x2) = He_b(x2; beta*m) / b!";
  auto fail = [&report](const std::string& msg) {
    report.ok = false;
    report.failures.push_back(msg);
  };

  // Variables (x0, x2, v0, v2).
  const int cap = 2 * order;
  const MultiSeries x0 = MultiSeries::variable(4, cap, 0),
                    x2 = MultiSeries::variable(4, cap, 1),
                    v0 = MultiSeries::variable(4, cap, 2),
                    v2 = MultiSeries::variable(4, cap, 3);
  const MultiSeries one = MultiSeries::constant(4, cap, Rational(1));
  const MultiSeries inv0 = (one + v0.scaled(p.beta)).invert_unit();
  const MultiSeries gen = (x0 * v0 * inv0).exp() * binom_of(v0.scaled(-p.beta), p.cdot()) *
                          (x2 * v2 - (v2 * v2).scaled(p.beta * p.m * Rational(1, 2))).exp();

  // Slice the two families out of the expansion.
  std::vector<MultiSeries> laguerre(order + 1, MultiSeries(1, order)),
      hermite(order + 1, MultiSeries(1, order));
  for (const auto& [e, c] : gen.terms()) {
    if (e[3] == 0 && e[1] == 0 && e[2] <= order)
      laguerre[e[2]] += MultiSeries::monomial(1, order, {e[0]}, c);
    if (e[2] == 0 && e[0] == 0 && e[3] <= order)
      hermite[e[3]] += MultiSeries::monomial(1, order, {e[1]}, c);
  }

  // Laguerre oracle, argument already rescaled: Lt_a(x0) = L_a^{(alpha)}(x0/beta),
  //   (n+1) Lt_{n+1} = (2n+1+alpha - x0/beta) Lt_n - (n+alpha) Lt_{n-1}.
  const Rational alpha = p.cdot() - Rational(1);
  const MultiSeries y = MultiSeries::variable(1, order, 0).scaled(Rational(1) / p.beta);
  std::vector<MultiSeries> lag(order + 1, MultiSeries(1, order));
  lag[0] = MultiSeries::constant(1, order, Rational(1));
  if (order >= 1)
    lag[1] = MultiSeries::constant(1, order, Rational(1) + alpha) - y;
  for (int n = 1; n + 1 <= order; ++n) {
    MultiSeries t = (MultiSeries::constant(1, order, Rational(2 * n + 1) + alpha) - y) * lag[n] -
                    lag[n - 1].scaled(Rational(n) + alpha);
    lag[n + 1] = t.scaled(Rational(1, n + 1));
  }
  for (int a = 0; a <= order; ++a) {
    if (laguerre[a] != lag[a].scaled((-p.beta).pow(a)))
      fail("v0-family misses the Laguerre recurrence at degree " + std::to_string(a));
  }

  // Hermite oracle (monic, variance beta*m): He_{n+1} = x2 He_n - beta m n He_{n-1}.
  std::vector<MultiSeries> he(order + 1, MultiSeries(1, order));
  he[0] = MultiSeries::constant(1, order, Rational(1));
  const MultiSeries xv = MultiSeries::variable(1, order, 0);
  if (order >= 1) he[1] = xv;
  for (int n = 1; n + 1 <= order; ++n)
    he[n + 1] = xv * he[n] - he[n - 1].scaled(p.beta * p.m * Rational(n));
  for (int b = 0; b <= order; ++b) {
    if (hermite[b].scaled(factorial(b)) != he[b])
      fail("v2-family misses the Hermite recurrence at degree " + std::to_string(b));
  }
  return report;
}

Rational vacuum_moment_gram(const Params& p, int j, int k) {
  const int cutoff = 2 * j + k;
  const GramMatrix gram = gram_jk(p, cutoff);
  const auto [X1, X2] = tilted_observables(p);
  FockVector v = FockVector::basis(cutoff, 0, 0);
  for (int i = 0; i < k; ++i) v = apply(X2, v);
  for (int i = 0; i < j; ++i) v = apply(X1, v);
  return gram_pairing(gram, FockVector::basis(cutoff, 0, 0), v);
}

}  // namespace schroalg
