#include "schroalg/evolution.hpp"


#include "schroalg/appell.hpp"
#include "schroalg/multiseries.hpp"

namespace schroalg {

LevySpec::TauMonomial LevySpec::moment(int p, int q) const {
  if (p < 0 || q < 0) throw std::invalid_argument("LevySpec::moment: negative order");
  switch (kind) {
    case Kind::Gaussian:
      if (p % 2 != 0 || q % 2 != 0) return {Rational(0), 0};
      return {double_factorial(p - 1) * double_factorial(q - 1), (p + q) / 2};
    case Kind::Drift:
      return {drift1.pow(p) * drift2.pow(q), p + q};
  }
  throw std::invalid_argument("LevySpec::moment: bad kind");
}

int evolution_cap_for(int a, int b) { return 3 * a + 4 * b + 1; }

EvolutionSeries evolution_generating(const Params& p, int cap, int fock_cutoff) {
  // Scalar expansion first, with placeholder variables r, g standing for R0
  // and G; order (w1, w2, v0, v2, r, g).
  constexpr int kW1 = 0, kW2 = 1, kV0 = 2, kV2 = 3, kR = 4, kGv = 5;
  auto var = [cap](int v) { return MultiSeries::variable(6, cap, v); };
  const MultiSeries w1 = var(kW1), w2 = var(kW2), v0 = var(kV0), v2 = var(kV2), r = var(kR),
                    g = var(kGv);
  const MultiSeries one = MultiSeries::constant(6, cap, Rational(1));
  const MultiSeries inv = (one - v0 * w1).invert_unit();
  const MultiSeries scalar = (v0 * r * inv).exp() * binom_of(v0 * w1, p.cdot()) *
                             (v2 * g + (v2 * w2).scaled(p.m) +
                              (v2 * v2 * w1).scaled(p.m * Rational(1, 2)))
                                 .exp();

  // Map r^i g^j onto R0^i G^j applied to the vacuum.
  EvolutionSeries out;
  out.cap = cap;
  out.fock_cutoff = fock_cutoff;
  std::map<std::pair<int, int>, FockVector> basis_cache;
  for (const auto& [e, c] : scalar.terms()) {
    const std::pair<int, int> ab{e[kR], e[kGv]};
    // r <= v0-power and g <= v2-power, so dropping words past the cutoff only
    // loses coefficients of v0^a v2^b with 2a + b beyond the cutoff.
    if (2 * ab.first + ab.second > fock_cutoff) continue;
    auto it = basis_cache.find(ab);
    if (it == basis_cache.end())
      it = basis_cache.emplace(ab, ab_vector(p, ab.first, ab.second, fock_cutoff)).first;
    const std::array<int, 4> key{e[kW1], e[kW2], e[kV0], e[kV2]};
    auto [slot, fresh] = out.terms.try_emplace(key, FockVector(fock_cutoff));
    slot->second += it->second.scaled(c);
    if (slot->second.is_zero()) out.terms.erase(slot);
  }
  return out;
}

AveragedSeries average(const EvolutionSeries& series, const LevySpec& spec) {
  AveragedSeries out;
  out.fock_cutoff = series.fock_cutoff;
  for (const auto& [key, vec] : series.terms) {
    const auto mom = spec.moment(key[0], key[1]);
    if (mom.coeff.is_zero()) continue;
    const std::array<int, 3> akey{mom.tau_power, key[2], key[3]};
    auto [slot, fresh] = out.terms.try_emplace(akey, FockVector(series.fock_cutoff));
    slot->second += vec.scaled(mom.coeff);
    if (slot->second.is_zero()) out.terms.erase(slot);
  }
  return out;
}

HeatAppell::HeatAppell(int a, int b, std::vector<FockVector> tau_coeffs)
    : a_(a), b_(b), tau_coeffs_(std::move(tau_coeffs)) {
  if (tau_coeffs_.empty()) throw std::invalid_argument("HeatAppell: empty polynomial");
  while (tau_coeffs_.size() > 1 && tau_coeffs_.back().is_zero()) tau_coeffs_.pop_back();
}

FockVector HeatAppell::at_tau(const Rational& tau) const {
  FockVector acc(tau_coeffs_.front().cutoff());
  Rational power(1);
  for (std::size_t n = 0; n < tau_coeffs_.size(); ++n) {
    acc += tau_coeffs_[n].scaled(power);
    power *= tau;
  }
  return acc;
}

FockOperator heat_hamiltonian(const Params& p) {
  const FockOperator pt = realize(Generator::Pt, p), px = realize(Generator::Px, p);
  return (pt * pt + px * px).scaled(Rational(1, 2));
}

HeatAppell heat_appell(const Params& p, int a, int b) {
  const int cutoff = 2 * a + b;
  const FockOperator h = heat_hamiltonian(p);
  std::vector<FockVector> coeffs;
  FockVector term = ab_vector(p, a, b, cutoff);
  coeffs.push_back(term);
  for (int n = 1; !coeffs.back().is_zero(); ++n) {
    term = apply(h, coeffs.back()).scaled(Rational(1, n));
    if (term.is_zero()) break;
    coeffs.push_back(term);
  }
  return HeatAppell(a, b, std::move(coeffs));
}

HeatAppell heat_appell_generating(const Params& p, int a, int b) {
  const int cutoff = 2 * a + b;
  const EvolutionSeries gen = evolution_generating(p, evolution_cap_for(a, b), cutoff);
  const AveragedSeries avg = average(gen, LevySpec::gaussian());
  const Rational norm = factorial(a) * factorial(b);
  std::vector<FockVector> coeffs(1, FockVector(cutoff));
  for (const auto& [key, vec] : avg.terms) {
    if (key[1] != a || key[2] != b) continue;
    const int n = key[0];
    if (n >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(n) + 1, FockVector(cutoff));
    coeffs[static_cast<std::size_t>(n)] += vec.scaled(norm);
  }
  return HeatAppell(a, b, std::move(coeffs));
}

HeatEquationReport verify_heat_equation(const Params& p, int cutoff) {
  if (cutoff < 4) throw std::invalid_argument("verify_heat_equation: cutoff must be >= 4");
  HeatEquationReport report;
  report.ok = true;
  const FockOperator h = heat_hamiltonian(p);
  auto fail = [&report](const std::string& msg) {
    report.ok = false;
    report.failures.push_back(msg);
  };
  for (int a = 0; 2 * a <= cutoff - 4; ++a) {
    for (int b = 0; 2 * a + b <= cutoff - 4; ++b) {
      ++report.systems_checked;
      const HeatAppell direct = heat_appell(p, a, b);
      const HeatAppell via_series = heat_appell_generating(p, a, b);
      const std::string name = "h_{" + std::to_string(a) + std::to_string(b) + "}";
      if (!(direct == via_series)) fail(name + ": generating-function route differs");
      // d/dtau h = H h coefficient-wise: (n+1) h_{n+1} = H h_n.
      for (int n = 0; n <= direct.degree(); ++n) {
        const FockVector lhs = n + 1 <= direct.degree()
                                   ? direct.coefficient(n + 1).scaled(Rational(n + 1))
                                   : FockVector(direct.coefficient(0).cutoff());
        if (lhs != apply(h, direct.coefficient(n)))
          fail(name + ": evolution equation fails at tau^" + std::to_string(n));
      }
      // Nilpotency bound: degree <= ceil((2a+b)/2).
      if (2 * direct.degree() > 2 * a + b + 1)
        fail(name + ": tau-degree exceeds the grading bound");
    }
  }
  return report;
}

}  // namespace schroalg
