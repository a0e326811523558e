#include "schroalg/fock.hpp"

#include <algorithm>
#include <sstream>

namespace schroalg {

FockVector::FockVector(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw std::invalid_argument("FockVector: negative cutoff");
}

FockVector FockVector::basis(int cutoff, int j, int k) {
  FockVector v(cutoff);
  if (j < 0 || k < 0) throw std::invalid_argument("FockVector::basis: negative index");
  if (2 * j + k > cutoff)
    throw WeightOverflow("FockVector::basis: weight above cutoff");
  v.terms_.emplace(std::make_pair(j, k), Rational(1));
  return v;
}

Rational FockVector::coeff(int j, int k) const {
  auto it = terms_.find({j, k});
  return it == terms_.end() ? Rational(0) : it->second;
}

int FockVector::max_weight() const {
  int w = -1;
  for (const auto& [jk, c] : terms_) w = std::max(w, 2 * jk.first + jk.second);
  return w;
}

void FockVector::add_term(int j, int k, const Rational& c) {
  if (c.is_zero()) return;
  if (2 * j + k > cutoff_)
    throw WeightOverflow("FockVector::add_term: weight above cutoff");
  auto [it, fresh] = terms_.try_emplace({j, k}, Rational(0));
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (cutoff_ != o.cutoff_) throw std::invalid_argument("FockVector: cutoff mismatch");
  for (const auto& [jk, c] : o.terms_) add_term(jk.first, jk.second, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (cutoff_ != o.cutoff_) throw std::invalid_argument("FockVector: cutoff mismatch");
  for (const auto& [jk, c] : o.terms_) add_term(jk.first, jk.second, -c);
  return *this;
}

FockVector FockVector::scaled(const Rational& s) const {
  FockVector r(cutoff_);
  if (s.is_zero()) return r;
  for (const auto& [jk, c] : terms_) r.terms_.emplace(jk, c * s);
  return r;
}

FockOperator FockOperator::scalar(const Rational& c) { return word(FockWord{}, c); }

FockOperator FockOperator::word(const FockWord& w, const Rational& c) {
  if (w.r1 < 0 || w.r2 < 0 || w.v1 < 0 || w.v2 < 0)
    throw std::invalid_argument("FockOperator: negative exponent in word");
  FockOperator op;
  op.add_term(w, c);
  return op;
}

void FockOperator::add_term(const FockWord& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, Rational(0));
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockOperator& FockOperator::operator+=(const FockOperator& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FockOperator FockOperator::scaled(const Rational& s) const {
  FockOperator r;
  if (s.is_zero()) return r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * s);
  return r;
}

FockOperator FockOperator::operator*(const FockOperator& o) const {
  FockOperator out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      const Rational cab = ca * cb;
      // V1^a.v1 R1^b.r1 = sum_k k! C(a.v1,k) C(b.r1,k) R1^{b.r1-k} V1^{a.v1-k},
      // and independently for mode 2.
      const int k1max = std::min(a.v1, b.r1), k2max = std::min(a.v2, b.r2);
      for (int k1 = 0; k1 <= k1max; ++k1) {
        const Rational c1 = binomial(a.v1, k1) * binomial(b.r1, k1) * factorial(k1);
        for (int k2 = 0; k2 <= k2max; ++k2) {
          const Rational c2 = binomial(a.v2, k2) * binomial(b.r2, k2) * factorial(k2);
          FockWord w{a.r1 + b.r1 - k1, a.r2 + b.r2 - k2,
                     a.v1 + b.v1 - k1, a.v2 + b.v2 - k2};
          out.add_term(w, cab * c1 * c2);
        }
      }
    }
  }
  return out;
}

FockOperator FockOperator::pow(int n) const {
  if (n < 0) throw std::invalid_argument("FockOperator::pow: negative exponent");
  FockOperator r = scalar(Rational(1));
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

int FockOperator::weight_delta() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.weight_delta());
  return d;
}

std::string FockOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    auto put = [&os](const char* s, int e) {
      if (e == 0) return;
      os << "*" << s;
      if (e > 1) os << "^" << e;
    };
    put("R1", w.r1);
    put("R2", w.r2);
    put("V1", w.v1);
    put("V2", w.v2);
  }
  return os.str();
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) {
  return a * b - b * a;
}

namespace {

FockVector apply_impl(const FockOperator& op, const FockVector& v, bool truncate) {
  FockVector out(v.cutoff());
  for (const auto& [w, cw] : op.terms()) {
    for (const auto& [jk, cv] : v.terms()) {
      const int j = jk.first, k = jk.second;
      if (w.v1 > j || w.v2 > k) continue;
      const Rational factor = falling_factorial(j, w.v1) * falling_factorial(k, w.v2);
      const int jj = j - w.v1 + w.r1, kk = k - w.v2 + w.r2;
      if (2 * jj + kk > v.cutoff()) {
        if (truncate) continue;
        throw WeightOverflow("apply: result weight above cutoff");
      }
      out.add_term(jj, kk, cw * cv * factor);
    }
  }
  return out;
}

}  // namespace

FockVector apply(const FockOperator& op, const FockVector& v) {
  return apply_impl(op, v, /*truncate=*/false);
}

FockVector apply_truncated(const FockOperator& op, const FockVector& v) {
  return apply_impl(op, v, /*truncate=*/true);
}

FockOperator realize(Generator g, const Params& p) {
  using Op = FockOperator;
  switch (g) {
    case Generator::M:
      return Op::scalar(p.m);
    case Generator::K:
      return Op::raise1();
    case Generator::G:
      return Op::raise2();
    case Generator::D:
      return Op::scalar(p.c) + Op::word({1, 0, 1, 0}, Rational(2)) + Op::word({0, 1, 0, 1});
    case Generator::Px:
      return Op::word({0, 0, 0, 1}, p.m) + Op::word({0, 1, 1, 0});
    case Generator::Pt:
      return Op::word({0, 0, 1, 0}, p.c) + Op::word({1, 0, 2, 0}) +
             Op::word({0, 0, 0, 2}, p.m * Rational(1, 2)) + Op::word({0, 1, 1, 1});
  }
  throw std::invalid_argument("realize: bad generator");
}

FockOperator realize(const LieElement& x, const Params& p) {
  FockOperator op;
  for (std::size_t i = 0; i < 6; ++i)
    if (!x.a[i].is_zero()) op += realize(kGenerators[i], p).scaled(x.a[i]);
  return op;
}

CommutatorCheckReport commutator_check(const Params& p, int cutoff) {
  if (cutoff < 4) throw std::invalid_argument("commutator_check: cutoff must be >= 4");
  CommutatorCheckReport report;
  std::array<FockOperator, 6> ops;
  for (std::size_t i = 0; i < 6; ++i) ops[i] = realize(kGenerators[i], p);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      ++report.pairs_checked;
      const FockOperator lhs = commutator(ops[i], ops[j]);
      const FockOperator rhs =
          realize(commutator(LieElement::basis(kGenerators[i]), LieElement::basis(kGenerators[j])), p);
      for (int jj = 0; 2 * jj <= cutoff - 4; ++jj) {
        for (int kk = 0; 2 * jj + kk <= cutoff - 4; ++kk) {
          const FockVector state = FockVector::basis(cutoff, jj, kk);
          if (i == 0 && j == 0) ++report.states_checked;
          if (apply(lhs, state) != apply(rhs, state))
            report.failures.push_back({kGenerators[i], kGenerators[j], jj, kk});
        }
      }
    }
  }
  return report;
}

std::tuple<FockOperator, FockOperator, FockOperator> standard_form(const Params& p) {
  const Rational half(1, 2);
  const FockOperator K = realize(Generator::K, p), G = realize(Generator::G, p),
                     D = realize(Generator::D, p), Px = realize(Generator::Px, p),
                     Pt = realize(Generator::Pt, p);
  const Rational inv2m = half / p.m;
  FockOperator R0 = K - (G * G).scaled(inv2m);
  FockOperator rho0 = D - (G * Px).scaled(Rational(1) / p.m) - FockOperator::scalar(half);
  FockOperator L0 = Pt - (Px * Px).scaled(inv2m);
  return {L0, R0, rho0};
}

FockOperator schrodinger_operator(const Params& p) {
  const FockOperator Px = realize(Generator::Px, p);
  return realize(Generator::Pt, p) - (Px * Px).scaled(Rational(1, 2) / p.m);
}

std::pair<FockOperator, FockOperator> tilted_observables(const Params& p) {
  FockOperator x1 = realize(Generator::K, p) + realize(Generator::D, p).scaled(p.beta) +
                    realize(Generator::Pt, p).scaled(p.beta * p.beta);
  FockOperator x2 = realize(Generator::G, p) + realize(Generator::Px, p).scaled(p.beta);
  return {std::move(x1), std::move(x2)};
}

Rational vacuum_expectation(const FockOperator& op, int cutoff) {
  const FockVector omega = FockVector::basis(cutoff, 0, 0);
  return apply(op, omega).coeff(0, 0);
}

}  // namespace schroalg
