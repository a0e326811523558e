#include "schroalg/diffreal.hpp"

#include <sstream>

namespace schroalg {

namespace {

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

Poly poly_scale(const Poly& a, const Rational& s) {
  if (s.is_zero()) return {};
  Poly r = a;
  for (auto& c : r) c *= s;
  return r;
}

}  // namespace

PolySeries poly_series(int cap) { return MultiSeries(1, cap); }

PolySeries poly_monomial(int cap, int degree, const Rational& coeff) {
  return MultiSeries::monomial(1, cap, {degree}, coeff);
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<long>(i));
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

DiffOp DiffOp::scalar(const Rational& c) { return term(Poly{c}, 0); }

DiffOp DiffOp::deriv(int n) { return term(Poly{Rational(1)}, n); }

DiffOp DiffOp::mul_by(Poly p) { return term(std::move(p), 0); }

DiffOp DiffOp::term(Poly p, int n) {
  if (n < 0) throw std::invalid_argument("DiffOp: negative derivative order");
  DiffOp op;
  op.add_term(n, p);
  return op;
}

void DiffOp::add_term(int order, const Poly& p) {
  Poly q = p;
  poly_trim(q);
  if (q.empty()) return;
  auto [it, fresh] = terms_.try_emplace(order, Poly{});
  it->second = poly_add(it->second, q);
  if (it->second.empty()) terms_.erase(it);
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [n, p] : o.terms_) add_term(n, p);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [n, p] : o.terms_) add_term(n, poly_scale(p, Rational(-1)));
  return *this;
}

DiffOp DiffOp::scaled(const Rational& s) const {
  DiffOp r;
  if (s.is_zero()) return r;
  for (const auto& [n, p] : terms_) r.terms_.emplace(n, poly_scale(p, s));
  return r;
}

DiffOp DiffOp::operator*(const DiffOp& o) const {
  DiffOp out;
  for (const auto& [n, p] : terms_) {
    for (const auto& [m, q] : o.terms_) {
      // p d^n q d^m: push d^n through q with the Leibniz rule.
      Poly qk = q;
      for (int k = 0; k <= n; ++k) {
        out.add_term(n - k + m, poly_scale(poly_mul(p, qk), binomial(n, k)));
        qk = poly_derivative(qk);
        if (qk.empty()) break;
      }
    }
  }
  return out;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

PolySeries apply_diffop(const DiffOp& op, const PolySeries& f) {
  if (f.num_vars() != 1) throw std::invalid_argument("apply_diffop: series must be univariate");
  PolySeries out(1, f.cap());
  for (const auto& [n, p] : op.terms()) {
    PolySeries g = f;
    for (int i = 0; i < n && !g.is_zero(); ++i) g = g.derivative(0);
    for (std::size_t d = 0; d < p.size(); ++d) {
      if (p[d].is_zero()) continue;
      out += g * poly_monomial(f.cap(), static_cast<int>(d), p[d]);
    }
  }
  return out;
}

DiffOp realize_diff(Generator g, const Rational& m) {
  switch (g) {
    case Generator::M:
      return DiffOp::scalar(m);
    case Generator::G:
      return DiffOp::mul_by(Poly{Rational(0), m});
    case Generator::Px:
      return DiffOp::deriv(1);
    case Generator::Pt:
      return DiffOp::term(Poly{Rational(1, 2) / m}, 2);
    case Generator::K:
      return DiffOp::mul_by(Poly{Rational(0), Rational(0), m * Rational(1, 2)});
    case Generator::D:
      return DiffOp::term(Poly{Rational(0), Rational(1)}, 1) + DiffOp::scalar(Rational(1, 2));
  }
  throw std::invalid_argument("realize_diff: bad generator");
}

PolySeries exp_diffop(const Rational& b1, const Rational& b2, const Rational& m,
                      int order, const PolySeries& f) {
  if (f.num_vars() != 1) throw std::invalid_argument("exp_diffop: series must be univariate");
  if (order < 0) throw std::invalid_argument("exp_diffop: negative order");
  PolySeries out(1, f.cap());
  const Rational inv2m = Rational(1, 2) / m;
  for (int p = 0; p <= order; ++p) {
    for (int q = 0; p + q <= order; ++q) {
      const Rational coeff =
          b1.pow(p) * b2.pow(q) * inv2m.pow(p) / (factorial(p) * factorial(q));
      if (coeff.is_zero()) continue;
      PolySeries g = f;
      for (int i = 0; i < 2 * p + q && !g.is_zero(); ++i) g = g.derivative(0);
      out += g.scaled(coeff);
    }
  }
  return out;
}

namespace {

// Variable order for the group-law series: (x, B1, B2, V1, V2).
constexpr int kVX = 0, kVB1 = 1, kVB2 = 2, kVV1 = 3, kVV2 = 4;

MultiSeries var5(int cap, int v) { return MultiSeries::variable(5, cap, v); }

}  // namespace

GroupLawReport verify_partial_group_law(const Rational& m, int degree_n, int order_m) {
  GroupLawReport report;
  const int cap = degree_n + 3 * order_m;
  const MultiSeries x = var5(cap, kVX), B1 = var5(cap, kVB1), B2 = var5(cap, kVB2),
                    V1 = var5(cap, kVV1), V2 = var5(cap, kVV2);

  // Left route: expand exp(V1 m x^2/2 + V2 m x) and push the differential
  // operator through, keeping B-order <= M. The x-cap N + 3M over-provisions
  // the 2p + q derivative losses on the comparison window.
  const MultiSeries seed = ((x * x * V1).scaled(m * Rational(1, 2)) + (x * V2).scaled(m)).exp();
  MultiSeries lhs(5, cap);
  const Rational inv2m = Rational(1, 2) / m;
  for (int p = 0; p <= order_m; ++p) {
    for (int q = 0; p + q <= order_m; ++q) {
      MultiSeries g = seed;
      for (int i = 0; i < 2 * p + q && !g.is_zero(); ++i) g = g.derivative(kVX);
      MultiSeries bmono = MultiSeries::constant(5, cap, inv2m.pow(p) / (factorial(p) * factorial(q)));
      for (int i = 0; i < p; ++i) bmono *= B1;
      for (int i = 0; i < q; ++i) bmono *= B2;
      lhs += g * bmono;
    }
  }

  // Right route: the closed form, expanded with exact series primitives.
  const MultiSeries one = MultiSeries::constant(5, cap, Rational(1));
  const MultiSeries inv = (one - B1 * V1).invert_unit();
  const MultiSeries quad = (x * x).scaled(m * Rational(1, 2)) * (V1 * inv);
  const MultiSeries lin = x.scaled(m) * ((V1 * B2 + V2) * inv);
  const MultiSeries pref = binom_of(B1 * V1, Rational(1, 2));  // (1 - B1 V1)^(-1/2)
  const MultiSeries gauss =
      ((B1 * V2 * V2 + (B2 * V2).scaled(Rational(2)) + B2 * B2 * V1) * inv)
          .scaled(m * Rational(1, 2))
          .exp();
  const MultiSeries rhs = (quad + lin).exp() * pref * gauss;

  // Compare on the exact window. The contract is x-degree <= N with total
  // (B,V)-order <= M; the cap N + 3M actually supports the larger window
  // B-order <= M and V-order <= M separately, so that is what gets checked.
  const MultiSeries diff = lhs - rhs;
  report.ok = true;
  for (const auto& [e, c] : diff.terms()) {
    if (e[kVX] > degree_n || e[kVB1] + e[kVB2] > order_m || e[kVV1] + e[kVV2] > order_m)
      continue;
    report.ok = false;
    std::ostringstream os;
    os << "x^" << e[kVX] << " B1^" << e[kVB1] << " B2^" << e[kVB2] << " V1^" << e[kVV1]
       << " V2^" << e[kVV2] << " differs by " << c.to_string();
    report.mismatches.push_back(os.str());
  }
  // Count every monomial of the checked window, zero coefficients included.
  int bv_window = 0;
  for (int p = 0; p <= order_m; ++p)
    for (int q = 0; p + q <= order_m; ++q)
      for (int r = 0; r <= order_m; ++r)
        for (int s = 0; r + s <= order_m; ++s) ++bv_window;
  report.coefficients_compared = (degree_n + 1) * bv_window;
  return report;
}

SymmetryReport symmetry_instance_checks(int degree_n) {
  SymmetryReport report;
  if (degree_n < 3)
    throw std::invalid_argument("symmetry_instance_checks: degree must be >= 3");
  report.ok = true;
  auto record = [&report](bool pass, const std::string& what) {
    if (pass) report.checks.push_back(what);
    else {
      report.ok = false;
      report.failures.push_back(what);
    }
  };

  const DiffOp V = DiffOp::deriv(1);
  const DiffOp euler = DiffOp::term(Poly{Rational(0), Rational(1)}, 1) +
                       DiffOp::scalar(Rational(1, 2));  // x d/dx + 1/2
  struct Instance {
    DiffOp op;
    Rational lambda;
    std::string name;
  };
  const std::vector<Instance> family = {
      {euler, Rational(-1), "x*d/dx + 1/2"},
      {V, Rational(0), "d/dx"},
      {DiffOp::scalar(Rational(1)), Rational(0), "1"},
  };

  // (i) [X, V] = Lambda(X) V as operator identities.
  for (const auto& inst : family)
    record(commutator(inst.op, V) == V.scaled(inst.lambda),
           "[" + inst.name + ", d/dx] = " + inst.lambda.to_string() + " * d/dx");

  // (ii) X preserves each Z_n: applying X to x^d keeps degree <= n for d <= n.
  for (const auto& inst : family) {
    bool pass = true;
    for (int n = 0; n <= degree_n; ++n)
      for (int d = 0; d <= n; ++d) {
        const PolySeries xd = poly_monomial(degree_n + 1, d, Rational(1));
        const PolySeries y = apply_diffop(inst.op, xd);
        for (const auto& [e, c] : y.terms())
          if (e[0] > n) pass = false;
      }
    record(pass, inst.name + " preserves the degree filtration Z_n");
  }

  // (iii) derived-algebra strictness: commutators of family members commute
  // with V outright.
  for (const auto& a : family)
    for (const auto& b : family) {
      const DiffOp der = commutator(a.op, b.op);
      record(commutator(der, V).is_zero(),
             "[[" + a.name + ", " + b.name + "], d/dx] = 0");
    }

  // V-Appell axioms for psi_n = x^n/n!: psi_n in Z_n and V psi_n = psi_{n-1}.
  bool appell_ok = true;
  for (int n = 1; n <= degree_n; ++n) {
    const PolySeries psi_n = poly_monomial(degree_n, n, Rational(1) / factorial(n));
    const PolySeries psi_prev = poly_monomial(degree_n, n - 1, Rational(1) / factorial(n - 1));
    if (apply_diffop(V, psi_n) != psi_prev) appell_ok = false;
    PolySeries it = psi_n;
    for (int i = 0; i <= n; ++i) it = apply_diffop(V, it);
    if (!it.is_zero()) appell_ok = false;
  }
  record(appell_ok, "psi_n = x^n/n! is a d/dx-Appell system");

  return report;
}

}  // namespace schroalg
