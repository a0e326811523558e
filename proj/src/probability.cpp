#include "schroalg/probability.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "schroalg/multiseries.hpp"

namespace schroalg {

DensityParams::DensityParams(Rational m_, Rational beta_, Rational c_)
    : m(std::move(m_)), beta(std::move(beta_)), c(std::move(c_)) {
  if (m.sign() <= 0) throw std::domain_error("DensityParams: m must be positive");
  if (beta.sign() <= 0) throw std::domain_error("DensityParams: beta must be positive");
  if (c < Rational(1, 2))
    throw std::domain_error("DensityParams: c must be >= 1/2");
}

double density(const DensityParams& p, double x1, double x2) {
  const double m = p.m.to_double();
  return density_at_offset(p, x1 - x2 * x2 / (2.0 * m), x2);
}

double density_at_offset(const DensityParams& p, double u, double x2) {
  const Rational cd = p.cdot();
  if (cd.sign() <= 0)
    throw std::domain_error("density: c = 1/2 collapses the law onto the parabola");
  const double m = p.m.to_double(), beta = p.beta.to_double(), cdot = cd.to_double();
  if (u < 0.0) return 0.0;
  const double x1 = u + x2 * x2 / (2.0 * m);
  const double norm = std::tgamma(cdot) * std::sqrt(2.0 * M_PI * m * beta);
  return std::exp(-x1 / beta) * std::pow(u, cdot - 1.0) * std::pow(beta, -cdot) / norm;
}

Rational exact_moment(const DensityParams& p, int j, int k) {
  if (j < 0 || k < 0) throw std::invalid_argument("exact_moment: negative order");
  if (k % 2 != 0) return Rational(0);
  const Rational cd = p.cdot(), mb = p.m * p.beta;
  Rational acc(0);
  for (int i = 0; i <= j; ++i) {
    acc += binomial(j, i) * p.beta.pow(j - i) * rising_factorial(cd, j - i) *
           mb.pow(i + k / 2) * double_factorial(2 * i + k - 1) / (p.m * Rational(2)).pow(i);
  }
  return acc;
}

Rational MomentTable::at(int j, int k) const {
  auto it = moments.find({j, k});
  if (it == moments.end()) throw std::out_of_range("MomentTable: missing entry");
  return it->second;
}

MomentTable mgf_moments(const DensityParams& p, int order) {
  if (order < 1) throw std::invalid_argument("mgf_moments: order must be >= 1");
  // Variables (z1, z2); every contributing factor term has nonnegative
  // degree, so cap = order is exact for the extracted window.
  const int cap = order;
  const MultiSeries z1 = MultiSeries::variable(2, cap, 0), z2 = MultiSeries::variable(2, cap, 1);
  const MultiSeries inv = (MultiSeries::constant(2, cap, Rational(1)) - z1.scaled(p.beta))
                              .invert_unit();
  const MultiSeries mgf = binom_of(z1.scaled(p.beta), p.c) *
                          ((z2 * z2 * inv).scaled(p.m * p.beta * Rational(1, 2))).exp();
  MomentTable table;
  table.order = order;
  for (int j = 0; j <= order; ++j)
    for (int k = 0; j + k <= order; ++k)
      table.moments[{j, k}] = mgf.coeff({j, k}) * factorial(j) * factorial(k);
  return table;
}

namespace {

// Distribution plumbing on top of the (fully specified) mt19937_64 stream,
// so sample output is identical across standard libraries.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // in (0, 1)
    while (true) {
      const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;
    }
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform(), u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1)), t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // Marsaglia-Tsang; the shape < 1 case boosts through shape + 1.
  double gamma(double shape) {
    if (shape < 1.0) return gamma(shape + 1.0) * std::pow(uniform(), 1.0 / shape);
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace

std::vector<Sample> sample(const DensityParams& p, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample: need at least one draw");
  const double m = p.m.to_double(), beta = p.beta.to_double();
  const double cdot = p.cdot().to_double();
  const double sigma = std::sqrt(m * beta);
  PortableRng rng(seed);
  std::vector<Sample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x2 = sigma * rng.normal();
    const double u = cdot > 0.0 ? beta * rng.gamma(cdot) : 0.0;
    out.push_back({u + x2 * x2 / (2.0 * m), x2});
  }
  return out;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[static_cast<std::size_t>(i)] = -z;
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
  }
}

}  // namespace

QuadratureReport quadrature_check(const DensityParams& p, int panels, int nodes) {
  const Rational cd = p.cdot();
  if (cd.sign() <= 0)
    throw std::domain_error("quadrature_check: needs c > 1/2");
  const double m = p.m.to_double(), beta = p.beta.to_double(), cdot = cd.to_double();

  std::vector<double> gx, gw;
  gauss_legendre(nodes, gx, gw);

  // u-integral over [0, umax] with the substitution u = s^pw absorbing the
  // u^{cdot-1} singularity when cdot < 1.
  const int pw = cdot >= 1.0 ? 1 : static_cast<int>(std::ceil(2.0 / cdot));
  const double umax = beta * (60.0 + 10.0 * cdot);
  const double smax = std::pow(umax, 1.0 / pw);
  const double x2max = 14.0 * std::sqrt(m * beta);

  struct Node {
    double t, weight;
  };
  auto panelize = [&](double lo, double hi) {
    std::vector<Node> out;
    const double step = (hi - lo) / panels;
    for (int pa = 0; pa < panels; ++pa) {
      const double a = lo + pa * step, b = a + step;
      for (int i = 0; i < nodes; ++i)
        out.push_back({0.5 * (a + b) + 0.5 * (b - a) * gx[static_cast<std::size_t>(i)],
                       0.5 * (b - a) * gw[static_cast<std::size_t>(i)]});
    }
    return out;
  };
  const auto snodes = panelize(0.0, smax);
  const auto x2nodes = panelize(-x2max, x2max);

  double norm = 0.0, m10 = 0.0, m01 = 0.0, m20 = 0.0, m02 = 0.0, m11 = 0.0;
  for (const auto& sn : snodes) {
    const double u = std::pow(sn.t, pw);
    const double du = pw * std::pow(sn.t, pw - 1);
    for (const auto& xn : x2nodes) {
      const double x2 = xn.t;
      const double x1 = u + x2 * x2 / (2.0 * m);
      const double val = density_at_offset(p, u, x2) * du * sn.weight * xn.weight;
      norm += val;
      m10 += val * x1;
      m01 += val * x2;
      m20 += val * x1 * x1;
      m02 += val * x2 * x2;
      m11 += val * x1 * x2;
    }
  }

  QuadratureReport report;
  report.normalization = norm;
  report.normalization_error = std::abs(norm - 1.0);
  const std::pair<std::pair<int, int>, double> checks[] = {
      {{1, 0}, m10}, {{0, 1}, m01}, {{2, 0}, m20}, {{0, 2}, m02}, {{1, 1}, m11}};
  for (const auto& [jk, value] : checks) {
    const double exact = exact_moment(p, jk.first, jk.second).to_double();
    const double err = std::abs(value - exact);
    report.max_moment_error = std::max(report.max_moment_error, err);
    std::ostringstream os;
    os << "E[X1^" << jk.first << " X2^" << jk.second << "] = " << value << " (exact " << exact
       << ", err " << err << ")";
    report.moment_lines.push_back(os.str());
  }
  report.ok = report.normalization_error < 1e-6 && report.max_moment_error < 1e-5;
  return report;
}

}  // namespace schroalg
