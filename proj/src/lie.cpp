#include "schroalg/lie.hpp"

#include <cmath>

namespace schroalg {

namespace {

constexpr int kM = 0, kK = 1, kG = 2, kD = 3, kPx = 4, kPt = 5;

LieElement elem(int i, long coeff = 1) {
  LieElement x;
  x.a[static_cast<std::size_t>(i)] = Rational(coeff);
  return x;
}

}  // namespace

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::M: return "M";
    case Generator::K: return "K";
    case Generator::G: return "G";
    case Generator::D: return "D";
    case Generator::Px: return "Px";
    case Generator::Pt: return "Pt";
  }
  throw std::invalid_argument("generator_name: bad generator");
}

Generator generator_from_name(const std::string& name) {
  for (Generator g : kGenerators)
    if (generator_name(g) == name) return g;
  throw std::invalid_argument("unknown generator '" + name + "'");
}

LieElement LieElement::basis(Generator g) { return elem(static_cast<int>(g)); }

LieElement& LieElement::operator+=(const LieElement& o) {
  for (std::size_t i = 0; i < 6; ++i) a[i] += o.a[i];
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (std::size_t i = 0; i < 6; ++i) a[i] -= o.a[i];
  return *this;
}

LieElement LieElement::scaled(const Rational& s) const {
  LieElement r;
  for (std::size_t i = 0; i < 6; ++i) r.a[i] = a[i] * s;
  return r;
}

bool LieElement::is_zero() const {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

const std::array<std::array<LieElement, 6>, 6>& structure_table() {
  static const auto table = [] {
    std::array<std::array<LieElement, 6>, 6> t{};
    auto set = [&t](int i, int j, const LieElement& v) {
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v.scaled(Rational(-1));
    };
    // Upper triangle of the commutation table; M is central.
    set(kK, kD, elem(kK, -2));
    set(kK, kPx, elem(kG, -1));
    set(kK, kPt, elem(kD, -1));
    set(kG, kD, elem(kG, -1));
    set(kG, kPx, elem(kM, -1));
    set(kG, kPt, elem(kPx, -1));
    set(kD, kPx, elem(kPx, -1));
    set(kD, kPt, elem(kPt, -2));
    return t;
  }();
  return table;
}

LieElement commutator(const LieElement& x, const LieElement& y) {
  const auto& table = structure_table();
  LieElement r;
  for (std::size_t i = 0; i < 6; ++i) {
    if (x.a[i].is_zero()) continue;
    for (std::size_t j = 0; j < 6; ++j) {
      if (y.a[j].is_zero()) continue;
      r += table[i][j].scaled(x.a[i] * y.a[j]);
    }
  }
  return r;
}

Mat4R matrix_of(const LieElement& x) {
  const auto& a = x.a;
  Mat4R r;
  r.at(0, 1) = a[kPx];
  r.at(0, 2) = a[kG];
  r.at(0, 3) = Rational(2) * a[kM];
  r.at(1, 1) = a[kD];
  r.at(1, 2) = a[kK];
  r.at(1, 3) = a[kG];
  r.at(2, 1) = -a[kPt];
  r.at(2, 2) = -a[kD];
  r.at(2, 3) = -a[kPx];
  return r;
}

Mat4D one_parameter_matrix(Generator g, double t) {
  Mat4D r = Mat4D::identity();
  switch (g) {
    case Generator::M:
      r.at(0, 3) = 2.0 * t;
      break;
    case Generator::K:
      r.at(1, 2) = t;
      break;
    case Generator::G:
      r.at(0, 2) = t;
      r.at(1, 3) = t;
      break;
    case Generator::D:
      r.at(1, 1) = std::exp(t);
      r.at(2, 2) = std::exp(-t);
      break;
    case Generator::Px:
      r.at(0, 1) = t;
      r.at(2, 3) = -t;
      break;
    case Generator::Pt:
      r.at(2, 1) = -t;
      break;
  }
  return r;
}

Mat4D group_matrix(const GroupCoords& c) {
  const double a1 = c.A[0], a2 = c.A[1], a3 = c.A[2], a4 = c.A[3], a5 = c.A[4], a6 = c.A[5];
  const double ep = std::exp(a4), em = std::exp(-a4);
  Mat4D g;
  g.at(0, 0) = 1.0;
  g.at(0, 1) = a5 - a3 * a6 * em;
  g.at(0, 2) = a3 * em;
  g.at(0, 3) = 2.0 * a1 - a3 * a5 * em;
  g.at(1, 1) = ep - a2 * a6 * em;
  g.at(1, 2) = a2 * em;
  g.at(1, 3) = a3 - a2 * a5 * em;
  g.at(2, 1) = -a6 * em;
  g.at(2, 2) = em;
  g.at(2, 3) = -a5 * em;
  g.at(3, 3) = 1.0;
  return g;
}

GroupCoords coords_of(const Mat4D& g) {
  // 1-indexed entries, matching the g13/g33-style recovery formulas.
  auto e = [&g](int i, int j) -> double { return g.at(i - 1, j - 1); };
  const double g33 = e(3, 3);
  if (!(g33 > 0.0)) throw ChartError("coords_of: g33 <= 0, outside the coordinate chart");
  GroupCoords c;
  c.A[0] = -0.5 * (e(1, 3) * e(3, 4) - e(1, 4) * e(3, 3)) / g33;
  c.A[1] = e(2, 3) / g33;
  c.A[2] = e(1, 3) / g33;
  c.A[3] = -std::log(g33);
  c.A[4] = -e(3, 4) / g33;
  c.A[5] = -e(3, 2) / g33;
  return c;
}

GroupCoords compose(const GroupCoords& a, const GroupCoords& b) {
  return coords_of(group_matrix(a) * group_matrix(b));
}

GroupCoords group_inverse(const GroupCoords& a) {
  // Reverse product of the inverted one-parameter factors.
  Mat4D inv = Mat4D::identity();
  const Generator order[] = {Generator::Pt, Generator::Px, Generator::D,
                             Generator::G,  Generator::K,  Generator::M};
  for (int i = 0; i < 6; ++i)
    inv = inv * one_parameter_matrix(order[i], -a.A[static_cast<std::size_t>(5 - i)]);
  return coords_of(inv);
}

GroupCoords leibniz_commute(double b1, double b2, double v1, double v2) {
  const double denom = 1.0 - b1 * v1;
  if (!(denom > 0.0)) throw ChartError("leibniz_commute: 1 - B1*V1 <= 0");
  GroupCoords c;
  c.A[0] = 0.5 * (b1 * v2 * v2 + 2.0 * b2 * v2 + b2 * b2 * v1) / denom;
  c.A[1] = v1 / denom;
  c.A[2] = (v2 + b2 * v1) / denom;
  c.A[3] = -std::log(denom);
  c.A[4] = (b1 * v2 + b2) / denom;
  c.A[5] = b1 / denom;
  return c;
}

}  // namespace schroalg
