#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "schroalg/rational.hpp"

namespace schroalg {

// Basis order is fixed everywhere: (M, K, G, D, Px, Pt).
enum class Generator : int { M = 0, K = 1, G = 2, D = 3, Px = 4, Pt = 5 };

constexpr std::array<Generator, 6> kGenerators = {
    Generator::M, Generator::K, Generator::G, Generator::D, Generator::Px, Generator::Pt};

std::string generator_name(Generator g);
Generator generator_from_name(const std::string& name);

// Element a1*M + a2*K + a3*G + a4*D + a5*Px + a6*Pt with exact coefficients.
struct LieElement {
  std::array<Rational, 6> a{};

  static LieElement zero() { return {}; }
  static LieElement basis(Generator g);

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  friend LieElement operator+(LieElement x, const LieElement& y) { return x += y; }
  friend LieElement operator-(LieElement x, const LieElement& y) { return x -= y; }
  LieElement scaled(const Rational& s) const;
  bool is_zero() const;
  friend bool operator==(const LieElement& x, const LieElement& y) { return x.a == y.a; }
};

// [basis_i, basis_j] for all ordered pairs; antisymmetric, M central.
const std::array<std::array<LieElement, 6>, 6>& structure_table();

LieElement commutator(const LieElement& x, const LieElement& y);

template <typename T>
struct Mat4 {
  std::array<T, 16> m{};

  static Mat4 identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r.at(i, i) = T(1);
    return r;
  }
  T& at(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
  const T& at(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }

  Mat4 operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const T& aik = at(i, k);
        for (int j = 0; j < 4; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }
  Mat4 operator+(const Mat4& o) const {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.m[i] = m[i] + o.m[i];
    return r;
  }
  Mat4 operator-(const Mat4& o) const {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.m[i] = m[i] - o.m[i];
    return r;
  }
  friend bool operator==(const Mat4& x, const Mat4& y) { return x.m == y.m; }
};

using Mat4R = Mat4<Rational>;
using Mat4D = Mat4<double>;

template <typename T>
Mat4<T> matrix_commutator(const Mat4<T>& x, const Mat4<T>& y) {
  return x * y - y * x;
}

// The defining 4x4 representation.
Mat4R matrix_of(const LieElement& x);

// Coordinates of the second kind: the element
// exp(A1 M) exp(A2 K) exp(A3 G) exp(A4 D) exp(A5 Px) exp(A6 Pt).
struct GroupCoords {
  std::array<double, 6> A{};

  friend bool operator==(const GroupCoords& x, const GroupCoords& y) { return x.A == y.A; }
};

struct ChartError : std::domain_error {
  using std::domain_error::domain_error;
};

// exp(t * basis) in the 4x4 representation; exact closed forms (the nilpotent
// generators truncate, D exponentiates diagonally).
Mat4D one_parameter_matrix(Generator g, double t);

// Closed form of the ordered product of the six one-parameter exponentials.
Mat4D group_matrix(const GroupCoords& a);

// Second-kind coordinate recovery from a group matrix; requires g33 > 0.
GroupCoords coords_of(const Mat4D& g);

// coords_of(group_matrix(a) * group_matrix(b)); ChartError if the product
// leaves the g33 > 0 chart.
GroupCoords compose(const GroupCoords& a, const GroupCoords& b);

GroupCoords group_inverse(const GroupCoords& a);

// Closed-form group law for commuting exp(B2 Px) exp(B1 Pt) past
// exp(V1 K) exp(V2 G); requires 1 - B1*V1 > 0.
GroupCoords leibniz_commute(double b1, double b2, double v1, double v2);

}  // namespace schroalg
