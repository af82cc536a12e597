// Algebra of the isotropic frame for a CO(2,2) structure: the fixed metric
//
//           ( 0  0  0 -1 )
//   (g_ij) = ( 0  0  1  0 )
//           ( 0  1  0  0 )
//           (-1  0  0  0 )
//
// its isotropic cone xi^2 xi^3 - xi^1 xi^4 = 0, the two families of 2-plane
// generators of that cone, and plane elements (bivectors) spanned by pairs of
// tangent vectors. All indices in comments and accessors are 1-based to match
// the classical notation; storage is plain arrays.
#pragma once

#include <array>
#include <stdexcept>
#include <utility>

#include "cone22/linalg.hpp"
#include "cone22/numeric.hpp"
#include "cone22/projective.hpp"

namespace cone22 {

// A tangent vector (xi^1, xi^2, xi^3, xi^4). Immutable value type.
template <class T>
struct Vector4 {
  std::array<T, 4> xi{};

  Vector4() = default;
  Vector4(T x1, T x2, T x3, T x4) : xi{std::move(x1), std::move(x2), std::move(x3), std::move(x4)} {}

  static Vector4 basis(int i) {
    Vector4 v;
    v(i) = T(1);
    return v;
  }

  // 1-based component access.
  T& operator()(int i) { return xi.at(static_cast<std::size_t>(i - 1)); }
  const T& operator()(int i) const { return xi.at(static_cast<std::size_t>(i - 1)); }

  friend Vector4 operator+(const Vector4& a, const Vector4& b) {
    Vector4 r;
    for (int i = 0; i < 4; ++i) r.xi[i] = a.xi[i] + b.xi[i];
    return r;
  }
  friend Vector4 operator-(const Vector4& a, const Vector4& b) {
    Vector4 r;
    for (int i = 0; i < 4; ++i) r.xi[i] = a.xi[i] - b.xi[i];
    return r;
  }
  friend Vector4 operator*(const T& s, const Vector4& v) {
    Vector4 r;
    for (int i = 0; i < 4; ++i) r.xi[i] = s * v.xi[i];
    return r;
  }
  friend bool operator==(const Vector4& a, const Vector4& b) { return a.xi == b.xi; }
};

// A covector (n_1, ..., n_4) acting by n(v) = n_i xi^i.
template <class T>
struct Covector4 {
  std::array<T, 4> n{};

  T& operator()(int i) { return n.at(static_cast<std::size_t>(i - 1)); }
  const T& operator()(int i) const { return n.at(static_cast<std::size_t>(i - 1)); }

  T eval(const Vector4<T>& v) const {
    T acc(0);
    for (int i = 0; i < 4; ++i) acc += n[i] * v.xi[i];
    return acc;
  }
};

// The isotropic-frame metric and its inverse (the matrix is an involution,
// so both have the same entries).
struct Metric22 {
  template <class T>
  static Matrix<T, 4> g() {
    Matrix<T, 4> m = zero_matrix<T, 4>();
    m[0][3] = T(-1);
    m[3][0] = T(-1);
    m[1][2] = T(1);
    m[2][1] = T(1);
    return m;
  }

  template <class T>
  static Matrix<T, 4> g_inv() {
    return g<T>();
  }

  // 1-based entry g_{ij}.
  template <class T>
  static T entry(int i, int j) {
    return g<T>()[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
};

// g(v, v) = 2(xi^2 xi^3 - xi^1 xi^4).
template <class T>
T quadratic_form(const Vector4<T>& v) {
  return T(2) * (v(2) * v(3) - v(1) * v(4));
}

// g(v, w) = v^T g w.
template <class T>
T scalar_product(const Vector4<T>& v, const Vector4<T>& w) {
  const auto g = Metric22::g<T>();
  T acc(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += v.xi[i] * g[i][j] * w.xi[j];
  return acc;
}

template <class T>
bool is_isotropic(const Vector4<T>& v, double tol = kDefaultTol) {
  return is_zero(quadratic_form(v), tol);
}

// The alpha-generator plane at parameter lambda: xi^1 + lambda xi^3 = 0,
// xi^2 + lambda xi^4 = 0; spanned by (e3 - lambda e1, e4 - lambda e2). At
// lambda = infinity the plane is xi^3 = xi^4 = 0, spanned by (e1, e2).
template <class T>
std::pair<Vector4<T>, Vector4<T>> alpha_generator(const Projective<T>& lambda) {
  if (lambda.is_infinite())
    return {Vector4<T>::basis(1), Vector4<T>::basis(2)};
  const T& l = lambda.value();
  return {Vector4<T>(-l, T(0), T(1), T(0)), Vector4<T>(T(0), -l, T(0), T(1))};
}

// The beta-generator plane at parameter mu: xi^1 + mu xi^2 = 0,
// xi^3 + mu xi^4 = 0; spanned by (e2 - mu e1, e4 - mu e3). At mu = infinity
// the plane is xi^2 = xi^4 = 0, spanned by (e1, e3).
template <class T>
std::pair<Vector4<T>, Vector4<T>> beta_generator(const Projective<T>& mu) {
  if (mu.is_infinite())
    return {Vector4<T>::basis(1), Vector4<T>::basis(3)};
  const T& m = mu.value();
  return {Vector4<T>(-m, T(1), T(0), T(0)), Vector4<T>(T(0), T(0), -m, T(1))};
}

// Direction of the isotropic line common to the alpha-plane at lambda and
// the beta-plane at mu: (lambda mu, -lambda, -mu, 1).
template <class T>
Vector4<T> intersection_point_B(const T& lambda, const T& mu) {
  return Vector4<T>(lambda * mu, -lambda, -mu, T(1));
}

// Covector of the 3-space tangent to the isotropic cone along that common
// line: xi^1 + mu xi^2 + lambda xi^3 + lambda mu xi^4 = 0. Requires finite
// parameters; the infinite case is handled by frame specialization upstream,
// where the tangent 3-space degenerates to xi^4 = 0.
template <class T>
Covector4<T> tangent_3space_normal(const T& lambda, const T& mu) {
  Covector4<T> n;
  n(1) = T(1);
  n(2) = mu;
  n(3) = lambda;
  n(4) = lambda * mu;
  return n;
}

template <class T>
Covector4<T> tangent_3space_normal(const Projective<T>& lambda, const Projective<T>& mu) {
  if (lambda.is_infinite() || mu.is_infinite())
    throw std::domain_error("tangent_3space_normal: parameters must be finite");
  return tangent_3space_normal(lambda.value(), mu.value());
}

// Antisymmetric coordinates p^{ij} of a 2-plane element, stored as the six
// independent entries (p12, p13, p14, p23, p24, p34).
template <class T>
struct Bivector {
  T p12{}, p13{}, p14{}, p23{}, p24{}, p34{};

  // Signed 1-based accessor: p(j,i) = -p(i,j), p(i,i) = 0.
  T p(int i, int j) const {
    if (i == j) return T(0);
    if (i > j) return -p(j, i);
    if (i == 1 && j == 2) return p12;
    if (i == 1 && j == 3) return p13;
    if (i == 1 && j == 4) return p14;
    if (i == 2 && j == 3) return p23;
    if (i == 2 && j == 4) return p24;
    if (i == 3 && j == 4) return p34;
    throw std::out_of_range("Bivector: index out of range");
  }

  std::array<T, 6> entries() const { return {p12, p13, p14, p23, p24, p34}; }

  friend bool operator==(const Bivector& a, const Bivector& b) {
    return a.entries() == b.entries();
  }
};

// p^{ij} = xi^i eta^j - xi^j eta^i. No 1/2 factor: this normalization
// reproduces the generator coordinate lists (p12 = lambda^2 for the
// alpha-pair) verbatim.
template <class T>
Bivector<T> bivector_from_vectors(const Vector4<T>& v, const Vector4<T>& w) {
  auto entry = [&](int i, int j) { return v(i) * w(j) - v(j) * w(i); };
  Bivector<T> b;
  b.p12 = entry(1, 2);
  b.p13 = entry(1, 3);
  b.p14 = entry(1, 4);
  b.p23 = entry(2, 3);
  b.p24 = entry(2, 4);
  b.p34 = entry(3, 4);
  return b;
}

// The bivector of the alpha-generator at lambda (so that finite lambda gives
// p12 = lambda^2, p14 = -lambda, p23 = lambda, p34 = 1).
template <class T>
Bivector<T> alpha_bivector(const Projective<T>& lambda) {
  const auto [v, w] = alpha_generator(lambda);
  return bivector_from_vectors(v, w);
}

template <class T>
Bivector<T> beta_bivector(const Projective<T>& mu) {
  const auto [v, w] = beta_generator(mu);
  return bivector_from_vectors(v, w);
}

}  // namespace cone22
