// Points of the projective model P^5: frame vertices A_0..A_5 (A_5 is the
// vertex at infinity A_{n+1}, n = 4) and their linear combinations. Only the
// scalar product of the ambient quadric and cross-ratios along the isotropic
// geodesic A_0 A_1 are needed here.
#pragma once

#include <array>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cone22/numeric.hpp"
#include "cone22/projective.hpp"

namespace cone22 {

template <class T>
struct FramePoint {
  // Frame-vertex index 0..5 for genuine vertices; -1 for derived points
  // (B, H, F1, F2, ...) built as coordinate combinations.
  int index = -1;
  std::array<T, 6> coords{};

  static FramePoint vertex(int k) {
    if (k < 0 || k > 5) throw std::out_of_range("FramePoint::vertex: index must be 0..5");
    FramePoint p;
    p.index = k;
    p.coords[static_cast<std::size_t>(k)] = T(1);
    return p;
  }

  friend FramePoint operator+(const FramePoint& a, const FramePoint& b) {
    FramePoint r;
    for (int i = 0; i < 6; ++i) r.coords[i] = a.coords[i] + b.coords[i];
    return r;
  }
  friend FramePoint operator-(const FramePoint& a, const FramePoint& b) {
    FramePoint r;
    for (int i = 0; i < 6; ++i) r.coords[i] = a.coords[i] - b.coords[i];
    return r;
  }
  friend FramePoint operator*(const T& s, const FramePoint& p) {
    FramePoint r;
    for (int i = 0; i < 6; ++i) r.coords[i] = s * p.coords[i];
    return r;
  }
};

// Scalar product of the hyperquadric model: (A_0, A_5) = -1, (A_i, A_j) =
// g_ij for i, j in 1..4, everything else involving A_0, A_5 zero.
template <class T>
T frame_scalar_product(const FramePoint<T>& p, const FramePoint<T>& q) {
  const T& p0 = p.coords[0];
  const T& p5 = p.coords[5];
  const T& q0 = q.coords[0];
  const T& q5 = q.coords[5];
  // g_ij block on coordinates 1..4 (the isotropic-frame metric).
  T mid = p.coords[2] * q.coords[3] + p.coords[3] * q.coords[2] -
          p.coords[1] * q.coords[4] - p.coords[4] * q.coords[1];
  return mid - p0 * q5 - p5 * q0;
}

// Point A_1 - s A_0 of the isotropic geodesic, with s projective: s = inf
// is the point A_0 itself.
template <class T>
FramePoint<T> geodesic_point(const Projective<T>& s) {
  if (s.is_infinite()) return FramePoint<T>::vertex(0);
  return FramePoint<T>::vertex(1) - s.value() * FramePoint<T>::vertex(0);
}

// Cross-ratio of four collinear points from their P^5 coordinates. The first
// two points span the line; each point is decomposed against that basis and
// the classical determinant formula is applied. Throws if the points are not
// collinear or the decomposition is degenerate.
template <class T>
Projective<T> cross_ratio_collinear(const FramePoint<T>& x1, const FramePoint<T>& x2,
                                    const FramePoint<T>& x3, const FramePoint<T>& x4) {
  // Pick two coordinate positions where (x1, x2) has full rank.
  int ia = -1, ib = -1;
  T det(0);
  for (int a = 0; a < 6 && ia < 0; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      det = x1.coords[a] * x2.coords[b] - x1.coords[b] * x2.coords[a];
      if (det != T(0)) {
        ia = a;
        ib = b;
        break;
      }
    }
  }
  if (ia < 0) throw std::domain_error("cross_ratio_collinear: base points are not independent");

  // x_k = alpha_k x1 + beta_k x2 from the chosen coordinate pair, verified
  // against all six coordinates.
  auto decompose = [&](const FramePoint<T>& p) {
    const T alpha = (p.coords[ia] * x2.coords[ib] - p.coords[ib] * x2.coords[ia]) / det;
    const T beta = (x1.coords[ia] * p.coords[ib] - x1.coords[ib] * p.coords[ia]) / det;
    for (int i = 0; i < 6; ++i) {
      if (alpha * x1.coords[i] + beta * x2.coords[i] != p.coords[i]) {
        if constexpr (is_exact_v<T>) {
          throw std::domain_error("cross_ratio_collinear: point is off the line");
        }
      }
    }
    return std::pair<T, T>(alpha, beta);
  };

  const auto h1 = std::pair<T, T>(T(1), T(0));
  const auto h2 = std::pair<T, T>(T(0), T(1));
  const auto h3 = decompose(x3);
  const auto h4 = decompose(x4);
  auto d = [](const std::pair<T, T>& p, const std::pair<T, T>& q) {
    return p.first * q.second - q.first * p.second;
  };
  const T num = d(h1, h3) * d(h2, h4);
  const T den = d(h1, h4) * d(h2, h3);
  if (den == T(0)) {
    if (num == T(0))
      throw std::domain_error("cross_ratio_collinear: indeterminate (coincident points)");
    return Projective<T>::infinity();
  }
  return Projective<T>::finite(num / den);
}

}  // namespace cone22
