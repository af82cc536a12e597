// Dense fixed-size matrix helpers for the 4x4 systems appearing in the
// frame-reduction machinery. Gaussian elimination with full value pivoting
// works unchanged for rationals and doubles.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>

#include "cone22/numeric.hpp"

namespace cone22 {

template <class T, std::size_t N>
using Matrix = std::array<std::array<T, N>, N>;

template <class T, std::size_t N>
using ColVector = std::array<T, N>;

template <class T, std::size_t N>
Matrix<T, N> zero_matrix() {
  Matrix<T, N> m{};
  for (auto& row : m)
    for (auto& e : row) e = T(0);
  return m;
}

template <class T, std::size_t N>
T determinant(Matrix<T, N> m) {
  T det(1);
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (abs_value(m[r][col]) > abs_value(m[pivot][col])) pivot = r;
    if (m[pivot][col] == T(0)) return T(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < N; ++r) {
      const T f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < N; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Solves m x = rhs; empty when the matrix is singular (exactly singular for
// the rational backend, zero pivot for the floating one).
template <class T, std::size_t N>
std::optional<ColVector<T, N>> solve_linear(Matrix<T, N> m, ColVector<T, N> rhs) {
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (abs_value(m[r][col]) > abs_value(m[pivot][col])) pivot = r;
    if (m[pivot][col] == T(0)) return std::nullopt;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      std::swap(rhs[pivot], rhs[col]);
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col) continue;
      const T f = m[r][col] / m[col][col];
      if (f == T(0)) continue;
      for (std::size_t c = col; c < N; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  ColVector<T, N> x{};
  for (std::size_t i = 0; i < N; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

template <class T, std::size_t N>
ColVector<T, N> mat_vec(const Matrix<T, N>& m, const ColVector<T, N>& v) {
  ColVector<T, N> out{};
  for (std::size_t r = 0; r < N; ++r) {
    T acc(0);
    for (std::size_t c = 0; c < N; ++c) acc += m[r][c] * v[c];
    out[r] = acc;
  }
  return out;
}

// Infinity-norm condition estimate via the explicit inverse; meaningful for
// the floating backend only (returns +inf for singular input).
template <std::size_t N>
double condition_estimate(const Matrix<double, N>& m) {
  Matrix<double, N> inv{};
  for (std::size_t j = 0; j < N; ++j) {
    ColVector<double, N> e{};
    e[j] = 1.0;
    auto col = solve_linear(m, e);
    if (!col) return std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < N; ++i) inv[i][j] = (*col)[i];
  }
  auto inf_norm = [](const Matrix<double, N>& a) {
    double best = 0.0;
    for (const auto& row : a) {
      double s = 0.0;
      for (double v : row) s += std::abs(v);
      best = std::max(best, s);
    }
    return best;
  };
  return inf_norm(m) * inf_norm(inv);
}

}  // namespace cone22
