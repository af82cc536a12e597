// Feasibility of the third-order frame reduction.
//
// Fixing the two screen vertices inside their isotropic planes amounts to
// solving a 4x4 linear system in the fiber parameters (pi2_0, pi2_1, pi3_0,
// pi3_1) that cancels the third-order coefficients (h222, h223, h233, h333).
// The system's determinant factors as
//
//   D = 4 (3 h22 b0 + h33 a0) (h22 b0 + 3 h33 a0),
//
// so the reduction exists iff D != 0; it degenerates for totally umbilical
// hypersurfaces (h22 = h33 = 0) and for flat structures (a0 = b0 = 0).
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cone22/linalg.hpp"
#include "cone22/numeric.hpp"

namespace cone22 {

template <class T>
struct ReductionSystem {
  Matrix<T, 4> m{};         // rows ordered (h222, h223, h233, h333)
  ColVector<T, 4> rhs{};    // cancellation targets, -h_abc
};

// Coefficient matrix of the fiber parameters in the cancellation equations,
// with rhs = -h3 so that m pi = rhs makes the transformed coefficients
// vanish.
template <class T>
ReductionSystem<T> build_system(const T& h22, const T& h33, const T& a0, const T& b0,
                                const std::array<T, 4>& h3) {
  ReductionSystem<T> s;
  s.m = {{{T(3) * h22, T(2) * a0, T(0), T(-3) * h22 * h22},
          {T(0), h22 * h33, -h22, T(2) * a0},
          {-h33, T(2) * b0, T(0), T(3) * h22 * h33},
          {T(0), T(-3) * h33 * h33, T(3) * h33, T(2) * b0}}};
  for (int k = 0; k < 4; ++k) s.rhs[static_cast<std::size_t>(k)] = -h3[static_cast<std::size_t>(k)];
  return s;
}

// The two factors of the determinant, reported separately so callers can see
// which degeneracy fired.
template <class T>
std::pair<T, T> determinant_factors(const T& h22, const T& h33, const T& a0, const T& b0) {
  return {T(3) * h22 * b0 + h33 * a0, h22 * b0 + T(3) * h33 * a0};
}

template <class T>
T determinant_D(const T& h22, const T& h33, const T& a0, const T& b0) {
  const auto [f1, f2] = determinant_factors(h22, h33, a0, b0);
  return T(4) * f1 * f2;
}

enum class ReductionObstruction { umbilical, flat, factor_zero };

inline const char* to_string(ReductionObstruction o) {
  switch (o) {
    case ReductionObstruction::umbilical: return "umbilical";
    case ReductionObstruction::flat: return "flat";
    case ReductionObstruction::factor_zero: return "factor_zero";
  }
  return "factor_zero";
}

template <class T>
struct ReductionResult {
  bool feasible = false;
  ColVector<T, 4> params{};  // (pi2_0, pi2_1, pi3_0, pi3_1), valid when feasible
  std::optional<ReductionObstruction> obstruction;
  T factor1{}, factor2{};
  T determinant{};
  double condition = 0.0;    // infinity-norm estimate of the solved system
};

// Solves for the fiber parameters that cancel h3. The zero test for D is
// scale relative: |D| <= tol * max(1, |h|^2 |curv|^2) counts as singular,
// and the obstruction is named instead of solving a near-singular system.
template <class T>
ReductionResult<T> reduce_to_canonical(const T& h22, const T& h33, const T& a0, const T& b0,
                                       const std::array<T, 4>& h3, double tol = kDefaultTol) {
  ReductionResult<T> out;
  const auto [f1, f2] = determinant_factors(h22, h33, a0, b0);
  out.factor1 = f1;
  out.factor2 = f2;
  out.determinant = T(4) * f1 * f2;

  const double hmax = std::max(std::abs(to_double(h22)), std::abs(to_double(h33)));
  const double cmax = std::max(std::abs(to_double(a0)), std::abs(to_double(b0)));
  const double scale = std::max(1.0, hmax * hmax * cmax * cmax);
  const bool singular = is_exact_v<T> ? (out.determinant == T(0))
                                      : (std::abs(to_double(out.determinant)) <= tol * scale);
  if (singular) {
    const bool h_zero = is_zero(h22, tol) && is_zero(h33, tol);
    const bool curv_zero = is_zero(a0, tol) && is_zero(b0, tol);
    out.obstruction = h_zero       ? ReductionObstruction::umbilical
                      : curv_zero  ? ReductionObstruction::flat
                                   : ReductionObstruction::factor_zero;
    return out;
  }

  const auto system = build_system(h22, h33, a0, b0, h3);
  auto solution = solve_linear(system.m, system.rhs);
  if (!solution)
    throw std::logic_error("reduce_to_canonical: nonzero determinant but singular solve");
  out.feasible = true;
  out.params = *solution;

  Matrix<double, 4> md{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      md[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          to_double(system.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  out.condition = condition_estimate(md);
  return out;
}

// Coefficient data of the canonical-frame relations (all h_abc = 0), as
// covectors on (w1, w2, w3): the logarithmic derivative of h22 reduces to
// -2 a0 w1, the normalizing form omega_1^0 to h22 h33 w1 - 2 a1 w2 - 2 b1 w3,
// and the derivative of h33 to -2 b0 w1.
template <class T>
struct ReducedRelations {
  std::array<T, 3> dh22_rhs{};
  std::array<T, 3> omega_1_0{};
  std::array<T, 3> dh33_rhs{};
};

template <class T>
ReducedRelations<T> reduced_relations(const T& h22, const T& h33, const T& a0, const T& b0,
                                      const T& a1, const T& b1) {
  ReducedRelations<T> r;
  r.dh22_rhs = {T(-2) * a0, T(0), T(0)};
  r.omega_1_0 = {h22 * h33, T(-2) * a1, T(-2) * b1};
  r.dh33_rhs = {T(-2) * b0, T(0), T(0)};
  return r;
}

}  // namespace cone22
