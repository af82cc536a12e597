// Conformal curvature of a CO(2,2) structure in the isotropic frame.
//
// The full tensor C_{ijkl} carries the usual algebraic curvature symmetries
// plus trace-freeness; in this signature its 21 essential components reduce
// to 10 independent ones,
//
//   C1212 = a0, C1214 = a1, C1234 = a2, C1434 = a3, C3434 = a4,
//   C1313 = b0, C1314 = b1, C1324 = b2, C1424 = b3, C2424 = b4,
//
// splitting C = A + B into the curvature blocks of the two isotropic fiber
// bundles. Everything here is pure value arithmetic over either scalar
// backend.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cone22/cone_algebra.hpp"
#include "cone22/numeric.hpp"
#include "cone22/quartic.hpp"

namespace cone22 {

// A named violated identity; violations are data, not errors.
struct Violation {
  std::string identity;
  double magnitude = 0.0;
};

template <class T>
struct WeylTensor {
  std::array<T, 5> a{};  // a0..a4, alpha block
  std::array<T, 5> b{};  // b0..b4, beta block

  friend bool operator==(const WeylTensor& x, const WeylTensor& y) {
    return x.a == y.a && x.b == y.b;
  }
};

// Dense C_{ijkl}, 1-based accessors.
template <class T>
struct FullWeyl {
  std::array<T, 256> c{};

  T& at(int i, int j, int k, int l) { return c[offset(i, j, k, l)]; }
  const T& at(int i, int j, int k, int l) const { return c[offset(i, j, k, l)]; }

  static std::size_t offset(int i, int j, int k, int l) {
    return static_cast<std::size_t>((i - 1) * 64 + (j - 1) * 16 + (k - 1) * 4 + (l - 1));
  }
};

namespace detail {

inline std::string component_name(int i, int j, int k, int l) {
  std::ostringstream os;
  os << "C" << i << j << k << l;
  return os.str();
}

}  // namespace detail

// Checks the algebraic curvature symmetries (pair antisymmetries, pair
// interchange, first Bianchi, trace-freeness against g) and the signature-
// specific component conditions. Empty result means a valid Weyl tensor.
template <class T>
std::vector<Violation> validate_full(const FullWeyl<T>& f, double tol = kDefaultTol) {
  std::vector<Violation> out;
  auto check = [&](const T& residual, const std::string& name) {
    if (!is_zero(residual, tol))
      out.push_back({name, std::abs(to_double(residual))});
  };

  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l)
          check(f.at(i, j, k, l) + f.at(j, i, k, l),
                "antisymmetry_first_pair " + detail::component_name(i, j, k, l));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = k; l <= 4; ++l)
          check(f.at(i, j, k, l) + f.at(i, j, l, k),
                "antisymmetry_second_pair " + detail::component_name(i, j, k, l));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          if (16 * i + j > 16 * k + l) continue;
          check(f.at(i, j, k, l) - f.at(k, l, i, j),
                "pair_interchange " + detail::component_name(i, j, k, l));
        }
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = j + 1; k <= 4; ++k)
        for (int l = k + 1; l <= 4; ++l)
          check(f.at(i, j, k, l) + f.at(i, k, l, j) + f.at(i, l, j, k),
                "first_bianchi " + detail::component_name(i, j, k, l));

  // Trace: g^{im} C_{mjki} must vanish for all j, k.
  const auto ginv = Metric22::g_inv<T>();
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 4; ++k) {
      T acc(0);
      for (int i = 1; i <= 4; ++i)
        for (int m = 1; m <= 4; ++m) acc += ginv[i - 1][m - 1] * f.at(m, j, k, i);
      std::ostringstream os;
      os << "trace_free j=" << j << " k=" << k;
      check(acc, os.str());
    }

  // Signature-specific component conditions.
  check(f.at(1, 2, 3, 4) - f.at(1, 3, 2, 4) + f.at(1, 4, 2, 3), "C1234-C1324+C1423=0");
  check(f.at(1, 2, 2, 4), "C1224=0");
  check(f.at(1, 3, 3, 4), "C1334=0");
  check(f.at(1, 2, 1, 3), "C1213=0");
  check(f.at(2, 4, 3, 4), "C2434=0");
  check(f.at(1, 3, 1, 4) - f.at(1, 3, 2, 3), "C1314-C1323=0");
  check(f.at(1, 4, 2, 4) - f.at(2, 3, 2, 4), "C1424-C2324=0");
  check(f.at(1, 2, 1, 4) + f.at(1, 2, 2, 3), "C1214+C1223=0");
  check(f.at(1, 4, 3, 4) + f.at(2, 3, 3, 4), "C1434+C2334=0");
  check(f.at(1, 4, 1, 4) - f.at(1, 2, 3, 4) - f.at(1, 3, 2, 4), "C1414=C1234+C1324");
  check(f.at(2, 3, 2, 3) - f.at(1, 2, 3, 4) - f.at(1, 3, 2, 4), "C2323=C1234+C1324");

  return out;
}

// Builds the dense tensor from the 10 independent components. The 21
// essential slots are assigned first (the component conditions fix the
// derived ones: C1323 = b1, C2324 = b3, C1223 = -a1, C2334 = -a3,
// C1423 = b2 - a2, C1414 = C2323 = a2 + b2), then every index ordering is
// populated through the pair symmetries. The result always validates.
template <class T>
FullWeyl<T> reconstruct_full(const WeylTensor<T>& w) {
  FullWeyl<T> f;
  for (auto& e : f.c) e = T(0);

  auto set_slot = [&](int i, int j, int k, int l, const T& v) {
    f.at(i, j, k, l) = v;
    f.at(j, i, k, l) = -v;
    f.at(i, j, l, k) = -v;
    f.at(j, i, l, k) = v;
    f.at(k, l, i, j) = v;
    f.at(l, k, i, j) = -v;
    f.at(k, l, j, i) = -v;
    f.at(l, k, j, i) = v;
  };

  const auto& a = w.a;
  const auto& b = w.b;
  set_slot(1, 2, 1, 2, a[0]);
  set_slot(1, 2, 1, 4, a[1]);
  set_slot(1, 2, 2, 3, -a[1]);
  set_slot(1, 2, 3, 4, a[2]);
  set_slot(1, 3, 1, 3, b[0]);
  set_slot(1, 3, 1, 4, b[1]);
  set_slot(1, 3, 2, 3, b[1]);
  set_slot(1, 3, 2, 4, b[2]);
  set_slot(1, 4, 1, 4, a[2] + b[2]);
  set_slot(1, 4, 2, 3, b[2] - a[2]);
  set_slot(1, 4, 2, 4, b[3]);
  set_slot(1, 4, 3, 4, a[3]);
  set_slot(2, 3, 2, 3, a[2] + b[2]);
  set_slot(2, 3, 2, 4, b[3]);
  set_slot(2, 3, 3, 4, -a[3]);
  set_slot(2, 4, 2, 4, b[4]);
  set_slot(3, 4, 3, 4, a[4]);
  // C1213, C1224, C1334, C2434 stay zero.
  return f;
}

// Reads the 10 independent components back out. Rejects tensors that do not
// satisfy the curvature identities.
template <class T>
WeylTensor<T> extract(const FullWeyl<T>& f, double tol = kDefaultTol) {
  const auto violations = validate_full(f, tol);
  if (!violations.empty())
    throw std::invalid_argument("extract: input violates curvature identities, first: " +
                                violations.front().identity);
  WeylTensor<T> w;
  w.a = {f.at(1, 2, 1, 2), f.at(1, 2, 1, 4), f.at(1, 2, 3, 4), f.at(1, 4, 3, 4),
         f.at(3, 4, 3, 4)};
  w.b = {f.at(1, 3, 1, 3), f.at(1, 3, 1, 4), f.at(1, 3, 2, 4), f.at(1, 4, 2, 4),
         f.at(2, 4, 2, 4)};
  return w;
}

// Relative conformal curvature C(p) = C_{ijkl} p^{ij} p^{kl}, summed without
// restriction over all four indices (each unordered pair of slots therefore
// contributes four times; the alpha-bivector at lambda = 0 gives 4 a4).
template <class T>
T relative_curvature(const WeylTensor<T>& w, const Bivector<T>& p) {
  const auto f = reconstruct_full(w);
  T acc(0);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) acc += f.at(i, j, k, l) * p.p(i, j) * p.p(k, l);
  return acc;
}

// C(p_lambda) / 4 as a quartic in lambda:
//   a0 l^4 - 4 a1 l^3 + 6 a2 l^2 - 4 a3 l + a4.
template <class T>
BinaryQuartic<T> alpha_quartic(const WeylTensor<T>& w) {
  return BinaryQuartic<T>::from_descending(w.a[0], T(-4) * w.a[1], T(6) * w.a[2],
                                           T(-4) * w.a[3], w.a[4]);
}

// C(p_mu) / 4 as a quartic in mu, from the beta block.
template <class T>
BinaryQuartic<T> beta_quartic(const WeylTensor<T>& w) {
  return BinaryQuartic<T>::from_descending(w.b[0], T(-4) * w.b[1], T(6) * w.b[2],
                                           T(-4) * w.b[3], w.b[4]);
}

enum class StructureClass {
  flat,                // A = B = 0
  semiflat_alpha_zero, // A = 0, B != 0
  semiflat_beta_zero,  // B = 0, A != 0
  generic,
};

inline const char* to_string(StructureClass c) {
  switch (c) {
    case StructureClass::flat: return "flat";
    case StructureClass::semiflat_alpha_zero: return "semiflat_alpha_zero";
    case StructureClass::semiflat_beta_zero: return "semiflat_beta_zero";
    case StructureClass::generic: return "generic";
  }
  return "generic";
}

template <class T>
StructureClass classify_structure(const WeylTensor<T>& w, double tol = kDefaultTol) {
  auto block_zero = [&](const std::array<T, 5>& block) {
    for (const auto& v : block)
      if (!is_zero(v, tol)) return false;
    return true;
  };
  const bool a_zero = block_zero(w.a);
  const bool b_zero = block_zero(w.b);
  if (a_zero && b_zero) return StructureClass::flat;
  if (a_zero) return StructureClass::semiflat_alpha_zero;
  if (b_zero) return StructureClass::semiflat_beta_zero;
  return StructureClass::generic;
}

// Curvature 2-forms of the two isotropic fiber bundles, as coefficient
// vectors on the wedge basis (w1^w2, w1^w3, w1^w4, w2^w3, w2^w4, w3^w4).
template <class T>
struct CurvatureForms {
  std::array<T, 6> omega_1_3;            // alpha bundle
  std::array<T, 6> omega_11_plus_22;
  std::array<T, 6> omega_3_1;
  std::array<T, 6> omega_1_2;            // beta bundle
  std::array<T, 6> omega_11_minus_22;
  std::array<T, 6> omega_2_1;
};

template <class T>
CurvatureForms<T> curvature_forms(const WeylTensor<T>& w) {
  const auto& a = w.a;
  const auto& b = w.b;
  CurvatureForms<T> f;
  f.omega_1_3 = {T(-2) * a[0], T(0), T(-2) * a[1], T(2) * a[1], T(0), T(-2) * a[2]};
  f.omega_11_plus_22 = {T(4) * a[1], T(0), T(4) * a[2], T(-4) * a[2], T(0), T(4) * a[3]};
  f.omega_3_1 = {T(2) * a[2], T(0), T(2) * a[3], T(-2) * a[3], T(0), T(2) * a[4]};
  f.omega_1_2 = {T(0), T(-2) * b[0], T(-2) * b[1], T(-2) * b[1], T(-2) * b[2], T(0)};
  // The b1 term of the difference form sits on w1^w2, breaking the pattern
  // of the alpha bundle; the classical component table is kept verbatim.
  f.omega_11_minus_22 = {T(4) * b[1], T(0), T(4) * b[2], T(4) * b[2], T(4) * b[3], T(0)};
  f.omega_2_1 = {T(0), T(2) * b[2], T(2) * b[3], T(2) * b[3], T(2) * b[4], T(0)};
  return f;
}

}  // namespace cone22
