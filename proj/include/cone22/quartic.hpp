// Binary quartics and their projective real roots with multiplicities.
//
// Root multiplicity decides integrability of the principal isotropic
// distributions, so it gets a certified path: over rationals the structure
// comes from Yun square-free decomposition plus Sturm counts, and only the
// root locations are reported as doubles. The floating path uses companion
// matrix eigenvalues with greedy clustering.
#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cone22/linalg.hpp"
#include "cone22/numeric.hpp"
#include "cone22/polynomial.hpp"
#include "cone22/projective.hpp"

namespace cone22 {

// c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0, stored descending; as a homogeneous
// form, c4 x^4 + c3 x^3 y + ... + c0 y^4 with infinity at (1 : 0).
template <class T>
struct BinaryQuartic {
  std::array<T, 5> c{};  // (c4, c3, c2, c1, c0)

  static BinaryQuartic from_descending(T c4, T c3, T c2, T c1, T c0) {
    return BinaryQuartic{{std::move(c4), std::move(c3), std::move(c2), std::move(c1), std::move(c0)}};
  }

  bool identically_zero() const {
    for (const auto& v : c)
      if (!(v == T(0))) return false;
    return true;
  }

  T eval(const T& x) const {
    return ((((c[0] * x) + c[1]) * x + c[2]) * x + c[3]) * x + c[4];
  }

  T eval_homogeneous(const T& x, const T& y) const {
    T acc(0);
    T xp(1);
    std::array<T, 5> ypow;
    ypow[0] = T(1);
    for (int k = 1; k < 5; ++k) ypow[k] = ypow[k - 1] * y;
    for (int k = 0; k <= 4; ++k) {  // k = power of x
      acc += c[static_cast<std::size_t>(4 - k)] * xp * ypow[static_cast<std::size_t>(4 - k)];
      xp = xp * x;
    }
    return acc;
  }

  double coefficient_scale() const {
    double s = 0.0;
    for (const auto& v : c) s = std::max(s, std::abs(to_double(v)));
    return s;
  }

  friend bool operator==(const BinaryQuartic& p, const BinaryQuartic& q) { return p.c == q.c; }
};

struct RealRoot {
  Projective<double> value;
  int multiplicity = 0;
};

struct ComplexPairRoot {
  double real_part = 0.0;
  double imag_abs = 0.0;
  int multiplicity = 0;
};

// Projective real roots of a nonzero quartic; total multiplicity (counting
// each conjugate pair twice) is always 4. The identically-zero quartic is
// the distinguished degenerate value: every direction is principal.
struct RootSet {
  bool identically_zero = false;
  std::vector<RealRoot> roots;  // finite roots ascending, then infinity
  std::vector<ComplexPairRoot> complex_pairs;

  int total_multiplicity() const {
    int t = 0;
    for (const auto& r : roots) t += r.multiplicity;
    for (const auto& p : complex_pairs) t += 2 * p.multiplicity;
    return t;
  }

  int infinity_multiplicity() const {
    for (const auto& r : roots)
      if (r.value.is_infinite()) return r.multiplicity;
    return 0;
  }

  const RealRoot* find(const Projective<double>& v, double match_tol = 1e-9) const {
    for (const auto& r : roots) {
      if (v.is_infinite()) {
        if (r.value.is_infinite()) return &r;
        continue;
      }
      if (r.value.is_infinite()) continue;
      const double scale = std::max(1.0, std::abs(v.value()));
      if (std::abs(r.value.value() - v.value()) <= match_tol * scale) return &r;
    }
    return nullptr;
  }
};

namespace detail {

// Eigenvalues of the companion matrix of a monic polynomial given by
// ascending coefficients (degree >= 1).
inline std::vector<std::complex<double>> companion_eigenvalues(const std::vector<double>& monic_ascending) {
  const int n = static_cast<int>(monic_ascending.size()) - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int r = 1; r < n; ++r) m(r, r - 1) = 1.0;
  for (int r = 0; r < n; ++r) m(r, n - 1) = -monic_ascending[static_cast<std::size_t>(r)];
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

inline void newton_polish(const std::vector<double>& ascending, double& x) {
  auto eval = [&](double v, double& deriv) {
    double p = 0.0, d = 0.0;
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) {
      d = d * v + p;
      p = p * v + *it;
    }
    deriv = d;
    return p;
  };
  for (int it = 0; it < 4; ++it) {
    double d = 0.0;
    const double p = eval(x, d);
    if (d == 0.0) return;
    const double step = p / d;
    if (!std::isfinite(step)) return;
    x -= step;
  }
}

inline void sort_root_set(RootSet& rs) {
  std::sort(rs.roots.begin(), rs.roots.end(), [](const RealRoot& a, const RealRoot& b) {
    if (a.value.is_infinite() != b.value.is_infinite()) return b.value.is_infinite();
    if (a.value.is_infinite()) return false;
    return a.value.value() < b.value.value();
  });
  std::sort(rs.complex_pairs.begin(), rs.complex_pairs.end(),
            [](const ComplexPairRoot& a, const ComplexPairRoot& b) {
              if (a.real_part != b.real_part) return a.real_part < b.real_part;
              return a.imag_abs < b.imag_abs;
            });
}

// Floating path: cluster eigenvalues, then split clusters into real roots
// and conjugate pairs.
inline void cluster_roots(const std::vector<std::complex<double>>& values, double radius,
                          RootSet& rs) {
  struct Cluster {
    std::complex<double> sum;
    int count = 0;
    std::complex<double> centroid() const { return sum / static_cast<double>(count); }
  };
  std::vector<Cluster> clusters;
  for (const auto& z : values) {
    Cluster* best = nullptr;
    double best_dist = radius;
    for (auto& cl : clusters) {
      const double d = std::abs(z - cl.centroid());
      if (d <= best_dist) {
        best = &cl;
        best_dist = d;
      }
    }
    if (best) {
      best->sum += z;
      best->count += 1;
    } else {
      clusters.push_back({z, 1});
    }
  }

  std::vector<bool> used(clusters.size(), false);
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (used[i]) continue;
    const auto z = clusters[i].centroid();
    if (std::abs(z.imag()) <= radius) {
      rs.roots.push_back({Projective<double>::finite(z.real()), clusters[i].count});
      used[i] = true;
      continue;
    }
    // Find the conjugate partner (always present for real coefficients).
    std::size_t partner = i;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < clusters.size(); ++j) {
      if (j == i || used[j]) continue;
      const double d = std::abs(std::conj(z) - clusters[j].centroid());
      if (d < best) {
        best = d;
        partner = j;
      }
    }
    used[i] = true;
    if (partner != i) used[partner] = true;
    rs.complex_pairs.push_back({z.real(), std::abs(z.imag()), clusters[i].count});
  }
}

}  // namespace detail

// Projective real roots with multiplicities. Infinity has multiplicity k
// when the top k coefficients vanish (exactly on the rational backend,
// relative to the coefficient scale on the floating one).
template <class T>
RootSet projective_roots(const BinaryQuartic<T>& q, double tol_mult = kDefaultMultTol) {
  RootSet rs;
  if (q.identically_zero()) {
    rs.identically_zero = true;
    return rs;
  }

  const double scale = q.coefficient_scale();
  auto coeff_vanishes = [&](const T& v) {
    if constexpr (is_exact_v<T>) return v == T(0);
    else return std::abs(to_double(v)) <= tol_mult * scale;
  };

  int inf_mult = 0;
  while (inf_mult < 4 && coeff_vanishes(q.c[static_cast<std::size_t>(inf_mult)])) ++inf_mult;
  if (inf_mult > 0) rs.roots.push_back({Projective<double>::infinity(), inf_mult});

  const int degree = 4 - inf_mult;
  if (degree == 0) {
    detail::sort_root_set(rs);
    return rs;
  }

  // Ascending coefficients of the deflated polynomial.
  std::vector<T> ascending;
  for (int k = 4; k >= inf_mult; --k) ascending.push_back(q.c[static_cast<std::size_t>(k)]);

  if constexpr (is_exact_v<T>) {
    const Poly<T> poly(ascending);
    for (const auto& [factor, mult] : square_free_decomposition(poly)) {
      const int real_count = count_real_roots_sturm(factor);
      const int fdeg = factor.degree();
      // Locate roots numerically; the structure is already certified.
      std::vector<double> fd;
      for (const auto& v : factor.coeffs()) fd.push_back(to_double(v));
      for (auto& v : fd) v /= fd.back();
      auto eigen = detail::companion_eigenvalues(fd);
      std::sort(eigen.begin(), eigen.end(), [](const auto& x, const auto& y) {
        return std::abs(x.imag()) < std::abs(y.imag());
      });
      for (int r = 0; r < real_count; ++r) {
        double x = eigen[static_cast<std::size_t>(r)].real();
        detail::newton_polish(fd, x);
        rs.roots.push_back({Projective<double>::finite(x), mult});
      }
      for (std::size_t r = static_cast<std::size_t>(real_count); r < static_cast<std::size_t>(fdeg); ++r) {
        const auto z = eigen[r];
        if (z.imag() > 0) rs.complex_pairs.push_back({z.real(), std::abs(z.imag()), mult});
      }
    }
  } else {
    std::vector<double> monic;
    for (const auto& v : ascending) monic.push_back(to_double(v));
    for (auto& v : monic) v /= monic.back();
    auto eigen = detail::companion_eigenvalues(monic);
    double root_scale = 1.0;
    for (const auto& z : eigen) root_scale = std::max(root_scale, std::abs(z));
    detail::cluster_roots(eigen, tol_mult * root_scale, rs);
  }

  detail::sort_root_set(rs);
  return rs;
}

// A principal distribution is integrable iff its root is multiple. For the
// identically-zero quartic every direction is principal and multiple.
inline bool is_integrable_principal(const RootSet& rs, const Projective<double>& root,
                                    double match_tol = 1e-9) {
  if (rs.identically_zero) return true;
  const RealRoot* r = rs.find(root, match_tol);
  if (!r) throw std::invalid_argument("is_integrable_principal: root not present in root set");
  return r->multiplicity >= 2;
}

// Pullback of the homogeneous quartic along (x, y) -> m (x, y). Roots map by
// the inverse fractional-linear transformation, multiplicities preserved.
template <class T>
BinaryQuartic<T> mobius_transform(const BinaryQuartic<T>& q, const Matrix<T, 2>& m) {
  const T det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det == T(0)) throw std::invalid_argument("mobius_transform: singular matrix");

  auto binom = [](int n, int k) -> int {
    static constexpr int table[5][5] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
    return table[n][k];
  };
  auto powt = [](const T& v, int e) {
    T acc(1);
    for (int i = 0; i < e; ++i) acc *= v;
    return acc;
  };

  const T& ma = m[0][0];
  const T& mb = m[0][1];
  const T& mc = m[1][0];
  const T& md = m[1][1];

  std::array<T, 5> out;
  for (auto& v : out) v = T(0);
  // q = sum_k h_k x^k y^(4-k) with h_k = c[4-k]; substitute x -> ma x + mb y,
  // y -> mc x + md y and expand binomially.
  for (int k = 0; k <= 4; ++k) {
    const T& hk = q.c[static_cast<std::size_t>(4 - k)];
    if (hk == T(0)) continue;
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= 4 - k; ++j) {
        const int xpow = i + j;
        const T term = hk * T(binom(k, i)) * powt(ma, i) * powt(mb, k - i) *
                       T(binom(4 - k, j)) * powt(mc, j) * powt(md, 4 - k - j);
        out[static_cast<std::size_t>(4 - xpow)] += term;
      }
    }
  }
  return BinaryQuartic<T>{out};
}

// Discriminant via the SL2-invariants of the binary form,
//   I = c4 c0 - c3 c1 / 4 + c2^2 / 12,
//   J = det [[c4, c3/4, c2/6], [c3/4, c2/6, c1/4], [c2/6, c1/4, c0]],
//   disc = 256 (I^3 - 27 J^2);
// zero exactly when some projective root (including infinity) is multiple.
template <class T>
T discriminant(const BinaryQuartic<T>& q) {
  if (q.identically_zero())
    throw std::invalid_argument("discriminant: identically zero quartic");
  const T& c4 = q.c[0];
  const T& c3 = q.c[1];
  const T& c2 = q.c[2];
  const T& c1 = q.c[3];
  const T& c0 = q.c[4];
  const T i2 = c4 * c0 - c3 * c1 / T(4) + c2 * c2 / T(12);
  const T p = c3 / T(4), r = c2 / T(6), s = c1 / T(4);
  const T j3 = c4 * (r * c0 - s * s) - p * (p * c0 - s * r) + r * (p * s - r * r);
  return T(256) * (i2 * i2 * i2 - T(27) * j3 * j3);
}

}  // namespace cone22
