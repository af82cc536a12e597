// Pointwise analysis of a lightlike hypersurface.
//
// A point carries the second-order jet (l22, l23, l33) of the degenerate
// second fundamental form pencil and optionally the third-order
// coefficients (h222, h223, h233, h333). The conformally invariant second
// form is the apolar member of the pencil; its diagonal decides the nature
// of the singular points on the isotropic geodesic through the point and
// the integrability of the two isotropic distributions.
#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cone22/numeric.hpp"
#include "cone22/quartic.hpp"
#include "cone22/weyl.hpp"

namespace cone22 {

// Quadratic form q22 (w2)^2 + 2 q23 w2 w3 + q33 (w3)^2 on the screen
// coordinates.
template <class T>
struct FundForm {
  T q22{}, q23{}, q33{};

  T eval(const T& w2, const T& w3) const {
    return q22 * w2 * w2 + T(2) * q23 * w2 * w3 + q33 * w3 * w3;
  }

  Matrix<T, 2> matrix() const { return {{{q22, q23}, {q23, q33}}}; }

  // Trace against the inverse screen metric ((0,1),(1,0)): 2 q23.
  T metric_trace() const { return T(2) * q23; }

  bool is_zero_form(double tol = 0.0) const {
    return is_zero(q22, tol) && is_zero(q23, tol) && is_zero(q33, tol);
  }

  friend bool operator==(const FundForm& x, const FundForm& y) {
    return x.q22 == y.q22 && x.q23 == y.q23 && x.q33 == y.q33;
  }
};

template <class T>
struct HypersurfaceJet {
  T l22{}, l23{}, l33{};
  std::optional<std::array<T, 4>> h3;  // (h222, h223, h233, h333)
  bool frame_reduced = false;          // vertex moved to the harmonic pole, l23 = 0

  static HypersurfaceJet general(T l22, T l23, T l33,
                                 std::optional<std::array<T, 4>> h3 = std::nullopt) {
    HypersurfaceJet j;
    j.l22 = std::move(l22);
    j.l23 = std::move(l23);
    j.l33 = std::move(l33);
    j.h3 = std::move(h3);
    j.frame_reduced = (j.l23 == T(0));
    return j;
  }

  static HypersurfaceJet reduced(T h22, T h33, std::optional<std::array<T, 4>> h3 = std::nullopt) {
    return general(std::move(h22), T(0), std::move(h33), std::move(h3));
  }

  // The harmonic-pole reduction: moves the frame vertex so l23 = 0; the
  // diagonal entries are unchanged.
  HypersurfaceJet reduce() const {
    HypersurfaceJet j = *this;
    j.l23 = T(0);
    j.frame_reduced = true;
    return j;
  }

  std::array<T, 4> h3_or_zero() const {
    return h3.value_or(std::array<T, 4>{T(0), T(0), T(0), T(0)});
  }
};

// First fundamental form 2 w2 w3: rank 2, signature (1,1).
template <class T>
FundForm<T> first_form() {
  return FundForm<T>{T(0), T(1), T(0)};
}

// Member of the second fundamental form pencil at parameter x.
template <class T>
FundForm<T> pencil_form(const HypersurfaceJet<T>& j, const T& x) {
  return FundForm<T>{j.l22, j.l23 - x, j.l33};
}

// The unique pencil member apolar to the screen metric (x = l23): the
// conformally invariant second fundamental form, diagonal (l22, l33).
template <class T>
FundForm<T> invariant_second_form(const HypersurfaceJet<T>& j) {
  return FundForm<T>{j.l22, T(0), j.l33};
}

enum class SingularKind { two_real, complex_conjugate, coincident };

inline const char* to_string(SingularKind k) {
  switch (k) {
    case SingularKind::two_real: return "two_real";
    case SingularKind::complex_conjugate: return "complex_conjugate";
    case SingularKind::coincident: return "coincident";
  }
  return "coincident";
}

// Roots s = center +- sqrt(disc) of the singular-point quadratic
//   s^2 - 2 l23 s + (l23^2 - l22 l33) = 0
// on the isotropic geodesic parametrized by X = A1 - s A0. The pair is kept
// in (center, disc) form so the Vieta identities are exact on the rational
// backend; s1 carries +, s2 carries -, but nothing downstream may rely on
// that ordering.
template <class T>
struct SingularPair {
  SingularKind kind = SingularKind::coincident;
  T center{};  // (s1 + s2) / 2
  T disc{};    // (s1 - s2)^2 / 4, negative for conjugate pairs

  T vieta_sum() const { return T(2) * center; }
  T vieta_product() const { return center * center - disc; }

  double s1() const { return require_real("s1"), to_double(center) + std::sqrt(to_double(disc)); }
  double s2() const { return require_real("s2"), to_double(center) - std::sqrt(to_double(disc)); }

  // Ascending view, for callers that must not depend on the branch order.
  std::pair<double, double> values_sorted() const {
    const double a = s2(), b = s1();
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  }

  // Conjugate pair as (real part, |imaginary part|).
  std::pair<double, double> complex_parts() const {
    if (kind != SingularKind::complex_conjugate)
      throw std::logic_error("SingularPair: complex_parts of a real pair");
    return {to_double(center), std::sqrt(-to_double(disc))};
  }

 private:
  void require_real(const char* what) const {
    if (kind == SingularKind::complex_conjugate)
      throw std::logic_error(std::string("SingularPair: ") + what + " of a conjugate pair");
  }
};

template <class T>
SingularPair<T> singular_points(const HypersurfaceJet<T>& j, double tol = 0.0) {
  // Quadratic s^2 + B s + C with B = -2 l23, C = l23^2 - l22 l33.
  const T b = T(-2) * j.l23;
  const T c = j.l23 * j.l23 - j.l22 * j.l33;
  SingularPair<T> p;
  p.center = -b / T(2);
  p.disc = p.center * p.center - c;
  if (is_zero(p.disc, tol))
    p.kind = SingularKind::coincident;
  else
    p.kind = p.disc > T(0) ? SingularKind::two_real : SingularKind::complex_conjugate;
  return p;
}

// Parameter of the fourth harmonic point H of A0 with respect to the
// singular points: the Vieta midpoint l23.
template <class T>
T harmonic_pole(const HypersurfaceJet<T>& j) {
  return j.l23;
}

enum class SecondFormClass { definite_two_real, indefinite_complex, degenerate_coincident };

inline const char* to_string(SecondFormClass c) {
  switch (c) {
    case SecondFormClass::definite_two_real: return "definite_two_real";
    case SecondFormClass::indefinite_complex: return "indefinite_complex";
    case SecondFormClass::degenerate_coincident: return "degenerate_coincident";
  }
  return "degenerate_coincident";
}

// Classification by the invariant second form: definite forms carry two real
// singular points, indefinite rank-2 forms a conjugate pair, and forms of
// rank < 2 a double point (which is then the harmonic pole itself). Depends
// only on l22 l33, hence frame independent.
template <class T>
SecondFormClass classify_second_form(const HypersurfaceJet<T>& j, double tol = 0.0) {
  const T product = j.l22 * j.l33;
  if (is_zero(product, tol)) return SecondFormClass::degenerate_coincident;
  return product > T(0) ? SecondFormClass::definite_two_real : SecondFormClass::indefinite_complex;
}

struct IntegrabilityFlags {
  bool alpha = false;
  bool beta = false;
  bool both() const { return alpha && beta; }
  bool any() const { return alpha || beta; }
};

// Integrability of the two isotropic distributions, valid in the reduced
// frame: alpha iff h22 = 0, beta iff h33 = 0. Both together mean the
// hypersurface is totally umbilical.
template <class T>
IntegrabilityFlags integrability(const HypersurfaceJet<T>& j, double tol = 0.0) {
  if (!j.frame_reduced)
    throw std::invalid_argument("integrability: jet must be frame_reduced (l23 = 0)");
  return IntegrabilityFlags{is_zero(j.l22, tol), is_zero(j.l33, tol)};
}

template <class T>
bool is_totally_umbilical(const HypersurfaceJet<T>& j, double tol = 0.0) {
  return invariant_second_form(j).is_zero_form(tol);
}

// Consistency report for totally umbilical data: the curvature blocks must
// have vanishing leading components, the third-order coefficients must
// vanish, and the displacement forms collapse accordingly.
template <class T>
struct UmbilicalReport {
  std::vector<Violation> violations;
  std::array<T, 3> omega_1_0{};  // coefficients on (w1, w2, w3)
  std::array<T, 3> dH_along_A0{};
  bool clean() const { return violations.empty(); }
};

template <class T>
UmbilicalReport<T> umbilical_consequences(const HypersurfaceJet<T>& j, const WeylTensor<T>& w,
                                          double tol = kDefaultTol) {
  if (!j.frame_reduced || !is_totally_umbilical(j, tol))
    throw std::invalid_argument("umbilical_consequences: jet is not totally umbilical");

  UmbilicalReport<T> rep;
  auto check = [&](const T& residual, const std::string& name) {
    if (!is_zero(residual, tol))
      rep.violations.push_back({name, std::abs(to_double(residual))});
  };

  check(w.a[0], "a0=0");
  check(w.b[0], "b0=0");

  const auto h = j.h3_or_zero();
  static constexpr const char* kH3Names[4] = {"h222=0", "h223=0", "h233=0", "h333=0"};
  for (int k = 0; k < 4; ++k) check(h[static_cast<std::size_t>(k)], kH3Names[k]);

  // omega_1^0 = h22 h33 w1 - (h223 + 2 a1) w2 - (h233 + 2 b1) w3, which for
  // clean umbilical data collapses to -2 (a1 w2 + b1 w3).
  rep.omega_1_0 = {j.l22 * j.l33, -(h[1] + T(2) * w.a[1]), -(h[2] + T(2) * w.b[1])};
  const std::array<T, 3> expected = {T(0), T(-2) * w.a[1], T(-2) * w.b[1]};
  static constexpr const char* kOmegaNames[3] = {"omega_1_0 w1-coefficient",
                                                 "omega_1_0 w2-coefficient",
                                                 "omega_1_0 w3-coefficient"};
  for (int k = 0; k < 3; ++k)
    check(rep.omega_1_0[static_cast<std::size_t>(k)] - expected[static_cast<std::size_t>(k)],
          kOmegaNames[k]);

  // dH = w0^0 H + omega_1^0 A0: the A0 component is the same covector.
  rep.dH_along_A0 = rep.omega_1_0;
  return rep;
}

// An umbilical hypersurface whose harmonic pole is stationary (a1 = b1 = 0)
// is the isotropic cone with vertex at the pole; both quartics then have
// infinity as a multiple root, which is certified here through the root
// machinery.
template <class T>
struct ConeDetection {
  bool is_cone = false;
  int alpha_infinity_multiplicity = 0;
  int beta_infinity_multiplicity = 0;
};

template <class T>
ConeDetection<T> cone_detection(const HypersurfaceJet<T>& j, const WeylTensor<T>& w,
                                double tol = kDefaultTol) {
  const auto report = umbilical_consequences(j, w, tol);
  if (!report.clean())
    throw std::invalid_argument("cone_detection: umbilical consistency violated, first: " +
                                report.violations.front().identity);
  ConeDetection<T> out;
  out.is_cone = is_zero(w.a[1], tol) && is_zero(w.b[1], tol);
  if (out.is_cone) {
    // The identically-zero quartic makes every direction principal and
    // multiple; report the full multiplicity.
    auto inf_mult = [&](const BinaryQuartic<T>& q) {
      const RootSet rs = projective_roots(q);
      return rs.identically_zero ? 4 : rs.infinity_multiplicity();
    };
    out.alpha_infinity_multiplicity = inf_mult(alpha_quartic(w));
    out.beta_infinity_multiplicity = inf_mult(beta_quartic(w));
    if (out.alpha_infinity_multiplicity < 2 || out.beta_infinity_multiplicity < 2)
      throw std::logic_error("cone_detection: infinity failed the multiplicity certificate");
  }
  return out;
}

}  // namespace cone22
