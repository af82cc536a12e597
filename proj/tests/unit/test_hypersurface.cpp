#include "cone22/hypersurface.hpp"

#include <complex>

#include "cone22/frame.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cone22;
using cone22::testing::Rng;

using RJet = HypersurfaceJet<Rational>;
using DJet = HypersurfaceJet<double>;
using RProj = Projective<Rational>;

TEST_CASE("first fundamental form is 2 w2 w3") {
  const auto I = first_form<Rational>();
  CHECK(I.eval(1, 1) == 2);
  CHECK(I.eval(1, 0) == 0);
  CHECK(I.eval(1, -1) == -2);
  CHECK(I.q22 == 0);
  CHECK(I.q23 == 1);
  CHECK(I.q33 == 0);
}

TEST_CASE("pencil of second fundamental forms") {
  const auto j = RJet::general(Rational(2), Rational(5), Rational(-3));
  const auto at0 = pencil_form(j, Rational(0));
  CHECK(at0.q22 == 2);
  CHECK(at0.q23 == 5);
  CHECK(at0.q33 == -3);
  const auto apolar = pencil_form(j, j.l23);
  CHECK(apolar.q23 == 0);
  const auto zero_jet = pencil_form(RJet::general(0, 0, 0), Rational(7));
  CHECK(zero_jet.q22 == 0);
  CHECK(zero_jet.q23 == -7);
  CHECK(zero_jet.q33 == 0);
}

TEST_CASE("invariant second form is the apolar pencil member") {
  const auto j = RJet::general(Rational(1), Rational(5), Rational(1));
  const auto ii = invariant_second_form(j);
  CHECK(ii.q22 == 1);
  CHECK(ii.q23 == 0);
  CHECK(ii.q33 == 1);
  CHECK(ii.metric_trace() == 0);

  CHECK(invariant_second_form(RJet::general(0, 0, 0)).is_zero_form());

  Rng rng(71);
  for (int t = 0; t < 100; ++t) {
    const auto jr = RJet::general(rng.rational(), rng.rational(), rng.rational());
    CHECK(invariant_second_form(jr).metric_trace() == 0);
    // The apolarity condition 2(l23 - x) = 0 picks exactly x = l23.
    CHECK(pencil_form(jr, jr.l23).metric_trace() == 0);
  }
}

TEST_CASE("singular points") {
  SUBCASE("definite diagonal gives two real points") {
    const auto p = singular_points(RJet::general(1, 0, 1));
    CHECK(p.kind == SingularKind::two_real);
    CHECK(p.s1() == doctest::Approx(1.0));
    CHECK(p.s2() == doctest::Approx(-1.0));
  }
  SUBCASE("indefinite diagonal gives a conjugate pair") {
    const auto p = singular_points(RJet::general(1, 0, -1));
    CHECK(p.kind == SingularKind::complex_conjugate);
    const auto [re, im] = p.complex_parts();
    CHECK(re == doctest::Approx(0.0));
    CHECK(im == doctest::Approx(1.0));
    CHECK_THROWS_AS(p.s1(), std::logic_error);
  }
  SUBCASE("rank-zero form gives a double point at the pole") {
    const auto j = RJet::general(0, 2, 0);
    const auto p = singular_points(j);
    CHECK(p.kind == SingularKind::coincident);
    CHECK(p.s1() == doctest::Approx(2.0));
    CHECK(p.s2() == doctest::Approx(2.0));
    // Quadratic oracle: plug the double root back in.
    const Rational s = 2;
    CHECK(s * s - Rational(2) * j.l23 * s + (j.l23 * j.l23 - j.l22 * j.l33) == 0);
  }
  SUBCASE("roots satisfy the quadratic over random jets") {
    Rng rng(89);
    for (int t = 0; t < 100; ++t) {
      const auto j = DJet::general(rng.real(-3, 3), rng.real(-3, 3), rng.real(-3, 3));
      const auto p = singular_points(j);
      if (p.kind == SingularKind::complex_conjugate) {
        const auto [re, im] = p.complex_parts();
        const std::complex<double> s(re, im);
        const auto residual = s * s - 2.0 * j.l23 * s + (j.l23 * j.l23 - j.l22 * j.l33);
        CHECK(std::abs(residual) <= 1e-10);
      } else {
        for (double s : {p.s1(), p.s2()}) {
          CHECK(std::abs(s * s - 2.0 * j.l23 * s + (j.l23 * j.l23 - j.l22 * j.l33)) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("vieta identities hold exactly") {
  Rng rng(73);
  for (int t = 0; t < 200; ++t) {
    const auto j = RJet::general(rng.rational(), rng.rational(), rng.rational());
    const auto p = singular_points(j);
    CHECK(p.vieta_sum() == Rational(2) * j.l23);
    CHECK(p.vieta_product() == j.l23 * j.l23 - j.l22 * j.l33);
  }
}

TEST_CASE("harmonic pole") {
  CHECK(harmonic_pole(RJet::general(1, 3, 1)) == 3);

  SUBCASE("cross-ratio of (A0, H; F1, F2) is -1") {
    const auto j = DJet::general(1, 0, 1);
    const auto p = singular_points(j);
    const auto cr = cross_ratio(Projective<double>::infinity(),
                                Projective<double>::finite(harmonic_pole(j)),
                                Projective<double>::finite(p.s1()),
                                Projective<double>::finite(p.s2()));
    CHECK(cr.value() == doctest::Approx(-1.0).epsilon(1e-12));
  }
  SUBCASE("same through the projective-model coordinates") {
    Rng rng(79);
    for (int t = 0; t < 50; ++t) {
      const Rational l22 = rng.nonzero_rational();
      const Rational l33 = rng.nonzero_rational();
      if (l22 * l33 <= 0) continue;  // want distinct real singular points
      const auto j = DJet::general(to_double(l22), rng.real(-3, 3), to_double(l33));
      const auto p = singular_points(j);
      const auto cr = cross_ratio_collinear(
          geodesic_point(Projective<double>::infinity()),
          geodesic_point(Projective<double>::finite(harmonic_pole(j))),
          geodesic_point(Projective<double>::finite(p.s1())),
          geodesic_point(Projective<double>::finite(p.s2())));
      CHECK(cr.value() == doctest::Approx(-1.0).epsilon(1e-10));
    }
  }
  SUBCASE("coincident case lands on the double point") {
    const auto j = RJet::general(0, 2, 0);
    CHECK(harmonic_pole(j) == 2);
    CHECK(singular_points(j).s1() == doctest::Approx(2.0));
  }
}

TEST_CASE("second-form classification") {
  CHECK(classify_second_form(RJet::general(2, 0, 3)) == SecondFormClass::definite_two_real);
  CHECK(classify_second_form(RJet::general(2, 0, -3)) == SecondFormClass::indefinite_complex);
  CHECK(classify_second_form(RJet::general(0, 0, 3)) == SecondFormClass::degenerate_coincident);
  CHECK(classify_second_form(RJet::general(-2, 0, -3)) == SecondFormClass::definite_two_real);

  SUBCASE("frame covariance: only the invariant form matters") {
    Rng rng(83);
    for (int t = 0; t < 100; ++t) {
      const auto j = RJet::general(rng.rational(), rng.rational(), rng.rational());
      CHECK(classify_second_form(j) == classify_second_form(j.reduce()));
    }
  }
}

TEST_CASE("integrability of the isotropic distributions") {
  CHECK(integrability(RJet::reduced(0, 1)).alpha);
  CHECK_FALSE(integrability(RJet::reduced(0, 1)).beta);
  CHECK(integrability(RJet::reduced(0, 0)).both());
  CHECK_FALSE(integrability(RJet::reduced(1, 1)).any());
  CHECK_THROWS_AS(integrability(RJet::general(1, 2, 1)), std::invalid_argument);
}

TEST_CASE("integrability, umbilicity and singular points on a jet grid") {
  // lambda in {-1, -0.9, ..., 1} on both diagonal entries.
  for (int i = -10; i <= 10; ++i) {
    for (int k = -10; k <= 10; ++k) {
      const auto j = RJet::reduced(Rational(i, 10), Rational(k, 10));
      const auto flags = integrability(j);
      // Both integrable <=> invariant form vanishes (total umbilicity).
      CHECK(flags.both() == invariant_second_form(j).is_zero_form());
      // One integrable distribution forces coincident singular points.
      if (flags.any()) {
        CHECK(classify_second_form(j) == SecondFormClass::degenerate_coincident);
        CHECK(singular_points(j).kind == SingularKind::coincident);
      }
    }
  }
}

TEST_CASE("umbilical consequence report") {
  const auto j = RJet::reduced(0, 0, std::array<Rational, 4>{0, 0, 0, 0});

  SUBCASE("clean for compatible curvature") {
    WeylTensor<Rational> w;
    w.a = {0, 2, 1, -1, 3};
    w.b = {0, 3, 0, 2, 1};
    const auto rep = umbilical_consequences(j, w, 0.0);
    CHECK(rep.clean());
    CHECK(rep.omega_1_0 == std::array<Rational, 3>{0, -4, -6});
    CHECK(rep.dH_along_A0 == std::array<Rational, 3>{0, -4, -6});
  }
  SUBCASE("a0 violation is detected") {
    WeylTensor<Rational> w;
    w.a = {1, 0, 0, 0, 0};
    const auto rep = umbilical_consequences(j, w, 0.0);
    REQUIRE_FALSE(rep.clean());
    CHECK(rep.violations.front().identity == "a0=0");
  }
  SUBCASE("third-order coefficients must vanish") {
    const auto jh = RJet::reduced(0, 0, std::array<Rational, 4>{0, 1, 0, 0});
    WeylTensor<Rational> w;
    const auto rep = umbilical_consequences(jh, w, 0.0);
    REQUIRE_FALSE(rep.clean());
    CHECK(rep.violations.front().identity == "h223=0");
  }
  SUBCASE("zero data is clean") {
    WeylTensor<Rational> w;
    const auto rep = umbilical_consequences(j, w, 0.0);
    CHECK(rep.clean());
    CHECK(rep.omega_1_0 == std::array<Rational, 3>{0, 0, 0});
  }
  SUBCASE("non-umbilical jets are rejected") {
    WeylTensor<Rational> w;
    CHECK_THROWS_AS(umbilical_consequences(RJet::reduced(1, 0), w, 0.0),
                    std::invalid_argument);
  }
}

TEST_CASE("cone detection") {
  const auto j = RJet::reduced(0, 0);

  SUBCASE("stationary pole certifies the cone with multiple infinity roots") {
    WeylTensor<Rational> w;
    w.a = {0, 0, 1, 2, -1};
    w.b = {0, 0, -2, 1, 1};
    const auto det = cone_detection(j, w, 0.0);
    CHECK(det.is_cone);
    CHECK(det.alpha_infinity_multiplicity >= 2);
    CHECK(det.beta_infinity_multiplicity >= 2);
  }
  SUBCASE("moving pole is not a cone") {
    WeylTensor<Rational> w;
    w.a = {0, 1, 0, 0, 0};
    const auto det = cone_detection(j, w, 0.0);
    CHECK_FALSE(det.is_cone);
  }
  SUBCASE("flat structure is a cone") {
    WeylTensor<Rational> w;
    const auto det = cone_detection(j, w, 0.0);
    CHECK(det.is_cone);
  }
  SUBCASE("dirty umbilical data is rejected") {
    WeylTensor<Rational> w;
    w.a = {1, 0, 0, 0, 0};
    CHECK_THROWS_AS(cone_detection(j, w, 0.0), std::invalid_argument);
  }
}
