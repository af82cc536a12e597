// Acceptance suite: one line per criterion, all tolerances pinned in code.
//
// Usage: cone22_acceptance <cli-binary> <scenario-dir>
//
// The first nine criteria exercise the library directly (exact rational
// backend wherever the check is algebraic); the last one runs the bundled
// scenarios through the actual CLI binary twice and demands byte-identical
// reports and clean exits.
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cone22/canonical_frame.hpp"
#include "cone22/forms.hpp"
#include "cone22/frame.hpp"
#include "cone22/hypersurface.hpp"
#include "cone22/polynomial.hpp"
#include "cone22/quartic.hpp"
#include "cone22/scenario.hpp"
#include "cone22/weyl.hpp"

using namespace cone22;

namespace {

std::mt19937_64 g_rng(0x5eedc0de);

Rational rnd_rational(int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(g_rng), den(g_rng));
}

Rational rnd_nonzero_rational() {
  for (;;) {
    const Rational r = rnd_rational();
    if (r != 0) return r;
  }
}

double rnd_real(double lo = -3.0, double hi = 3.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(g_rng);
}

int rnd_int(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(g_rng);
}

template <class T>
WeylTensor<T> rnd_weyl() {
  WeylTensor<T> w;
  for (auto& v : w.a) {
    if constexpr (is_exact_v<T>) v = rnd_rational(); else v = rnd_real();
  }
  for (auto& v : w.b) {
    if constexpr (is_exact_v<T>) v = rnd_rational(); else v = rnd_real();
  }
  return w;
}

// Independent 4x4 determinant by permutation expansion.
template <class T>
T det_by_permutations(const Matrix<T, 4>& m) {
  std::array<int, 4> perm{0, 1, 2, 3};
  T acc(0);
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    T term(inversions % 2 == 0 ? 1 : -1);
    for (int r = 0; r < 4; ++r)
      term *= m[static_cast<std::size_t>(r)][static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])];
    acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// c4 (x - r1)...(x - r4) expanded.
BinaryQuartic<Rational> quartic_from_roots(const Rational& c4,
                                           const std::array<Rational, 4>& roots) {
  Poly<Rational> p = Poly<Rational>::constant(c4);
  for (const auto& r : roots) p = p * Poly<Rational>(std::vector<Rational>{-r, Rational(1)});
  return BinaryQuartic<Rational>::from_descending(p.coeff(4), p.coeff(3), p.coeff(2), p.coeff(1),
                                                  p.coeff(0));
}

std::vector<int> multiplicity_profile(const RootSet& rs) {
  std::vector<int> m;
  for (const auto& r : rs.roots) m.push_back(r.multiplicity);
  for (const auto& p : rs.complex_pairs) {
    m.push_back(p.multiplicity);
    m.push_back(p.multiplicity);
  }
  std::sort(m.begin(), m.end());
  return m;
}

// ---------------------------------------------------------------------------

// 1. Exact round trip through the dense tensor, with full validation.
bool criterion_weyl_round_trip(std::string& detail) {
  for (int t = 0; t < 1000; ++t) {
    const auto w = rnd_weyl<Rational>();
    const auto full = reconstruct_full(w);
    if (!validate_full(full, 0.0).empty()) {
      detail = "reconstructed tensor failed validation";
      return false;
    }
    if (!(extract(full, 0.0) == w)) {
      detail = "extract(reconstruct_full(w)) != w";
      return false;
    }
  }
  return true;
}

// 2. Double contraction against 4x the quartic, relative tolerance 1e-9.
bool criterion_contraction_oracle(std::string& detail) {
  for (int t = 0; t < 1000; ++t) {
    const auto w = rnd_weyl<double>();
    const double lambda = rnd_real();
    const double direct_a =
        relative_curvature(w, alpha_bivector(Projective<double>::finite(lambda)));
    const double quartic_a = 4.0 * alpha_quartic(w).eval(lambda);
    const double scale_a = std::max({1.0, std::abs(direct_a), std::abs(quartic_a)});
    if (std::abs(direct_a - quartic_a) > 1e-9 * scale_a) {
      detail = "alpha mismatch at lambda = " + std::to_string(lambda);
      return false;
    }
    const double mu = rnd_real();
    const double direct_b =
        relative_curvature(w, beta_bivector(Projective<double>::finite(mu)));
    const double quartic_b = 4.0 * beta_quartic(w).eval(mu);
    const double scale_b = std::max({1.0, std::abs(direct_b), std::abs(quartic_b)});
    if (std::abs(direct_b - quartic_b) > 1e-9 * scale_b) {
      detail = "beta mismatch at mu = " + std::to_string(mu);
      return false;
    }
  }
  return true;
}

// 3. Closed-form determinant of the reduction system, exactly on rationals.
bool criterion_determinant_identity(std::string& detail) {
  const std::array<Rational, 4> zero{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (int t = 0; t < 1000; ++t) {
    const Rational h22 = rnd_rational(), h33 = rnd_rational();
    const Rational a0 = rnd_rational(), b0 = rnd_rational();
    const auto system = build_system(h22, h33, a0, b0, zero);
    const Rational brute = det_by_permutations(system.m);
    const Rational closed = Rational(4) * (Rational(3) * h22 * b0 + h33 * a0) *
                            (h22 * b0 + Rational(3) * h33 * a0);
    if (brute != closed) {
      detail = "det mismatch";
      return false;
    }
    if (determinant_D(h22, h33, a0, b0) != closed) {
      detail = "determinant_D disagrees with the closed form";
      return false;
    }
  }
  return true;
}

// 4. Singular-point algebra: exact Vieta, the +- sqrt formula at 1e-12, and
// the harmonic cross-ratio at 1e-12.
bool criterion_singular_points(std::string& detail) {
  for (int t = 0; t < 1000; ++t) {
    const auto jr = HypersurfaceJet<Rational>::general(rnd_rational(), rnd_rational(),
                                                       rnd_rational());
    const auto pr = singular_points(jr);
    if (pr.vieta_sum() != Rational(2) * jr.l23 ||
        pr.vieta_product() != jr.l23 * jr.l23 - jr.l22 * jr.l33) {
      detail = "Vieta identity failed";
      return false;
    }
  }
  for (int t = 0; t < 1000; ++t) {
    const auto j = HypersurfaceJet<double>::general(rnd_real(), rnd_real(), rnd_real());
    const auto p = singular_points(j);
    const double prod = j.l22 * j.l33;
    if (p.kind != SingularKind::complex_conjugate) {
      const double root = std::sqrt(prod);
      if (std::abs(p.s1() - (j.l23 + root)) > 1e-12 || std::abs(p.s2() - (j.l23 - root)) > 1e-12) {
        detail = "s = l23 +- sqrt(l22 l33) violated";
        return false;
      }
    }
    if (prod != 0.0) {
      // Cross-ratio (A0, H; F1, F2) with A0 at parameter infinity reduces to
      // (H - F2) / (H - F1); complex pairs included.
      std::complex<double> s1, s2;
      if (p.kind == SingularKind::complex_conjugate) {
        const auto [re, im] = p.complex_parts();
        s1 = {re, im};
        s2 = {re, -im};
      } else {
        s1 = p.s1();
        s2 = p.s2();
      }
      const std::complex<double> h(harmonic_pole(j), 0.0);
      const std::complex<double> cr = (h - s2) / (h - s1);
      if (std::abs(cr - std::complex<double>(-1.0, 0.0)) > 1e-12) {
        detail = "harmonic cross-ratio differs from -1";
        return false;
      }
    }
  }
  return true;
}

// 5. Both distributions integrable <=> invariant form zero, over the full
// 21^3 grid with entries i/10, i = -10..10.
bool criterion_umbilic_equivalence(std::string& detail) {
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j <= 10; ++j)
      for (int k = -10; k <= 10; ++k) {
        const auto jet = HypersurfaceJet<Rational>::general(Rational(i, 10), Rational(j, 10),
                                                            Rational(k, 10));
        const bool both = integrability(jet.reduce()).both();
        const bool ii_zero = invariant_second_form(jet).is_zero_form();
        if (both != ii_zero) {
          detail = "counterexample at grid point";
          return false;
        }
      }
  return true;
}

// 6. A single integrability flag forces coincident singular points, on the
// same grid.
bool criterion_single_flag_implication(std::string& detail) {
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j <= 10; ++j)
      for (int k = -10; k <= 10; ++k) {
        const auto jet = HypersurfaceJet<Rational>::general(Rational(i, 10), Rational(j, 10),
                                                            Rational(k, 10));
        if (!integrability(jet.reduce()).any()) continue;
        if (singular_points(jet).kind != SingularKind::coincident ||
            classify_second_form(jet) != SecondFormClass::degenerate_coincident) {
          detail = "integrable flag without coincident singular points";
          return false;
        }
      }
  return true;
}

// 7. Umbilical data with vanishing leading curvature is consistent, and a
// stationary pole certifies infinity as a multiple root on both sides.
bool criterion_umbilical_consistency(std::string& detail) {
  const auto jet = HypersurfaceJet<Rational>::reduced(
      Rational(0), Rational(0), std::array<Rational, 4>{Rational(0), Rational(0), Rational(0), Rational(0)});
  for (int t = 0; t < 200; ++t) {
    auto w = rnd_weyl<Rational>();
    w.a[0] = 0;
    w.b[0] = 0;
    const auto report = umbilical_consequences(jet, w, 0.0);
    if (!report.clean()) {
      detail = "umbilical consequences not clean: " + report.violations.front().identity;
      return false;
    }
    w.a[1] = 0;
    w.b[1] = 0;
    const auto cone = cone_detection(jet, w, 0.0);
    if (!cone.is_cone || cone.alpha_infinity_multiplicity < 2 ||
        cone.beta_infinity_multiplicity < 2) {
      detail = "cone certificate failed";
      return false;
    }
  }
  return true;
}

// 8. Cartan-lemma residuals: the substitution residual vanishes exactly when
// the mixed coefficients agree, and the standard third-order solution kills
// both compatibility residuals.
bool criterion_cartan_residuals(std::string& detail) {
  for (int t = 0; t < 200; ++t) {
    const Rational l22 = rnd_rational(), l33 = rnd_rational();
    const Rational l23 = rnd_rational();
    const Rational l32 = (t % 2 == 0) ? l23 : rnd_rational();
    const auto residual = cartan_substitution_residual(l22, l23, l32, l33);
    if (residual.is_zero_form() != (l23 == l32)) {
      detail = "substitution residual does not characterize symmetry";
      return false;
    }
    if (residual.coeff("w2", "w3") != l23 - l32) {
      detail = "substitution residual has the wrong coefficient";
      return false;
    }

    const Rational h22 = rnd_rational(), h33 = rnd_rational();
    const Rational a1 = rnd_rational(), b1 = rnd_rational();
    const std::array<Rational, 4> h3{rnd_rational(), rnd_rational(), rnd_rational(),
                                     rnd_rational()};
    const auto [r1, r2] = jet_compatibility_residual(h22, h33, a1, b1, h3);
    if (!r1.is_zero_form() || !r2.is_zero_form()) {
      detail = "standard solution left a nonzero residual";
      return false;
    }
  }
  return true;
}

// 9. Fractional-linear maps preserve the multiset of root multiplicities;
// sending a simple root to infinity zeroes exactly the leading coefficient.
bool criterion_mobius_conservation(std::string& detail) {
  int done = 0;
  while (done < 500) {
    std::array<Rational, 3> pool{rnd_rational(), rnd_rational(), rnd_rational()};
    std::array<Rational, 4> roots;
    for (auto& r : roots) r = pool[static_cast<std::size_t>(rnd_int(0, 2))];
    const auto q = quartic_from_roots(rnd_nonzero_rational(), roots);

    Matrix<Rational, 2> m = {{{rnd_rational(), rnd_rational()},
                              {rnd_rational(), rnd_rational()}}};
    if (m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0) continue;
    const auto qt = mobius_transform(q, m);
    if (multiplicity_profile(projective_roots(q)) !=
        multiplicity_profile(projective_roots(qt))) {
      detail = "multiplicity profile changed under a fractional-linear map";
      return false;
    }
    ++done;
  }
  // Simple root to infinity: distinct roots, send the first one.
  for (int t = 0; t < 100; ++t) {
    std::array<Rational, 4> roots;
    roots[0] = rnd_rational();
    do { roots[1] = rnd_rational(); } while (roots[1] == roots[0]);
    do { roots[2] = rnd_rational(); } while (roots[2] == roots[0] || roots[2] == roots[1]);
    do {
      roots[3] = rnd_rational();
    } while (roots[3] == roots[0] || roots[3] == roots[1] || roots[3] == roots[2]);
    const auto q = quartic_from_roots(rnd_nonzero_rational(), roots);
    const Matrix<Rational, 2> m = {{{roots[0], Rational(1)}, {Rational(1), Rational(0)}}};
    const auto qt = mobius_transform(q, m);
    if (qt.c[0] != 0) {
      detail = "leading coefficient did not vanish";
      return false;
    }
    if (qt.c[1] == 0) {
      detail = "second coefficient vanished for a simple root";
      return false;
    }
  }
  return true;
}

// 10. The bundled scenarios run twice through the CLI binary with exit 0 and
// byte-identical reports.
bool criterion_cli_determinism(const std::string& cli, const std::string& scenario_dir,
                               std::string& detail) {
  const std::vector<std::string> scenarios = {
      "flat_structure.json",      "semiflat_alpha.json",        "quadruple_root.json",
      "full_weyl_valid.json",     "full_weyl_invalid.json",     "hypersurface_definite.json",
      "hypersurface_indefinite.json", "umbilical_cone.json",    "umbilical_moving_pole.json",
      "canonical_reduction.json"};
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  for (const auto& name : scenarios) {
    const std::string input = scenario_dir + "/" + name;
    const std::string out1 = "acceptance_run1.json";
    const std::string out2 = "acceptance_run2.json";
    for (const auto& out : {out1, out2}) {
      const std::string cmd = "\"" + cli + "\" analyze \"" + input + "\" -o \"" + out + "\"";
      const int rc = std::system(cmd.c_str());
      if (rc != 0) {
        detail = name + " exited with " + std::to_string(rc);
        return false;
      }
    }
    const std::string r1 = slurp(out1), r2 = slurp(out2);
    if (r1.empty() || r1 != r2) {
      detail = name + " produced differing or empty reports";
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cone22_acceptance <cli-binary> <scenario-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string scenario_dir = argv[2];

  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"exact Weyl round-trip and validation, 1000 tensors", criterion_weyl_round_trip},
      {"contraction equals 4x quartic at 1e-9, 1000 draws each family",
       criterion_contraction_oracle},
      {"reduction determinant identity, exact, 1000 draws", criterion_determinant_identity},
      {"singular points: Vieta exact, radical formula and cross-ratio at 1e-12",
       criterion_singular_points},
      {"both-integrable <=> invariant form zero on the 21^3 jet grid",
       criterion_umbilic_equivalence},
      {"single integrability flag => coincident singular points on the grid",
       criterion_single_flag_implication},
      {"umbilical consistency and cone certificate, 200 draws",
       criterion_umbilical_consistency},
      {"Cartan residuals: substitution and third-order solution, 200 draws",
       criterion_cartan_residuals},
      {"fractional-linear root multiplicity conservation, 500 maps",
       criterion_mobius_conservation},
      {"CLI determinism and clean exits over the bundled scenarios",
       [&](std::string& d) { return criterion_cli_determinism(cli, scenario_dir, d); }},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[k].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (k + 1) << ": "
              << criteria[k].name;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
