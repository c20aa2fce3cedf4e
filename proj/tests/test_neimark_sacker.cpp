#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "plankton/neimark_sacker.hpp"

namespace plankton {
namespace {

double grid_r(int i) { return i / 100.0; }  // 100 values in (0, 1]

TEST(Setup, Examples) {
  const NSSetup a = ns_setup(0.5);
  EXPECT_EQ(a.gamma0, 1.5);
  EXPECT_DOUBLE_EQ(a.xhat, 1.0 / 3);
  EXPECT_DOUBLE_EQ(a.yhat, 2.0 / 3);
  const NSSetup b = ns_setup(1.0);
  EXPECT_EQ(b.gamma0, 2.0);
  EXPECT_EQ(b.xhat, 0.5);
  EXPECT_EQ(b.yhat, 0.5);
  const NSSetup c = ns_setup(0.3);
  EXPECT_DOUBLE_EQ(c.xhat, 3.0 / 13);
  EXPECT_DOUBLE_EQ(c.yhat, 10.0 / 13);
  EXPECT_NEAR(c.xhat + c.yhat, 1.0, 1e-15);
}

TEST(Setup, OutOfRange) {
  for (double r : {0.0, -0.1, 1.5}) {
    try {
      ns_setup(r);
      FAIL() << "expected OutOfRange for r=" << r;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
    }
  }
}

TEST(Multipliers, Critical) {
  const PerturbedMultipliers m = perturbed_multipliers(ns_setup(0.5), 0.0);
  EXPECT_NEAR(m.pair.lambda1.real(), 5.0 / 6, 1e-15);
  EXPECT_NEAR(m.pair.lambda1.imag(), -std::sqrt(11.0) / 6, 1e-15);
  EXPECT_NEAR(m.pair.lambda2.imag(), std::sqrt(11.0) / 6, 1e-15);
  EXPECT_NEAR(m.modulus, 1.0, 1e-15);
}

TEST(Multipliers, Perturbed) {
  const PerturbedMultipliers m = perturbed_multipliers(ns_setup(0.5), 0.01);
  EXPECT_NEAR(m.modulus, std::sqrt(1.0 + 0.01 * 2.0 / 9.0), 1e-15);
  EXPECT_NEAR(m.modulus, 1.0011105, 1e-7);
}

TEST(Multipliers, UnitModulusAcrossR) {
  for (int i = 1; i <= 100; ++i) {
    const PerturbedMultipliers m = perturbed_multipliers(ns_setup(grid_r(i)), 0.0);
    ASSERT_NEAR(m.det, 1.0, 1e-15);
    ASSERT_NEAR(std::abs(m.pair.lambda1), 1.0, 1e-12);
    ASSERT_NEAR(std::abs(m.pair.lambda2), 1.0, 1e-12);
    ASSERT_LT(m.pair.lambda1.imag(), 0.0);
  }
}

TEST(Multipliers, MatchJacobianAtCriticalPoint) {
  for (int i = 1; i <= 100; ++i) {
    const NSSetup s = ns_setup(grid_r(i));
    const Params p = s.critical_params();
    const ComplexPair e = eigen2(jacobian_map(coexistence_point(p), p));
    const ComplexPair m = perturbed_multipliers(s, 0.0).pair;
    ASSERT_LT(std::abs(e.lambda1 - m.lambda1), 1e-14);
  }
}

TEST(Multipliers, RealRegime) {
  try {
    perturbed_multipliers(ns_setup(0.5), -1.4);
    FAIL() << "expected NotComplexRegime";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotComplexRegime);
  }
}

TEST(Transversality, Examples) {
  const Transversality a = transversality(ns_setup(0.5));
  EXPECT_NEAR(a.analytic, 1.0 / 9, 1e-12);
  EXPECT_NEAR(a.finite_difference, 1.0 / 9, 1e-6);
  EXPECT_NEAR(transversality(ns_setup(1.0)).analytic, 0.125, 1e-15);
  EXPECT_GT(transversality(ns_setup(1e-6)).analytic, 0.0);
}

TEST(Transversality, FiniteDifferenceAgreesAcrossR) {
  for (int i = 1; i <= 100; ++i) {
    const Transversality t = transversality(ns_setup(grid_r(i)));
    ASSERT_GT(t.analytic, 0.0);
    ASSERT_NEAR(t.analytic, t.finite_difference, 1e-6);
  }
}

TEST(Nondegeneracy, Examples) {
  for (double r : {0.5, 1.0, 0.1}) {
    const auto nd = nondegeneracy(ns_setup(r));
    for (int m = 0; m < 4; ++m) EXPECT_TRUE(nd[m]) << "r=" << r << " m=" << m + 1;
  }
}

TEST(NormalForm, ExampleCoefficients) {
  const NormalFormCoeffs c = normal_form_coeffs(ns_setup(0.5));
  EXPECT_NEAR(c.Fxx, -2 * std::sqrt(2.75), 1e-15);
  EXPECT_NEAR(c.Fxx, -3.316625, 1e-6);
  EXPECT_NEAR(c.L20.real(), 0.125 / std::sqrt(2.75), 1e-15);
  EXPECT_NEAR(c.L20.real(), 0.075378, 1e-6);
  EXPECT_NEAR(c.L20.imag(), 0.5, 1e-15);
  EXPECT_EQ(c.L21, Complex(0.0, 0.0));
  for (double v : c.F3) EXPECT_EQ(v, 0.0);
  for (double v : c.G3) EXPECT_EQ(v, 0.0);
}

TEST(NormalForm, L11SquaredModulus) {
  for (int i = 1; i <= 100; ++i) {
    const double r = grid_r(i);
    const NormalFormCoeffs c = normal_form_coeffs(ns_setup(r));
    const double expected = r * std::pow(r + 1, 4) / (3 * r + 4);
    ASSERT_NEAR(std::norm(c.L11), expected, 1e-12 * expected);
  }
}

State conjugated_raw(const NSSetup& s, double X, double Y) {
  const NormalFormMap nf(s);
  const Mat2& m = nf.transform();
  const Mat2& mi = nf.inverse();
  const Params p = s.critical_params();
  const State e{s.xhat, s.yhat};
  const State n = apply_map({e.x + m.a11 * X + m.a12 * Y, e.y + m.a21 * X + m.a22 * Y}, p);
  const double du = n.x - e.x;
  const double dv = n.y - e.y;
  return {mi.a11 * du + mi.a12 * dv, mi.a21 * du + mi.a22 * dv};
}

TEST(NormalForm, ApplyMatchesRawConjugation) {
  for (double r : {0.05, 0.5, 1.0}) {
    const NSSetup s = ns_setup(r);
    const NormalFormMap nf(s);
    for (int i = -5; i <= 5; ++i) {
      for (int j = -5; j <= 5; ++j) {
        const double X = 0.02 * i;
        const double Y = 0.02 * j;
        const State a = nf.apply(X, Y);
        const State b = conjugated_raw(s, X, Y);
        ASSERT_NEAR(a.x, b.x, 1e-13);
        ASSERT_NEAR(a.y, b.y, 1e-13);
      }
    }
    const State origin = nf.apply(0, 0);
    EXPECT_EQ(origin.x, 0.0);
    EXPECT_EQ(origin.y, 0.0);
  }
}

TEST(NormalForm, InverseIsInverse) {
  for (int i = 1; i <= 100; ++i) {
    const NormalFormMap nf(ns_setup(grid_r(i)));
    const Mat2& m = nf.transform();
    const Mat2& mi = nf.inverse();
    ASSERT_NEAR(m.a11 * mi.a11 + m.a12 * mi.a21, 1.0, 1e-14);
    ASSERT_NEAR(m.a11 * mi.a12 + m.a12 * mi.a22, 0.0, 1e-14);
    ASSERT_NEAR(m.a21 * mi.a11 + m.a22 * mi.a21, 0.0, 1e-14);
    ASSERT_NEAR(m.a21 * mi.a12 + m.a22 * mi.a22, 1.0, 1e-14);
  }
}

TEST(NormalForm, LinearPartIsRotation) {
  for (int i = 1; i <= 100; ++i) {
    const NSSetup s = ns_setup(grid_r(i));
    const NormalFormMap nf(s);
    const Mat2 lp = nf.linear_part();
    const double h = 1e-3;
    const State xp = nf.apply(h, 0), xm = nf.apply(-h, 0);
    const State yp = nf.apply(0, h), ym = nf.apply(0, -h);
    ASSERT_NEAR((xp.x - xm.x) / (2 * h), lp.a11, 1e-10);
    ASSERT_NEAR((yp.x - ym.x) / (2 * h), lp.a12, 1e-10);
    ASSERT_NEAR((xp.y - xm.y) / (2 * h), lp.a21, 1e-10);
    ASSERT_NEAR((yp.y - ym.y) / (2 * h), lp.a22, 1e-10);
    const Complex l1 = perturbed_multipliers(s, 0.0).pair.lambda1;
    ASSERT_NEAR(lp.a11, l1.real(), 1e-14);
    ASSERT_NEAR(lp.a21, -l1.imag(), 1e-14);
    ASSERT_EQ(lp.a11, lp.a22);
    ASSERT_EQ(lp.a12, -lp.a21);
  }
}

TEST(NormalForm, ClosedFormPartialsMatchDifferences) {
  for (int i = 1; i <= 100; ++i) {
    const NSSetup s = ns_setup(grid_r(i));
    const NormalFormCoeffs c = normal_form_coeffs(s);
    const oracle::Partials d = oracle::normal_form_partials(NormalFormMap(s));
    ASSERT_NEAR(d.xx[0], c.Fxx, 1e-6);
    ASSERT_NEAR(d.xy[0], c.Fxy, 1e-6);
    ASSERT_NEAR(d.yy[0], c.Fyy, 1e-6);
    ASSERT_NEAR(d.xx[1], c.Gxx, 1e-6);
    ASSERT_NEAR(d.xy[1], c.Gxy, 1e-6);
    ASSERT_NEAR(d.yy[1], c.Gyy, 1e-6);
    for (int k = 0; k < 2; ++k) {
      ASSERT_NEAR(d.xxx[k], 0.0, 1e-4);
      ASSERT_NEAR(d.xxy[k], 0.0, 1e-4);
      ASSERT_NEAR(d.xyy[k], 0.0, 1e-4);
      ASSERT_NEAR(d.yyy[k], 0.0, 1e-4);
    }
  }
}

TEST(Coefficient, MatchesIndependentOracle) {
  for (int i = 1; i <= 100; ++i) {
    const double r = grid_r(i);
    const NSSetup s = ns_setup(r);
    const oracle::DiscriminatingOracle o = oracle::discriminating_oracle(r);
    const NormalFormCoeffs c = normal_form_coeffs(s);
    ASSERT_NEAR(o.Fxx, c.Fxx, 1e-9);
    ASSERT_NEAR(o.Fxy, c.Fxy, 1e-9);
    ASSERT_NEAR(o.Fyy, c.Fyy, 1e-9);
    ASSERT_NEAR(o.Gxx, c.Gxx, 1e-9);
    ASSERT_NEAR(o.Gxy, c.Gxy, 1e-9);
    ASSERT_NEAR(o.Gyy, c.Gyy, 1e-9);
    ASSERT_NEAR(ns_coefficient(s).pipeline, o.value, 1e-9) << "r=" << r;
  }
}

TEST(Coefficient, NegativeAcrossR) {
  for (int i = 1; i <= 100; ++i) {
    ASSERT_LT(ns_coefficient(ns_setup(grid_r(i))).pipeline, 0.0);
  }
}

TEST(Coefficient, ExampleValue) {
  const NSCoefficient c = ns_coefficient(ns_setup(0.5));
  EXPECT_LT(c.pipeline, 0.0);
  EXPECT_NEAR(c.pipeline, -2.1, 0.05);
  EXPECT_NEAR(c.pipeline, oracle::discriminating_oracle(0.5).value, 1e-9);
}

TEST(Coefficient, ClosedFormPolynomial) {
  // Direct evaluation of -(6r^6+32r^5+64r^4+60r^3+36r^2+19r+4) / (2(r+1)(3r+4)).
  EXPECT_NEAR(ns_closed_form(0.5), -35.09375 / 16.5, 1e-14);
  EXPECT_NEAR(ns_closed_form(1.0), -221.0 / 28.0, 1e-14);
  EXPECT_LT(ns_coefficient(ns_setup(1.0)).pipeline, 0.0);
}

TEST(Report, Consistent) {
  const NSReport rep = ns_report(0.5);
  EXPECT_EQ(rep.setup.gamma0, 1.5);
  EXPECT_NEAR(rep.modulus, 1.0, 1e-12);
  EXPECT_GT(rep.transversality.analytic, 0.0);
  EXPECT_LT(rep.L_pipeline, 0.0);
  EXPECT_EQ(rep.L_closed_form, ns_closed_form(0.5));
}

TEST(Curve, ClosedAboveCriticality) {
  const CurveScan scan = detect_invariant_curve(ns_setup(0.5), 0.01, {0.3, 0.7}, 5000, 1000);
  EXPECT_TRUE(scan.stats.closed);
  EXPECT_EQ(scan.window.size(), 1000u);
  EXPECT_LE(scan.stats.r_min, scan.stats.r_max);
  EXPECT_GT(scan.stats.angular_coverage, 2 * std::numbers::pi);
  EXPECT_NEAR(scan.center.x, 0.5 / 1.51, 1e-15);
}

TEST(Curve, NotClosedAtCriticality) {
  EXPECT_FALSE(detect_invariant_curve(ns_setup(0.5), 0.0, {0.3, 0.7}, 5000, 1000).stats.closed);
}

TEST(Curve, BelowCriticalityConvergesToE2) {
  const CurveScan scan = detect_invariant_curve(ns_setup(0.5), -0.05, {0.3, 0.7}, 5000, 1000);
  EXPECT_FALSE(scan.stats.closed);
  EXPECT_LT(scan.stats.r_max, 1e-6);
}

TEST(Curve, Preconditions) {
  const NSSetup s = ns_setup(0.5);
  EXPECT_THROW(detect_invariant_curve(s, 0.01, {1.2, 0.1}, 10, 10), Error);
  EXPECT_THROW(detect_invariant_curve(s, 0.01, {0.3, 0.7}, 10, 1), Error);
  EXPECT_THROW(detect_invariant_curve(s, -1.1, {0.3, 0.7}, 10, 10), Error);
}

TEST(Curve, RadiusScalesAsSqrtPerturbation) {
  const NSSetup s = ns_setup(0.5);
  const double small = detect_invariant_curve(s, 0.005, {0.3, 0.7}, 20000, 2000).stats.r_mean;
  const double large = detect_invariant_curve(s, 0.02, {0.3, 0.7}, 20000, 2000).stats.r_mean;
  const double ratio = large / small;
  EXPECT_GE(ratio, 1.8);
  EXPECT_LE(ratio, 2.2);
}

TEST(Curve, TwoSeedsShareTheBand) {
  const NSSetup s = ns_setup(0.5);
  const CurveStats a = detect_invariant_curve(s, 0.01, {0.3, 0.7}, 5000, 1000).stats;
  const CurveStats b = detect_invariant_curve(s, 0.01, {0.8, 1.0}, 5000, 1000).stats;
  ASSERT_TRUE(a.closed);
  ASSERT_TRUE(b.closed);
  const double width = std::max(a.r_max - a.r_min, b.r_max - b.r_min);
  EXPECT_LE(std::abs(a.r_min - b.r_min), 0.05 * width);
  EXPECT_LE(std::abs(a.r_max - b.r_max), 0.05 * width);
}

}  // namespace
}  // namespace plankton
