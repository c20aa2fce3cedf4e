#include "plankton/neimark_sacker.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "plankton/discrete.hpp"

namespace plankton {

NSSetup ns_setup(double r) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw Error(ErrorKind::OutOfRange,
                "bifurcation analysis needs 0 < r <= 1, got " + std::to_string(r));
  }
  const double g0 = 1.0 + r;
  return NSSetup{r, g0, r / g0, 1.0 / g0};
}

PerturbedMultipliers perturbed_multipliers(const NSSetup& setup,
                                           double gamma_star) {
  const double a = 2.0 - setup.xhat;
  const double b =
      1.0 - setup.xhat + setup.xhat * setup.yhat * (setup.gamma0 + gamma_star);
  const double disc = a * a - 4.0 * b;
  if (!(disc < 0.0)) {
    throw Error(ErrorKind::NotComplexRegime,
                "multipliers are real for this perturbation");
  }
  const double im = 0.5 * std::sqrt(-disc);
  return PerturbedMultipliers{
      ComplexPair{Complex(0.5 * a, -im), Complex(0.5 * a, im)},
      std::sqrt(b), a, b};
}

Transversality transversality(const NSSetup& setup, double h) {
  const double up = perturbed_multipliers(setup, h).modulus;
  const double down = perturbed_multipliers(setup, -h).modulus;
  return Transversality{0.5 * setup.xhat * setup.yhat, (up - down) / (2.0 * h)};
}

std::array<bool, 4> nondegeneracy(const NSSetup& setup) {
  const Complex l1 = perturbed_multipliers(setup, 0.0).pair.lambda1;
  std::array<bool, 4> out{};
  Complex power(1.0, 0.0);
  for (int m = 0; m < 4; ++m) {
    power *= l1;
    out[m] = std::abs(power - 1.0) > 1e-9;
  }
  return out;
}

namespace {

double root_term(double r) { return std::sqrt(3.0 * r * r + 4.0 * r); }

}  // namespace

NormalFormMap::NormalFormMap(const NSSetup& setup) : setup_(setup) {
  const double s = root_term(setup.r);
  const double two_r1 = 2.0 * (setup.r + 1.0);
  m_ = Mat2{s, -setup.r, 0.0, two_r1};
  m_inv_ = Mat2{1.0 / s, setup.r / (two_r1 * s), 0.0, 1.0 / two_r1};
}

State NormalFormMap::apply(double X, double Y) const {
  const double u = m_.a11 * X + m_.a12 * Y;
  const double v = m_.a21 * X + m_.a22 * Y;
  // Original map at gamma0 about E2, expanded with xhat + yhat = 1 and
  // gamma0 xhat = r so that no O(1) terms cancel.
  const double g = setup_.gamma0;
  const double du = u * (1.0 - u - v) - setup_.xhat * (u + v);
  const double dv = v * (1.0 + g * u) + g * setup_.yhat * u;
  return State{m_inv_.a11 * du + m_inv_.a12 * dv,
               m_inv_.a21 * du + m_inv_.a22 * dv};
}

Mat2 NormalFormMap::linear_part() const {
  const double r = setup_.r;
  const double half_a = (r + 2.0) / (2.0 * (r + 1.0));
  const double w = root_term(r) / (2.0 * (r + 1.0));
  return Mat2{half_a, -w, w, half_a};
}

NormalFormCoeffs normal_form_coeffs(const NSSetup& setup) {
  const double r = setup.r;
  const double s = root_term(r);
  NormalFormCoeffs c{};
  c.Fxx = -2.0 * s;
  c.Fxy = r * r + r - 2.0;
  c.Fyy = (4.0 * r - 2.0 * r * r * r) / s;
  c.Gxx = 0.0;
  c.Gxy = (r + 1.0) * s;
  c.Gyy = -2.0 * r * (r + 1.0);

  const auto& [Fxxx, Fxxy, Fxyy, Fyyy] = c.F3;
  const auto& [Gxxx, Gxxy, Gxyy, Gyyy] = c.G3;
  c.L20 = Complex(c.Fxx - c.Fyy + 2.0 * c.Gxy, c.Gxx - c.Gyy - 2.0 * c.Fxy) / 8.0;
  c.L11 = Complex(c.Fxx + c.Fyy, c.Gxx + c.Gyy) / 4.0;
  c.L02 = Complex(c.Fxx - c.Fyy - 2.0 * c.Gxy, c.Gxx - c.Gyy + 2.0 * c.Fxy) / 8.0;
  c.L21 = Complex(Fxxx + Fxyy + Gxxy + Gyyy, Gxxx + Gxyy - Fxxy - Fyyy) / 16.0;
  return c;
}

double discriminating_quantity(const ComplexPair& mult,
                               const NormalFormCoeffs& c) {
  const Complex l1 = mult.lambda1;
  const Complex l2 = mult.lambda2;
  const Complex factor = (1.0 - 2.0 * l1) * l2 * l2 / (1.0 - l1);
  return -std::real(factor * c.L11 * c.L20) - 0.5 * std::norm(c.L11) -
         std::norm(c.L02) + std::real(l2 * c.L21);
}

double ns_closed_form(double r) {
  const double num =
      ((((((6.0 * r + 32.0) * r + 64.0) * r + 60.0) * r + 36.0) * r + 19.0) * r) +
      4.0;
  return -num / (2.0 * (r + 1.0) * (3.0 * r + 4.0));
}

NSCoefficient ns_coefficient(const NSSetup& setup) {
  const ComplexPair mult = perturbed_multipliers(setup, 0.0).pair;
  return NSCoefficient{discriminating_quantity(mult, normal_form_coeffs(setup)),
                       ns_closed_form(setup.r)};
}

NSReport ns_report(double r) {
  const NSSetup setup = ns_setup(r);
  const PerturbedMultipliers pm = perturbed_multipliers(setup, 0.0);
  const NSCoefficient coef = ns_coefficient(setup);
  return NSReport{setup,
                  pm.pair,
                  pm.modulus,
                  transversality(setup),
                  nondegeneracy(setup),
                  normal_form_coeffs(setup),
                  coef.pipeline,
                  coef.closed_form};
}

CurveScan detect_invariant_curve(const NSSetup& setup, double gamma_star,
                                 const State& seed, std::size_t transient,
                                 std::size_t window,
                                 const CurveOptions& options) {
  const double gamma = setup.gamma0 + gamma_star;
  if (!(gamma > setup.r)) {
    throw Error(ErrorKind::PreconditionViolated,
                "gamma0 + gamma_star must exceed r");
  }
  if (!in_M(seed).inside) {
    throw Error(ErrorKind::PreconditionViolated, "seed must lie in M");
  }
  if (window < 2) {
    throw Error(ErrorKind::PreconditionViolated, "window must be >= 2");
  }
  const Params p{setup.r, gamma};
  CurveScan scan;
  scan.center = coexistence_point(p);
  scan.stats.gamma_star = gamma_star;

  State s = iterate_final(seed, p, transient);
  scan.window.reserve(window);
  std::vector<double> radii;
  radii.reserve(window);
  double coverage = 0.0;
  double prev_angle = 0.0;
  for (std::size_t k = 0; k < window; ++k) {
    s = apply_map(s, p);
    scan.window.push_back(s);
    const double dx = s.x - scan.center.x;
    const double dy = s.y - scan.center.y;
    radii.push_back(std::hypot(dx, dy));
    const double angle = std::atan2(dy, dx);
    if (k > 0) {
      double turn = angle - prev_angle;
      if (turn > std::numbers::pi) turn -= 2.0 * std::numbers::pi;
      if (turn < -std::numbers::pi) turn += 2.0 * std::numbers::pi;
      coverage += turn;
    }
    prev_angle = angle;
  }

  CurveStats& st = scan.stats;
  const auto [lo, hi] = std::minmax_element(radii.begin(), radii.end());
  st.r_min = *lo;
  st.r_max = *hi;
  const std::size_t half = window / 2;
  double first = 0.0;
  double second = 0.0;
  for (std::size_t k = 0; k < window; ++k) (k < half ? first : second) += radii[k];
  st.r_mean = (first + second) / static_cast<double>(window);
  first /= static_cast<double>(half);
  second /= static_cast<double>(window - half);
  st.drift = st.r_mean > 0.0 ? std::abs(second - first) / st.r_mean : 0.0;
  st.angular_coverage = std::abs(coverage);
  st.closed = st.r_min > 10.0 * options.tol &&
              st.r_max < options.max_band_ratio * st.r_min &&
              st.angular_coverage > 2.0 * std::numbers::pi &&
              st.drift < options.max_drift;
  return scan;
}

}  // namespace plankton
