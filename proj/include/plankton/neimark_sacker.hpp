#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "plankton/linear.hpp"
#include "plankton/model.hpp"

namespace plankton {

// Critical data for the torus bifurcation of E2 at gamma0 = 1 + r.
struct NSSetup {
  double r;
  double gamma0;
  double xhat;  // r / gamma0
  double yhat;  // 1 / gamma0

  Params critical_params() const { return Params{r, gamma0}; }
};

// Throws OutOfRange unless 0 < r <= 1.
NSSetup ns_setup(double r);

struct PerturbedMultipliers {
  ComplexPair pair;  // imag(lambda1) < 0
  double modulus;    // sqrt(b)
  double trace;      // a = 2 - xhat
  double det;        // b = 1 - xhat + xhat yhat (gamma0 + gamma_star)
};

// Multipliers of the linearisation at the shifted origin with xhat, yhat held
// at their gamma0 values. NotComplexRegime when a^2 - 4b >= 0.
PerturbedMultipliers perturbed_multipliers(const NSSetup& setup,
                                           double gamma_star);

struct Transversality {
  double analytic;           // xhat yhat / 2
  double finite_difference;  // central difference of the modulus, step h
};

Transversality transversality(const NSSetup& setup, double h = 1e-6);

// m = 1..4: |lambda1(0)^m - 1| > 1e-9.
std::array<bool, 4> nondegeneracy(const NSSetup& setup);

// The critical map written in eigen-coordinates: (u, v) = M (X, Y) about
// E2 with M = [[sqrt(3r^2+4r), -r], [0, 2(r+1)]].
class NormalFormMap {
 public:
  explicit NormalFormMap(const NSSetup& setup);

  State apply(double X, double Y) const;

  const Mat2& transform() const { return m_; }
  const Mat2& inverse() const { return m_inv_; }
  // Rotation-like linear part [[a/2, -w], [w, a/2]].
  Mat2 linear_part() const;

 private:
  NSSetup setup_;
  Mat2 m_;
  Mat2 m_inv_;
};

struct NormalFormCoeffs {
  double Fxx, Fxy, Fyy;
  double Gxx, Gxy, Gyy;
  // Third partials in the order xxx, xxy, xyy, yyy; zero for a quadratic map.
  std::array<double, 4> F3{};
  std::array<double, 4> G3{};
  Complex L20, L11, L02, L21;
};

NormalFormCoeffs normal_form_coeffs(const NSSetup& setup);

// -Re[(1 - 2 l1) l2^2 / (1 - l1) L11 L20] - |L11|^2/2 - |L02|^2 + Re(l2 L21)
double discriminating_quantity(const ComplexPair& multipliers,
                               const NormalFormCoeffs& c);

// Rational closed form in r.
double ns_closed_form(double r);

struct NSCoefficient {
  double pipeline;
  double closed_form;
};

NSCoefficient ns_coefficient(const NSSetup& setup);

struct NSReport {
  NSSetup setup;
  ComplexPair multipliers;
  double modulus;
  Transversality transversality;
  std::array<bool, 4> nondegenerate;
  NormalFormCoeffs coeffs;
  double L_pipeline;
  double L_closed_form;
};

NSReport ns_report(double r);

struct CurveOptions {
  double tol = 1e-8;
  double max_band_ratio = 10.0;
  // Relative change of mean radius between window halves.
  double max_drift = 0.01;
};

struct CurveStats {
  double gamma_star = 0.0;
  double r_min = 0.0;
  double r_max = 0.0;
  double r_mean = 0.0;
  double angular_coverage = 0.0;  // accumulated |turning angle|, radians
  double drift = 0.0;
  bool closed = false;
};

struct CurveScan {
  CurveStats stats;
  State center;                // perturbed fixed point r/gamma, (gamma-r)/gamma
  std::vector<State> window;   // post-transient orbit samples
};

// Iterates the map at gamma0 + gamma_star, drops `transient` steps and
// measures the radial band around the true perturbed fixed point over
// `window` steps. The orbit is called a closed curve when
// r_min > 10 tol, r_max / r_min < max_band_ratio, coverage > 2 pi and the
// mean radius is stationary (drift < max_drift).
// PreconditionViolated when the seed is outside M, window < 2 or
// gamma0 + gamma_star <= r.
CurveScan detect_invariant_curve(const NSSetup& setup, double gamma_star,
                                 const State& seed, std::size_t transient,
                                 std::size_t window,
                                 const CurveOptions& options = {});

}  // namespace plankton
