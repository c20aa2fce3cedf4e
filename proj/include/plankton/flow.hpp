#pragma once

#include <cstddef>
#include <vector>

#include "plankton/model.hpp"

namespace plankton {

inline constexpr double kDefaultDt = 1e-3;

struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  // Set when any recorded state has x < -1e-12 or y < -1e-12.
  bool left_quadrant = false;
};

// One classical fourth-order Runge-Kutta step of the continuous flow.
State rk4_step(const State& s, const Params& p, double dt);

// Fixed-step RK4 from t=0 to t_end. The last step is shortened to land on
// t_end exactly; every step is recorded, including the initial state.
// Throws PreconditionViolated for t_end <= 0, dt outside (0, t_end], or a
// seed outside the closed positive quadrant.
Trajectory integrate(const State& s0, const Params& p, double t_end,
                     double dt = kDefaultDt);

// Same stepping as integrate() without storing the path.
State integrate_final(const State& s0, const Params& p, double t_end,
                      double dt = kDefaultDt);

// Extinction Lyapunov function x - ln x + y/gamma - 1 and its derivative
// along the flow -(1-x)^2 + y(1 - r/gamma). DomainError if x <= 0.
double lyap1_value(const State& s, const Params& p);
double lyap1_dot(const State& s, const Params& p);

// Coexistence Lyapunov function H(xh,yh) - H(x,y) with
// H = xh ln x - x + (yh ln y - y)/gamma; derivative -(x - xh)^2.
// DomainError if x <= 0, y <= 0 or gamma <= r.
double lyap2_value(const State& s, const Params& p);
double lyap2_dot(const State& s, const Params& p);

enum class LyapunovTheorem { Extinction, Coexistence };

struct LyapunovReport {
  std::size_t grid_points = 0;
  // max over samples of max(0, dot) and max(0, -value).
  double max_violation = 0.0;
  // Fraction of samples with dot <= 1e-12.
  double monotone_fraction = 0.0;
  // Fraction of samples with value > 0.
  double positive_fraction = 0.0;
  // max |dot - central difference of L along the flow|, h = 1e-5.
  double fd_max_error = 0.0;
  // L grows along rays at radii 10, 100, 1000 from the equilibrium.
  bool radially_unbounded = false;

  bool passed() const;
};

// Thresholds shared by every grid verification.
inline constexpr double kDotTol = 1e-12;
inline constexpr double kFdStep = 1e-5;
inline constexpr double kFdTol = 1e-8;
inline constexpr double kExclusionRadius = 1e-6;

// Checks the selected Lyapunov function on the uniform grid
// {(2i/n, 2j/n) : 1 <= i, j <= n}, skipping a 1e-6 ball around the target
// equilibrium. Extinction requires 0 < gamma <= r, Coexistence gamma > r;
// otherwise PreconditionViolated. Runs the OpenMP kernel.
LyapunovReport verify_lyapunov(const Params& p, LyapunovTheorem which,
                               int grid);

// Per-point pieces used by the serial and OpenMP grid kernels.
namespace detail {

struct LyapunovSample {
  bool skipped;
  double value;
  double dot;
  double fd_error;
};

void check_lyapunov_regime(const Params& p, LyapunovTheorem which);
State lyapunov_target(const Params& p, LyapunovTheorem which);
LyapunovSample lyapunov_sample(const State& s, const Params& p,
                               LyapunovTheorem which, const State& target);
bool lyapunov_radially_unbounded(const Params& p, LyapunovTheorem which);

}  // namespace detail

}  // namespace plankton
