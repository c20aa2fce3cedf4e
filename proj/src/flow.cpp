#include "plankton/flow.hpp"

#include <cmath>
#include <numbers>

#include "plankton/kernels.hpp"

namespace plankton {

namespace {

constexpr double kQuadrantTol = 1e-12;

bool outside_quadrant(const State& s) {
  return s.x < -kQuadrantTol || s.y < -kQuadrantTol;
}

void check_integration(const State& s0, double t_end, double dt) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw Error(ErrorKind::PreconditionViolated, "t_end must be positive");
  }
  if (!(dt > 0.0 && dt <= t_end)) {
    throw Error(ErrorKind::PreconditionViolated, "dt must lie in (0, t_end]");
  }
  if (!(s0.x >= 0.0 && s0.y >= 0.0)) {
    throw Error(ErrorKind::PreconditionViolated,
                "seed must lie in the closed positive quadrant");
  }
}

// Number of full steps; the remainder becomes one shortened step. A remainder
// below a few ulps of t_end is folded into the last full step.
struct StepPlan {
  long full;
  double last;
};

StepPlan plan_steps(double t_end, double dt) {
  const double ratio = t_end / dt;
  long full = static_cast<long>(std::floor(ratio));
  if (ratio - static_cast<double>(full) > 1.0 - 1e-9) ++full;
  double last = t_end - static_cast<double>(full) * dt;
  if (std::abs(last) <= 1e-12 * t_end) last = 0.0;
  if (last < 0.0) {
    --full;
    last = t_end - static_cast<double>(full) * dt;
  }
  return StepPlan{full, last};
}

}  // namespace

State rk4_step(const State& s, const Params& p, double dt) {
  const auto add = [](const State& a, const Rates& k, double h) {
    return State{a.x + h * k.dx, a.y + h * k.dy};
  };
  const Rates k1 = vector_field(s, p);
  const Rates k2 = vector_field(add(s, k1, 0.5 * dt), p);
  const Rates k3 = vector_field(add(s, k2, 0.5 * dt), p);
  const Rates k4 = vector_field(add(s, k3, dt), p);
  return State{s.x + dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx),
               s.y + dt / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy)};
}

Trajectory integrate(const State& s0, const Params& p, double t_end,
                     double dt) {
  check_integration(s0, t_end, dt);
  const StepPlan plan = plan_steps(t_end, dt);
  Trajectory traj;
  traj.times.reserve(static_cast<std::size_t>(plan.full) + 2);
  traj.states.reserve(static_cast<std::size_t>(plan.full) + 2);
  traj.times.push_back(0.0);
  traj.states.push_back(s0);
  State s = s0;
  for (long i = 1; i <= plan.full; ++i) {
    s = rk4_step(s, p, dt);
    traj.left_quadrant = traj.left_quadrant || outside_quadrant(s);
    // The final sample is pinned to t_end to avoid accumulated drift.
    const bool last = (i == plan.full && plan.last == 0.0);
    traj.times.push_back(last ? t_end : static_cast<double>(i) * dt);
    traj.states.push_back(s);
  }
  if (plan.last > 0.0) {
    s = rk4_step(s, p, plan.last);
    traj.left_quadrant = traj.left_quadrant || outside_quadrant(s);
    traj.times.push_back(t_end);
    traj.states.push_back(s);
  }
  return traj;
}

State integrate_final(const State& s0, const Params& p, double t_end,
                      double dt) {
  check_integration(s0, t_end, dt);
  const StepPlan plan = plan_steps(t_end, dt);
  State s = s0;
  for (long i = 0; i < plan.full; ++i) s = rk4_step(s, p, dt);
  if (plan.last > 0.0) s = rk4_step(s, p, plan.last);
  return s;
}

double lyap1_value(const State& s, const Params& p) {
  if (!(s.x > 0.0)) {
    throw Error(ErrorKind::DomainError, "lyap1 requires x > 0");
  }
  return s.x - std::log(s.x) + s.y / p.gamma - 1.0;
}

double lyap1_dot(const State& s, const Params& p) {
  if (!(s.x > 0.0)) {
    throw Error(ErrorKind::DomainError, "lyap1 requires x > 0");
  }
  const double u = 1.0 - s.x;
  return -u * u + s.y * (1.0 - p.r / p.gamma);
}

namespace {

void check_lyap2(const State& s, const Params& p) {
  if (!(s.x > 0.0) || !(s.y > 0.0)) {
    throw Error(ErrorKind::DomainError, "lyap2 requires x > 0 and y > 0");
  }
  if (!(p.gamma > p.r)) {
    throw Error(ErrorKind::DomainError, "lyap2 requires gamma > r");
  }
}

double lyap2_h(const State& s, double xh, double yh, double gamma) {
  return xh * std::log(s.x) - s.x + (yh * std::log(s.y) - s.y) / gamma;
}

}  // namespace

double lyap2_value(const State& s, const Params& p) {
  check_lyap2(s, p);
  const State e = coexistence_point(p);
  return lyap2_h(e, e.x, e.y, p.gamma) - lyap2_h(s, e.x, e.y, p.gamma);
}

double lyap2_dot(const State& s, const Params& p) {
  check_lyap2(s, p);
  const double d = s.x - p.r / p.gamma;
  return -d * d;
}

bool LyapunovReport::passed() const {
  return grid_points > 0 && monotone_fraction == 1.0 &&
         positive_fraction == 1.0 && fd_max_error <= kFdTol &&
         radially_unbounded;
}

namespace detail {

void check_lyapunov_regime(const Params& p, LyapunovTheorem which) {
  if (which == LyapunovTheorem::Extinction && !(p.gamma <= p.r)) {
    throw Error(ErrorKind::PreconditionViolated,
                "extinction Lyapunov function requires 0 < gamma <= r");
  }
  if (which == LyapunovTheorem::Coexistence && !(p.gamma > p.r)) {
    throw Error(ErrorKind::PreconditionViolated,
                "coexistence Lyapunov function requires gamma > r");
  }
}

State lyapunov_target(const Params& p, LyapunovTheorem which) {
  return which == LyapunovTheorem::Extinction ? State{1.0, 0.0}
                                              : coexistence_point(p);
}

namespace {

double lyap_value(const State& s, const Params& p, LyapunovTheorem which) {
  return which == LyapunovTheorem::Extinction ? lyap1_value(s, p)
                                              : lyap2_value(s, p);
}

double lyap_dot(const State& s, const Params& p, LyapunovTheorem which) {
  return which == LyapunovTheorem::Extinction ? lyap1_dot(s, p)
                                              : lyap2_dot(s, p);
}

}  // namespace

LyapunovSample lyapunov_sample(const State& s, const Params& p,
                               LyapunovTheorem which, const State& target) {
  if (std::hypot(s.x - target.x, s.y - target.y) < kExclusionRadius) {
    return LyapunovSample{true, 0.0, 0.0, 0.0};
  }
  const double value = lyap_value(s, p, which);
  const double dot = lyap_dot(s, p, which);
  const Rates f = vector_field(s, p);
  const double h = kFdStep;
  const double fwd = lyap_value({s.x + h * f.dx, s.y + h * f.dy}, p, which);
  const double bwd = lyap_value({s.x - h * f.dx, s.y - h * f.dy}, p, which);
  const double fd = (fwd - bwd) / (2.0 * h);
  return LyapunovSample{false, value, dot, std::abs(fd - dot)};
}

bool lyapunov_radially_unbounded(const Params& p, LyapunovTheorem which) {
  const State c = lyapunov_target(p, which);
  constexpr double kAngles[] = {std::numbers::pi / 8, std::numbers::pi / 4,
                                3 * std::numbers::pi / 8};
  constexpr double kRadii[] = {10.0, 100.0, 1000.0};
  for (double a : kAngles) {
    double prev = -INFINITY;
    for (double radius : kRadii) {
      const State s{c.x + radius * std::cos(a), c.y + radius * std::sin(a)};
      const double v = lyap_value(s, p, which);
      if (!(v > prev)) return false;
      prev = v;
    }
  }
  return true;
}

}  // namespace detail

LyapunovReport verify_lyapunov(const Params& p, LyapunovTheorem which,
                               int grid) {
  return kernels::lyapunov_grid(p, which, grid);
}

}  // namespace plankton
