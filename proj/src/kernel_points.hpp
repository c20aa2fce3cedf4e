#pragma once

// Per-point evaluators shared by kernels_omp.cpp and kernels_serial.cpp.
// Regime checks happen before the loops start, so nothing in here throws.

#include <algorithm>
#include <cmath>
#include <string>

#include "plankton/discrete.hpp"
#include "plankton/flow.hpp"

namespace plankton::kernels::points {

inline constexpr double kMTol = 1e-12;

inline void check_grid(int grid, int min) {
  if (grid < min) {
    throw Error(ErrorKind::PreconditionViolated,
                "grid resolution must be at least " + std::to_string(min));
  }
}

inline State lyapunov_node(int i, int j, int grid) {
  return State{2.0 * i / grid, 2.0 * j / grid};
}

// Nodes of the M grid; `offset` = 1 skips the y = 0 row.
inline State m_node(int i, int j, int grid, int offset) {
  const double x = static_cast<double>(i) / (grid - 1);
  const double frac = offset == 0 ? static_cast<double>(j) / (grid - 1)
                                  : static_cast<double>(j) / grid;
  return State{x, frac * (2.0 - x)};
}

// Largest violation of the M inequalities at s (<= 0 means inside).
inline double m_excursion(const State& s) {
  return std::max({-s.x, s.x - 1.0, -s.y, s.y - (2.0 - s.x)});
}

struct LaSallePoint {
  bool skipped;
  double delta;
  bool exact_checked;
  bool crossed;
  double exactness_error;
};

inline LaSallePoint lasalle_point(const State& s, const Params& p,
                                  LaSalleFunction which, double c) {
  const State next = apply_map(s, p);
  if (which == LaSalleFunction::Extinction) {
    if (p.gamma == p.r) {
      return LaSallePoint{false, next.y - s.y, false, false, 0.0};
    }
    const double delta = delta_L1(s, p, c);
    const double definitional = lasalle_L1(next, p, c) - lasalle_L1(s, p, c);
    return LaSallePoint{false, delta, true, false, std::abs(delta - definitional)};
  }
  if (!(s.y > 0.0) || !(p.gamma * s.x + 1.0 - p.r > 0.0)) {
    return LaSallePoint{true, 0.0, false, false, 0.0};
  }
  const double threshold = p.r / p.gamma;
  const double delta = delta_L2(s, p);
  if ((s.x <= threshold) != (next.x <= threshold)) {
    return LaSallePoint{false, delta, false, true, 0.0};
  }
  const double definitional = lasalle_L2(next, p) - lasalle_L2(s, p);
  return LaSallePoint{false, delta, true, false, std::abs(delta - definitional)};
}

inline double lasalle_c(const Params& p, LaSalleFunction which) {
  return which == LaSalleFunction::Extinction && p.gamma < p.r
             ? lasalle_L1_default_c(p)
             : 0.0;
}

}  // namespace plankton::kernels::points
