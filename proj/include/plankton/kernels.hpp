#pragma once

// Grid-level verification kernels. The functions in `kernels` run their
// outer loops with OpenMP; `kernels::serial` holds the plain reference loops
// the tests compare against. Both evaluate the same per-point code and reduce
// with order-insensitive operations (max, count), so results are identical.

#include <vector>

#include "plankton/discrete.hpp"
#include "plankton/flow.hpp"
#include "plankton/sweep.hpp"

namespace plankton::kernels {

LyapunovReport lyapunov_grid(const Params& p, LyapunovTheorem which, int grid);

// apply_map on the n x n grid x_i = i/(n-1), y_j = j/(n-1) (2 - x_i) must stay
// in M (tolerance 1e-12). PreconditionViolated unless m_invariance_admissible.
MInvarianceReport m_invariance_grid(const Params& p, int grid);

// Delta L <= 0 and closed-form exactness on an n x n grid over M.
LaSalleReport lasalle_grid(const Params& p, LaSalleFunction which, int grid);

std::vector<SweepRow> parameter_sweep(const GridSpec& r_axis,
                                      const GridSpec& gamma_axis);

namespace serial {

LyapunovReport lyapunov_grid(const Params& p, LyapunovTheorem which, int grid);
MInvarianceReport m_invariance_grid(const Params& p, int grid);
LaSalleReport lasalle_grid(const Params& p, LaSalleFunction which, int grid);
std::vector<SweepRow> parameter_sweep(const GridSpec& r_axis,
                                      const GridSpec& gamma_axis);

}  // namespace serial

}  // namespace plankton::kernels
