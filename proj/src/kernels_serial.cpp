#include <cstddef>

#include "kernel_points.hpp"
#include "plankton/kernels.hpp"

namespace plankton::kernels::serial {

LyapunovReport lyapunov_grid(const Params& p, LyapunovTheorem which, int grid) {
  detail::check_lyapunov_regime(p, which);
  points::check_grid(grid, 1);
  const State target = detail::lyapunov_target(p, which);

  LyapunovReport rep;
  std::size_t monotone = 0;
  std::size_t positive = 0;
  for (int i = 1; i <= grid; ++i) {
    for (int j = 1; j <= grid; ++j) {
      const auto smp = detail::lyapunov_sample(points::lyapunov_node(i, j, grid),
                                               p, which, target);
      if (smp.skipped) continue;
      ++rep.grid_points;
      if (smp.dot <= kDotTol) ++monotone;
      if (smp.value > 0.0) ++positive;
      rep.max_violation = std::max({rep.max_violation, smp.dot, -smp.value});
      rep.fd_max_error = std::max(rep.fd_max_error, smp.fd_error);
    }
  }
  if (rep.grid_points > 0) {
    const auto n = static_cast<double>(rep.grid_points);
    rep.monotone_fraction = static_cast<double>(monotone) / n;
    rep.positive_fraction = static_cast<double>(positive) / n;
  }
  rep.radially_unbounded = detail::lyapunov_radially_unbounded(p, which);
  return rep;
}

MInvarianceReport m_invariance_grid(const Params& p, int grid) {
  if (!m_invariance_admissible(p)) {
    throw Error(ErrorKind::PreconditionViolated,
                "M invariance needs 0 < r <= 1 and (gamma <= r or (r, gamma) in S)");
  }
  points::check_grid(grid, 2);
  MInvarianceReport rep;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const State next = apply_map(points::m_node(i, j, grid, 0), p);
      const double e = points::m_excursion(next);
      ++rep.samples;
      if (e > points::kMTol) ++rep.escapes;
      rep.max_excursion = std::max(rep.max_excursion, e);
    }
  }
  return rep;
}

LaSalleReport lasalle_grid(const Params& p, LaSalleFunction which, int grid) {
  check_lasalle_regime(p, which);
  points::check_grid(grid, 2);
  const double c = points::lasalle_c(p, which);
  const int offset = which == LaSalleFunction::Coexistence ? 1 : 0;

  LaSalleReport rep;
  rep.monotone_fallback = which == LaSalleFunction::Extinction && p.gamma == p.r;
  for (int i = 0; i < grid; ++i) {
    for (int j = offset; j < grid + offset; ++j) {
      const auto pt = points::lasalle_point(points::m_node(i, j, grid, offset),
                                            p, which, c);
      if (pt.skipped) continue;
      ++rep.samples;
      rep.max_delta = std::max(rep.max_delta, pt.delta);
      if (pt.crossed) ++rep.branch_crossings;
      if (pt.exact_checked) {
        ++rep.exactness_samples;
        rep.max_exactness_error = std::max(rep.max_exactness_error, pt.exactness_error);
      }
    }
  }
  return rep;
}

std::vector<SweepRow> parameter_sweep(const GridSpec& r_axis,
                                      const GridSpec& gamma_axis) {
  if (!(r_axis.lo > 0.0) || !(gamma_axis.lo > 0.0)) {
    throw Error(ErrorKind::InvalidParams, "sweep axes must be positive");
  }
  std::vector<SweepRow> rows;
  rows.reserve(r_axis.n * gamma_axis.n);
  for (std::size_t i = 0; i < r_axis.n; ++i) {
    for (std::size_t j = 0; j < gamma_axis.n; ++j) {
      rows.push_back(sweep_row(Params{r_axis.at(i), gamma_axis.at(j)}));
    }
  }
  return rows;
}

}  // namespace plankton::kernels::serial
