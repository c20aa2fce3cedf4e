#include <cstddef>

#include "kernel_points.hpp"
#include "plankton/kernels.hpp"

namespace plankton::kernels {

LyapunovReport lyapunov_grid(const Params& p, LyapunovTheorem which, int grid) {
  detail::check_lyapunov_regime(p, which);
  points::check_grid(grid, 1);
  const State target = detail::lyapunov_target(p, which);

  long evaluated = 0;
  long monotone = 0;
  long positive = 0;
  double violation = 0.0;
  double fd_error = 0.0;
#pragma omp parallel for collapse(2) schedule(static) \
    reduction(+ : evaluated, monotone, positive)       \
    reduction(max : violation, fd_error)
  for (int i = 1; i <= grid; ++i) {
    for (int j = 1; j <= grid; ++j) {
      const auto smp = detail::lyapunov_sample(points::lyapunov_node(i, j, grid),
                                               p, which, target);
      if (smp.skipped) continue;
      ++evaluated;
      if (smp.dot <= kDotTol) ++monotone;
      if (smp.value > 0.0) ++positive;
      violation = std::max({violation, smp.dot, -smp.value});
      fd_error = std::max(fd_error, smp.fd_error);
    }
  }

  LyapunovReport rep;
  rep.grid_points = static_cast<std::size_t>(evaluated);
  rep.max_violation = violation;
  if (evaluated > 0) {
    rep.monotone_fraction = static_cast<double>(monotone) / evaluated;
    rep.positive_fraction = static_cast<double>(positive) / evaluated;
  }
  rep.fd_max_error = fd_error;
  rep.radially_unbounded = detail::lyapunov_radially_unbounded(p, which);
  return rep;
}

MInvarianceReport m_invariance_grid(const Params& p, int grid) {
  if (!m_invariance_admissible(p)) {
    throw Error(ErrorKind::PreconditionViolated,
                "M invariance needs 0 < r <= 1 and (gamma <= r or (r, gamma) in S)");
  }
  points::check_grid(grid, 2);

  long escapes = 0;
  double excursion = 0.0;
#pragma omp parallel for collapse(2) schedule(static) \
    reduction(+ : escapes) reduction(max : excursion)
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const State next = apply_map(points::m_node(i, j, grid, 0), p);
      const double e = points::m_excursion(next);
      if (e > points::kMTol) ++escapes;
      excursion = std::max(excursion, e);
    }
  }
  MInvarianceReport rep;
  rep.samples = static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid);
  rep.escapes = static_cast<std::size_t>(escapes);
  rep.max_excursion = excursion;
  return rep;
}

LaSalleReport lasalle_grid(const Params& p, LaSalleFunction which, int grid) {
  check_lasalle_regime(p, which);
  points::check_grid(grid, 2);
  const double c = points::lasalle_c(p, which);
  const int offset = which == LaSalleFunction::Coexistence ? 1 : 0;

  long samples = 0;
  long exact = 0;
  long crossings = 0;
  double max_delta = -INFINITY;
  double max_err = 0.0;
#pragma omp parallel for collapse(2) schedule(static)          \
    reduction(+ : samples, exact, crossings) \
    reduction(max : max_delta, max_err)
  for (int i = 0; i < grid; ++i) {
    for (int j = offset; j < grid + offset; ++j) {
      const auto pt = points::lasalle_point(points::m_node(i, j, grid, offset),
                                            p, which, c);
      if (pt.skipped) continue;
      ++samples;
      max_delta = std::max(max_delta, pt.delta);
      if (pt.crossed) ++crossings;
      if (pt.exact_checked) {
        ++exact;
        max_err = std::max(max_err, pt.exactness_error);
      }
    }
  }
  LaSalleReport rep;
  rep.samples = static_cast<std::size_t>(samples);
  rep.max_delta = max_delta;
  rep.max_exactness_error = max_err;
  rep.exactness_samples = static_cast<std::size_t>(exact);
  rep.branch_crossings = static_cast<std::size_t>(crossings);
  rep.monotone_fallback = which == LaSalleFunction::Extinction && p.gamma == p.r;
  return rep;
}

std::vector<SweepRow> parameter_sweep(const GridSpec& r_axis,
                                      const GridSpec& gamma_axis) {
  const std::size_t nr = r_axis.n;
  const std::size_t ng = gamma_axis.n;
  if (!(r_axis.lo > 0.0) || !(gamma_axis.lo > 0.0)) {
    throw Error(ErrorKind::InvalidParams, "sweep axes must be positive");
  }
  std::vector<SweepRow> rows(nr * ng);
  const long total = static_cast<long>(nr * ng);
#pragma omp parallel for schedule(static)
  for (long k = 0; k < total; ++k) {
    const auto i = static_cast<std::size_t>(k) / ng;
    const auto j = static_cast<std::size_t>(k) % ng;
    rows[static_cast<std::size_t>(k)] =
        sweep_row(Params{r_axis.at(i), gamma_axis.at(j)});
  }
  return rows;
}

}  // namespace plankton::kernels
