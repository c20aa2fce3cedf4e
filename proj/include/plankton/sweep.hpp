#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "plankton/linear.hpp"

namespace plankton {

// Inclusive uniform axis `lo:hi:n`; n == 1 means the single value lo.
struct GridSpec {
  double lo;
  double hi;
  std::size_t n;

  double at(std::size_t i) const;
};

// Parses "lo:hi:n". Throws InvalidParams on malformed text, n == 0 or hi < lo.
GridSpec parse_grid_spec(std::string_view text);

struct SweepRow {
  double r;
  double gamma;
  Stability e0;
  Stability e1;
  std::optional<Stability> e2;  // absent when gamma <= r
  bool in_S;
  double ns_distance;  // gamma - (1 + r)
};

SweepRow sweep_row(const Params& p);

// Row-major (r outer, gamma inner) evaluation; see kernels::parameter_sweep.
std::vector<SweepRow> parameter_sweep(const GridSpec& r_axis,
                                      const GridSpec& gamma_axis);

inline constexpr std::string_view kSweepHeader =
    "r,gamma,e0_class,e1_class,e2_class,in_S,ns_distance";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace plankton
