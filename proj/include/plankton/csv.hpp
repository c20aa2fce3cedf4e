#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "plankton/discrete.hpp"
#include "plankton/flow.hpp"

namespace plankton {

inline constexpr std::string_view kTrajectoryHeader = "step_or_t,x,y";

// Shortest round-trip-safe text for a double: 17 significant digits.
std::string format_double(double v);

void write_orbit_csv(std::ostream& out, const Orbit& orbit);
void write_orbit_csv(std::ostream& out, const std::vector<State>& states,
                     std::size_t first_step);
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

struct CsvSample {
  double key;  // step index or time
  State state;
};

// Reads a `step_or_t,x,y` file back. Throws InvalidParams on a bad header or
// malformed row.
std::vector<CsvSample> read_trajectory_csv(std::istream& in);

}  // namespace plankton
