#include "plankton/csv.hpp"

#include <charconv>
#include <cstdio>

namespace plankton {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // print -0 as 0
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

void write_orbit_csv(std::ostream& out, const std::vector<State>& states,
                     std::size_t first_step) {
  out << kTrajectoryHeader << '\n';
  for (std::size_t k = 0; k < states.size(); ++k) {
    out << (first_step + k) << ',' << format_double(states[k].x) << ','
        << format_double(states[k].y) << '\n';
  }
}

void write_orbit_csv(std::ostream& out, const Orbit& orbit) {
  write_orbit_csv(out, orbit.states, 0);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << kTrajectoryHeader << '\n';
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    out << format_double(traj.times[k]) << ',' << format_double(traj.states[k].x)
        << ',' << format_double(traj.states[k].y) << '\n';
  }
}

namespace {

double parse_field(std::string_view field) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorKind::InvalidParams,
                "malformed CSV field '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::vector<CsvSample> read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTrajectoryHeader) {
    throw Error(ErrorKind::InvalidParams, "missing step_or_t,x,y header");
  }
  std::vector<CsvSample> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw Error(ErrorKind::InvalidParams, "expected three columns: " + line);
    }
    const std::string_view sv(line);
    rows.push_back(CsvSample{parse_field(sv.substr(0, c1)),
                             State{parse_field(sv.substr(c1 + 1, c2 - c1 - 1)),
                                   parse_field(sv.substr(c2 + 1))}});
  }
  return rows;
}

}  // namespace plankton
