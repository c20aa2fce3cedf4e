#include "plankton/sweep.hpp"

#include <charconv>
#include <string>

#include "plankton/csv.hpp"
#include "plankton/discrete.hpp"
#include "plankton/kernels.hpp"

namespace plankton {

double GridSpec::at(std::size_t i) const {
  if (n <= 1) return lo;
  if (i + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

GridSpec parse_grid_spec(std::string_view text) {
  const auto bad = [&](const char* why) {
    return Error(ErrorKind::InvalidParams,
                 "grid '" + std::string(text) + "': " + why + " (want lo:hi:n)");
  };
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw bad("missing ':'");

  const auto num = [&](std::string_view f, auto& out) {
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
    if (ec != std::errc() || ptr != f.data() + f.size()) throw bad("not a number");
  };
  GridSpec g{};
  num(text.substr(0, c1), g.lo);
  num(text.substr(c1 + 1, c2 - c1 - 1), g.hi);
  num(text.substr(c2 + 1), g.n);
  if (g.n == 0) throw bad("n must be positive");
  if (g.hi < g.lo) throw bad("hi < lo");
  return g;
}

SweepRow sweep_row(const Params& p) {
  const auto fps = fixed_points(p);
  SweepRow row{p.r, p.gamma, {}, {}, std::nullopt, false, p.gamma - (1.0 + p.r)};
  for (const auto& fp : fps) {
    const Stability kind = classify_fixed_point(fp, p).kind;
    switch (fp.label) {
      case FixedPointLabel::E0: row.e0 = kind; break;
      case FixedPointLabel::E1: row.e1 = kind; break;
      case FixedPointLabel::E2: row.e2 = kind; break;
    }
  }
  row.in_S = in_param_set_S(p).region.inside;
  return row;
}

std::vector<SweepRow> parameter_sweep(const GridSpec& r_axis,
                                      const GridSpec& gamma_axis) {
  return kernels::parameter_sweep(r_axis, gamma_axis);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const auto& row : rows) {
    out << format_double(row.r) << ',' << format_double(row.gamma) << ','
        << to_string(row.e0) << ',' << to_string(row.e1) << ','
        << (row.e2 ? to_string(*row.e2) : std::string_view{}) << ','
        << (row.in_S ? "true" : "false") << ','
        << format_double(row.ns_distance) << '\n';
  }
}

}  // namespace plankton
