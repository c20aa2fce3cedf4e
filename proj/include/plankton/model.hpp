#pragma once

#include <string_view>
#include <vector>

#include "plankton/error.hpp"

namespace plankton {

// Dimensional rates of the original plankton model with linear responses.
struct RawParams {
  double b;       // phytoplankton intrinsic growth rate
  double k;       // carrying capacity
  double alpha;   // consumption rate
  double beta;    // conversion efficiency
  double r_mort;  // zooplankton mortality
  double theta;   // toxin release rate, may be zero
};

// Nondimensional (r, gamma). Both must be strictly positive; use
// make_params() to construct a checked value.
struct Params {
  double r;
  double gamma;

  friend bool operator==(const Params&, const Params&) = default;
};

// Throws Error{InvalidParams} unless r > 0 and gamma > 0 (both finite).
Params make_params(double r, double gamma);

struct State {
  double x;
  double y;

  friend bool operator==(const State&, const State&) = default;
};

struct Rates {
  double dx;
  double dy;
};

enum class FixedPointLabel { E0, E1, E2 };

std::string_view to_string(FixedPointLabel label);

struct FixedPoint {
  FixedPointLabel label;
  State state;
};

Params nondimensionalize(const RawParams& raw);

// Rescales a dimensional (P, Z) pair into model coordinates (P/k, alpha Z/b).
State nondimensionalize_state(const RawParams& raw, double phyto,
                              double zoo);

// Continuous flow: x' = x(1-x) - xy, y' = gamma xy - r y.
Rates vector_field(const State& s, const Params& p);

// Discrete map: x -> x(2-x) - xy, y -> gamma xy + (1-r) y. No clamping.
State apply_map(const State& s, const Params& p);

// E0 and E1 always; E2 = (r/gamma, (gamma-r)/gamma) only when gamma > r.
std::vector<FixedPoint> fixed_points(const Params& p);

// Closed-form coexistence point. Throws DegenerateInput when gamma <= r.
State coexistence_point(const Params& p);

}  // namespace plankton
