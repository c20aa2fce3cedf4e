#include "plankton/model.hpp"

#include <cmath>
#include <string>

namespace plankton {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRaw: return "InvalidRaw";
    case ErrorKind::NonPositiveGamma: return "NonPositiveGamma";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotComplexRegime: return "NotComplexRegime";
  }
  return "Unknown";
}

std::string_view to_string(FixedPointLabel label) {
  switch (label) {
    case FixedPointLabel::E0: return "E0";
    case FixedPointLabel::E1: return "E1";
    case FixedPointLabel::E2: return "E2";
  }
  return "?";
}

Params make_params(double r, double gamma) {
  if (!(std::isfinite(r) && r > 0.0)) {
    throw Error(ErrorKind::InvalidParams,
                "r must be positive, got " + std::to_string(r));
  }
  if (!(std::isfinite(gamma) && gamma > 0.0)) {
    throw Error(ErrorKind::InvalidParams,
                "gamma must be positive, got " + std::to_string(gamma));
  }
  return Params{r, gamma};
}

namespace {

void check_raw(const RawParams& raw) {
  const double fields[] = {raw.b, raw.k, raw.alpha, raw.beta, raw.r_mort};
  for (double v : fields) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw Error(ErrorKind::InvalidRaw,
                  "b, k, alpha, beta and r must be positive");
    }
  }
  // A toxin-free population (theta = 0) is allowed.
  if (!(std::isfinite(raw.theta) && raw.theta >= 0.0)) {
    throw Error(ErrorKind::InvalidRaw, "theta must be non-negative");
  }
}

}  // namespace

Params nondimensionalize(const RawParams& raw) {
  check_raw(raw);
  if (raw.beta <= raw.theta) {
    throw Error(ErrorKind::NonPositiveGamma,
                "beta must exceed theta for a positive gamma");
  }
  return Params{raw.r_mort / raw.b, (raw.beta - raw.theta) * raw.k / raw.b};
}

State nondimensionalize_state(const RawParams& raw, double phyto,
                              double zoo) {
  check_raw(raw);
  return State{phyto / raw.k, raw.alpha * zoo / raw.b};
}

Rates vector_field(const State& s, const Params& p) {
  return Rates{s.x * (1.0 - s.x) - s.x * s.y,
               p.gamma * s.x * s.y - p.r * s.y};
}

State apply_map(const State& s, const Params& p) {
  return State{s.x * (2.0 - s.x) - s.x * s.y,
               p.gamma * s.x * s.y + (1.0 - p.r) * s.y};
}

State coexistence_point(const Params& p) {
  if (!(p.gamma > p.r)) {
    throw Error(ErrorKind::DegenerateInput,
                "coexistence point requires gamma > r");
  }
  return State{p.r / p.gamma, (p.gamma - p.r) / p.gamma};
}

std::vector<FixedPoint> fixed_points(const Params& p) {
  std::vector<FixedPoint> out{{FixedPointLabel::E0, {0.0, 0.0}},
                              {FixedPointLabel::E1, {1.0, 0.0}}};
  if (p.gamma > p.r) {
    out.push_back({FixedPointLabel::E2, coexistence_point(p)});
  }
  return out;
}

}  // namespace plankton
