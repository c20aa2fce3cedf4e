#include "plankton/discrete.hpp"

#include <cmath>
#include <random>

namespace plankton {

namespace {

bool negative(const State& s) { return s.x < 0.0 || s.y < 0.0; }

RegionVerdict outside(std::string constraint) {
  return RegionVerdict{false, std::move(constraint)};
}

}  // namespace

Orbit iterate(const State& s0, const Params& p, std::size_t n) {
  Orbit o;
  o.states.reserve(n + 1);
  o.states.push_back(s0);
  if (negative(s0)) o.escaped_at = 0;
  State s = s0;
  for (std::size_t k = 1; k <= n; ++k) {
    s = apply_map(s, p);
    if (!o.escaped_at && negative(s)) o.escaped_at = k;
    o.states.push_back(s);
  }
  return o;
}

State iterate_final(const State& s0, const Params& p, std::size_t n) {
  State s = s0;
  for (std::size_t k = 0; k < n; ++k) s = apply_map(s, p);
  return s;
}

RegionVerdict in_X(const State& s) {
  if (s.y != 0.0) return outside("y=0");
  if (s.x < 0.0) return outside("x>=0");
  if (s.x > 2.0) return outside("x<=2");
  return RegionVerdict{true, std::nullopt};
}

YVerdict in_Y(const State& s, const Params& p) {
  YVerdict v{RegionVerdict{true, std::nullopt}, p.r <= 1.0};
  if (s.x != 0.0) {
    v.region = outside("x=0");
  } else if (s.y < 0.0) {
    v.region = outside("y>=0");
  }
  return v;
}

RegionVerdict in_M(const State& s, double tol) {
  if (s.x < -tol) return outside("x>=0");
  if (s.x > 1.0 + tol) return outside("x<=1");
  if (s.y < -tol) return outside("y>=0");
  if (s.y > 2.0 - s.x + tol) return outside("y<=2-x");
  return RegionVerdict{true, std::nullopt};
}

SVerdict in_param_set_S(const Params& p) {
  const double r = p.r;
  const double g = p.gamma;
  const double split = 3.0 - 2.0 * std::sqrt(2.0);
  const double lo = 0.5 * (1.0 - std::sqrt(r)) * (1.0 - std::sqrt(r));
  const double hi = 0.5 * (1.0 + std::sqrt(r)) * (1.0 + std::sqrt(r));

  SVerdict v{};
  if (r > 0.0 && r <= split) {
    if (g < lo) {
      v.region = outside("gamma>=(1-sqrt r)^2/2");
    } else if (g > hi) {
      v.region = outside("gamma<=(1+sqrt r)^2/2");
    } else {
      v.region = RegionVerdict{true, std::nullopt};
    }
  } else if (r > split && r < 1.0) {
    if (!(g > r)) {
      v.region = outside("gamma>r");
    } else if (g > hi) {
      v.region = outside("gamma<=(1+sqrt r)^2/2");
    } else {
      v.region = RegionVerdict{true, std::nullopt};
    }
  } else {
    v.region = outside("0<r<1");
  }
  const double disc = 4.0 * g * g - 4.0 * g * r - 4.0 * g + (r - 1.0) * (r - 1.0);
  v.discriminant_form = disc <= 0.0 && g > r;
  return v;
}

bool m_invariance_admissible(const Params& p) {
  if (!(p.r > 0.0 && p.r <= 1.0)) return false;
  return p.gamma <= p.r || in_param_set_S(p).region.inside;
}

namespace {

void check_l1(const Params& p, double c) {
  if (!(p.gamma < p.r)) {
    throw Error(ErrorKind::PreconditionViolated,
                "extinction LaSalle function requires gamma < r");
  }
  // Relative slack so that a c written as the exact 1/(r - gamma) of decimal
  // inputs is not rejected by rounding in r - gamma.
  if (!(c >= (1.0 - 1e-12) / (p.r - p.gamma))) {
    throw Error(ErrorKind::PreconditionViolated,
                "c must be at least 1/(r - gamma)");
  }
}

}  // namespace

double lasalle_L1_default_c(const Params& p) {
  if (!(p.gamma < p.r)) {
    throw Error(ErrorKind::PreconditionViolated,
                "extinction LaSalle function requires gamma < r");
  }
  return 1.0 / (p.r - p.gamma);
}

double lasalle_L1(const State& s, const Params& p, double c) {
  check_l1(p, c);
  return 1.0 - s.x + c * s.y;
}

double delta_L1(const State& s, const Params& p, double c) {
  check_l1(p, c);
  return s.x * (s.x - 1.0) + s.y * (c * p.gamma * s.x + s.x - c * p.r);
}

double lasalle_L2(const State& s, const Params& p) {
  if (!(s.y > 0.0)) {
    throw Error(ErrorKind::DomainError, "lasalle_L2 requires y > 0");
  }
  const double l = std::log(s.y);
  return s.x <= p.r / p.gamma ? l : -l;
}

double delta_L2(const State& s, const Params& p) {
  if (!(s.y > 0.0)) {
    throw Error(ErrorKind::DomainError, "delta_L2 requires y > 0");
  }
  const double growth = p.gamma * s.x + 1.0 - p.r;
  if (!(growth > 0.0)) {
    throw Error(ErrorKind::DomainError, "delta_L2 requires gamma x + 1 - r > 0");
  }
  const double l = std::log(growth);
  return s.x <= p.r / p.gamma ? l : -l;
}

void check_lasalle_regime(const Params& p, LaSalleFunction which) {
  if (!(p.r > 0.0 && p.r <= 1.0)) {
    throw Error(ErrorKind::PreconditionViolated, "LaSalle checks need 0 < r <= 1");
  }
  if (which == LaSalleFunction::Extinction && !(p.gamma <= p.r)) {
    throw Error(ErrorKind::PreconditionViolated,
                "extinction LaSalle function requires gamma <= r");
  }
  if (which == LaSalleFunction::Coexistence && !in_param_set_S(p).region.inside) {
    throw Error(ErrorKind::PreconditionViolated,
                "coexistence LaSalle function requires (r, gamma) in S");
  }
}

bool LaSalleReport::passed() const {
  return samples > 0 && max_delta <= 1e-12 && max_exactness_error <= 1e-12;
}

double restricted_X_map(double x) { return x * (2.0 - x); }

bool RestrictedXReport::passed() const {
  return fixed_points.size() == 2 && derivatives.size() == 2 &&
         std::abs(derivatives[0]) > 1.0 && std::abs(derivatives[1]) < 1.0 &&
         period2_discriminant < 0.0 && converged == seeds && seeds > 0;
}

RestrictedXReport restricted_X_analysis() {
  RestrictedXReport rep;
  // f(x) = x solves x(1 - x) = 0.
  for (double fp : {0.0, 1.0}) {
    rep.fixed_points.push_back(fp);
    rep.derivatives.push_back(2.0 - 2.0 * fp);
  }
  // (f(f(x)) - x) / (f(x) - x) = x^2 - 3x + 3.
  rep.period2_discriminant = 9.0 - 4.0 * 3.0;

  std::mt19937_64 rng(20240501);
  std::uniform_real_distribution<double> seed_dist(0.0, 2.0);
  constexpr std::size_t kSeeds = 100;
  constexpr int kSteps = 1000;
  for (std::size_t i = 0; i < kSeeds; ++i) {
    double x = seed_dist(rng);
    if (x == 0.0) x = 1.0;  // uniform_real_distribution includes 0
    for (int k = 0; k < kSteps; ++k) x = restricted_X_map(x);
    const double dist = std::abs(x - 1.0);
    rep.worst_distance = std::max(rep.worst_distance, dist);
    ++rep.seeds;
    if (dist < 1e-9) ++rep.converged;
  }
  return rep;
}

std::optional<State> converge_detect(const Orbit& o, double tol,
                                     std::size_t window) {
  if (window < 2 || !(tol > 0.0) || o.states.size() < window) {
    return std::nullopt;
  }
  const std::size_t first = o.states.size() - window;
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = first; k < o.states.size(); ++k) {
    const State& s = o.states[k];
    if (k > first) {
      const State& prev = o.states[k - 1];
      if (!(std::hypot(s.x - prev.x, s.y - prev.y) < tol)) return std::nullopt;
    }
    mx += s.x;
    my += s.y;
  }
  const double n = static_cast<double>(window);
  return State{mx / n, my / n};
}

}  // namespace plankton
