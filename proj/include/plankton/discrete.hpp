#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plankton/model.hpp"

namespace plankton {

struct Orbit {
  // states[k+1] == apply_map(states[k], p) bit for bit.
  std::vector<State> states;
  // First step index at which a coordinate went negative, if any.
  std::optional<std::size_t> escaped_at;
};

Orbit iterate(const State& s0, const Params& p, std::size_t n);

// Final state only; same arithmetic as iterate().
State iterate_final(const State& s0, const Params& p, std::size_t n);

struct RegionVerdict {
  bool inside = false;
  // Name of the first violated inequality when outside.
  std::optional<std::string> binding_constraint;
};

// X = {0 <= x <= 2, y = 0}.
RegionVerdict in_X(const State& s);

struct YVerdict {
  RegionVerdict region;
  // The invariance of Y additionally needs r <= 1.
  bool invariance_condition;
};

// Y = {x = 0, y >= 0}.
YVerdict in_Y(const State& s, const Params& p);

// M = {0 <= x <= 1, 0 <= y <= 2 - x}. `tol` loosens every inequality.
RegionVerdict in_M(const State& s, double tol = 0.0);

struct SVerdict {
  RegionVerdict region;
  // 4 gamma^2 - 4 gamma r - 4 gamma + (r-1)^2 <= 0 and gamma > r.
  bool discriminant_form;
  bool forms_agree() const { return region.inside == discriminant_form; }
};

// Parameter set S = S1 u S2 on which M is invariant for gamma > r.
SVerdict in_param_set_S(const Params& p);

// Whether invariance of M is expected for p: 0 < r <= 1 and
// (gamma <= r or p in S).
bool m_invariance_admissible(const Params& p);

// LaSalle function 1 - x + c y for the extinction regime, gamma < r,
// c >= 1/(r - gamma). PreconditionViolated otherwise.
double lasalle_L1(const State& s, const Params& p, double c);
double delta_L1(const State& s, const Params& p, double c);

// Smallest admissible c, 1/(r - gamma).
double lasalle_L1_default_c(const Params& p);

// Piecewise LaSalle function for p in S: ln y left of x = r/gamma, -ln y
// right of it. DomainError if y <= 0 or gamma x + 1 - r <= 0.
double lasalle_L2(const State& s, const Params& p);
double delta_L2(const State& s, const Params& p);

// Logistic restriction f(x) = x(2-x) of the map to X.
double restricted_X_map(double x);

struct RestrictedXReport {
  std::vector<double> fixed_points;   // {0, 1}
  std::vector<double> derivatives;    // f' at each fixed point
  double period2_discriminant;        // of x^2 - 3x + 3
  std::size_t seeds = 0;
  std::size_t converged = 0;
  double worst_distance = 0.0;        // max |f^n(seed) - 1|
  bool passed() const;
};

// Fixed points and their multipliers, absence of a 2-cycle, and convergence
// of 100 seeds in (0, 2) to 1 after 1000 steps.
RestrictedXReport restricted_X_analysis();

inline constexpr double kConvergeTol = 1e-8;
inline constexpr std::size_t kConvergeWindow = 50;

// Mean of the last `window` states when every consecutive displacement
// inside the window is below `tol`.
std::optional<State> converge_detect(const Orbit& o, double tol = kConvergeTol,
                                     std::size_t window = kConvergeWindow);

// Grid-level checks; implemented by the kernels in kernels.hpp.
struct MInvarianceReport {
  std::size_t samples = 0;
  std::size_t escapes = 0;
  double max_excursion = 0.0;  // largest violation of an M inequality
  bool passed() const { return samples > 0 && escapes == 0; }
};

struct LaSalleReport {
  std::size_t samples = 0;
  double max_delta = -INFINITY;       // max Delta L over the grid
  // |closed form - (L(V(s)) - L(s))|, over samples where the piecewise
  // function keeps its branch between s and V(s).
  double max_exactness_error = 0.0;
  std::size_t exactness_samples = 0;
  std::size_t branch_crossings = 0;
  // gamma == r: no admissible c exists, so max_delta holds max(y' - y).
  bool monotone_fallback = false;
  bool passed() const;
};

enum class LaSalleFunction { Extinction, Coexistence };

// Regime check for the LaSalle functions; PreconditionViolated on mismatch.
// Extinction accepts 0 < gamma <= r (gamma == r uses the y' <= y check).
void check_lasalle_regime(const Params& p, LaSalleFunction which);

}  // namespace plankton
