// Acceptance run: one PASS/FAIL line per criterion, followed by indented
// detail lines with the measured values. Exit status is nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "plankton/discrete.hpp"
#include "plankton/flow.hpp"
#include "plankton/kernels.hpp"
#include "plankton/linear.hpp"
#include "plankton/neimark_sacker.hpp"

namespace {

using namespace plankton;

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  // Records one sub-check; `detail` carries the measured value.
  void check(bool ok, const std::string& name, const std::string& detail) {
    pass_ = pass_ && ok;
    details_.push_back((ok ? "  ok      " : "  FAILED  ") + name + ": " + detail);
  }

  bool report() const {
    std::printf("%s  %d. %s\n", pass_ ? "PASS" : "FAIL", id_, title_.c_str());
    for (const auto& d : details_) std::printf("%s\n", d.c_str());
    return pass_;
  }

 private:
  int id_;
  std::string title_;
  bool pass_ = true;
  std::vector<std::string> details_;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double dist(const State& a, const State& b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool example_reproduction() {
  Criterion c(1, "worked example at r = 0.5, gamma0 = 1.5");
  const NSSetup s = ns_setup(0.5);
  const State e2 = coexistence_point(s.critical_params());
  const double e2_err = std::max(std::abs(e2.x - 1.0 / 3), std::abs(e2.y - 2.0 / 3));
  c.check(e2_err <= 1e-15, "E2 = (1/3, 2/3)", fmt("max error %.3g (tol 1e-15)", e2_err));

  const ComplexPair m = perturbed_multipliers(s, 0.0).pair;
  const Complex l1_ref(5.0 / 6, -std::sqrt(11.0) / 6);
  const double l_err = std::max(std::abs(m.lambda1 - l1_ref), std::abs(m.lambda2 - std::conj(l1_ref)));
  const double mod_err =
      std::max(std::abs(std::abs(m.lambda1) - 1.0), std::abs(std::abs(m.lambda2) - 1.0));
  c.check(l_err <= 1e-12 && mod_err <= 1e-12, "multipliers (5 -+ i sqrt11)/6",
          fmt("max error %.3g, ||lambda| - 1| %.3g (tol 1e-12)", l_err, mod_err));

  const Transversality t = transversality(s);
  const double ta = std::abs(t.analytic - 1.0 / 9);
  const double tf = std::abs(t.finite_difference - 1.0 / 9);
  c.check(ta <= 1e-12, "transversality analytic", fmt("%.17g, error %.3g (tol 1e-12)", t.analytic, ta));
  c.check(tf <= 1e-6, "transversality finite difference",
          fmt("%.17g, error %.3g (tol 1e-6)", t.finite_difference, tf));

  const NSCoefficient coef = ns_coefficient(s);
  const double oracle_value = oracle::discriminating_oracle(0.5).value;
  const double oe = std::abs(coef.pipeline - oracle_value);
  c.check(coef.pipeline < 0.0 && oe <= 1e-9, "discriminating quantity < 0, matches oracle",
          fmt("pipeline %.12f, oracle error %.3g (tol 1e-9)", coef.pipeline, oe));

  const double ce = std::abs(coef.closed_form - (-1.88447));
  c.check(ce <= 1e-5, "closed form = -1.88447 +- 1e-5",
          fmt("evaluates to %.10f, off by %.6f", coef.closed_form, ce));
  return c.report();
}

bool figure3() {
  Criterion c(2, "map orbits from (0.8, 0.7) reach the attractor within 1e4 steps");
  const struct {
    Params p;
    State limit;
    const char* name;
  } cases[] = {{{0.3, 0.25}, {1, 0}, "(0.3, 0.25) -> (1, 0)"},
               {{0.3, 0.9}, {1.0 / 3, 2.0 / 3}, "(0.3, 0.9) -> (1/3, 2/3)"}};
  for (const auto& k : cases) {
    State s{0.8, 0.7};
    std::size_t n = 0;
    while (dist(s, k.limit) >= 1e-6 && n < 10000) {
      s = apply_map(s, k.p);
      ++n;
    }
    const double d = dist(s, k.limit);
    c.check(d < 1e-6, k.name, fmt("distance %.3g after %.0f steps", d, static_cast<double>(n)));
  }
  return c.report();
}

bool figure5() {
  Criterion c(3, "closed invariant curve at gamma = 1.51, convergence at gamma = 1.45");
  const NSSetup s = ns_setup(0.5);
  const State seeds[] = {{0.3, 0.7}, {0.8, 1.0}};
  CurveStats st[2];
  for (int i = 0; i < 2; ++i) {
    st[i] = detect_invariant_curve(s, 0.01, seeds[i], 5000, 1000).stats;
    c.check(st[i].closed, fmt("seed (%.1f, %.1f) closed", seeds[i].x, seeds[i].y),
            fmt("band [%.6f, %.6f]", st[i].r_min, st[i].r_max));
  }
  const double width = std::max(st[0].r_max - st[0].r_min, st[1].r_max - st[1].r_min);
  const double shift =
      std::max(std::abs(st[0].r_min - st[1].r_min), std::abs(st[0].r_max - st[1].r_max));
  c.check(shift <= 0.05 * width, "bands overlap within 5% of width",
          fmt("endpoint shift %.3g of width %.3g", shift, width));

  const Params below{0.5, 1.45};
  const State e2 = coexistence_point(below);
  for (const State& seed : seeds) {
    const Orbit o = iterate(seed, below, 10000);
    const auto lim = converge_detect(o);
    const double d = lim ? dist(*lim, e2) : INFINITY;
    c.check(lim && d < 1e-6, fmt("seed (%.1f, %.1f) -> E2 at gamma 1.45", seed.x, seed.y),
            fmt("distance %.3g", d));
  }
  return c.report();
}

bool classification_properties() {
  Criterion c(4, "classification agrees with root and modulus oracles");
  std::mt19937_64 rng(20240501);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  std::size_t checked = 0, mismatches = 0;
  for (int t = 0; t < 100000; ++t) {
    const double B = u(rng), C = u(rng);
    if (oracle::circle_distance(B, C) < kUnitCircleTol) continue;
    ++checked;
    const oracle::RootCount rc = oracle::count_roots(B, C);
    const Stability want = rc.inside == 2    ? Stability::Attractive
                           : rc.outside == 2 ? Stability::Repelling
                                             : Stability::Saddle;
    if (stability_of(jury_classify(B, C)) != want) ++mismatches;
  }
  c.check(mismatches == 0, "root-location lemma vs root oracle",
          fmt("%.0f mismatches over %.0f samples", static_cast<double>(mismatches),
              static_cast<double>(checked)));

  std::size_t grid_checked = 0, grid_mismatches = 0;
  for (int i = 1; i <= 200; ++i) {
    for (int j = 1; j <= 200; ++j) {
      const Params p{2.5 * i / 200.0, 3.0 * j / 200.0};
      for (const FixedPoint& fp : fixed_points(p)) {
        const auto J = oracle::numeric_jacobian(fp.state, p);
        const auto [a, b] = oracle::monic_roots(-(J[0] + J[3]), J[0] * J[3] - J[1] * J[2]);
        const double m1 = std::abs(a), m2 = std::abs(b);
        if (std::min(std::abs(m1 - 1), std::abs(m2 - 1)) < 1e-7) continue;
        ++grid_checked;
        const Stability want = (m1 < 1 && m2 < 1)   ? Stability::Attractive
                               : (m1 > 1 && m2 > 1) ? Stability::Repelling
                                                    : Stability::Saddle;
        if (classify_fixed_point(fp, p).kind != want) ++grid_mismatches;
      }
    }
  }
  c.check(grid_mismatches == 0, "fixed-point verdicts vs raw moduli, 200 x 200",
          fmt("%.0f mismatches over %.0f fixed points", static_cast<double>(grid_mismatches),
              static_cast<double>(grid_checked)));
  return c.report();
}

bool lyapunov_lasalle_properties() {
  Criterion c(5, "Lyapunov and LaSalle certificates, invariance of M");
  const LyapunovReport t1 = verify_lyapunov({0.3, 0.25}, LyapunovTheorem::Extinction, 100);
  const LyapunovReport t2 = verify_lyapunov({0.3, 0.9}, LyapunovTheorem::Coexistence, 100);
  for (const auto& [name, rep] : {std::pair{"extinction Lyapunov, 100 x 100", t1},
                                  std::pair{"coexistence Lyapunov, 100 x 100", t2}}) {
    const bool ok = rep.positive_fraction == 1.0 && rep.monotone_fraction == 1.0 &&
                    rep.max_violation <= 1e-12;
    c.check(ok, name,
            fmt("positive fraction %.6f, max violation %.3g", rep.positive_fraction,
                rep.max_violation));
  }

  const LaSalleReport l1 = kernels::lasalle_grid({0.3, 0.25}, LaSalleFunction::Extinction, 100);
  const LaSalleReport l2 = kernels::lasalle_grid({0.3, 0.9}, LaSalleFunction::Coexistence, 100);
  const double exact = std::max(l1.max_exactness_error, l2.max_exactness_error);
  c.check(exact <= 1e-12, "Delta L closed forms vs definitional differences",
          fmt("max error %.3g over %.0f samples", exact,
              static_cast<double>(l1.exactness_samples + l2.exactness_samples)));
  const double worst = std::max(l1.max_delta, l2.max_delta);
  c.check(worst <= 1e-12, "Delta L <= 0 on M", fmt("max Delta L %.3g", worst + 0.0));

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ur(0.0, 1.0), ug(0.0, 2.0);
  std::size_t pairs = 0, escapes = 0, states = 0;
  double excursion = -INFINITY;
  while (pairs < 1000) {
    const Params p{1.0 - ur(rng), ug(rng)};
    if (!(p.gamma > 0) || !m_invariance_admissible(p)) continue;
    ++pairs;
    const MInvarianceReport rep = kernels::m_invariance_grid(p, 50);
    escapes += rep.escapes;
    states += rep.samples;
    excursion = std::max(excursion, rep.max_excursion);
  }
  c.check(escapes == 0 && states == 1000u * 2500u, "M invariance, 1000 pairs x 2500 states",
          fmt("%.0f escapes, max excursion %.3g", static_cast<double>(escapes), excursion));
  return c.report();
}

bool normal_form_properties() {
  Criterion c(6, "normal-form partials and sign of the discriminating quantity, 100 r");
  double e2 = 0.0, e3 = 0.0, worst_l = -INFINITY;
  for (int i = 1; i <= 100; ++i) {
    const NSSetup s = ns_setup(i / 100.0);
    const auto [a, b] = oracle::partials_error(s);
    e2 = std::max(e2, a);
    e3 = std::max(e3, b);
    worst_l = std::max(worst_l, ns_coefficient(s).pipeline);
  }
  c.check(e2 <= 1e-6, "second partials vs differences", fmt("max error %.3g (tol 1e-6)", e2));
  c.check(e3 <= 1e-4, "third partials vanish", fmt("max |partial| %.3g (tol 1e-4)", e3));
  c.check(worst_l < 0.0, "discriminating quantity < 0", fmt("largest value %.6f", worst_l));
  return c.report();
}

bool numerical_analysis() {
  Criterion c(7, "integrator order and curve radius scaling");
  const Params p{0.3, 0.9};
  const State s0{0.8, 0.7};
  const State ref = integrate_final(s0, p, 1.0, 1e-6);
  const double ratio =
      dist(integrate_final(s0, p, 1.0, 0.1), ref) / dist(integrate_final(s0, p, 1.0, 0.05), ref);
  c.check(ratio >= 14 && ratio <= 18, "RK4 error ratio under step halving",
          fmt("%.4f (want [14, 18])", ratio));

  const NSSetup s = ns_setup(0.5);
  const double small = detect_invariant_curve(s, 0.005, {0.3, 0.7}, 20000, 2000).stats.r_mean;
  const double large = detect_invariant_curve(s, 0.02, {0.3, 0.7}, 20000, 2000).stats.r_mean;
  const double rr = large / small;
  c.check(rr >= 1.8 && rr <= 2.2, "mean radius ratio gamma* 0.02 / 0.005",
          fmt("%.4f (want [1.8, 2.2])", rr));
  return c.report();
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  bool (*const criteria[])() = {example_reproduction,        figure3,
                                figure5,                     classification_properties,
                                lyapunov_lasalle_properties, normal_form_properties,
                                numerical_analysis};
  int failed = 0;
  for (auto* run : criteria) {
    try {
      if (!run()) ++failed;
    } catch (const std::exception& e) {
      std::printf("FAIL  criterion threw: %s\n", e.what());
      ++failed;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 7 criteria passed in %.1f s\n", 7 - failed, secs);
  return failed == 0 ? 0 : 1;
}
