#include "plankton/cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "plankton/csv.hpp"
#include "plankton/discrete.hpp"
#include "plankton/flow.hpp"
#include "plankton/kernels.hpp"
#include "plankton/linear.hpp"
#include "plankton/neimark_sacker.hpp"
#include "plankton/sweep.hpp"

namespace plankton::cli {

namespace {

// Thrown for unwritable output paths.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_complex(const Complex& z) {
  std::string s = format_double(z.real());
  s += z.imag() < 0.0 ? " - " : " + ";
  s += format_double(std::abs(z.imag()));
  s += "i";
  return s;
}

std::string fmt_state(const State& s) {
  return format_double(s.x) + "," + format_double(s.y);
}

State parse_seed(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorKind::InvalidParams, "seed must be given as x,y");
  }
  try {
    std::size_t used1 = 0;
    std::size_t used2 = 0;
    const std::string xs = text.substr(0, comma);
    const std::string ys = text.substr(comma + 1);
    const double x = std::stod(xs, &used1);
    const double y = std::stod(ys, &used2);
    if (used1 != xs.size() || used2 != ys.size()) throw std::invalid_argument("");
    if (!std::isfinite(x) || !std::isfinite(y)) throw std::invalid_argument("");
    return State{x, y};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidParams, "seed '" + text + "' is not x,y");
  }
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw IoFailure("cannot open '" + path + "' for writing");
    stream_ = file_.get();
    path_ = path;
  }

  std::ostream& stream() { return *stream_; }
  bool is_file() const { return file_ != nullptr; }

  void close() {
    if (!file_) return;
    file_->flush();
    if (!*file_) throw IoFailure("write to '" + path_ + "' failed");
    file_->close();
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
  std::string path_;
};

class Report {
 public:
  Report(std::ostream& out, bool color) : out_(out), color_(color) {}

  template <typename T>
  Report& kv(const std::string& key, const T& value) {
    out_ << key << " = " << value << '\n';
    return *this;
  }
  Report& num(const std::string& key, double v) { return kv(key, format_double(v)); }
  Report& flag(const std::string& key, bool v) { return kv(key, v ? "true" : "false"); }

  void result(bool pass) {
    const char* word = pass ? "pass" : "fail";
    if (color_) {
      out_ << "result = " << (pass ? "\x1b[32m" : "\x1b[31m") << word << "\x1b[0m\n";
    } else {
      out_ << "result = " << word << '\n';
    }
  }

 private:
  std::ostream& out_;
  bool color_;
};

void report_classification(Report& rep, const std::string& prefix,
                           const Classification& c) {
  rep.kv(prefix + ".lambda1", fmt_complex(c.evidence.lambda1))
      .kv(prefix + ".lambda2", fmt_complex(c.evidence.lambda2))
      .kv(prefix + ".moduli",
          format_double(c.moduli[0]) + "," + format_double(c.moduli[1]))
      .kv(prefix + ".class", to_string(c.kind));
}

// ---- classify --------------------------------------------------------------

struct ClassifyArgs {
  double r = 0.0;
  double gamma = 0.0;
};

int cmd_classify(const ClassifyArgs& a, Console& io) {
  const Params p = make_params(a.r, a.gamma);
  Report rep(io.out, io.color);
  rep.num("r", p.r).num("gamma", p.gamma);
  for (const auto& fp : fixed_points(p)) {
    const std::string name(to_string(fp.label));
    rep.kv(name + ".state", fmt_state(fp.state));
    report_classification(rep, name, classify_fixed_point(fp, p));
  }
  return kPass;
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  std::string model = "map";
  double r = 0.0;
  double gamma = 0.0;
  std::string seed = "0.8,0.7";
  std::size_t steps = 10000;
  double t_end = 200.0;
  double dt = kDefaultDt;
  std::string out;
};

int cmd_simulate(const SimulateArgs& a, Console& io) {
  const Params p = make_params(a.r, a.gamma);
  const State s0 = parse_seed(a.seed);
  State last{};
  std::size_t rows = 0;
  bool left = false;
  std::ostringstream csv;
  if (a.model == "map") {
    const Orbit orbit = iterate(s0, p, a.steps);
    write_orbit_csv(csv, orbit);
    last = orbit.states.back();
    rows = orbit.states.size();
    left = orbit.escaped_at.has_value();
  } else {
    const Trajectory traj = integrate(s0, p, a.t_end, a.dt);
    write_trajectory_csv(csv, traj);
    last = traj.states.back();
    rows = traj.states.size();
    left = traj.left_quadrant;
  }
  Output dst(a.out, io.out);
  dst.stream() << csv.view();
  dst.close();
  // Keep stdout pure CSV when the data goes there.
  std::ostream& info = dst.is_file() ? io.out : io.err;
  Report(info, io.color)
      .kv("model", a.model)
      .kv("rows", rows)
      .kv("final", fmt_state(last))
      .flag("left_quadrant", left);
  return kPass;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string which;
  double r = 0.0;
  double gamma = 0.0;
  int grid = 100;
};

int cmd_verify(const VerifyArgs& a, Console& io) {
  const Params p = make_params(a.r, a.gamma);
  // Buffered so a regime error leaves no partial report behind.
  std::ostringstream body;
  Report rep(body, io.color);
  rep.kv("check", a.which).num("r", p.r).num("gamma", p.gamma).kv("grid", a.grid);
  bool pass = false;
  if (a.which == "thm1" || a.which == "thm2") {
    const auto which = a.which == "thm1" ? LyapunovTheorem::Extinction
                                         : LyapunovTheorem::Coexistence;
    const LyapunovReport lr = verify_lyapunov(p, which, a.grid);
    rep.kv("grid_points", lr.grid_points)
        .num("max_violation", lr.max_violation)
        .num("monotone_fraction", lr.monotone_fraction)
        .num("positive_fraction", lr.positive_fraction)
        .num("fd_max_error", lr.fd_max_error)
        .flag("radially_unbounded", lr.radially_unbounded);
    pass = lr.passed();
  } else if (a.which == "lasalle1" || a.which == "lasalle2") {
    const auto which = a.which == "lasalle1" ? LaSalleFunction::Extinction
                                             : LaSalleFunction::Coexistence;
    const LaSalleReport lr = kernels::lasalle_grid(p, which, a.grid);
    rep.kv("samples", lr.samples)
        .num("max_violation", std::max(0.0, lr.max_delta))
        .num("max_delta", lr.max_delta)
        .num("max_exactness_error", lr.max_exactness_error)
        .kv("exactness_samples", lr.exactness_samples)
        .kv("branch_crossings", lr.branch_crossings)
        .flag("monotone_fallback", lr.monotone_fallback);
    pass = lr.passed();
  } else {
    const MInvarianceReport mr = kernels::m_invariance_grid(p, a.grid);
    rep.kv("samples", mr.samples)
        .kv("escapes", mr.escapes)
        .num("max_violation", std::max(0.0, mr.max_excursion));
    pass = mr.passed();
  }
  rep.result(pass);
  io.out << body.str();
  return pass ? kPass : kVerificationFailed;
}

// ---- ns --------------------------------------------------------------------

struct NsArgs {
  double r = 0.0;
  double gamma_star = 0.0;
  std::string seed = "0.3,0.7";
  std::size_t transient = 5000;
  std::size_t window = 1000;
  std::string out;
};

int cmd_ns(const NsArgs& a, Console& io) {
  if (!(a.gamma_star >= 0.0)) {
    throw Error(ErrorKind::OutOfRange, "gamma-star must be >= 0");
  }
  const NSReport ns = ns_report(a.r);
  Report rep(io.out, io.color);
  rep.num("r", ns.setup.r)
      .num("gamma0", ns.setup.gamma0)
      .num("xhat", ns.setup.xhat)
      .num("yhat", ns.setup.yhat)
      .kv("lambda1", fmt_complex(ns.multipliers.lambda1))
      .kv("lambda2", fmt_complex(ns.multipliers.lambda2))
      .num("modulus", ns.modulus)
      .num("transversality", ns.transversality.analytic)
      .num("transversality_fd", ns.transversality.finite_difference);
  for (int m = 0; m < 4; ++m) {
    rep.flag("nondegenerate.m" + std::to_string(m + 1), ns.nondegenerate[m]);
  }
  const NormalFormCoeffs& c = ns.coeffs;
  rep.num("Fxx", c.Fxx).num("Fxy", c.Fxy).num("Fyy", c.Fyy)
      .num("Gxx", c.Gxx).num("Gxy", c.Gxy).num("Gyy", c.Gyy)
      .kv("L20", fmt_complex(c.L20))
      .kv("L11", fmt_complex(c.L11))
      .kv("L02", fmt_complex(c.L02))
      .kv("L21", fmt_complex(c.L21))
      .num("L_pipeline", ns.L_pipeline)
      .num("L_closed_form", ns.L_closed_form)
      .flag("attracting_curve", ns.L_pipeline < 0.0);

  if (a.gamma_star > 0.0) {
    const State seed = parse_seed(a.seed);
    const CurveScan scan =
        detect_invariant_curve(ns.setup, a.gamma_star, seed, a.transient, a.window);
    const CurveStats& st = scan.stats;
    rep.num("curve.gamma_star", st.gamma_star)
        .kv("curve.center", fmt_state(scan.center))
        .num("curve.r_min", st.r_min)
        .num("curve.r_max", st.r_max)
        .num("curve.r_mean", st.r_mean)
        .num("curve.angular_coverage", st.angular_coverage)
        .num("curve.drift", st.drift)
        .flag("curve.closed", st.closed);
    if (!a.out.empty()) {
      Output dst(a.out, io.out);
      write_orbit_csv(dst.stream(), scan.window, a.transient + 1);
      dst.close();
      rep.kv("curve.csv", a.out);
    }
  }
  return kPass;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string r_axis;
  std::string gamma_axis;
  std::string out;
};

int cmd_sweep(const SweepArgs& a, Console& io) {
  const GridSpec ra = parse_grid_spec(a.r_axis);
  const GridSpec ga = parse_grid_spec(a.gamma_axis);
  if (!(ra.lo > 0.0) || !(ga.lo > 0.0)) {
    throw Error(ErrorKind::InvalidParams, "sweep ranges must be positive");
  }
  const auto rows = parameter_sweep(ra, ga);
  Output dst(a.out, io.out);
  write_sweep_csv(dst.stream(), rows);
  dst.close();
  if (dst.is_file()) Report(io.out, io.color).kv("rows", rows.size()).kv("csv", a.out);
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, Console io) {
  CLI::App app{"Plankton model dynamics: classification, simulation, "
               "stability verification and torus-bifurcation analysis"};
  app.require_subcommand(1);

  ClassifyArgs classify;
  auto* c = app.add_subcommand("classify", "Classify the fixed points");
  c->add_option("--r", classify.r, "mortality r > 0")->required();
  c->add_option("--gamma", classify.gamma, "net conversion gamma > 0")->required();

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Write an orbit or ODE trajectory as CSV");
  s->add_option("--model", sim.model, "map or ode")
      ->check(CLI::IsMember({"map", "ode"}));
  s->add_option("--r", sim.r)->required();
  s->add_option("--gamma", sim.gamma)->required();
  s->add_option("--seed", sim.seed, "initial state x,y");
  s->add_option("--steps", sim.steps, "map iterations");
  s->add_option("--t-end", sim.t_end, "ODE horizon");
  s->add_option("--dt", sim.dt, "ODE step");
  s->add_option("--out", sim.out, "CSV path (default stdout)");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Grid verification of a stability certificate");
  v->add_option("--which", ver.which, "thm1, thm2, lasalle1, lasalle2 or lemma2")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "lasalle1", "lasalle2", "lemma2"}));
  v->add_option("--r", ver.r)->required();
  v->add_option("--gamma", ver.gamma)->required();
  v->add_option("--grid", ver.grid, "grid resolution per axis");

  NsArgs ns;
  auto* n = app.add_subcommand("ns", "Torus (Neimark-Sacker) bifurcation report");
  n->add_option("--r", ns.r, "0 < r <= 1")->required();
  n->add_option("--gamma-star", ns.gamma_star, "perturbation above gamma0");
  n->add_option("--seed", ns.seed, "seed x,y for the curve scan");
  n->add_option("--transient", ns.transient);
  n->add_option("--window", ns.window);
  n->add_option("--out", ns.out, "CSV path for the post-transient window");

  SweepArgs sw;
  auto* w = app.add_subcommand("sweep", "Classification sweep over (r, gamma)");
  w->add_option("--r", sw.r_axis, "lo:hi:n")->required();
  w->add_option("--gamma", sw.gamma_axis, "lo:hi:n")->required();
  w->add_option("--out", sw.out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    io.out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*c) return cmd_classify(classify, io);
    if (*s) return cmd_simulate(sim, io);
    if (*v) return cmd_verify(ver, io);
    if (*n) return cmd_ns(ns, io);
    return cmd_sweep(sw, io);
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const IoFailure& e) {
    io.err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace plankton::cli
