#pragma once

// Commands behind the fracopt executable. run_config maps failures to exit
// codes: 2 parse error, 3 invariant violation, 4 solver failure.

#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fracopt/adjoint.hpp"
#include "fracopt/config.hpp"
#include "fracopt/cost.hpp"
#include "fracopt/errors.hpp"
#include "fracopt/expression.hpp"
#include "fracopt/io.hpp"
#include "fracopt/kkt.hpp"
#include "fracopt/optimize.hpp"
#include "fracopt/state.hpp"

namespace fracopt::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kParseError = 2, kInvariantViolation = 3, kSolverFailure = 4 };

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> list{"solve-state",    "solve-adjoint",      "optimize",
                                             "kkt-check",      "convergence-study",  "limit-study"};
  return list;
}

/// Refusal that is a documented outcome rather than a bad input (SSC for alpha <= 1/2).
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output directory plus the list of files written, for the manifest.
class Artifacts {
 public:
  explicit Artifacts(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

  void write(const std::string& name, const std::string& content) {
    atomic_write(dir_ / name, content);
    names_.push_back(name);
  }

  const std::filesystem::path& dir() const { return dir_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> names_;
};

/// Key-value summary in insertion order.
class Summary {
 public:
  template <class T>
  void add(const std::string& key, const T& value) {
    if constexpr (std::is_floating_point_v<T>) {
      out_ << key << " = " << format_double(value) << '\n';
    } else if constexpr (std::is_same_v<T, bool>) {
      out_ << key << " = " << (value ? "true" : "false") << '\n';
    } else {
      out_ << key << " = " << value << '\n';
    }
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

/// Discretization objects built from a configuration.
struct Setup {
  TimeMesh mesh;
  SpaceGrid grid;
  FracOrder frac;
};

inline FracOrder make_order(double alpha, std::size_t steps) {
  return alpha == 1.0 ? FracOrder::classical(steps) : FracOrder(alpha, steps);
}

inline Setup make_setup(const RunConfig& c, std::size_t steps) {
  const SpaceGrid grid = c.dim == 1 ? SpaceGrid::interval(c.lx, c.mx) : SpaceGrid::rectangle(c.lx, c.ly, c.mx, c.my);
  return {TimeMesh(c.horizon, steps), grid, make_order(c.alpha, steps)};
}

inline Trajectory make_trajectory(const FieldSpec& spec, const TimeMesh& mesh, const SpaceGrid& grid) {
  if (!spec.csv.empty()) return read_trajectory_csv(spec.csv, mesh, grid);
  const Expression e = Expression::parse(spec.expression);
  return Trajectory::sample(mesh, grid, [&](double t, double x, double y) { return e(t, x, y); });
}

inline SpaceField make_field(const FieldSpec& spec, const SpaceGrid& grid) {
  if (!spec.csv.empty()) return read_field_csv(spec.csv, grid);
  const Expression e = Expression::parse(spec.expression);
  SpaceField f(grid.dof());
  for (std::size_t j = 0; j < grid.dof(); ++j) {
    f[j] = e(0.0, grid.coordinate(j, 0), grid.dim() == 2 ? grid.coordinate(j, 1) : 0.0);
  }
  return f;
}

inline ControlProblem make_control_problem(const RunConfig& c, const Setup& s) {
  CostModel cost = CostModel::from_name(c.cost_variant, make_trajectory(c.target, s.mesh, s.grid), c.gamma, c.degree);
  return {s.frac, s.mesh, s.grid, make_field(c.y0, s.grid), std::move(cost), {c.a, c.b}};
}

inline OptimizeConfig make_optimize_config(const RunConfig& c) {
  return {c.max_iters, c.step0, c.armijo_c, c.backtrack, c.tol_stationarity, c.tol_step};
}

/// Independent backward-Euler heat solver: (I/tau - Delta_h) y_n = y_{n-1}/tau + u_n.
inline Trajectory backward_euler_heat(const TimeMesh& mesh, const SpaceGrid& grid, const SpaceField& y0,
                                      const Trajectory& u) {
  const double inv_tau = 1.0 / mesh.tau();
  const ShiftedSolver solver(grid, inv_tau);
  Trajectory y(mesh, grid);
  std::copy(y0.begin(), y0.end(), y.at(0).begin());
  SpaceField rhs(grid.dof());
  for (std::size_t n = 1; n < mesh.nodes(); ++n) {
    for (std::size_t j = 0; j < grid.dof(); ++j) rhs[j] = inv_tau * y(n - 1, j) + u(n, j);
    const SpaceField next = solver.solve(rhs);
    std::copy(next.begin(), next.end(), y.at(n).begin());
  }
  return y;
}

/// Smooth manufactured solution y = (1 + t^2) s(x) with s the first discrete
/// eigenvector, and the control that produces it exactly in space.
struct Manufactured {
  Trajectory exact;
  SpaceField y0;
  Trajectory control;
};

inline Manufactured manufactured_problem(const Setup& s) {
  const double pi = std::numbers::pi;
  const double lambda = EigenSystem(s.grid).modes()[0].eigenvalue;
  const double alpha = s.frac.alpha();
  const double g3 = std::tgamma(3.0 - alpha);
  Manufactured m{Trajectory(s.mesh, s.grid), SpaceField(s.grid.dof()), Trajectory(s.mesh, s.grid)};
  for (std::size_t j = 0; j < s.grid.dof(); ++j) {
    m.y0[j] = std::sin(pi * s.grid.coordinate(j, 0) / s.grid.extent(0));
    if (s.grid.dim() == 2) m.y0[j] *= std::sin(pi * s.grid.coordinate(j, 1) / s.grid.extent(1));
  }
  for (std::size_t n = 0; n < s.mesh.nodes(); ++n) {
    const double t = s.mesh.t(n);
    const double amp = 1.0 + t * t;
    const double caputo = 2.0 * std::pow(t, 2.0 - alpha) / g3;
    for (std::size_t j = 0; j < s.grid.dof(); ++j) {
      m.exact(n, j) = amp * m.y0[j];
      m.control(n, j) = (caputo + lambda * amp) * m.y0[j];
    }
  }
  return m;
}

inline double error_metric(const Trajectory& a, const Trajectory& b, const std::string& metric) {
  if (metric == "final") {
    const std::size_t n = a.mesh().steps();
    double worst = 0.0;
    for (std::size_t j = 0; j < a.dof(); ++j) worst = std::max(worst, std::abs(a(n, j) - b(n, j)));
    return worst;
  }
  return max_abs(a - b);
}

/// Least-squares slope of log(error) against log(tau).
inline double fitted_rate(const std::vector<double>& taus, const std::vector<double>& errors) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const double x = std::log(taus[i]);
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline void cmd_solve_state(const RunConfig& c, Artifacts& out, Summary& sum) {
  const Setup s = make_setup(c, c.steps);
  const StateProblem p{s.frac, s.mesh, s.grid, make_field(c.y0, s.grid), make_trajectory(c.control, s.mesh, s.grid)};
  const Trajectory y = solve_state(p);
  out.write("state.csv", trajectory_csv(y));
  sum.add("mild_residual", mild_residual(s.frac, s.mesh, s.grid, y, p.u));
  sum.add("max_abs_state", max_abs(y));
  if (c.oracle) {
    const Trajectory o = spectral_oracle(p);
    out.write("oracle.csv", trajectory_csv(o));
    sum.add("oracle_max_diff", max_abs(y - o));
    sum.add("oracle_final_diff", error_metric(y, o, "final"));
  }
}

inline void cmd_solve_adjoint(const RunConfig& c, Artifacts& out, Summary& sum) {
  const Setup s = make_setup(c, c.steps);
  const ControlProblem p = make_control_problem(c, s);
  const Trajectory u = make_trajectory(c.control, s.mesh, s.grid);
  const Trajectory y = control_to_state(p, u);
  const Trajectory source = partial_y(p.cost, y, u);
  std::vector<Trajectory> phis;
  if (c.adjoint != "reversal") {
    phis.push_back(solve_adjoint(p, source, AdjointKind::Transpose));
    out.write("adjoint_transpose.csv", trajectory_csv(phis.back()));
    sum.add("max_abs_adjoint_transpose", max_abs(phis.back()));
  }
  if (c.adjoint != "transpose") {
    phis.push_back(solve_adjoint(p, source, AdjointKind::Reversal));
    out.write("adjoint_reversal.csv", trajectory_csv(phis.back()));
    sum.add("max_abs_adjoint_reversal", max_abs(phis.back()));
  }
  if (phis.size() == 2) {
    Trajectory gap = phis[1] - phis[0];
    for (double& v : gap.at(0)) v = 0.0;
    sum.add("adjoint_gap_l2q", norm_q(gap));
  }
}

inline OptimizeResult run_optimizer(const RunConfig& c, const ControlProblem& p) {
  return projected_gradient(p, make_trajectory(c.initial_control, p.mesh, p.grid), make_optimize_config(c));
}

inline std::string trace_csv(const OptimizeTrace& trace) {
  std::ostringstream os;
  os << "iter,f,residual,step,update_norm\n";
  for (const auto& r : trace.records) {
    os << r.iter << ',' << format_double(r.f) << ',' << format_double(r.residual) << ',' << format_double(r.step)
       << ',' << format_double(r.update_norm) << '\n';
  }
  return os.str();
}

inline void add_trace_summary(Summary& sum, const OptimizeTrace& trace) {
  sum.add("iterations", trace.records.size() - 1);
  sum.add("converged", trace.converged);
  sum.add("budget_exhausted", trace.budget_exhausted);
  sum.add("stop_reason", trace.stop_reason);
  sum.add("final_objective", trace.records.back().f);
  sum.add("final_residual", trace.records.back().residual);
}

inline void cmd_optimize(const RunConfig& c, Artifacts& out, Summary& sum) {
  const Setup s = make_setup(c, c.steps);
  const ControlProblem p = make_control_problem(c, s);
  const OptimizeResult r = run_optimizer(c, p);
  const GradientEval ev = evaluate(p, r.u);
  out.write("control.csv", trajectory_csv(r.u));
  out.write("state.csv", trajectory_csv(ev.y));
  out.write("adjoint.csv", trajectory_csv(ev.phi));
  out.write("trace.csv", trace_csv(r.trace));
  add_trace_summary(sum, r.trace);
}

inline void cmd_kkt_check(const RunConfig& c, Artifacts& out, Summary& sum) {
  const Setup s = make_setup(c, c.steps);
  const ControlProblem p = make_control_problem(c, s);
  Trajectory u(s.mesh, s.grid);
  if (!c.candidate.csv.empty() || !c.candidate.expression.empty()) {
    u = make_trajectory(c.candidate, s.mesh, s.grid);
    sum.add("candidate", "config");
  } else {
    const OptimizeResult r = run_optimizer(c, p);
    out.write("trace.csv", trace_csv(r.trace));
    add_trace_summary(sum, r.trace);
    u = r.u;
    sum.add("candidate", "optimizer");
  }
  out.write("control.csv", trajectory_csv(u));
  std::mt19937_64 rng(c.seed);
  const std::vector<double> radii = c.ssc ? c.radii : std::vector<double>{};
  const KKTReport report = kkt_check(p, u, c.cone_samples, c.ssc_trials, radii, rng);
  std::ostringstream rep;
  write_report(rep, report);
  out.write("kkt_report.txt", rep.str());
  std::ostringstream dirs;
  write_direction_csv(dirs, report.sonc);
  out.write("directions.csv", dirs.str());
  sum.add("stationarity_residual", report.stationarity_residual);
  sum.add("complementarity_violation", report.complementarity_violation);
  sum.add("min_quadratic_form", report.sonc.min_normalized);
  sum.add("ssc_gamma_bound", report.ssc.rho);
  if (c.ssc && !report.ssc.applicable) throw Refusal(report.ssc.note);
}

inline void cmd_convergence_study(const RunConfig& c, Artifacts& out, Summary& sum) {
  detail::require_domain(c.refinements < 16 && (c.steps << c.refinements) <= kMaxSteps,
                         "refinements must keep the finest N within " + std::to_string(kMaxSteps));
  std::vector<double> taus;
  std::vector<double> errors;
  std::ostringstream csv;
  csv << "N,tau,error,rate\n";
  for (std::size_t k = 0; k <= c.refinements; ++k) {
    const std::size_t steps = c.steps << k;
    const Setup s = make_setup(c, steps);
    Trajectory reference(s.mesh, s.grid);
    Trajectory y(s.mesh, s.grid);
    if (c.study_problem == "manufactured") {
      const Manufactured m = manufactured_problem(s);
      y = solve_state(StateProblem{s.frac, s.mesh, s.grid, m.y0, m.control});
      reference = m.exact;
    } else {
      const StateProblem p{s.frac, s.mesh, s.grid, make_field(c.y0, s.grid), make_trajectory(c.control, s.mesh, s.grid)};
      y = solve_state(p);
      reference = spectral_oracle(p);
    }
    const double err = error_metric(y, reference, c.study_metric);
    const double rate = errors.empty() ? std::nan("") : std::log2(errors.back() / err);
    taus.push_back(s.mesh.tau());
    errors.push_back(err);
    csv << steps << ',' << format_double(s.mesh.tau()) << ',' << format_double(err) << ','
        << (errors.size() == 1 ? std::string("") : format_double(rate)) << '\n';
  }
  out.write("rates.csv", csv.str());
  sum.add("problem", c.study_problem);
  sum.add("metric", c.study_metric);
  sum.add("target_rate", c.alpha == 1.0 ? 1.0 : 2.0 - c.alpha);
  sum.add("fitted_rate", fitted_rate(taus, errors));
  sum.add("last_rate", std::log2(errors[errors.size() - 2] / errors.back()));
  sum.add("finest_error", errors.back());
}

inline void cmd_limit_study(const RunConfig& c, Artifacts& out, Summary& sum) {
  RunConfig classical = c;
  classical.alpha = 1.0;
  const Setup s = make_setup(classical, c.steps);
  const SpaceField y0 = make_field(c.y0, s.grid);
  const Trajectory u = make_trajectory(c.control, s.mesh, s.grid);
  const Trajectory y1 = solve_state(StateProblem{s.frac, s.mesh, s.grid, y0, u});
  const Trajectory be = backward_euler_heat(s.mesh, s.grid, y0, u);
  sum.add("classical_vs_backward_euler", max_abs(y1 - be));
  std::ostringstream csv;
  csv << "alpha,max_diff_to_classical\n";
  for (double a : c.limit_alphas) {
    const Trajectory ya = solve_state(StateProblem{FracOrder(a, c.steps), s.mesh, s.grid, y0, u});
    const double d = max_abs(ya - y1);
    csv << format_double(a) << ',' << format_double(d) << '\n';
    sum.add("max_diff_alpha_" + format_double(a), d);
  }
  out.write("limit.csv", csv.str());
  out.write("classical.csv", trajectory_csv(y1));
}

inline std::string manifest(const RunConfig& c, const std::string& command, const Artifacts& out, int code) {
  std::ostringstream os;
  os << "tool = fracopt\n";
  os << "version = " << kVersion << '\n';
  os << "command = " << command << '\n';
  os << "config = " << c.source_path << '\n';
  os << "seed = " << c.seed << '\n';
  os << "exit_code = " << code << '\n';
  os << "outputs =";
  for (const auto& n : out.names()) os << ' ' << n;
  os << "\n--- config ---\n" << c.source_text;
  if (!c.source_text.empty() && c.source_text.back() != '\n') os << '\n';
  return os.str();
}

/**
 * Runs one command with an already-parsed configuration, writing artifacts to
 * out_dir. Diagnostics go to err as a single "category: message" line.
 */
inline int run_config(const std::string& command, RunConfig config, const std::filesystem::path& out_dir,
                      std::ostream& err) {
  int code = kOk;
  std::string diagnostic;
  try {
    bool known = false;
    for (const auto& name : commands()) known = known || name == command;
    if (!known) throw ParseError("unknown command '" + command + "'");
    validate(config);
    Artifacts out(out_dir);
    Summary sum;
    sum.add("command", command);
    try {
      if (command == "solve-state") cmd_solve_state(config, out, sum);
      else if (command == "solve-adjoint") cmd_solve_adjoint(config, out, sum);
      else if (command == "optimize") cmd_optimize(config, out, sum);
      else if (command == "kkt-check") cmd_kkt_check(config, out, sum);
      else if (command == "convergence-study") cmd_convergence_study(config, out, sum);
      else cmd_limit_study(config, out, sum);
    } catch (const Refusal& e) {
      code = kInvariantViolation;
      diagnostic = std::string("refused: ") + e.what();
      sum.add("refusal", e.what());
    }
    out.write("summary.txt", sum.str());
    atomic_write(out.dir() / "manifest.txt", manifest(config, command, out, code));
  } catch (const ParseError& e) {
    code = kParseError;
    diagnostic = std::string("parse error: ") + e.what();
  } catch (const DomainError& e) {
    code = kInvariantViolation;
    diagnostic = std::string("invariant violation: ") + e.what();
  } catch (const ShapeError& e) {
    code = kInvariantViolation;
    diagnostic = std::string("invariant violation: ") + e.what();
  } catch (const SolverError& e) {
    code = kSolverFailure;
    diagnostic = std::string("solver failure: ") + e.what();
  } catch (const std::exception& e) {
    code = kSolverFailure;
    diagnostic = std::string("solver failure: ") + e.what();
  }
  if (!diagnostic.empty()) err << diagnostic << '\n';
  return code;
}

/// Loads the config file (optionally overriding the seed) and runs the command.
inline int run(const std::string& command, const std::string& config_path, const std::filesystem::path& out_dir,
               const std::int64_t seed_override, std::ostream& err) {
  RunConfig config;
  try {
    config = load_config(config_path);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  }
  if (seed_override >= 0) config.seed = static_cast<std::uint64_t>(seed_override);
  return run_config(command, std::move(config), out_dir, err);
}

}  // namespace fracopt::cli
