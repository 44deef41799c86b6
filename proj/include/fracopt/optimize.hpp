#pragma once

// Reduced-space projected gradient for min f(u) = psi(G(u), u) over a <= u <= b.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fracopt/adjoint.hpp"
#include "fracopt/cost.hpp"
#include "fracopt/errors.hpp"
#include "fracopt/state.hpp"
#include "fracopt/trajectory.hpp"

namespace fracopt {

struct ControlBounds {
  double a = -1.0;
  double b = 1.0;

  void validate() const {
    detail::require_domain(std::isfinite(a) && std::isfinite(b), "ControlBounds: bounds must be finite");
    detail::require_domain(a < b, "ControlBounds: require a < b");
  }
};

struct OptimizeConfig {
  std::size_t max_iters = 1000;
  double step0 = 1.0;
  double armijo_c = 1e-4;
  double backtrack = 0.5;
  double tol_stationarity = 1e-8;
  double tol_step = 1e-15;

  void validate() const {
    detail::require_domain(max_iters > 0, "OptimizeConfig: max_iters must be positive");
    detail::require_domain(step0 > 0.0 && std::isfinite(step0), "OptimizeConfig: step0 must be positive");
    detail::require_domain(armijo_c > 0.0 && armijo_c < 1.0, "OptimizeConfig: armijo_c must lie in (0, 1)");
    detail::require_domain(backtrack > 0.0 && backtrack < 1.0, "OptimizeConfig: backtrack must lie in (0, 1)");
    detail::require_domain(tol_stationarity > 0.0, "OptimizeConfig: tol_stationarity must be positive");
    detail::require_domain(tol_step > 0.0, "OptimizeConfig: tol_step must be positive");
  }
};

/// Which adjoint supplies phi in the gradient L_u - phi.
enum class AdjointKind { Transpose, Reversal };

struct ControlProblem {
  FracOrder frac;
  TimeMesh mesh;
  SpaceGrid grid;
  SpaceField y0;
  CostModel cost;
  ControlBounds bounds;

  void validate() const {
    detail::require_shape(frac.steps() >= mesh.steps(), "ControlProblem: FracOrder weights shorter than mesh");
    detail::require_shape(y0.size() == grid.dof(), "ControlProblem: y0 does not match grid");
    detail::require_shape(cost.target().mesh() == mesh && cost.target().grid() == grid,
                          "ControlProblem: target does not match mesh and grid");
    bounds.validate();
  }

  Trajectory zero_control() const { return Trajectory(mesh, grid); }
};

/// y = G(u).
inline Trajectory control_to_state(const ControlProblem& p, const Trajectory& u) {
  return solve_state(StateProblem{p.frac, p.mesh, p.grid, p.y0, u});
}

/// z_v = solve_state(0, v): the derivative of the affine map G in direction v.
inline Trajectory linearized_state(const ControlProblem& p, const Trajectory& v) {
  return solve_state(StateProblem{p.frac, p.mesh, p.grid, SpaceField(p.grid.dof(), 0.0), v});
}

inline double objective(const ControlProblem& p, const Trajectory& u) {
  return eval_cost(p.cost, control_to_state(p, u), u);
}

inline Trajectory solve_adjoint(const ControlProblem& p, const Trajectory& source, AdjointKind kind) {
  const AdjointProblem ap{p.frac, p.mesh, p.grid, source};
  return kind == AdjointKind::Transpose ? solve_adjoint_transpose(ap) : solve_adjoint_reversal(ap);
}

/// State, adjoint and gradient at one control.
struct GradientEval {
  Trajectory y;
  Trajectory phi;
  Trajectory gradient;
  double f = 0.0;
};

inline GradientEval evaluate(const ControlProblem& p, const Trajectory& u, AdjointKind kind = AdjointKind::Transpose) {
  Trajectory y = control_to_state(p, u);
  Trajectory phi = solve_adjoint(p, partial_y(p.cost, y, u), kind);
  Trajectory g = partial_u(p.cost, y, u);
  g -= phi;
  const double f = eval_cost(p.cost, y, u);
  return {std::move(y), std::move(phi), std::move(g), f};
}

/// g = L_u - phi.
inline Trajectory reduced_gradient(const ControlProblem& p, const Trajectory& u,
                                   AdjointKind kind = AdjointKind::Transpose) {
  return evaluate(p, u, kind).gradient;
}

inline Trajectory project_box(Trajectory u, const ControlBounds& bounds) {
  for (double& v : u.values()) v = std::clamp(v, bounds.a, bounds.b);
  return u;
}

/// ||u - P(u - g)||_Q: the projected-gradient residual with unit step.
inline double stationarity_residual(const Trajectory& u, const Trajectory& g, const ControlBounds& bounds) {
  Trajectory trial = u;
  trial -= g;
  return norm_q(u - project_box(std::move(trial), bounds));
}

/// min over bound-valued fields v of <g, v - u>_Q (v = a where g > 0, b where g < 0).
inline double variational_inequality_min(const Trajectory& u, const Trajectory& g, const ControlBounds& bounds) {
  Trajectory v(u.mesh(), u.grid());
  for (std::size_t i = 0; i < v.values().size(); ++i) {
    v.values()[i] = g.values()[i] > 0.0 ? bounds.a : bounds.b;
  }
  return inner_q(g, v - u);
}

struct IterationRecord {
  std::size_t iter = 0;
  double f = 0.0;
  double residual = 0.0;
  double step = 0.0;
  double update_norm = 0.0;
};

struct OptimizeTrace {
  std::vector<IterationRecord> records;
  bool converged = false;
  bool budget_exhausted = false;
  std::string stop_reason;
};

struct OptimizeResult {
  Trajectory u;
  OptimizeTrace trace;
};

/**
 * Projected gradient u_{k+1} = P(u_k - s_k g_k) with Armijo backtracking on
 * f(u_{k+1}) <= f(u_k) + c <g_k, u_{k+1} - u_k>. Trial steps after the first
 * are Barzilai-Borwein. The objective change is evaluated from increments
 * (G is affine), so the test stays meaningful when the change is near rounding.
 */
inline OptimizeResult projected_gradient(const ControlProblem& p, const Trajectory& initial,
                                         const OptimizeConfig& config) {
  p.validate();
  config.validate();
  detail::require_shape(initial.mesh() == p.mesh && initial.grid() == p.grid,
                        "projected_gradient: initial control shape mismatch");

  Trajectory u = project_box(initial, p.bounds);
  GradientEval cur = evaluate(p, u);
  OptimizeTrace trace;
  double step = config.step0;
  double last_step = 0.0;
  double last_update = 0.0;

  for (std::size_t iter = 0;; ++iter) {
    const double residual = stationarity_residual(u, cur.gradient, p.bounds);
    trace.records.push_back({iter, cur.f, residual, last_step, last_update});
    if (residual <= config.tol_stationarity) {
      trace.converged = true;
      trace.stop_reason = "stationary";
      break;
    }
    if (iter >= config.max_iters) {
      trace.budget_exhausted = true;
      trace.stop_reason = "iteration budget exhausted";
      break;
    }

    bool accepted = false;
    Trajectory next = u;
    Trajectory d = u;
    double s = step;
    for (int tries = 0; tries < 80; ++tries, s *= config.backtrack) {
      Trajectory trial = u;
      trial.axpy(-s, cur.gradient);
      next = project_box(std::move(trial), p.bounds);
      d = next - u;
      const double slope = inner_q(cur.gradient, d);
      if (slope >= 0.0) continue;
      const Trajectory z = linearized_state(p, d);
      const double change = eval_cost_increment(p.cost, cur.y, u, z, d);
      if (change <= config.armijo_c * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      trace.stop_reason = "line search failed";
      break;
    }

    GradientEval nxt = evaluate(p, next);
    const double update = norm_q(d);
    const Trajectory dg = nxt.gradient - cur.gradient;
    const double curvature = inner_q(d, dg);
    step = curvature > 0.0 ? std::clamp(inner_q(d, d) / curvature, 1e-10, 1e10) : config.step0;
    last_step = s;
    last_update = update;
    u = std::move(next);
    cur = std::move(nxt);
    if (update <= config.tol_step) {
      trace.records.push_back({iter + 1, cur.f, stationarity_residual(u, cur.gradient, p.bounds), s, update});
      trace.converged = trace.records.back().residual <= config.tol_stationarity;
      trace.stop_reason = trace.converged ? "stationary" : "step below tolerance";
      break;
    }
  }
  return {std::move(u), std::move(trace)};
}

}  // namespace fracopt
