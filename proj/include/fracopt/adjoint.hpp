#pragma once

// Adjoint of the state equation,
//   right-Caputo d^alpha phi = Delta phi - L_y,  phi(T) = 0.
//
// Sign convention: every adjoint returned here carries the source with a minus
// sign, so the reduced gradient is always L_u - phi.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "fracopt/errors.hpp"
#include "fracopt/fracops.hpp"
#include "fracopt/grid.hpp"
#include "fracopt/state.hpp"
#include "fracopt/trajectory.hpp"

namespace fracopt {

struct AdjointProblem {
  FracOrder frac;
  TimeMesh mesh;
  SpaceGrid grid;
  Trajectory source;  // L_y at the nodes

  void validate() const {
    detail::require_shape(frac.steps() >= mesh.steps(), "AdjointProblem: FracOrder weights shorter than mesh");
    detail::require_shape(source.mesh() == mesh && source.grid() == grid, "AdjointProblem: source shape mismatch");
    detail::require_domain(source.all_finite(), "AdjointProblem: source not finite");
  }
};

namespace detail {

inline Trajectory reversed_in_time(const Trajectory& f) {
  Trajectory out(f.mesh(), f.grid());
  const std::size_t steps = f.mesh().steps();
  for (std::size_t n = 0; n <= steps; ++n) {
    const auto src = f.at(steps - n);
    std::copy(src.begin(), src.end(), out.at(n).begin());
  }
  return out;
}

}  // namespace detail

/// Time-reversal reduction: zeta solves the forward problem with zeta(0) = 0 and
/// control -L_y(T - t); phi(t) = zeta(T - t).
inline Trajectory solve_adjoint_reversal(const AdjointProblem& p) {
  p.validate();
  Trajectory g = detail::reversed_in_time(p.source);
  g *= -1.0;
  const StateProblem forward{p.frac, p.mesh, p.grid, SpaceField(p.grid.dof(), 0.0), std::move(g)};
  return detail::reversed_in_time(solve_state(forward));
}

/**
 * Transpose of the control-to-state map u -> solve_state(0, u) in the
 * space-time quadrature inner product: returns A s with
 *   <solve_state(0, u), s>_Q = <u, A s>_Q  for all u.
 *
 * With c_k = b_{k-1} - b_k, S = (sigma I - Delta_h)^{-1} and p_n = w_n s_n
 * (w_n the trapezoid weights), the backward recurrence
 *   q_N = S p_N,  q_m = S (p_m + sigma sum_{n>m} c_{n-m} q_n)
 * gives (A s)_m = q_m / w_m for m >= 1. The control at t_0 never enters the
 * scheme, so (A s)_0 = 0.
 */
inline Trajectory apply_state_transpose(const FracOrder& frac, const TimeMesh& mesh, const SpaceGrid& grid,
                                        const Trajectory& s) {
  detail::require_shape(frac.steps() >= mesh.steps(), "apply_state_transpose: FracOrder weights shorter than mesh");
  detail::require_shape(s.mesh() == mesh && s.grid() == grid, "apply_state_transpose: shape mismatch");
  const std::size_t steps = mesh.steps();
  const std::size_t dof = grid.dof();
  const double sigma = frac.l1_scale(mesh.tau());
  const auto b = frac.weights();
  const ShiftedSolver solver(grid, sigma);

  std::vector<double> history(steps, 0.0);
  for (std::size_t k = 1; k < steps; ++k) history[k] = b[k - 1] - b[k];

  Trajectory q(mesh, grid);
  SpaceField rhs(dof);
  for (std::size_t m = steps; m >= 1; --m) {
    const double w = mesh.trapezoid_weight(m);
    const auto sm = s.at(m);
    for (std::size_t j = 0; j < dof; ++j) rhs[j] = w * sm[j];
    for (std::size_t n = m + 1; n <= steps; ++n) {
      const double c = sigma * history[n - m];
      if (c == 0.0) continue;
      const auto qn = q.at(n);
      for (std::size_t j = 0; j < dof; ++j) rhs[j] += c * qn[j];
    }
    const SpaceField next = solver.solve(rhs);
    std::copy(next.begin(), next.end(), q.at(m).begin());
  }
  for (std::size_t m = 1; m <= steps; ++m) {
    const double inv_w = 1.0 / mesh.trapezoid_weight(m);
    for (double& v : q.at(m)) v *= inv_w;
  }
  if (!q.all_finite()) throw SolverError("apply_state_transpose: non-finite result");
  return q;
}

/// Discrete adjoint: phi = -A L_y, the exact counterpart of solve_adjoint_reversal
/// for the discretized problem.
inline Trajectory solve_adjoint_transpose(const AdjointProblem& p) {
  p.validate();
  Trajectory phi = apply_state_transpose(p.frac, p.mesh, p.grid, p.source);
  phi *= -1.0;
  return phi;
}

}  // namespace fracopt
