#pragma once

// Forward solvers for d^alpha y/dt^alpha = Delta y + u, y(0) = y0, y = 0 on the boundary.
//
// solve_state is the production path (L1-implicit stepping). spectral_oracle
// solves the same semi-discrete system mode by mode with Mittag-Leffler
// functions and is used to check it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "fracopt/errors.hpp"
#include "fracopt/fracops.hpp"
#include "fracopt/grid.hpp"
#include "fracopt/special.hpp"
#include "fracopt/trajectory.hpp"

namespace fracopt {

struct StateProblem {
  FracOrder frac;
  TimeMesh mesh;
  SpaceGrid grid;
  SpaceField y0;
  Trajectory u;

  /// Problem with zero control.
  static StateProblem homogeneous(FracOrder frac, TimeMesh mesh, SpaceGrid grid, SpaceField y0) {
    Trajectory u(mesh, grid);
    return {std::move(frac), mesh, grid, std::move(y0), std::move(u)};
  }

  void validate() const {
    detail::require_shape(frac.steps() >= mesh.steps(), "StateProblem: FracOrder weights shorter than mesh");
    detail::require_shape(y0.size() == grid.dof(), "StateProblem: y0 does not match grid");
    detail::require_shape(u.mesh() == mesh && u.grid() == grid, "StateProblem: control shape mismatch");
    for (double v : y0) detail::require_domain(std::isfinite(v), "StateProblem: y0 not finite");
    detail::require_domain(u.all_finite(), "StateProblem: control not finite");
  }
};

/**
 * L1-implicit time stepping. With sigma = tau^{-alpha}/Gamma(2-alpha), each step solves
 *   (sigma I - Delta_h) y_n = u_n + sigma (sum_{k=1}^{n-1} (b_{k-1} - b_k) y_{n-k} + b_{n-1} y_0).
 */
inline Trajectory solve_state(const StateProblem& p) {
  p.validate();
  const std::size_t steps = p.mesh.steps();
  const std::size_t dof = p.grid.dof();
  const double sigma = p.frac.l1_scale(p.mesh.tau());
  const auto b = p.frac.weights();
  const ShiftedSolver solver(p.grid, sigma);

  std::vector<double> history(steps, 0.0);  // (b_{k-1} - b_k) for k >= 1
  for (std::size_t k = 1; k < steps; ++k) history[k] = b[k - 1] - b[k];

  Trajectory y(p.mesh, p.grid);
  std::copy(p.y0.begin(), p.y0.end(), y.at(0).begin());
  SpaceField rhs(dof);
  for (std::size_t n = 1; n <= steps; ++n) {
    std::fill(rhs.begin(), rhs.end(), 0.0);
    for (std::size_t k = 1; k < n; ++k) {
      const double c = history[k];
      if (c == 0.0) continue;
      const auto prev = y.at(n - k);
      for (std::size_t j = 0; j < dof; ++j) rhs[j] += c * prev[j];
    }
    const double c0 = b[n - 1];
    if (c0 != 0.0) {
      for (std::size_t j = 0; j < dof; ++j) rhs[j] += c0 * p.y0[j];
    }
    const auto un = p.u.at(n);
    for (std::size_t j = 0; j < dof; ++j) rhs[j] = un[j] + sigma * rhs[j];
    const SpaceField next = solver.solve(rhs);
    std::copy(next.begin(), next.end(), y.at(n).begin());
  }
  if (!y.all_finite()) throw SolverError("solve_state: non-finite state");
  return y;
}

namespace detail {

/// Per-mode Duhamel weights for a piecewise-linear control. For lag k the
/// interval s in [t_{n-k-1}, t_{n-k}] contributes far[k] u(t_{n-k-1}) + near[k] u(t_{n-k}),
/// integrating (t-s)^{alpha-1} E_{alpha,alpha}(-lambda (t-s)^alpha) exactly through the primitives
///   F1(r) = r^alpha E_{alpha,alpha+1}(-lambda r^alpha),
///   F2(r) = int_0^r s K(s) ds = r^{alpha+1} (E_{alpha,alpha+1} - E_{alpha,alpha+2})(-lambda r^alpha).
struct DuhamelWeights {
  std::vector<double> far;
  std::vector<double> near;
};

inline DuhamelWeights duhamel_weights(double alpha, double lambda, const TimeMesh& mesh) {
  const std::size_t steps = mesh.steps();
  const double tau = mesh.tau();
  std::vector<double> f1(steps + 1, 0.0);
  std::vector<double> f2(steps + 1, 0.0);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double r = static_cast<double>(k) * tau;
    const double ra = std::pow(r, alpha);
    const double z = -lambda * ra;
    const double e1 = mittag_leffler(alpha, alpha + 1.0, z);
    const double e2 = mittag_leffler(alpha, alpha + 2.0, z);
    f1[k] = ra * e1;
    f2[k] = ra * r * (e1 - e2);
  }
  DuhamelWeights w{std::vector<double>(steps), std::vector<double>(steps)};
  for (std::size_t k = 0; k < steps; ++k) {
    const double d1 = f1[k + 1] - f1[k];
    const double d2 = f2[k + 1] - f2[k];
    const double kk = static_cast<double>(k);
    w.far[k] = (d2 - kk * tau * d1) / tau;
    w.near[k] = ((kk + 1.0) * tau * d1 - d2) / tau;
  }
  return w;
}

}  // namespace detail

/**
 * Eigenmode solution of the semi-discrete system: with c_k the coefficients in
 * the sine basis,
 *   c_k(t) = E_{alpha,1}(-lambda_k t^alpha) c_k(0)
 *          + int_0^t (t-s)^{alpha-1} E_{alpha,alpha}(-lambda_k (t-s)^alpha) u_k(s) ds,
 * with u piecewise linear in time.
 */
inline Trajectory spectral_oracle(const StateProblem& p) {
  p.validate();
  const EigenSystem eig(p.grid);
  const std::size_t n_nodes = p.mesh.nodes();
  const std::size_t dof = p.grid.dof();
  const double alpha = p.frac.alpha();

  const std::vector<double> c0 = eig.to_modal(p.y0);
  std::vector<std::vector<double>> uc(n_nodes);
  bool any_control = false;
  for (std::size_t n = 0; n < n_nodes; ++n) {
    uc[n] = eig.to_modal(p.u.at(n));
    any_control = any_control || std::any_of(uc[n].begin(), uc[n].end(), [](double v) { return v != 0.0; });
  }

  // Modes whose data sits at rounding level of the largest coefficient add
  // nothing representable to the result and are skipped.
  constexpr double kNegligible = 1e-14;
  double c0_max = 0.0;
  for (double c : c0) c0_max = std::max(c0_max, std::abs(c));
  double u_max = 0.0;
  std::vector<double> u_mode_max(dof, 0.0);
  for (std::size_t n = 0; n < n_nodes; ++n) {
    for (std::size_t m = 0; m < dof; ++m) u_mode_max[m] = std::max(u_mode_max[m], std::abs(uc[n][m]));
  }
  for (double v : u_mode_max) u_max = std::max(u_max, v);

  std::vector<double> modal(n_nodes * dof, 0.0);
  for (std::size_t m = 0; m < dof; ++m) {
    const double lambda = eig.eigenvalue_at(m);
    modal[m] = c0[m];
    if (std::abs(c0[m]) > kNegligible * c0_max) {
      for (std::size_t n = 1; n < n_nodes; ++n) {
        const double z = -lambda * std::pow(p.mesh.t(n), alpha);
        modal[n * dof + m] = mittag_leffler(alpha, 1.0, z) * c0[m];
      }
    }
    if (!any_control || u_mode_max[m] <= kNegligible * u_max) continue;
    const auto w = detail::duhamel_weights(alpha, lambda, p.mesh);
    for (std::size_t n = 1; n < n_nodes; ++n) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += w.far[k] * uc[n - k - 1][m] + w.near[k] * uc[n - k][m];
      modal[n * dof + m] += acc;
    }
  }

  Trajectory y(p.mesh, p.grid);
  std::copy(p.y0.begin(), p.y0.end(), y.at(0).begin());
  for (std::size_t n = 1; n < n_nodes; ++n) {
    const SpaceField field = eig.from_modal(std::span<const double>(modal.data() + n * dof, dof));
    std::copy(field.begin(), field.end(), y.at(n).begin());
  }
  if (!y.all_finite()) throw SolverError("spectral_oracle: non-finite state");
  return y;
}

/**
 * Residual of the Volterra form y = y0 + I^alpha_{0+}(Delta_h y + u):
 * max over time nodes of || y(t_n) - y(t_0) - I^alpha(Delta_h y + u)(t_n) ||_h.
 */
inline double mild_residual(const FracOrder& frac, const TimeMesh& mesh, const SpaceGrid& grid,
                            const Trajectory& y, const Trajectory& u) {
  detail::require_shape(y.mesh() == mesh && y.grid() == grid, "mild_residual: state shape mismatch");
  detail::require_shape(u.same_shape(y), "mild_residual: control shape mismatch");
  const std::size_t n_nodes = mesh.nodes();
  const std::size_t dof = grid.dof();

  Trajectory forcing(mesh, grid);
  for (std::size_t n = 0; n < n_nodes; ++n) {
    const SpaceField lap = apply_laplacian(grid, y.at(n));
    auto dst = forcing.at(n);
    const auto un = u.at(n);
    for (std::size_t j = 0; j < dof; ++j) dst[j] = lap[j] + un[j];
  }

  const RiemannLiouvilleRule rule(frac.alpha(), mesh);
  Trajectory residual(mesh, grid);
  for (std::size_t j = 0; j < dof; ++j) {
    const Sequence integral = rule.apply_unchecked(forcing.history(j));
    for (std::size_t n = 0; n < n_nodes; ++n) residual(n, j) = y(n, j) - y(0, j) - integral[n];
  }

  double worst = 0.0;
  for (std::size_t n = 0; n < n_nodes; ++n) worst = std::max(worst, norm_h(grid, residual.at(n)));
  return worst;
}

}  // namespace fracopt
