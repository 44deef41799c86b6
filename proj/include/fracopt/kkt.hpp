#pragma once

// First- and second-order optimality checks at a candidate control:
// multiplier and active sets, critical-cone sampling, the Hessian quadratic
// form, SONC and quadratic growth (SSC).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "fracopt/cost.hpp"
#include "fracopt/errors.hpp"
#include "fracopt/optimize.hpp"
#include "fracopt/trajectory.hpp"

namespace fracopt {

enum class NodeClass { Lower, Upper, Inactive };

struct ActiveSets {
  std::vector<NodeClass> classes;  // same layout as Trajectory::values()
  double tolerance = 0.0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t inactive = 0;
};

struct Multiplier {
  Trajectory e;       // L_u - phi
  Trajectory phi;
  Trajectory y;
  ActiveSets active;
  double complementarity_violation = 0.0;
  double max_bound_violation = 0.0;
};

/// Default activity tolerance 1e-8 (b - a).
inline double default_active_tolerance(const ControlBounds& bounds) { return 1e-8 * (bounds.b - bounds.a); }

inline ActiveSets classify(const Trajectory& u, const ControlBounds& bounds, double tol) {
  ActiveSets sets;
  sets.tolerance = tol;
  sets.classes.reserve(u.values().size());
  for (double v : u.values()) {
    if (std::abs(v - bounds.a) <= tol) {
      sets.classes.push_back(NodeClass::Lower);
      ++sets.lower;
    } else if (std::abs(v - bounds.b) <= tol) {
      sets.classes.push_back(NodeClass::Upper);
      ++sets.upper;
    } else {
      sets.classes.push_back(NodeClass::Inactive);
      ++sets.inactive;
    }
  }
  return sets;
}

/// Quadrature of max(0, -e) on the lower set, max(0, e) on the upper set and |e| elsewhere.
inline double complementarity_violation(const Trajectory& e, const ActiveSets& sets) {
  const std::size_t dof = e.dof();
  double total = 0.0;
  for (std::size_t n = 0; n < e.nodes(); ++n) {
    double acc = 0.0;
    for (std::size_t j = 0; j < dof; ++j) {
      const double v = e(n, j);
      switch (sets.classes[n * dof + j]) {
        case NodeClass::Lower: acc += std::max(0.0, -v); break;
        case NodeClass::Upper: acc += std::max(0.0, v); break;
        case NodeClass::Inactive: acc += std::abs(v); break;
      }
    }
    total += e.mesh().trapezoid_weight(n) * acc;
  }
  return total * e.grid().cell_volume();
}

/**
 * e = L_u - phi at u, with active sets and the complementarity violation.
 * The transpose adjoint makes e the exact multiplier of the discrete problem;
 * the reversal adjoint gives the continuous-equation multiplier.
 */
inline Multiplier extract_multiplier(const ControlProblem& p, const Trajectory& u,
                                     AdjointKind kind = AdjointKind::Transpose, double tol_active = -1.0) {
  p.validate();
  const double tol = tol_active >= 0.0 ? tol_active : default_active_tolerance(p.bounds);
  double worst = 0.0;
  for (double v : u.values()) worst = std::max({worst, p.bounds.a - v, v - p.bounds.b});
  if (worst > tol) {
    throw DomainError("extract_multiplier: control infeasible, max bound violation " + std::to_string(worst));
  }
  GradientEval ev = evaluate(p, u, kind);
  Multiplier m{std::move(ev.gradient), std::move(ev.phi), std::move(ev.y), classify(u, p.bounds, tol), 0.0, worst};
  m.complementarity_violation = complementarity_violation(m.e, m.active);
  return m;
}

struct CriticalDirection {
  Trajectory v;
  Trajectory z;
  double c1 = 0.0;  // int_Q (L_y z + L_u v)
};

struct ConeSample {
  std::vector<CriticalDirection> directions;
  std::size_t free_nodes = 0;
  std::string note;
};

/// int_Q (L_y z + L_u v) at (y, u).
inline double first_order_change(const CostModel& cost, const Trajectory& y, const Trajectory& u,
                                 const CriticalDirection& dir) {
  return inner_q(partial_y(cost, y, u), dir.z) + inner_q(partial_u(cost, y, u), dir.v);
}

/**
 * Random critical directions: v is uniform with the sign pattern of the active
 * sets and is zeroed wherever |e| > tol_e, so int e v = 0 and (c1) holds with
 * equality. Directions with ||v||_Q below 1e-12 are dropped.
 */
template <class Rng>
ConeSample sample_critical_cone(const ControlProblem& p, const Trajectory& u, const Multiplier& mult,
                                std::size_t count, Rng& rng, double tol_e = -1.0) {
  detail::require_domain(count >= 1, "sample_critical_cone: count must be at least 1");
  double e_max = 0.0;
  for (double v : mult.e.values()) e_max = std::max(e_max, std::abs(v));
  const double thresh = tol_e >= 0.0 ? tol_e : 1e-8 * std::max(1.0, e_max);

  ConeSample out;
  std::vector<char> free(mult.e.values().size(), 0);
  for (std::size_t i = 0; i < free.size(); ++i) {
    free[i] = std::abs(mult.e.values()[i]) <= thresh;
    out.free_nodes += free[i];
  }
  if (out.free_nodes == 0) {
    out.note = "critical cone is {0}: every node carries a nonzero multiplier";
    return out;
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Trajectory ly = partial_y(p.cost, mult.y, u);
  const Trajectory lu = partial_u(p.cost, mult.y, u);
  for (std::size_t s = 0; s < count; ++s) {
    Trajectory v(p.mesh, p.grid);
    auto& vv = v.values();
    for (std::size_t i = 0; i < vv.size(); ++i) {
      const double r = unit(rng);
      if (!free[i]) continue;
      switch (mult.active.classes[i]) {
        case NodeClass::Lower: vv[i] = r; break;
        case NodeClass::Upper: vv[i] = -r; break;
        case NodeClass::Inactive: vv[i] = 2.0 * r - 1.0; break;
      }
    }
    if (norm_q(v) <= 1e-12) continue;
    Trajectory z = linearized_state(p, v);
    const double c1 = inner_q(ly, z) + inner_q(lu, v);
    out.directions.push_back({std::move(v), std::move(z), c1});
  }
  if (out.directions.empty()) out.note = "all sampled directions were negligible";
  return out;
}

/// Independent re-check of (c1) <= tol, (c2) z = z_v and (c3) sign conditions.
inline bool verify_critical_direction(const ControlProblem& p, const Trajectory& u, const Multiplier& mult,
                                      const CriticalDirection& dir, double tol_c1) {
  const Trajectory z = linearized_state(p, dir.v);
  if (norm_q(z - dir.z) > 1e-12 * std::max(1.0, norm_q(z))) return false;
  for (std::size_t i = 0; i < dir.v.values().size(); ++i) {
    const double v = dir.v.values()[i];
    if (mult.active.classes[i] == NodeClass::Lower && v < 0.0) return false;
    if (mult.active.classes[i] == NodeClass::Upper && v > 0.0) return false;
  }
  return first_order_change(p.cost, mult.y, u, dir) <= tol_c1;
}

/// int_Q (L_yy z^2 + 2 L_yu z v + L_uu v^2) with the derivatives at (y, u).
inline double quadratic_form(const CostModel& cost, const Trajectory& y, const Trajectory& u,
                             const CriticalDirection& dir) {
  detail::require_shape(dir.v.same_shape(y) && dir.z.same_shape(y) && u.same_shape(y),
                        "quadratic_form: shape mismatch");
  const std::size_t dof = y.dof();
  double total = 0.0;
  for (std::size_t n = 0; n < y.nodes(); ++n) {
    double acc = 0.0;
    for (std::size_t j = 0; j < dof; ++j) {
      const IntegrandDerivs d = eval_derivs(cost, n, j, y(n, j), u(n, j));
      const double z = dir.z(n, j);
      const double v = dir.v(n, j);
      acc += d.L_yy * z * z + 2.0 * d.L_yu * z * v + d.L_uu * v * v;
    }
    total += y.mesh().trapezoid_weight(n) * acc;
  }
  return total * y.grid().cell_volume();
}

struct SoncReport {
  bool applicable = false;
  std::string note;
  std::size_t tested = 0;
  double min_normalized = std::numeric_limits<double>::quiet_NaN();
  bool pass = false;
  std::vector<double> normalized;  // quadratic form / ||v||_Q^2 per direction
  std::vector<double> c1;
  std::vector<double> v_norm;
  std::vector<double> z_norm;
};

/**
 * Minimum over sampled critical directions of quadratic_form / ||v||_Q^2.
 * Refuses (applicable = false) when u is not stationary within tol_stationarity.
 */
template <class Rng>
SoncReport check_sonc(const ControlProblem& p, const Trajectory& u, std::size_t count, Rng& rng,
                      double tol_stationarity = 1e-6, double tol_sonc = 1e-8) {
  SoncReport report;
  const Multiplier mult = extract_multiplier(p, u);
  const double residual = stationarity_residual(u, mult.e, p.bounds);
  if (residual > tol_stationarity) {
    report.note = "not stationary; SONC not applicable (residual " + std::to_string(residual) + ")";
    return report;
  }
  report.applicable = true;
  const ConeSample cone = sample_critical_cone(p, u, mult, count, rng);
  report.note = cone.note;
  for (const auto& dir : cone.directions) {
    const double vn = norm_q(dir.v);
    const double q = quadratic_form(p.cost, mult.y, u, dir) / (vn * vn);
    report.normalized.push_back(q);
    report.c1.push_back(dir.c1);
    report.v_norm.push_back(vn);
    report.z_norm.push_back(norm_q(dir.z));
  }
  report.tested = report.normalized.size();
  if (report.tested > 0) {
    report.min_normalized = *std::min_element(report.normalized.begin(), report.normalized.end());
    report.pass = report.min_normalized >= -tol_sonc;
  } else {
    report.pass = true;  // the cone is {0}
  }
  return report;
}

struct GrowthAtRadius {
  double radius = 0.0;
  std::size_t trials = 0;
  double rho = std::numeric_limits<double>::infinity();  // min (psi - psi*) / ||u - u*||^2
  std::size_t worst_trial = 0;
};

struct SscReport {
  bool applicable = false;
  std::string note;
  std::vector<GrowthAtRadius> radii;
  double rho = std::numeric_limits<double>::quiet_NaN();  // min over all radii
  bool growth = false;                                    // rho > 0
};

/// Refusal note for SSC outside 1/2 < alpha and p = 2, or empty when applicable.
inline std::string ssc_refusal(const ControlProblem& p) {
  if (p.frac.alpha() <= 0.5) {
    return "quadratic growth is only established for 1/2 < alpha < 1; alpha = " +
           std::to_string(p.frac.alpha()) + " lies in the open-problem regime";
  }
  if (p.cost.degree() != 2) {
    return "second-order sufficiency requires p = 2, got p = " + std::to_string(p.cost.degree());
  }
  return {};
}

/**
 * Fits the quadratic-growth constant: for each radius r, samples
 * u = P(u* + r xi) with xi uniform in [-1, 1] per node and records the smallest
 * (psi(G(u), u) - psi(G(u*), u*)) / ||u - u*||_Q^2.
 */
template <class Rng>
SscReport check_ssc_growth(const ControlProblem& p, const Trajectory& u_star, std::size_t trials,
                           const std::vector<double>& radii, Rng& rng) {
  SscReport report;
  report.note = ssc_refusal(p);
  if (!report.note.empty()) return report;
  report.applicable = true;
  const Trajectory y_star = control_to_state(p, u_star);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  report.rho = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    detail::require_domain(r > 0.0, "check_ssc_growth: radii must be positive");
    GrowthAtRadius g;
    g.radius = r;
    for (std::size_t t = 0; t < trials; ++t) {
      Trajectory trial = u_star;
      for (double& v : trial.values()) v += r * unit(rng);
      const Trajectory delta = project_box(std::move(trial), p.bounds) - u_star;
      const double dn = norm_q(delta);
      if (dn == 0.0) continue;
      const Trajectory z = linearized_state(p, delta);
      const double ratio = eval_cost_increment(p.cost, y_star, u_star, z, delta) / (dn * dn);
      ++g.trials;
      if (ratio < g.rho) {
        g.rho = ratio;
        g.worst_trial = t;
      }
    }
    report.rho = std::min(report.rho, g.rho);
    report.radii.push_back(g);
  }
  report.growth = report.rho > 0.0;
  return report;
}

struct KKTReport {
  double stationarity_residual = 0.0;
  double complementarity_violation = 0.0;
  double complementarity_violation_reversal = 0.0;
  double adjoint_gap = 0.0;  // ||phi_reversal - phi_transpose||_Q over t_1..t_N
  double measure = 0.0;      // |Q_h|
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t inactive = 0;
  SoncReport sonc;
  SscReport ssc;
};

namespace detail {

inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

/// Runs every check at u.
template <class Rng>
KKTReport kkt_check(const ControlProblem& p, const Trajectory& u, std::size_t cone_samples, std::size_t ssc_trials,
                    const std::vector<double>& radii, Rng& rng) {
  KKTReport r;
  const Multiplier m = extract_multiplier(p, u, AdjointKind::Transpose);
  const Multiplier mr = extract_multiplier(p, u, AdjointKind::Reversal);
  r.stationarity_residual = stationarity_residual(u, m.e, p.bounds);
  r.complementarity_violation = m.complementarity_violation;
  r.complementarity_violation_reversal = mr.complementarity_violation;
  Trajectory gap = mr.phi - m.phi;
  for (double& v : gap.at(0)) v = 0.0;
  r.adjoint_gap = norm_q(gap);
  r.measure = measure_q(p.mesh, p.grid);
  r.lower = m.active.lower;
  r.upper = m.active.upper;
  r.inactive = m.active.inactive;
  r.sonc = check_sonc(p, u, cone_samples, rng);
  r.ssc = check_ssc_growth(p, u, ssc_trials, radii, rng);
  return r;
}

/// Flat "key = value" report.
inline void write_report(std::ostream& os, const KKTReport& r) {
  using detail::format_real;
  os << "stationarity_residual = " << format_real(r.stationarity_residual) << '\n';
  os << "complementarity_violation = " << format_real(r.complementarity_violation) << '\n';
  os << "complementarity_violation_reversal = " << format_real(r.complementarity_violation_reversal) << '\n';
  os << "adjoint_gap = " << format_real(r.adjoint_gap) << '\n';
  os << "measure_q = " << format_real(r.measure) << '\n';
  os << "active_lower = " << r.lower << '\n';
  os << "active_upper = " << r.upper << '\n';
  os << "inactive = " << r.inactive << '\n';
  os << "sonc_applicable = " << (r.sonc.applicable ? "true" : "false") << '\n';
  os << "cone_samples_tested = " << r.sonc.tested << '\n';
  os << "min_quadratic_form = " << format_real(r.sonc.min_normalized) << '\n';
  os << "sonc_pass = " << (r.sonc.pass ? "true" : "false") << '\n';
  if (!r.sonc.note.empty()) os << "sonc_note = " << r.sonc.note << '\n';
  os << "ssc_applicable = " << (r.ssc.applicable ? "true" : "false") << '\n';
  os << "ssc_gamma_bound = " << format_real(r.ssc.rho) << '\n';
  for (const auto& g : r.ssc.radii) {
    os << "ssc_rho_at_" << format_real(g.radius) << " = " << format_real(g.rho) << '\n';
  }
  os << "growth_check = " << (r.ssc.growth ? "pass" : "fail") << '\n';
  if (!r.ssc.note.empty()) os << "ssc_note = " << r.ssc.note << '\n';
}

/// Per-direction CSV: index, ||v||, ||z||, c1, normalized quadratic form.
inline void write_direction_csv(std::ostream& os, const SoncReport& r) {
  using detail::format_real;
  os << "index,v_norm,z_norm,c1,quadratic_form_normalized\n";
  for (std::size_t i = 0; i < r.normalized.size(); ++i) {
    os << i << ',' << format_real(r.v_norm[i]) << ',' << format_real(r.z_norm[i]) << ','
       << format_real(r.c1[i]) << ',' << format_real(r.normalized[i]) << '\n';
  }
}

}  // namespace fracopt
