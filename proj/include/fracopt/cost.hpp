#pragma once

// Running cost psi(y, u) = int_Q L(t, x, y, u) and its integrand family.
//
//   TRACKING:    L = (y - y_d)^2 / 2 + gamma u^2 / 2
//   POLYNOMIAL:  L = (y - y_d)^p + sum_{j=2}^{p-1} y^j + y u + sum_{i=1}^{p} u^{2i}

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <string>

#include "fracopt/errors.hpp"
#include "fracopt/trajectory.hpp"

namespace fracopt {

enum class CostVariant { Tracking, Polynomial };

struct IntegrandDerivs {
  double L = 0.0;
  double L_y = 0.0;
  double L_u = 0.0;
  double L_yy = 0.0;
  double L_yu = 0.0;
  double L_uu = 0.0;
};

class CostModel {
 public:
  static CostModel tracking(Trajectory target, double gamma) {
    detail::require_domain(std::isfinite(gamma) && gamma > 0.0, "CostModel: gamma must be positive");
    return CostModel(CostVariant::Tracking, std::move(target), gamma, 2);
  }

  static CostModel polynomial(Trajectory target, int degree) {
    detail::require_domain(degree >= 2, "CostModel: polynomial degree p must be an integer >= 2");
    return CostModel(CostVariant::Polynomial, std::move(target), 0.0, degree);
  }

  /// Builds a model by variant name ("tracking" or "polynomial"); other names are rejected.
  static CostModel from_name(const std::string& variant, Trajectory target, double gamma, int degree) {
    if (variant == "tracking") return tracking(std::move(target), gamma);
    if (variant == "polynomial") return polynomial(std::move(target), degree);
    throw DomainError("CostModel: unknown variant '" + variant + "' (expected tracking or polynomial)");
  }

  CostVariant variant() const { return variant_; }
  std::string variant_name() const { return variant_ == CostVariant::Tracking ? "tracking" : "polynomial"; }
  double gamma() const { return gamma_; }
  /// Growth exponent p of (A4); TRACKING counts as p = 2.
  int degree() const { return degree_; }
  const Trajectory& target() const { return target_; }

  bool jointly_convex() const { return variant_ == CostVariant::Tracking || degree_ == 2; }
  bool convex_in_u() const { return true; }

  IntegrandDerivs derivs(double yd, double y, double u) const {
    IntegrandDerivs d;
    if (variant_ == CostVariant::Tracking) {
      const double r = y - yd;
      d.L = 0.5 * r * r + 0.5 * gamma_ * u * u;
      d.L_y = r;
      d.L_u = gamma_ * u;
      d.L_yy = 1.0;
      d.L_yu = 0.0;
      d.L_uu = gamma_;
      return d;
    }
    const int p = degree_;
    const double r = y - yd;
    d.L = std::pow(r, p) + y * u;
    d.L_y = p * std::pow(r, p - 1) + u;
    d.L_yy = p * (p - 1) * std::pow(r, p - 2);
    for (int j = 2; j <= p - 1; ++j) {
      d.L += std::pow(y, j);
      d.L_y += j * std::pow(y, j - 1);
      d.L_yy += j * (j - 1) * std::pow(y, j - 2);
    }
    d.L_u = y;
    d.L_yu = 1.0;
    for (int i = 1; i <= p; ++i) {
      const int e = 2 * i;
      d.L += std::pow(u, e);
      d.L_u += e * std::pow(u, e - 1);
      d.L_uu += e * (e - 1) * std::pow(u, e - 2);
    }
    return d;
  }

  /// L(y + dy, u + du) - L(y, u), expanded so small increments keep full relative accuracy.
  double increment(double yd, double y, double u, double dy, double du) const {
    if (variant_ == CostVariant::Tracking) {
      return dy * (y - yd) + 0.5 * dy * dy + gamma_ * (u * du + 0.5 * du * du);
    }
    const int p = degree_;
    double total = pow_increment(y - yd, dy, p) + y * du + u * dy + dy * du;
    for (int j = 2; j <= p - 1; ++j) total += pow_increment(y, dy, j);
    for (int i = 1; i <= p; ++i) total += pow_increment(u, du, 2 * i);
    return total;
  }

  /// r_M of (A4) for |y_d| = yd_abs: the part of |L_y| + |L_u| not covered by k (|y|^{p-1} + |u|).
  double a4_remainder(double yd_abs) const {
    if (variant_ == CostVariant::Tracking) return yd_abs;
    const int p = degree_;
    double r = p * std::pow(2.0, p - 2) * std::pow(yd_abs, p - 1);
    for (int j = 2; j <= p - 1; ++j) r += j;
    if (p > 2) r += 1.0;  // |y| <= |y|^{p-1} + 1 in L_u
    return r;
  }

 private:
  // (a + d)^k - a^k = sum_{i=1}^{k} C(k, i) a^{k-i} d^i
  static double pow_increment(double a, double d, int k) {
    double total = 0.0;
    double binom = 1.0;
    double d_power = 1.0;
    for (int i = 1; i <= k; ++i) {
      binom = binom * (k - i + 1) / i;
      d_power *= d;
      total += binom * std::pow(a, k - i) * d_power;
    }
    return total;
  }

  CostModel(CostVariant variant, Trajectory target, double gamma, int degree)
      : variant_(variant), target_(std::move(target)), gamma_(gamma), degree_(degree) {
    detail::require_domain(target_.all_finite(), "CostModel: target y_d not finite");
  }

  CostVariant variant_;
  Trajectory target_;
  double gamma_;
  int degree_;
};

/// Integrand derivatives at node (n, j).
inline IntegrandDerivs eval_derivs(const CostModel& m, std::size_t n, std::size_t j, double y, double u) {
  return m.derivs(m.target()(n, j), y, u);
}

namespace detail {

inline void check_cost_shapes(const CostModel& m, const Trajectory& y, const Trajectory& u, const char* who) {
  require_shape(y.same_shape(m.target()) && u.same_shape(m.target()), std::string(who) + ": shape mismatch");
}

template <class Pick>
Trajectory derivative_field(const CostModel& m, const Trajectory& y, const Trajectory& u, Pick pick) {
  Trajectory out(y.mesh(), y.grid());
  const auto& yd = m.target().values();
  const auto& yv = y.values();
  const auto& uv = u.values();
  auto& ov = out.values();
  for (std::size_t i = 0; i < ov.size(); ++i) ov[i] = pick(m.derivs(yd[i], yv[i], uv[i]));
  return out;
}

}  // namespace detail

/// psi(y, u): trapezoid in time, h^dim in space.
inline double eval_cost(const CostModel& m, const Trajectory& y, const Trajectory& u) {
  detail::check_cost_shapes(m, y, u, "eval_cost");
  const std::size_t dof = y.dof();
  double total = 0.0;
  for (std::size_t n = 0; n < y.nodes(); ++n) {
    double acc = 0.0;
    for (std::size_t j = 0; j < dof; ++j) acc += eval_derivs(m, n, j, y(n, j), u(n, j)).L;
    total += y.mesh().trapezoid_weight(n) * acc;
  }
  const double value = total * y.grid().cell_volume();
  if (!std::isfinite(value)) throw SolverError("eval_cost: non-finite objective");
  return value;
}

/// psi(y + dy, u + du) - psi(y, u) without forming the two totals.
inline double eval_cost_increment(const CostModel& m, const Trajectory& y, const Trajectory& u,
                                  const Trajectory& dy, const Trajectory& du) {
  detail::check_cost_shapes(m, y, u, "eval_cost_increment");
  detail::check_cost_shapes(m, dy, du, "eval_cost_increment");
  const std::size_t dof = y.dof();
  double total = 0.0;
  for (std::size_t n = 0; n < y.nodes(); ++n) {
    double acc = 0.0;
    for (std::size_t j = 0; j < dof; ++j) {
      acc += m.increment(m.target()(n, j), y(n, j), u(n, j), dy(n, j), du(n, j));
    }
    total += y.mesh().trapezoid_weight(n) * acc;
  }
  const double value = total * y.grid().cell_volume();
  if (!std::isfinite(value)) throw SolverError("eval_cost_increment: non-finite objective change");
  return value;
}

inline Trajectory partial_y(const CostModel& m, const Trajectory& y, const Trajectory& u) {
  detail::check_cost_shapes(m, y, u, "partial_y");
  return detail::derivative_field(m, y, u, [](const IntegrandDerivs& d) { return d.L_y; });
}

inline Trajectory partial_u(const CostModel& m, const Trajectory& y, const Trajectory& u) {
  detail::check_cost_shapes(m, y, u, "partial_u");
  return detail::derivative_field(m, y, u, [](const IntegrandDerivs& d) { return d.L_u; });
}

struct A4Report {
  bool satisfied = true;
  double k_lm = 0.0;          // smallest k over the samples
  double r_max = 0.0;         // largest r_M over the target
  std::size_t samples = 0;
  // first sample where no finite k works (|y|^{p-1} + |u| = 0 yet the bound fails)
  double counter_y = std::numeric_limits<double>::quiet_NaN();
  double counter_u = std::numeric_limits<double>::quiet_NaN();
  double counter_yd = std::numeric_limits<double>::quiet_NaN();
};

/**
 * Samples |L_y| + |L_u| <= k (|y|^{p-1} + |u|) + r_M(t, x) over random nodes,
 * |u| <= bound and |y| spread over several decades, and returns the smallest
 * k that covers every sample.
 */
template <class Rng>
A4Report check_A4_bounds(const CostModel& m, double bound, std::size_t samples, Rng& rng) {
  detail::require_domain(std::isfinite(bound) && bound > 0.0, "check_A4_bounds: M must be positive");
  const auto& yd = m.target().values();
  std::uniform_int_distribution<std::size_t> pick_node(0, yd.size() - 1);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> decade(-3.0, 3.0);
  const double p = m.degree();

  A4Report report;
  for (double v : yd) report.r_max = std::max(report.r_max, m.a4_remainder(std::abs(v)));
  for (std::size_t s = 0; s < samples; ++s) {
    const double target = yd[pick_node(rng)];
    double y = unit(rng) * std::pow(10.0, decade(rng));
    double u = unit(rng) * bound;
    if (s % 16 == 0) y = 0.0;  // probe the origin, where only r_M can help
    if (s % 32 == 0) u = 0.0;
    const IntegrandDerivs d = m.derivs(target, y, u);
    const double excess = std::abs(d.L_y) + std::abs(d.L_u) - m.a4_remainder(std::abs(target));
    const double scale = std::pow(std::abs(y), p - 1.0) + std::abs(u);
    ++report.samples;
    if (scale == 0.0) {
      if (excess > 1e-12 * (1.0 + m.a4_remainder(std::abs(target))) && report.satisfied) {
        report.satisfied = false;
        report.counter_y = y;
        report.counter_u = u;
        report.counter_yd = target;
      }
      continue;
    }
    report.k_lm = std::max(report.k_lm, excess / scale);
  }
  if (!std::isfinite(report.k_lm)) report.satisfied = false;
  return report;
}

}  // namespace fracopt
