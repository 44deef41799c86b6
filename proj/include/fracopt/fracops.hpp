#pragma once

// Scalar-sequence fractional calculus on a uniform time mesh: left/right
// Riemann-Liouville integrals by product-trapezoidal quadrature and left/right
// Caputo derivatives by the L1 scheme.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracopt/errors.hpp"
#include "fracopt/special.hpp"

namespace fracopt {

/// Samples of a scalar function at the time nodes t_0..t_N.
using Sequence = std::vector<double>;

/// Uniform mesh of [0, T] with N steps.
class TimeMesh {
 public:
  TimeMesh(double horizon, std::size_t steps) : horizon_(horizon), steps_(steps) {
    detail::require_domain(std::isfinite(horizon) && horizon > 0.0, "TimeMesh: T must be positive");
    detail::require_domain(steps >= 2, "TimeMesh: need at least 2 steps");
    tau_ = horizon / static_cast<double>(steps);
  }

  double horizon() const { return horizon_; }
  std::size_t steps() const { return steps_; }
  std::size_t nodes() const { return steps_ + 1; }
  double tau() const { return tau_; }

  /// Node t_n; t_N is exactly T.
  double t(std::size_t n) const {
    return n == steps_ ? horizon_ : static_cast<double>(n) * tau_;
  }

  /// Composite trapezoid weight of node n.
  double trapezoid_weight(std::size_t n) const {
    return (n == 0 || n == steps_) ? 0.5 * tau_ : tau_;
  }

  bool operator==(const TimeMesh& other) const {
    return horizon_ == other.horizon_ && steps_ == other.steps_;
  }

 private:
  double horizon_;
  std::size_t steps_;
  double tau_;
};

/**
 * Fractional order alpha together with the L1 weights
 * b_k = (k+1)^{1-alpha} - k^{1-alpha}, k = 0..N-1.
 *
 * alpha = 1 is only reachable through classical(), where the weights collapse
 * to b_0 = 1, b_k = 0 and the L1 scheme becomes backward Euler.
 */
class FracOrder {
 public:
  FracOrder(double alpha, std::size_t steps) : alpha_(alpha) {
    detail::require_domain(alpha > 0.0 && alpha < 1.0,
                           "FracOrder: alpha must lie in (0, 1); use FracOrder::classical for alpha = 1");
    detail::require_domain(steps >= 1, "FracOrder: need at least one step");
    weights_.resize(steps);
    const double e = 1.0 - alpha;
    weights_[0] = 1.0;
    for (std::size_t k = 1; k < steps; ++k) {
      const double kk = static_cast<double>(k);
      weights_[k] = std::pow(kk + 1.0, e) - std::pow(kk, e);
    }
  }

  static FracOrder classical(std::size_t steps) {
    detail::require_domain(steps >= 1, "FracOrder: need at least one step");
    FracOrder order;
    order.alpha_ = 1.0;
    order.weights_.assign(steps, 0.0);
    order.weights_[0] = 1.0;
    return order;
  }

  double alpha() const { return alpha_; }
  bool is_classical() const { return alpha_ == 1.0; }
  std::span<const double> weights() const { return weights_; }
  double weight(std::size_t k) const { return weights_.at(k); }
  std::size_t steps() const { return weights_.size(); }

  /// tau^{-alpha} / Gamma(2 - alpha): the factor in front of the L1 sum.
  double l1_scale(double tau) const { return std::pow(tau, -alpha_) / std::tgamma(2.0 - alpha_); }

 private:
  FracOrder() = default;
  double alpha_ = 0.5;
  std::vector<double> weights_;
};

/// Nodal values of a derivative that is defined on nodes [first, first + values.size()).
struct NodalDerivative {
  std::size_t first_node = 0;
  std::vector<double> values;

  bool defined_at(std::size_t n) const {
    return n >= first_node && n < first_node + values.size();
  }

  double at(std::size_t n) const {
    if (!defined_at(n)) throw std::out_of_range("derivative undefined at node " + std::to_string(n));
    return values[n - first_node];
  }
};

namespace detail {

inline void check_sequence(std::span<const double> f, const TimeMesh& mesh, const char* who) {
  require_shape(f.size() == mesh.nodes(), std::string(who) + ": sequence length " +
                                              std::to_string(f.size()) + " does not match mesh with " +
                                              std::to_string(mesh.nodes()) + " nodes");
  for (double v : f) require_domain(std::isfinite(v), std::string(who) + ": non-finite sample");
}

}  // namespace detail

/**
 * Product-trapezoidal rule for the left Riemann-Liouville integral of order theta:
 * f is interpolated piecewise linearly and integrated exactly against the
 * kernel (t_n - s)^{theta-1} / Gamma(theta). Weights depend only on the lag, so
 * one rule serves every sequence on the same mesh.
 */
class RiemannLiouvilleRule {
 public:
  RiemannLiouvilleRule(double theta, const TimeMesh& mesh) : mesh_(mesh) {
    detail::require_domain(theta > 0.0 && theta <= 1.0, "rl_integral: order must lie in (0, 1]");
    const std::size_t n_steps = mesh.steps();
    near_.resize(n_steps);
    far_.resize(n_steps);
    const double scale = std::pow(mesh.tau(), theta) / std::tgamma(theta);
    for (std::size_t k = 0; k < n_steps; ++k) {
      const double kk = static_cast<double>(k);
      // A = int_k^{k+1} r^{theta-1} dr, B = int_k^{k+1} r^theta dr
      const double a = (std::pow(kk + 1.0, theta) - std::pow(kk, theta)) / theta;
      const double b = (std::pow(kk + 1.0, theta + 1.0) - std::pow(kk, theta + 1.0)) / (theta + 1.0);
      // lag k covers [t_{n-k-1}, t_{n-k}]; "far" multiplies the left end, "near" the right
      far_[k] = scale * (b - kk * a);
      near_[k] = scale * ((kk + 1.0) * a - b);
    }
  }

  /// (I_{0+}^theta f)(t_n) for every node; node 0 is 0.
  Sequence apply(std::span<const double> f) const {
    detail::check_sequence(f, mesh_, "rl_integral_left");
    return apply_unchecked(f);
  }

  Sequence apply_unchecked(std::span<const double> f) const {
    const std::size_t n_nodes = mesh_.nodes();
    Sequence out(n_nodes, 0.0);
    for (std::size_t n = 1; n < n_nodes; ++n) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += far_[k] * f[n - k - 1] + near_[k] * f[n - k];
      out[n] = acc;
    }
    return out;
  }

 private:
  TimeMesh mesh_;
  std::vector<double> near_;
  std::vector<double> far_;
};

/// Discrete left Riemann-Liouville integral (I_{0+}^theta f)(t_n).
inline Sequence rl_integral_left(double theta, std::span<const double> f, const TimeMesh& mesh) {
  return RiemannLiouvilleRule(theta, mesh).apply(f);
}

/// Discrete right Riemann-Liouville integral (I_{T-}^theta f)(t_n), the mirror of the left one.
inline Sequence rl_integral_right(double theta, std::span<const double> f, const TimeMesh& mesh) {
  Sequence reversed(f.rbegin(), f.rend());
  Sequence out = rl_integral_left(theta, reversed, mesh);
  std::reverse(out.begin(), out.end());
  return out;
}

/**
 * L1 approximation of the left Caputo derivative,
 *   tau^{-alpha} / Gamma(2-alpha) * sum_{k<n} b_k (f_{n-k} - f_{n-k-1}),
 * at nodes 1..N. Node 0 is left undefined.
 */
inline NodalDerivative caputo_left(const FracOrder& frac, std::span<const double> f, const TimeMesh& mesh) {
  detail::check_sequence(f, mesh, "caputo_left");
  detail::require_shape(frac.steps() >= mesh.steps(), "caputo_left: FracOrder has fewer weights than mesh steps");
  const double scale = frac.l1_scale(mesh.tau());
  const auto b = frac.weights();
  NodalDerivative d{1, std::vector<double>(mesh.steps())};
  for (std::size_t n = 1; n <= mesh.steps(); ++n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += b[k] * (f[n - k] - f[n - k - 1]);
    d.values[n - 1] = scale * acc;
  }
  return d;
}

/// Right Caputo derivative by time reversal of caputo_left; defined at nodes 0..N-1.
inline NodalDerivative caputo_right(const FracOrder& frac, std::span<const double> f, const TimeMesh& mesh) {
  detail::check_sequence(f, mesh, "caputo_right");
  Sequence reversed(f.rbegin(), f.rend());
  NodalDerivative left = caputo_left(frac, reversed, mesh);
  // left is defined at reversed nodes 1..N, i.e. original nodes N-1..0
  std::reverse(left.values.begin(), left.values.end());
  left.first_node = 0;
  return left;
}

}  // namespace fracopt
