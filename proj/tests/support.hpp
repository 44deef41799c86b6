#pragma once

// Independent reference computations shared by the unit tests.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fracopt/grid.hpp"
#include "fracopt/trajectory.hpp"

namespace fracopt_test {

/// Power series sum z^m / Gamma(alpha m + beta) in long double. Only for
/// moderate |z|; returns NaN when cancellation would cost more than 6 digits.
inline double ml_series_oracle(double alpha, double beta, double z) {
  long double sum = 0.0L;
  long double largest = 0.0L;
  for (int m = 0; m < 400; ++m) {
    if (z == 0.0 && m > 0) break;
    const long double lg = std::lgamma(static_cast<long double>(alpha) * m + beta);
    const long double mag = m == 0 ? 0.0L : m * std::log(std::abs(static_cast<long double>(z)));
    const long double term = std::exp(mag - lg);
    largest = std::max(largest, term);
    sum += (z < 0.0 && (m % 2)) ? -term : term;
    if (m > 20 && term < 1e-30L) break;
  }
  if (largest > 1e6L * std::max(1.0L, std::abs(sum))) return std::nan("");
  return static_cast<double>(sum);
}

/// Discrete Dirichlet eigenvalue of sin(k pi x / L) on M interior nodes.
inline double discrete_eigenvalue(double length, std::size_t count, std::size_t k) {
  const double h = length / static_cast<double>(count + 1);
  const double s = std::sin(static_cast<double>(k) * std::numbers::pi * h / (2.0 * length));
  return 4.0 / (h * h) * s * s;
}

/// Sampled sin(k pi x / L) on a 1D grid (not normalized).
inline fracopt::SpaceField sine_mode(const fracopt::SpaceGrid& g, std::size_t k) {
  fracopt::SpaceField f(g.dof());
  for (std::size_t j = 0; j < g.dof(); ++j) {
    f[j] = std::sin(static_cast<double>(k) * std::numbers::pi * g.coordinate(j, 0) / g.extent(0));
  }
  return f;
}

/// Backward Euler for y' = y'' + u on a 1D grid, solved with a dense
/// Gaussian elimination of (I/tau - D2) per step.
inline fracopt::Trajectory backward_euler_1d(const fracopt::TimeMesh& mesh, const fracopt::SpaceGrid& g,
                                             const fracopt::SpaceField& y0, const fracopt::Trajectory& u) {
  const std::size_t m = g.dof();
  const double tau = mesh.tau();
  const double ih2 = 1.0 / (g.h(0) * g.h(0));
  fracopt::Trajectory y(mesh, g);
  for (std::size_t j = 0; j < m; ++j) y(0, j) = y0[j];
  for (std::size_t n = 1; n < mesh.nodes(); ++n) {
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
      a[i][i] = 1.0 / tau + 2.0 * ih2;
      if (i > 0) a[i][i - 1] = -ih2;
      if (i + 1 < m) a[i][i + 1] = -ih2;
      a[i][m] = y(n - 1, i) / tau + u(n, i);
    }
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t r = c + 1; r < m; ++r) {
        const double f = a[r][c] / a[c][c];
        if (f == 0.0) continue;
        for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
      }
    }
    for (std::size_t i = m; i-- > 0;) {
      double s = a[i][m];
      for (std::size_t k = i + 1; k < m; ++k) s -= a[i][k] * y(n, k);
      y(n, i) = s / a[i][i];
    }
  }
  return y;
}

inline fracopt::Trajectory random_trajectory(const fracopt::TimeMesh& mesh, const fracopt::SpaceGrid& g,
                                             std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> unit(-scale, scale);
  fracopt::Trajectory f(mesh, g);
  for (double& v : f.values()) v = unit(rng);
  return f;
}

inline double max_diff(const fracopt::Trajectory& a, const fracopt::Trajectory& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  return m;
}

/// Polynomial with coefficients c[m] of t^m.
inline double poly_eval(const std::vector<double>& c, double t) {
  double v = 0.0;
  for (std::size_t m = c.size(); m-- > 0;) v = v * t + c[m];
  return v;
}

/// Exact int_0^1 f(t) D^alpha g(t) dt for polynomials f, g, using
/// D^alpha t^m = Gamma(m+1)/Gamma(m+1-alpha) t^(m-alpha) for m >= 1.
inline double caputo_pairing_exact(const std::vector<double>& f, const std::vector<double>& g, double alpha) {
  double sum = 0.0;
  for (std::size_t m = 1; m < g.size(); ++m) {
    const double dm = std::tgamma(m + 1.0) / std::tgamma(m + 1.0 - alpha);
    for (std::size_t k = 0; k < f.size(); ++k) sum += f[k] * g[m] * dm / (k + m + 1.0 - alpha);
  }
  return sum;
}

}  // namespace fracopt_test
