#pragma once

// Special functions used by the fractional operators: Gamma, the kernel
// k_{1-alpha}, and the two-parameter Mittag-Leffler function E_{alpha,beta}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>

#include "fracopt/errors.hpp"

namespace fracopt {

/// Gamma function for positive finite arguments.
inline double gamma(double x) {
  detail::require_domain(std::isfinite(x) && x > 0.0,
                         "gamma: argument must be positive and finite, got " + std::to_string(x));
  return std::tgamma(x);
}

/// Kernel 1 / (Gamma(alpha) t^{1-alpha}) of the Riemann-Liouville integral of order alpha.
inline double kernel_k(double alpha, double t) {
  detail::require_domain(alpha > 0.0 && alpha <= 1.0, "kernel_k: alpha must lie in (0, 1]");
  detail::require_domain(std::isfinite(t) && t > 0.0, "kernel_k: t must be positive");
  return 1.0 / (gamma(alpha) * std::pow(t, 1.0 - alpha));
}

namespace detail {

/// Arguments with |z|^{1/alpha} at or below this value are summed as a power series.
inline constexpr double kMlSeriesScale = 5.0;

/// Crossover |z| between the series branch and the integral branch.
inline double ml_seam(double alpha) { return std::pow(kMlSeriesScale, alpha); }

/// Power series for z > 0 with terms formed in log space; every term is
/// positive, so the sum is accurate until it overflows.
inline double ml_series_positive(double alpha, double beta, double z) {
  const double log_z = std::log(z);
  double sum = 0.0;
  for (int m = 0; m < 1000000; ++m) {
    const double arg = alpha * m + beta;
    const double term = std::exp(m * log_z - std::lgamma(arg));
    sum += term;
    if (!std::isfinite(sum)) return std::numeric_limits<double>::infinity();
    // past the peak term (digamma(arg) > log(z)/alpha) and negligible
    if (arg > 2.0 && std::log(arg) > log_z / alpha + 1.0 && term <= 1e-17 * sum) break;
  }
  return sum;
}

/// Truncated power series sum_m z^m / Gamma(alpha m + beta).
inline double ml_series(double alpha, double beta, double z) {
  double sum = 0.0;
  double power = 1.0;
  for (int m = 0; m < 100000; ++m) {
    const double arg = alpha * m + beta;
    if (arg > 170.0) break;
    const double term = power / std::tgamma(arg);
    sum += term;
    if (m > 2 && std::abs(term) <= 1e-17 * std::abs(sum) && arg > 2.0) break;
    power *= z;
    if (power == 0.0) break;
  }
  return sum;
}

/// (1 / 2 pi i) times the Hankel-contour integral of exp(s) s^{alpha - beta} / (s^alpha + x)
/// for x > 1 and 0 < alpha < 1: two rays along the negative real axis from
/// |s| = 1 outward plus the unit circle, which keeps the contour clear of
/// the origin for every real beta.
inline double ml_contour(double alpha, double beta, double x) {
  using rule = boost::math::quadrature::gauss<double, 30>;
  const double pi = std::numbers::pi;
  const double sin_b = std::sin(pi * beta);
  const double sin_ba = std::sin(pi * (beta - alpha));
  const double cos_a = std::cos(pi * alpha);

  auto ray = [=](double r) {
    const double ra = std::pow(r, alpha);
    const double den = ra * ra + 2.0 * x * ra * cos_a + x * x;
    return std::exp(-r) * std::pow(r, alpha - beta) * (ra * sin_b + x * sin_ba) / den;
  };
  auto circle = [=](double theta) {
    const std::complex<double> s = std::polar(1.0, theta);
    return (std::exp(s) * std::pow(s, alpha - beta + 1.0) / (std::pow(s, alpha) + x)).real();
  };

  double total = rule::integrate(circle, 0.0, 0.5 * pi) + rule::integrate(circle, 0.5 * pi, pi);

  // Beyond r = 50 the factor exp(-r) leaves nothing above double precision.
  constexpr double rho = 1.0;
  constexpr double cutoff = 50.0;
  constexpr double max_panel = 4.0;
  std::vector<double> breaks{rho, cutoff};
  // The ray denominator dips to x^2 sin^2(pi alpha) where r^alpha = -x cos(pi alpha);
  // for alpha near 1 that is a narrow bump, so grade panels geometrically toward it.
  if (cos_a < 0.0) {
    const double r_peak = std::pow(-x * cos_a, 1.0 / alpha);
    if (r_peak > rho && r_peak < cutoff) {
      const double width = x * std::sin(pi * alpha) * std::pow(r_peak, 1.0 - alpha) / alpha;
      breaks.push_back(r_peak);
      for (double offset = width; offset < cutoff; offset *= 2.0) {
        if (r_peak - offset > rho) breaks.push_back(r_peak - offset);
        if (r_peak + offset < cutoff) breaks.push_back(r_peak + offset);
      }
    }
  }
  std::sort(breaks.begin(), breaks.end());
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    const int pieces = static_cast<int>(std::ceil((b - a) / max_panel));
    const double step = (b - a) / pieces;
    for (int k = 0; k < pieces; ++k) total += rule::integrate(ray, a + k * step, a + (k + 1) * step);
  }
  return total / pi;
}

/// E_{alpha,beta}(-x) for x beyond the series seam and 0 < alpha < 1.
/// Expanding 1/(s^alpha + x) to order K turns the leading part of the contour
/// integral into the exact terms (-1)^k x^{-k-1} / Gamma(beta - alpha (k+1));
/// only the remainder x^{-K} (...) is integrated numerically, which avoids
/// cancellation when E is small.
inline double ml_integral(double alpha, double beta, double z) {
  constexpr int kExpansionTerms = 3;
  const double x = -z;
  double sum = 0.0;
  double power = 1.0 / x;
  for (int k = 0; k < kExpansionTerms; ++k) {
    const double arg = beta - alpha * (k + 1);
    const double rgamma = (arg <= 0.0 && arg == std::floor(arg)) ? 0.0 : 1.0 / std::tgamma(arg);
    sum += ((k % 2 == 0) ? 1.0 : -1.0) * power * rgamma;
    power /= x;
  }
  const double sign = (kExpansionTerms % 2 == 0) ? 1.0 : -1.0;
  return sum + sign * std::pow(x, -kExpansionTerms) *
                   ml_contour(alpha, beta - alpha * kExpansionTerms, x);
}

/// alpha = 1: exp(z) for beta = 1, an upward recurrence for integer beta,
/// Kummer's function 1F1(1; beta; z) / Gamma(beta) otherwise.
inline double ml_classical(double beta, double z) {
  if (std::abs(z) <= kMlSeriesScale) return ml_series(1.0, beta, z);
  const double rounded = std::round(beta);
  if (rounded == beta && beta <= 64.0) {
    double value = std::exp(z);
    for (int b = 1; b < static_cast<int>(rounded); ++b) value = (value - 1.0 / std::tgamma(b)) / z;
    return value;
  }
  return boost::math::hypergeometric_1F1(1.0, beta, z) / std::tgamma(beta);
}

}  // namespace detail

/**
 * Two-parameter Mittag-Leffler function E_{alpha,beta}(z) = sum_m z^m / Gamma(alpha m + beta)
 * for real z, 0 < alpha <= 1 and beta > 0.
 *
 * Positive and small negative arguments (|z|^{1/alpha} <= 5) are summed
 * directly; larger negative arguments are integrated along a Hankel contour.
 * alpha = 1 is handled in closed form.
 */
inline double mittag_leffler(double alpha, double beta, double z) {
  detail::require_domain(alpha > 0.0 && alpha <= 1.0, "mittag_leffler: alpha must lie in (0, 1]");
  detail::require_domain(std::isfinite(beta) && beta > 0.0, "mittag_leffler: beta must be positive");
  detail::require_domain(std::isfinite(z), "mittag_leffler: z must be finite");

  if (z == 0.0) return 1.0 / std::tgamma(beta);
  if (alpha == 1.0) return detail::ml_classical(beta, z);
  if (z > 0.0) return detail::ml_series_positive(alpha, beta, z);
  if (-z <= detail::ml_seam(alpha)) return detail::ml_series(alpha, beta, z);
  return detail::ml_integral(alpha, beta, z);
}

}  // namespace fracopt
