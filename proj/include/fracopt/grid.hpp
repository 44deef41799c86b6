#pragma once

// Finite-difference discretization of an interval or rectangle with homogeneous
// Dirichlet boundary: the 3-/5-point Laplacian, the shifted resolvent
// (sigma I - Delta_h)^{-1}, and the closed-form sine eigensystem.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fracopt/errors.hpp"

namespace fracopt {

/// Values at interior grid nodes, x-index fastest. Boundary values are implicitly zero.
using SpaceField = std::vector<double>;

class SpaceGrid {
 public:
  static SpaceGrid interval(double length, std::size_t count) {
    return SpaceGrid(1, {length, 0.0}, {count, 1});
  }

  static SpaceGrid rectangle(double length_x, double length_y, std::size_t count_x, std::size_t count_y) {
    return SpaceGrid(2, {length_x, length_y}, {count_x, count_y});
  }

  int dim() const { return dim_; }
  double extent(int axis) const { return extents_.at(axis); }
  std::size_t count(int axis) const { return counts_.at(axis); }
  double h(int axis) const { return h_.at(axis); }
  std::size_t dof() const { return counts_[0] * counts_[1]; }

  /// h^dim: the weight of one node in the discrete L2(Omega) inner product.
  double cell_volume() const { return dim_ == 1 ? h_[0] : h_[0] * h_[1]; }

  std::size_t index(std::size_t ix, std::size_t iy = 0) const { return ix + counts_[0] * iy; }

  /// Coordinate of node j along the given axis.
  double coordinate(std::size_t j, int axis) const {
    const std::size_t i = axis == 0 ? j % counts_[0] : j / counts_[0];
    return static_cast<double>(i + 1) * h_[axis];
  }

  bool operator==(const SpaceGrid& other) const {
    return dim_ == other.dim_ && extents_ == other.extents_ && counts_ == other.counts_;
  }

 private:
  SpaceGrid(int dim, std::array<double, 2> extents, std::array<std::size_t, 2> counts)
      : dim_(dim), extents_(extents), counts_(counts) {
    for (int a = 0; a < dim; ++a) {
      detail::require_domain(std::isfinite(extents[a]) && extents[a] > 0.0, "SpaceGrid: extents must be positive");
      detail::require_domain(counts[a] >= 3, "SpaceGrid: need at least 3 interior nodes per axis");
      h_[a] = extents[a] / static_cast<double>(counts[a] + 1);
    }
    if (dim == 1) h_[1] = 1.0;
  }

  int dim_;
  std::array<double, 2> extents_;
  std::array<std::size_t, 2> counts_;
  std::array<double, 2> h_{};
};

/// Discrete L2(Omega) inner product <f, g>_h = h^dim sum f_j g_j.
inline double inner_h(const SpaceGrid& g, std::span<const double> f1, std::span<const double> f2) {
  return g.cell_volume() * std::inner_product(f1.begin(), f1.end(), f2.begin(), 0.0);
}

inline double norm_h(const SpaceGrid& g, std::span<const double> f) { return std::sqrt(inner_h(g, f, f)); }

/// Delta_h f with the 3-point (1D) or 5-point (2D) stencil.
inline SpaceField apply_laplacian(const SpaceGrid& g, std::span<const double> f) {
  detail::require_shape(f.size() == g.dof(), "apply_laplacian: field does not match grid");
  const std::size_t mx = g.count(0);
  const std::size_t my = g.count(1);
  SpaceField out(f.size(), 0.0);
  const double cx = 1.0 / (g.h(0) * g.h(0));
  for (std::size_t iy = 0; iy < my; ++iy) {
    const std::size_t row = iy * mx;
    for (std::size_t ix = 0; ix < mx; ++ix) {
      const double left = ix > 0 ? f[row + ix - 1] : 0.0;
      const double right = ix + 1 < mx ? f[row + ix + 1] : 0.0;
      out[row + ix] = cx * (left - 2.0 * f[row + ix] + right);
    }
  }
  if (g.dim() == 2) {
    const double cy = 1.0 / (g.h(1) * g.h(1));
    for (std::size_t iy = 0; iy < my; ++iy) {
      for (std::size_t ix = 0; ix < mx; ++ix) {
        const std::size_t j = iy * mx + ix;
        const double down = iy > 0 ? f[j - mx] : 0.0;
        const double up = iy + 1 < my ? f[j + mx] : 0.0;
        out[j] += cy * (down - 2.0 * f[j] + up);
      }
    }
  }
  return out;
}

namespace detail {

/// Orthonormal sine basis of one axis: eigenpairs of the 1D Dirichlet -Delta_h.
struct AxisModes {
  std::size_t count = 0;
  double h = 0.0;
  std::vector<double> eigenvalues;  // ascending, k = 1..M
  std::vector<double> basis;        // basis[k * M + j] = sqrt(2/l) sin(k pi x_j / l)

  AxisModes() = default;
  AxisModes(double length, std::size_t m) : count(m), h(length / static_cast<double>(m + 1)) {
    const double pi = std::numbers::pi;
    eigenvalues.resize(m);
    basis.resize(m * m);
    const double amp = std::sqrt(2.0 / length);
    for (std::size_t k = 0; k < m; ++k) {
      const double kk = static_cast<double>(k + 1);
      const double s = std::sin(kk * pi * h / (2.0 * length));
      eigenvalues[k] = 4.0 / (h * h) * s * s;
      for (std::size_t j = 0; j < m; ++j) {
        basis[k * m + j] = amp * std::sin(kk * pi * static_cast<double>(j + 1) / static_cast<double>(m + 1));
      }
    }
  }

  /// c_k = h sum_j v_k(x_j) f_j, applied with stride to a strided line.
  void analyze(const double* in, std::size_t in_stride, double* out, std::size_t out_stride) const {
    for (std::size_t k = 0; k < count; ++k) {
      const double* v = &basis[k * count];
      double acc = 0.0;
      for (std::size_t j = 0; j < count; ++j) acc += v[j] * in[j * in_stride];
      out[k * out_stride] = h * acc;
    }
  }

  /// f_j = sum_k c_k v_k(x_j).
  void synthesize(const double* in, std::size_t in_stride, double* out, std::size_t out_stride) const {
    for (std::size_t j = 0; j < count; ++j) out[j * out_stride] = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
      const double c = in[k * in_stride];
      const double* v = &basis[k * count];
      for (std::size_t j = 0; j < count; ++j) out[j * out_stride] += c * v[j];
    }
  }
};

}  // namespace detail

/**
 * Closed-form eigensystem of -Delta_h: lambda_k = (4/h^2) sin^2(k pi h / (2 l)) per
 * axis, tensor sums in 2D. Eigenvectors are orthonormal in the h-weighted
 * inner product. Modal coefficients are stored in grid layout (kx fastest);
 * modes() lists them by ascending eigenvalue.
 */
class EigenSystem {
 public:
  struct Mode {
    std::size_t index;  // position in the modal coefficient vector
    std::size_t kx;     // 1-based wave numbers
    std::size_t ky;
    double eigenvalue;
  };

  explicit EigenSystem(const SpaceGrid& g) : grid_(g) {
    axes_[0] = detail::AxisModes(g.extent(0), g.count(0));
    if (g.dim() == 2) axes_[1] = detail::AxisModes(g.extent(1), g.count(1));
    const std::size_t mx = g.count(0);
    const std::size_t my = g.count(1);
    modes_.reserve(g.dof());
    for (std::size_t iy = 0; iy < my; ++iy) {
      for (std::size_t ix = 0; ix < mx; ++ix) {
        const double ly = g.dim() == 2 ? axes_[1].eigenvalues[iy] : 0.0;
        modes_.push_back({iy * mx + ix, ix + 1, g.dim() == 2 ? iy + 1 : 0, axes_[0].eigenvalues[ix] + ly});
      }
    }
    std::stable_sort(modes_.begin(), modes_.end(),
                     [](const Mode& a, const Mode& b) { return a.eigenvalue < b.eigenvalue; });
  }

  const SpaceGrid& grid() const { return grid_; }
  const std::vector<Mode>& modes() const { return modes_; }

  /// Eigenvalue attached to a position of the modal coefficient vector.
  double eigenvalue_at(std::size_t index) const {
    const std::size_t mx = grid_.count(0);
    const double ly = grid_.dim() == 2 ? axes_[1].eigenvalues[index / mx] : 0.0;
    return axes_[0].eigenvalues[index % mx] + ly;
  }

  /// Coefficients c = <f, v>_h in grid layout.
  std::vector<double> to_modal(std::span<const double> f) const {
    detail::require_shape(f.size() == grid_.dof(), "to_modal: field does not match grid");
    return transform(f, true);
  }

  /// Field sum_m c_m v_m from coefficients in grid layout.
  SpaceField from_modal(std::span<const double> c) const {
    detail::require_shape(c.size() == grid_.dof(), "from_modal: coefficients do not match grid");
    return transform(c, false);
  }

  /// Eigenvector of the k-th mode in ascending order.
  SpaceField eigenvector(std::size_t k) const {
    std::vector<double> c(grid_.dof(), 0.0);
    c.at(modes_.at(k).index) = 1.0;
    return from_modal(c);
  }

 private:
  std::vector<double> transform(std::span<const double> in, bool analyze) const {
    const std::size_t mx = grid_.count(0);
    const std::size_t my = grid_.count(1);
    std::vector<double> tmp(in.size());
    std::vector<double> out(in.size());
    const auto& ax = axes_[0];
    for (std::size_t iy = 0; iy < my; ++iy) {
      const double* src = in.data() + iy * mx;
      double* dst = (grid_.dim() == 2 ? tmp.data() : out.data()) + iy * mx;
      analyze ? ax.analyze(src, 1, dst, 1) : ax.synthesize(src, 1, dst, 1);
    }
    if (grid_.dim() == 2) {
      const auto& ay = axes_[1];
      for (std::size_t ix = 0; ix < mx; ++ix) {
        analyze ? ay.analyze(tmp.data() + ix, mx, out.data() + ix, mx)
                : ay.synthesize(tmp.data() + ix, mx, out.data() + ix, mx);
      }
    }
    return out;
  }

  SpaceGrid grid_;
  std::array<detail::AxisModes, 2> axes_;
  std::vector<Mode> modes_;
};

/**
 * Solver for (sigma I - Delta_h) w = rhs with a fixed shift. 1D uses a
 * precomputed Thomas factorization; 2D transforms along y into sine modes and
 * solves one tridiagonal system in x per mode.
 */
class ShiftedSolver {
 public:
  ShiftedSolver(const SpaceGrid& g, double sigma) : grid_(g), sigma_(sigma) {
    detail::require_domain(std::isfinite(sigma) && sigma > 0.0, "solve_shifted: sigma must be positive");
    const std::size_t mx = g.count(0);
    const double off = -1.0 / (g.h(0) * g.h(0));
    if (g.dim() == 2) y_modes_ = detail::AxisModes(g.extent(1), g.count(1));
    const std::size_t systems = g.dim() == 2 ? g.count(1) : 1;
    factors_.resize(systems);
    for (std::size_t s = 0; s < systems; ++s) {
      const double shift = sigma + (g.dim() == 2 ? y_modes_.eigenvalues[s] : 0.0);
      auto& f = factors_[s];
      f.inv_pivot.resize(mx);
      f.upper.resize(mx);
      const double diag = shift - 2.0 * off;
      double pivot = diag;
      f.inv_pivot[0] = 1.0 / pivot;
      for (std::size_t i = 1; i < mx; ++i) {
        f.upper[i - 1] = off / pivot;
        pivot = diag - off * f.upper[i - 1];
        f.inv_pivot[i] = 1.0 / pivot;
      }
      f.off = off;
    }
  }

  double sigma() const { return sigma_; }
  const SpaceGrid& grid() const { return grid_; }

  SpaceField solve(std::span<const double> rhs) const {
    detail::require_shape(rhs.size() == grid_.dof(), "solve_shifted: rhs does not match grid");
    const std::size_t mx = grid_.count(0);
    if (grid_.dim() == 1) {
      SpaceField w(rhs.begin(), rhs.end());
      tridiagonal(factors_[0], w.data());
      return w;
    }
    const std::size_t my = grid_.count(1);
    SpaceField modal(rhs.size());
    for (std::size_t ix = 0; ix < mx; ++ix) y_modes_.analyze(rhs.data() + ix, mx, modal.data() + ix, mx);
    for (std::size_t ky = 0; ky < my; ++ky) tridiagonal(factors_[ky], modal.data() + ky * mx);
    SpaceField w(rhs.size());
    for (std::size_t ix = 0; ix < mx; ++ix) y_modes_.synthesize(modal.data() + ix, mx, w.data() + ix, mx);
    return w;
  }

 private:
  struct Factor {
    std::vector<double> inv_pivot;
    std::vector<double> upper;
    double off = 0.0;
  };

  void tridiagonal(const Factor& f, double* x) const {
    const std::size_t m = f.inv_pivot.size();
    x[0] *= f.inv_pivot[0];
    for (std::size_t i = 1; i < m; ++i) x[i] = (x[i] - f.off * x[i - 1]) * f.inv_pivot[i];
    for (std::size_t i = m - 1; i-- > 0;) x[i] -= f.upper[i] * x[i + 1];
  }

  SpaceGrid grid_;
  double sigma_;
  detail::AxisModes y_modes_;
  std::vector<Factor> factors_;
};

/// w with (sigma I - Delta_h) w = rhs.
inline SpaceField solve_shifted(const SpaceGrid& g, double sigma, std::span<const double> rhs) {
  return ShiftedSolver(g, sigma).solve(rhs);
}

inline EigenSystem eigensystem(const SpaceGrid& g) { return EigenSystem(g); }

}  // namespace fracopt
