#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fracopt/errors.hpp"
#include "fracopt/fracops.hpp"
#include "fracopt/grid.hpp"

namespace fracopt {

/// Space-time field sampled at time nodes t_0..t_N and interior grid nodes.
/// Used for states, adjoints, controls, targets and multipliers alike.
class Trajectory {
 public:
  Trajectory(const TimeMesh& mesh, const SpaceGrid& grid, double fill = 0.0)
      : mesh_(mesh), grid_(grid), data_(mesh.nodes() * grid.dof(), fill) {}

  /// Samples value(t, x, y) at every node.
  static Trajectory sample(const TimeMesh& mesh, const SpaceGrid& grid,
                           const std::function<double(double, double, double)>& value) {
    Trajectory out(mesh, grid);
    for (std::size_t n = 0; n < mesh.nodes(); ++n) {
      auto slice = out.at(n);
      for (std::size_t j = 0; j < grid.dof(); ++j) {
        const double y = grid.dim() == 2 ? grid.coordinate(j, 1) : 0.0;
        slice[j] = value(mesh.t(n), grid.coordinate(j, 0), y);
      }
    }
    return out;
  }

  const TimeMesh& mesh() const { return mesh_; }
  const SpaceGrid& grid() const { return grid_; }
  std::size_t dof() const { return grid_.dof(); }
  std::size_t nodes() const { return mesh_.nodes(); }

  std::span<double> at(std::size_t n) { return {data_.data() + n * grid_.dof(), grid_.dof()}; }
  std::span<const double> at(std::size_t n) const { return {data_.data() + n * grid_.dof(), grid_.dof()}; }

  double& operator()(std::size_t n, std::size_t j) { return data_[n * grid_.dof() + j]; }
  double operator()(std::size_t n, std::size_t j) const { return data_[n * grid_.dof() + j]; }

  std::vector<double>& values() { return data_; }
  const std::vector<double>& values() const { return data_; }

  /// Time history of one spatial node.
  Sequence history(std::size_t j) const {
    Sequence s(nodes());
    for (std::size_t n = 0; n < nodes(); ++n) s[n] = (*this)(n, j);
    return s;
  }

  bool same_shape(const Trajectory& other) const { return mesh_ == other.mesh_ && grid_ == other.grid_; }

  bool all_finite() const {
    for (double v : data_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  Trajectory& operator+=(const Trajectory& o) {
    detail::require_shape(same_shape(o), "Trajectory: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  Trajectory& operator-=(const Trajectory& o) {
    detail::require_shape(same_shape(o), "Trajectory: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  Trajectory& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }

  /// this += s * o
  Trajectory& axpy(double s, const Trajectory& o) {
    detail::require_shape(same_shape(o), "Trajectory: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
    return *this;
  }

 private:
  TimeMesh mesh_;
  SpaceGrid grid_;
  std::vector<double> data_;
};

inline Trajectory operator+(Trajectory a, const Trajectory& b) { return a += b; }
inline Trajectory operator-(Trajectory a, const Trajectory& b) { return a -= b; }
inline Trajectory operator*(double s, Trajectory a) { return a *= s; }

/// Weight of node (n, j) in the space-time quadrature: trapezoid in time times h^dim.
inline double quadrature_weight(const Trajectory& f, std::size_t n) {
  return f.mesh().trapezoid_weight(n) * f.grid().cell_volume();
}

/// Discrete L2(Q) inner product with trapezoid-in-time weights.
inline double inner_q(const Trajectory& a, const Trajectory& b) {
  detail::require_shape(a.same_shape(b), "inner_q: shape mismatch");
  double total = 0.0;
  for (std::size_t n = 0; n < a.nodes(); ++n) {
    const auto sa = a.at(n);
    const auto sb = b.at(n);
    double acc = 0.0;
    for (std::size_t j = 0; j < sa.size(); ++j) acc += sa[j] * sb[j];
    total += a.mesh().trapezoid_weight(n) * acc;
  }
  return total * a.grid().cell_volume();
}

inline double norm_q(const Trajectory& a) { return std::sqrt(inner_q(a, a)); }

/// Discrete measure |Q_h| = sum of the quadrature weights.
inline double measure_q(const TimeMesh& mesh, const SpaceGrid& grid) {
  return mesh.horizon() * grid.cell_volume() * static_cast<double>(grid.dof());
}

inline double max_abs(const Trajectory& a) {
  double m = 0.0;
  for (double v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace fracopt
