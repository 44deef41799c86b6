#pragma once

// Trajectory CSV (columns t, x[, y], value) and atomic file output.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fracopt/errors.hpp"
#include "fracopt/expression.hpp"
#include "fracopt/trajectory.hpp"

namespace fracopt {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_trajectory_csv(std::ostream& os, const Trajectory& f) {
  const bool two_d = f.grid().dim() == 2;
  os << (two_d ? "t,x,y,value\n" : "t,x,value\n");
  for (std::size_t n = 0; n < f.nodes(); ++n) {
    const std::string t = format_double(f.mesh().t(n));
    for (std::size_t j = 0; j < f.dof(); ++j) {
      os << t << ',' << format_double(f.grid().coordinate(j, 0)) << ',';
      if (two_d) os << format_double(f.grid().coordinate(j, 1)) << ',';
      os << format_double(f(n, j)) << '\n';
    }
  }
}

inline std::string trajectory_csv(const Trajectory& f) {
  std::ostringstream os;
  write_trajectory_csv(os, f);
  return os.str();
}

/// Reads a CSV written by write_trajectory_csv onto the given mesh and grid.
/// Rows must come in the same order and their coordinates must match the nodes.
inline Trajectory read_trajectory_csv(const std::string& path, const TimeMesh& mesh, const SpaceGrid& grid) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open CSV '" + path + "'");
  const bool two_d = grid.dim() == 2;
  const std::size_t columns = two_d ? 4 : 3;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("CSV '" + path + "' is empty");
  Trajectory out(mesh, grid);
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str()) throw ParseError("CSV '" + path + "': bad number '" + cell + "'");
      cells.push_back(v);
    }
    if (cells.size() != columns) throw ParseError("CSV '" + path + "': expected " + std::to_string(columns) + " columns");
    if (row >= mesh.nodes() * grid.dof()) throw ParseError("CSV '" + path + "': too many rows");
    const std::size_t n = row / grid.dof();
    const std::size_t j = row % grid.dof();
    const double tol = 1e-9 * (1.0 + mesh.horizon());
    bool match = std::abs(cells[0] - mesh.t(n)) <= tol && std::abs(cells[1] - grid.coordinate(j, 0)) <= 1e-9;
    if (two_d) match = match && std::abs(cells[2] - grid.coordinate(j, 1)) <= 1e-9;
    if (!match) throw ParseError("CSV '" + path + "': row " + std::to_string(row + 2) + " does not match the mesh");
    out(n, j) = cells.back();
    ++row;
  }
  if (row != mesh.nodes() * grid.dof()) {
    throw ParseError("CSV '" + path + "': expected " + std::to_string(mesh.nodes() * grid.dof()) + " rows, got " +
                     std::to_string(row));
  }
  return out;
}

/// Reads a spatial field with columns x[, y], value in grid order.
inline SpaceField read_field_csv(const std::string& path, const SpaceGrid& grid) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open CSV '" + path + "'");
  const std::size_t columns = grid.dim() == 2 ? 3 : 2;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("CSV '" + path + "' is empty");
  SpaceField out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str()) throw ParseError("CSV '" + path + "': bad number '" + cell + "'");
      cells.push_back(v);
    }
    const std::size_t j = out.size();
    if (cells.size() != columns) throw ParseError("CSV '" + path + "': expected " + std::to_string(columns) + " columns");
    if (j >= grid.dof()) throw ParseError("CSV '" + path + "': too many rows");
    bool match = std::abs(cells[0] - grid.coordinate(j, 0)) <= 1e-9;
    if (grid.dim() == 2) match = match && std::abs(cells[1] - grid.coordinate(j, 1)) <= 1e-9;
    if (!match) throw ParseError("CSV '" + path + "': row " + std::to_string(j + 2) + " does not match the grid");
    out.push_back(cells.back());
  }
  if (out.size() != grid.dof()) throw ParseError("CSV '" + path + "': expected " + std::to_string(grid.dof()) + " rows");
  return out;
}

/// Writes the file next to its destination, then renames it into place.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace fracopt
