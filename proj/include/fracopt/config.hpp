#pragma once

// Run configuration read from an INI file. Unknown sections or keys are parse
// errors; out-of-range values are invariant violations (DomainError).

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "fracopt/errors.hpp"
#include "fracopt/expression.hpp"

namespace fracopt {

inline constexpr std::size_t kMaxSteps = 8192;
inline constexpr std::size_t kMaxDof = 65536;

/// A scalar field given either as an expression or as a CSV path.
struct FieldSpec {
  std::string expression = "0";
  std::string csv;  // resolved path; wins over expression when set
};

struct RunConfig {
  std::string source_path;
  std::string source_text;

  double alpha = 0.5;
  double horizon = 1.0;
  std::size_t steps = 64;

  int dim = 1;
  double lx = 1.0;
  double ly = 1.0;
  std::size_t mx = 32;
  std::size_t my = 32;

  FieldSpec y0{"0", {}};
  FieldSpec control{"0", {}};
  bool oracle = false;  // solve-state also runs the spectral oracle

  std::string cost_variant = "tracking";
  double gamma = 0.1;
  int degree = 2;
  FieldSpec target{"0", {}};

  double a = -1.0;
  double b = 1.0;

  std::size_t max_iters = 1000;
  double step0 = 1.0;
  double armijo_c = 1e-4;
  double backtrack = 0.5;
  double tol_stationarity = 1e-8;
  double tol_step = 1e-15;
  FieldSpec initial_control{"0", {}};

  std::size_t cone_samples = 200;
  std::size_t ssc_trials = 100;
  std::vector<double> radii{1e-1, 1e-2, 1e-3};
  bool ssc = true;
  FieldSpec candidate{"", {}};  // control to check; empty means "optimize first"

  std::string adjoint = "both";  // transpose | reversal | both

  std::string study_problem = "eigenmode";  // eigenmode | manufactured
  std::size_t refinements = 4;
  std::string study_metric = "max";  // max | final
  std::vector<double> limit_alphas{0.9, 0.99, 0.999};

  std::uint64_t seed = 1;

  bool classical() const { return alpha == 1.0; }
};

namespace detail {

inline const std::map<std::string, std::set<std::string>>& config_schema() {
  static const std::map<std::string, std::set<std::string>> schema{
      {"problem", {"alpha", "T", "N"}},
      {"grid", {"dim", "lx", "ly", "mx", "my"}},
      {"state", {"y0", "y0_csv", "u", "u_csv", "oracle"}},
      {"cost", {"variant", "gamma", "p", "target", "target_csv"}},
      {"bounds", {"a", "b"}},
      {"optimizer",
       {"max_iters", "step0", "armijo_c", "backtrack", "tol_stationarity", "tol_step", "initial_u", "initial_u_csv"}},
      {"adjoint", {"kind"}},
      {"kkt", {"cone_samples", "ssc_trials", "radii", "ssc", "control", "control_csv"}},
      {"study", {"problem", "refinements", "metric", "alphas"}},
      {"run", {"seed"}},
  };
  return schema;
}

template <class T>
T get_value(const boost::property_tree::ptree& tree, const std::string& key, T fallback) {
  const auto node = tree.get_child_optional(boost::property_tree::ptree::path_type(key, '.'));
  if (!node) return fallback;
  const std::string raw = node->get_value<std::string>();
  std::istringstream in(raw);
  T value{};
  in >> value;
  if (in.fail() || !(in >> std::ws).eof()) throw ParseError("config key '" + key + "': cannot parse '" + raw + "'");
  return value;
}

template <>
inline std::string get_value<std::string>(const boost::property_tree::ptree& tree, const std::string& key,
                                          std::string fallback) {
  const auto node = tree.get_child_optional(boost::property_tree::ptree::path_type(key, '.'));
  return node ? node->get_value<std::string>() : fallback;
}

template <>
inline bool get_value<bool>(const boost::property_tree::ptree& tree, const std::string& key, bool fallback) {
  const std::string raw = get_value<std::string>(tree, key, fallback ? "true" : "false");
  if (raw == "true" || raw == "1" || raw == "yes") return true;
  if (raw == "false" || raw == "0" || raw == "no") return false;
  throw ParseError("config key '" + key + "': expected true or false, got '" + raw + "'");
}

inline std::vector<double> get_list(const boost::property_tree::ptree& tree, const std::string& key,
                                    std::vector<double> fallback) {
  const auto node = tree.get_child_optional(boost::property_tree::ptree::path_type(key, '.'));
  if (!node) return fallback;
  std::istringstream in(node->get_value<std::string>());
  std::vector<double> out;
  double v;
  while (in >> v) out.push_back(v);
  if (!in.eof() || out.empty()) throw ParseError("config key '" + key + "': expected a list of numbers");
  return out;
}

/// Integer keys must be written as non-negative integers.
inline std::size_t get_count(const boost::property_tree::ptree& tree, const std::string& key, std::size_t fallback) {
  const double v = get_value<double>(tree, key, static_cast<double>(fallback));
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e15) throw ParseError("config key '" + key + "': expected a count");
  return static_cast<std::size_t>(v);
}

inline FieldSpec get_field(const boost::property_tree::ptree& tree, const std::string& expr_key,
                           const std::string& csv_key, FieldSpec fallback, const std::filesystem::path& base) {
  FieldSpec spec = fallback;
  spec.expression = get_value<std::string>(tree, expr_key, fallback.expression);
  const std::string csv = get_value<std::string>(tree, csv_key, "");
  if (!csv.empty()) {
    std::filesystem::path p(csv);
    if (p.is_relative()) p = base / p;
    if (!std::filesystem::exists(p)) throw ParseError("config key '" + csv_key + "': file '" + p.string() + "' not found");
    spec.csv = p.string();
  }
  if (spec.csv.empty() && !spec.expression.empty()) Expression::parse(spec.expression);
  return spec;
}

}  // namespace detail

/// Invariants of a parsed configuration; throws DomainError naming the first violation.
inline void validate(const RunConfig& c) {
  using detail::require_domain;
  require_domain(c.alpha > 0.0 && c.alpha <= 1.0, "alpha must lie in (0, 1]");
  require_domain(std::isfinite(c.horizon) && c.horizon > 0.0, "T must be positive");
  require_domain(c.steps >= 2 && c.steps <= kMaxSteps, "N must lie in [2, " + std::to_string(kMaxSteps) + "]");
  require_domain(c.dim == 1 || c.dim == 2, "grid dim must be 1 or 2");
  require_domain(c.lx > 0.0 && (c.dim == 1 || c.ly > 0.0), "grid extents must be positive");
  require_domain(c.mx >= 3 && (c.dim == 1 || c.my >= 3), "grid counts must be at least 3");
  const std::size_t dof = c.dim == 1 ? c.mx : c.mx * c.my;
  require_domain(dof <= kMaxDof, "grid DOF must not exceed " + std::to_string(kMaxDof));
  require_domain(std::isfinite(c.a) && std::isfinite(c.b) && c.a < c.b, "bounds must satisfy a < b");
  require_domain(c.cost_variant == "tracking" || c.cost_variant == "polynomial",
                 "cost variant must be tracking or polynomial");
  require_domain(c.cost_variant != "tracking" || c.gamma > 0.0, "gamma must be positive");
  require_domain(c.degree >= 2, "p must be an integer >= 2");
  require_domain(c.max_iters > 0, "max_iters must be positive");
  require_domain(c.step0 > 0.0, "step0 must be positive");
  require_domain(c.armijo_c > 0.0 && c.armijo_c < 1.0, "armijo_c must lie in (0, 1)");
  require_domain(c.backtrack > 0.0 && c.backtrack < 1.0, "backtrack must lie in (0, 1)");
  require_domain(c.tol_stationarity > 0.0 && c.tol_step > 0.0, "tolerances must be positive");
  require_domain(c.cone_samples >= 1, "cone_samples must be at least 1");
  for (double r : c.radii) require_domain(r > 0.0, "radii must be positive");
  require_domain(c.adjoint == "transpose" || c.adjoint == "reversal" || c.adjoint == "both",
                 "adjoint kind must be transpose, reversal or both");
  require_domain(c.study_problem == "eigenmode" || c.study_problem == "manufactured",
                 "study problem must be eigenmode or manufactured");
  require_domain(c.study_metric == "max" || c.study_metric == "final", "study metric must be max or final");
  require_domain(c.refinements >= 1, "refinements must be at least 1");
  for (double a : c.limit_alphas) require_domain(a > 0.0 && a < 1.0, "limit alphas must lie in (0, 1)");
}

inline RunConfig parse_config_text(const std::string& text, const std::filesystem::path& base_dir,
                                   const std::string& source_path = "") {
  boost::property_tree::ptree tree;
  try {
    std::istringstream in(text);
    boost::property_tree::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ParseError(std::string("config: ") + e.message() + " at line " + std::to_string(e.line()));
  }
  const auto& schema = detail::config_schema();
  for (const auto& [section, body] : tree) {
    const auto it = schema.find(section);
    if (it == schema.end() || body.empty()) throw ParseError("config: unknown section '" + section + "'");
    for (const auto& [key, value] : body) {
      if (!it->second.count(key)) throw ParseError("config: unknown key '" + key + "' in [" + section + "]");
    }
  }

  using detail::get_count;
  using detail::get_value;
  RunConfig c;
  c.source_path = source_path;
  c.source_text = text;
  c.alpha = get_value(tree, "problem.alpha", c.alpha);
  c.horizon = get_value(tree, "problem.T", c.horizon);
  c.steps = get_count(tree, "problem.N", c.steps);
  c.dim = static_cast<int>(get_count(tree, "grid.dim", static_cast<std::size_t>(c.dim)));
  c.lx = get_value(tree, "grid.lx", c.lx);
  c.ly = get_value(tree, "grid.ly", c.ly);
  c.mx = get_count(tree, "grid.mx", c.mx);
  c.my = get_count(tree, "grid.my", c.my);
  c.y0 = detail::get_field(tree, "state.y0", "state.y0_csv", c.y0, base_dir);
  c.control = detail::get_field(tree, "state.u", "state.u_csv", c.control, base_dir);
  c.oracle = get_value(tree, "state.oracle", c.oracle);
  c.cost_variant = get_value<std::string>(tree, "cost.variant", c.cost_variant);
  c.gamma = get_value(tree, "cost.gamma", c.gamma);
  c.degree = static_cast<int>(get_count(tree, "cost.p", static_cast<std::size_t>(c.degree)));
  c.target = detail::get_field(tree, "cost.target", "cost.target_csv", c.target, base_dir);
  c.a = get_value(tree, "bounds.a", c.a);
  c.b = get_value(tree, "bounds.b", c.b);
  c.max_iters = get_count(tree, "optimizer.max_iters", c.max_iters);
  c.step0 = get_value(tree, "optimizer.step0", c.step0);
  c.armijo_c = get_value(tree, "optimizer.armijo_c", c.armijo_c);
  c.backtrack = get_value(tree, "optimizer.backtrack", c.backtrack);
  c.tol_stationarity = get_value(tree, "optimizer.tol_stationarity", c.tol_stationarity);
  c.tol_step = get_value(tree, "optimizer.tol_step", c.tol_step);
  c.initial_control = detail::get_field(tree, "optimizer.initial_u", "optimizer.initial_u_csv", c.initial_control, base_dir);
  c.adjoint = get_value<std::string>(tree, "adjoint.kind", c.adjoint);
  c.cone_samples = get_count(tree, "kkt.cone_samples", c.cone_samples);
  c.ssc_trials = get_count(tree, "kkt.ssc_trials", c.ssc_trials);
  c.radii = detail::get_list(tree, "kkt.radii", c.radii);
  c.ssc = get_value(tree, "kkt.ssc", c.ssc);
  c.candidate = detail::get_field(tree, "kkt.control", "kkt.control_csv", c.candidate, base_dir);
  c.study_problem = get_value<std::string>(tree, "study.problem", c.study_problem);
  c.refinements = get_count(tree, "study.refinements", c.refinements);
  c.study_metric = get_value<std::string>(tree, "study.metric", c.study_metric);
  c.limit_alphas = detail::get_list(tree, "study.alphas", c.limit_alphas);
  c.seed = get_value<std::uint64_t>(tree, "run.seed", c.seed);
  return c;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  return parse_config_text(text.str(), base, path);
}

}  // namespace fracopt
