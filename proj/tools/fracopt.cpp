#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fracopt/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Optimal control of time-fractional diffusion with box constraints"};
  std::string command;
  std::string config_path;
  std::string out_dir = "out";
  std::int64_t seed = -1;
  app.add_option("command", command, "solve-state | solve-adjoint | optimize | kkt-check | convergence-study | limit-study")
      ->required()
      ->check(CLI::IsMember(fracopt::cli::commands()));
  app.add_option("--config", config_path, "INI configuration file")->required();
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--seed", seed, "override [run] seed")->check(CLI::NonNegativeNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return fracopt::cli::kParseError;
  }
  return fracopt::cli::run(command, config_path, out_dir, seed, std::cerr);
}
