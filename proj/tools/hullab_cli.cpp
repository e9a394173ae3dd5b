#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>

#include "hullab/errors.hpp"
#include "hullab/harness.hpp"

namespace {

int exit_code(hullab::ErrorCode code) {
  switch (code) {
    case hullab::ErrorCode::ConfigError:
    case hullab::ErrorCode::InvalidArgument:
    case hullab::ErrorCode::InvalidArcUnion:
    case hullab::ErrorCode::NotInArc:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical experiments on polynomial hulls, analytic discs and Green currents"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "hullab_out";
  std::optional<std::uint64_t> seed;
  double grid_scale = 1.0;
  app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--seed", seed, "Master seed, overrides the configuration");
  app.add_option("--grid-scale", grid_scale, "Multiplier for every quadrature size")->check(CLI::PositiveNumber);

  auto* converge = app.add_subcommand("converge", "Convergence of <T_nu, dd^c u> to <T, dd^c u>");
  auto* hull = app.add_subcommand("hull", "Polynomial certificate for a point outside the hull");
  auto* averaging = app.add_subcommand("averaging", "Moments of (p_nu)_* mu");
  auto* obstruction = app.add_subcommand("obstruction", "Winding histogram of tube curves around K1");
  auto* selftest = app.add_subcommand("selftest", "Invariant checks across all modules");
  for (auto* sub : {converge, hull, averaging, obstruction, selftest}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    auto config = config_path.empty() ? hullab::ExperimentConfig{} : hullab::load_config(config_path);
    if (seed) config.seed = *seed;
    config.quadrature.scale(grid_scale);

    hullab::RunResult result;
    if (converge->parsed()) result = hullab::run_converge(config, out_dir);
    else if (hull->parsed()) result = hullab::run_hull(config, out_dir);
    else if (averaging->parsed()) result = hullab::run_averaging(config, out_dir);
    else if (obstruction->parsed()) result = hullab::run_obstruction(config, out_dir);
    else result = hullab::run_selftest(config, out_dir);

    for (const auto& f : result.files) std::cout << f.string() << '\n';
    std::cout << result.summary << '\n';
    if (!result.verified) {
      std::cerr << "verification failed\n";
      return 2;
    }
    return 0;
  } catch (const hullab::Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
