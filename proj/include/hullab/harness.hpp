#pragma once

// Experiment configuration, orchestration of the library experiments and
// deterministic CSV / JSON artifacts.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hullab/hull_examples.hpp"

namespace hullab {

struct QuadratureSizes {
  std::size_t boundary_nodes = 8192;
  std::size_t limit_outer = 8192;
  std::size_t limit_inner = 1024;
  std::size_t schedule_grid = 4096;
  std::size_t poletsky_boundary = 8192;
  std::size_t certificate_samples = 10000;
  std::size_t pushforward_bins = 4096;
  int outer_order = 4096;

  /// Multiplies every size by factor, keeping them even and at least 8.
  void scale(double factor);
};

struct ExperimentConfig {
  SetVariant variant = SetVariant::K;
  std::vector<ArcUnion::Arc> arcs;  // empty means I_+
  Point2 point{0.0, 0.0};
  std::vector<int> nus{1, 2, 4, 8, 16, 32, 64, 128, 256};
  double eps = 0.1;
  std::string outer = "closed_form";  // or "fourier"
  double exclusion = 0.02;
  QuadratureSizes quadrature;
  std::vector<std::string> battery;  // labels from default_battery(); empty means all
  double rho_u = 0.05;

  int max_degree = 64;

  std::string measure = "poisson";  // uniform, poisson, one_plus_cos, g_pushforward
  Complex measure_center{0.4, 0.0};
  std::vector<int> averaging_nus{1, 2, 4, 8, 16};
  int max_k = 4;

  std::size_t trials = 500;
  double delta = 0.2;
  Complex obstruction_center{0.0, 0.0};

  std::uint64_t seed = 42;

  ArcUnion arc_union() const;
};

/// Parses a JSON document; missing keys keep their defaults. Throws
/// ConfigError on malformed input, unknown keys or inconsistent values.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Sorted-key JSON of every field, the input of config_hash.
std::string canonical_json(const ExperimentConfig& config);
/// FNV-1a 64 of canonical_json, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

/// Shortest text with 17 significant digits, '.' decimal, no locale.
std::string format_number(double value);

struct RunResult {
  std::vector<std::filesystem::path> files;
  bool verified = true;
  std::string summary;
};

/// Convergence table of <T_nu, dd^c u> against <T, dd^c u>. An interior
/// point (z0, 0) uses composite discs along the selected radius schedule and
/// also writes the Poletsky table; a point of closure(I) x D uses the single
/// vertical disc, whose boundary and area pairings are compared instead.
RunResult run_converge(const ExperimentConfig& config, const std::filesystem::path& out);

/// Certificate search and verification for the configured point.
RunResult run_hull(const ExperimentConfig& config, const std::filesystem::path& out);

/// Moment and weak-gap tables for the configured circle measure.
RunResult run_averaging(const ExperimentConfig& config, const std::filesystem::path& out);

/// Winding histogram of tube curves around K1.
RunResult run_obstruction(const ExperimentConfig& config, const std::filesystem::path& out);

/// Invariant checks across all modules; verified is false if any fails.
RunResult run_selftest(const ExperimentConfig& config, const std::filesystem::path& out);

}  // namespace hullab
