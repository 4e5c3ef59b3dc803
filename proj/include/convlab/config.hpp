#pragma once

#include <limits>
#include <string>
#include <vector>

#include "convlab/scheme.hpp"

namespace convlab {

/// Flat key=value run configuration. Fields initialized to sentinels
/// (-1 / NaN / empty) take problem-specific defaults at preparation
/// time; unknown keys are rejected at parse time.
struct RunConfig {
  static constexpr double unset = std::numeric_limits<double>::quiet_NaN();

  // burgers-inviscid | burgers-viscous | euler-shock-tube | swe-dambreak
  std::string problem = "burgers-inviscid";
  Scheme scheme = Scheme::AdbQuickest;
  std::vector<Scheme> schemes;  // compare studies; empty = all three

  int n_cells = -1;
  double theta = -1.0;
  double nu = -1.0;
  double gamma = 1.4;
  double gravity = 9.81;
  double t_final = -1.0;
  double x_min = unset, x_max = unset;
  double h_left = 1.0, h_right = 0.1;
  double x0 = unset;

  std::vector<double> snapshot_times;
  std::vector<int> meshes = {10, 20, 40, 80, 160};
  double eval_time = 0.5;

  // series | characteristics | exact | fou-fine | none | default
  std::string reference = "default";
  int series_terms = 500;
  int reference_cells = 25000;
  std::string cache_dir;  // empty: $CONVLAB_CACHE_DIR or .convlab-cache
};

/// Applies one key=value pair. Throws ConfigError for unknown keys or
/// unparsable values.
void apply_key(RunConfig& cfg, const std::string& key,
               const std::string& value);

/// Parses a flat `key = value` file ('#' starts a comment).
RunConfig load_config_file(const std::string& path);

/// Cache directory after env-variable resolution.
std::string resolve_cache_dir(const RunConfig& cfg);

} // namespace convlab
