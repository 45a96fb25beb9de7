#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbfcub {

/// Invalid or inconsistent configuration (maps to exit code 2 in the CLI).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One experiment configuration. Domain syntax is "a,b" (interval) or
/// "a,b,c,d" (the rectangle [a,b] x [c,d]); kernel and point tokens are the
/// ones documented in kernels.hpp / pointset.hpp. Every run writes its fully
/// resolved configuration (including seeds) to <out>.config.json, and
/// reruns with the same configuration reproduce byte-identical output.
struct SweepConfig {
  std::string kernel = "gauss";
  int k = -1;  // Wendland smoothness / PHS index for bare family tokens
  int degree = 0;
  std::string points = "equidistant";
  std::string points_file;  // CSV with header "x" or "x,y"; overrides points
  int n = 20;
  std::vector<int> n_list;  // convergence / bayona schedules
  std::uint64_t seed = 0;
  std::string domain = "0,1";
  double eps = 0.0;  // single-configuration shape parameter
  double eps_min = 0.1;
  double eps_max = 100.0;
  int eps_num = 100;
  int trials = 1;
  double noise = 0.0;
  std::string shape_strategy = "constant";  // or "boundary-halved"
  std::string function = "genz1";           // genz1..genz4, runge
  int lebesgue_grid = 0;                    // 0 = module default
  double quad_tol = 1e-12;
  std::string out;
  std::string moments_out;  // optional moment-vector audit CSV
};

/// Loads fields present in a JSON object file into the config; unknown keys
/// are a ConfigError. CLI flags override loaded values.
void load_config_json(const std::string& path, SweepConfig& config);

/// Single configuration: weights + stability report as one JSON object.
void run_weights(const SweepConfig& config);

/// Log-spaced eps sweep of the stability quantities; one CSV row per eps.
void run_stability_sweep(const SweepConfig& config);

/// Per-(eps, trial) integration errors plus a per-eps median aggregate file
/// at <out>.agg.csv.
void run_error_sweep(const SweepConfig& config);

/// Error and stability versus N for PHS kernels.
void run_convergence(const SweepConfig& config);

/// Weight decomposition w = w_hat - B I[tau] versus N.
void run_bayona(const SweepConfig& config);

/// Point-set CSV export.
void run_points_export(const SweepConfig& config);

}  // namespace rbfcub
