#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "rbfcub/sweeps.hpp"

using namespace rbfcub;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("rbfcub_test_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  static int counter;
};
int TempDir::counter = 0;

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream is(path);
  REQUIRE(is.good());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> row;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) {
      row.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
      row.emplace_back();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_SUITE_BEGIN("sweeps");

TEST_CASE("weights run writes the merged json and a sidecar") {
  TempDir dir;
  SweepConfig config;
  config.kernel = "phs:1";
  config.degree = -1;
  config.points = "equidistant";
  config.n = 11;
  config.domain = "0,1";
  config.out = dir.file("trap.json");
  config.moments_out = dir.file("moments.csv");
  run_weights(config);

  const auto j = nlohmann::json::parse(slurp(config.out));
  CHECK(j["weights"].size() == 11);
  CHECK(std::abs(j["weights"][0].get<double>() - 0.05) <= 1e-10);
  CHECK(std::abs(j["weights"][5].get<double>() - 0.1) <= 1e-10);
  CHECK(std::abs(j["sum_abs_weights"].get<double>() - 1.0) <= 1e-10);
  CHECK(std::abs(j["lebesgue_estimate"].get<double>() - 1.0) <= 1e-8);
  CHECK(j["is_stable"].get<bool>());

  const auto sidecar = nlohmann::json::parse(slurp(config.out + ".config.json"));
  CHECK(sidecar["command"] == "weights");
  CHECK(sidecar["kernel"] == "phs:1");
  CHECK(sidecar["seed"] == 0);

  const auto moments = read_csv(config.moments_out);
  CHECK(moments[0] == std::vector<std::string>{"index", "value", "method"});
}

TEST_CASE("weights run is exact for constants with d >= 0") {
  TempDir dir;
  SweepConfig config;
  config.kernel = "gauss";
  config.degree = 1;
  config.n = 15;
  config.eps = 4.0;
  config.out = dir.file("w.json");
  run_weights(config);
  const auto j = nlohmann::json::parse(slurp(config.out));
  CHECK(std::abs(j["cn_one"].get<double>() - 1.0) <= 1e-8);
}

TEST_CASE("stability sweep csv schema and reruns") {
  TempDir dir;
  SweepConfig config;
  config.kernel = "wendland:1:1";
  config.degree = 1;
  config.n = 40;
  config.eps_min = 1.0;
  config.eps_max = 200.0;
  config.eps_num = 7;
  config.out = dir.file("sweep.csv");
  run_stability_sweep(config);

  const auto rows = read_csv(config.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] ==
        std::vector<std::string>{"epsilon", "sum_abs_weights", "cn_one", "lebesgue_estimate",
                                 "cond_a", "min_weight", "is_stable", "h_inv", "status"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].size() == 9);
    CHECK(rows[i][8] == "ok");
    CHECK(rows[i][7] == rows[1][7]);  // h_inv marker is constant
  }
  // Far above 1/h every row is stable.
  CHECK(rows.back()[6] == "true");

  const std::string first = slurp(config.out);
  run_stability_sweep(config);
  CHECK(slurp(config.out) == first);  // byte-identical rerun
}

TEST_CASE("stability sweep h_inv only for compact kernels") {
  TempDir dir;
  SweepConfig config;
  config.kernel = "gauss";
  config.degree = 0;
  config.n = 10;
  config.eps_min = 1.0;
  config.eps_max = 10.0;
  config.eps_num = 3;
  config.out = dir.file("g.csv");
  run_stability_sweep(config);
  const auto rows = read_csv(config.out);
  CHECK(rows[1][7].empty());
}

TEST_CASE("error sweep rows, aggregate, and noise column") {
  TempDir dir;
  SweepConfig config;
  config.kernel = "wendland:2:1";
  config.degree = 0;
  config.points = "halton";
  config.n = 60;
  config.domain = "0,1,0,1";
  config.function = "genz1";
  config.trials = 3;
  config.eps_min = 1.0;
  config.eps_max = 10.0;
  config.eps_num = 4;
  config.seed = 11;
  config.out = dir.file("err.csv");
  run_error_sweep(config);

  const auto rows = read_csv(config.out);
  REQUIRE(rows.size() == 1 + 4 * 3);
  CHECK(rows[0] == std::vector<std::string>{"epsilon", "trial", "abs_error", "sum_abs_weights",
                                            "status"});
  CHECK(rows[1][1] == "0");
  CHECK(rows[3][1] == "2");

  const auto agg = read_csv(config.out + ".agg.csv");
  REQUIRE(agg.size() == 1 + 4);
  CHECK(agg[0] == std::vector<std::string>{"epsilon", "median_abs_error", "sum_abs_weights",
                                           "min_weight", "is_stable", "status"});

  config.noise = 1e-4;
  config.out = dir.file("err_noise.csv");
  run_error_sweep(config);
  const auto noisy = read_csv(config.out);
  CHECK(noisy[0] == std::vector<std::string>{"epsilon", "trial", "abs_error", "sum_abs_weights",
                                             "noisy_abs_error", "status"});
  const double base = std::stod(noisy[1][2]);
  const double perturbed = std::stod(noisy[1][4]);
  CHECK(perturbed != base);
}

TEST_CASE("convergence sweep decreases the cubic-phs error") {
  TempDir dir;
  SweepConfig config;
  config.kernel = "phs:3";
  config.degree = 1;
  config.domain = "0,1,0,1";
  config.function = "genz4";
  config.trials = 5;
  config.seed = 3;
  config.n_list = {25, 100, 225};
  config.out = dir.file("conv.csv");
  run_convergence(config);
  const auto rows = read_csv(config.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"n", "abs_error", "sum_abs_weights", "cn_one",
                                            "status"});
  CHECK(std::stod(rows[2][1]) < std::stod(rows[1][1]));
  CHECK(std::stod(rows[3][1]) < std::stod(rows[2][1]));

  SweepConfig bad = config;
  bad.kernel = "gauss";
  bad.out = dir.file("conv2.csv");
  CHECK_THROWS_AS(run_convergence(bad), ConfigError);
}

TEST_CASE("bayona sweep emits the identity residual") {
  TempDir dir;
  SweepConfig config;
  config.kernel = "gauss";
  config.degree = 1;
  config.eps = 20.0;
  config.n_list = {25, 50};
  config.out = dir.file("bayona.csv");
  run_bayona(config);
  const auto rows = read_csv(config.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] ==
        std::vector<std::string>{"n", "l1_norm_correction", "identity_residual", "status"});
  CHECK(std::stod(rows[1][2]) <= 1e-8);
  CHECK(std::stod(rows[2][2]) <= 1e-8);
}

TEST_CASE("points export and config loading") {
  TempDir dir;
  SweepConfig config;
  config.points = "halton";
  config.n = 7;
  config.domain = "0,1,0,1";
  config.out = dir.file("pts.csv");
  run_points_export(config);
  const auto rows = read_csv(config.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == std::vector<std::string>{"x", "y"});

  const std::string cfg_path = dir.file("config.json");
  {
    std::ofstream os(cfg_path);
    os << R"({"kernel": "phs:1", "degree": -1, "n": 11, "domain": "0,1"})";
  }
  SweepConfig loaded;
  load_config_json(cfg_path, loaded);
  CHECK(loaded.kernel == "phs:1");
  CHECK(loaded.degree == -1);
  CHECK(loaded.n == 11);

  {
    std::ofstream os(cfg_path);
    os << R"({"kernle": "typo"})";
  }
  SweepConfig bad;
  CHECK_THROWS_AS(load_config_json(cfg_path, bad), ConfigError);
}

TEST_CASE("validation failures raise config errors") {
  TempDir dir;
  SweepConfig config;
  config.out = dir.file("x.csv");

  SweepConfig c1 = config;
  c1.domain = "1,0";
  CHECK_THROWS_AS(run_points_export(c1), ConfigError);

  SweepConfig c2 = config;
  c2.kernel = "gauss";
  c2.eps = 0.0;  // missing shape parameter
  CHECK_THROWS_AS(run_weights(c2), ConfigError);

  SweepConfig c3 = config;
  c3.kernel = "wendland";
  c3.k = -1;
  CHECK_THROWS_AS(run_weights(c3), ConfigError);

  SweepConfig c4 = config;
  c4.points = "sobol";
  CHECK_THROWS_AS(run_points_export(c4), ConfigError);

  SweepConfig c5 = config;
  c5.kernel = "gauss";
  c5.eps = 1.0;
  c5.domain = "0,1,0,1";
  c5.n = 30;  // not a perfect square
  CHECK_THROWS_AS(run_weights(c5), ConfigError);

  SweepConfig c6 = config;
  c6.kernel = "wendland:2:1";
  c6.domain = "0,1,0,1";
  c6.n = 16;
  c6.eps = 4.0;
  c6.shape_strategy = "boundary-halved";  // defined on intervals only
  CHECK_THROWS_AS(run_weights(c6), std::invalid_argument);
}

TEST_SUITE_END();
