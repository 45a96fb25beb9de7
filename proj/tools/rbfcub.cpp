// Experiment harness: builds RBF cubature rules on rectangles and sweeps
// their stability and accuracy into CSV/JSON artifacts.

#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "rbfcub/linsolve.hpp"
#include "rbfcub/quadrature.hpp"
#include "rbfcub/sweeps.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Cli {
  rbfcub::SweepConfig config;
  std::string config_path;
};

void add_common_options(CLI::App* cmd, Cli& cli) {
  cmd->add_option("--config", cli.config_path, "JSON config file; flags override its values");
  cmd->add_option("--kernel", cli.config.kernel,
                  "kernel token: gauss, wendland:D:k, phs:E, tps:E, or a bare family name "
                  "combined with --k");
  cmd->add_option("--k", cli.config.k, "Wendland smoothness k, or the PHS index k");
  cmd->add_option("--degree", cli.config.degree,
                  "polynomial augmentation degree d (-1 = no polynomial block)");
  cmd->add_option("--points", cli.config.points, "point-set token: equidistant, halton, random");
  cmd->add_option("--points-file", cli.config.points_file,
                  "CSV point list (header 'x' or 'x,y'); overrides --points");
  cmd->add_option("--n", cli.config.n, "number of data points (n_per_axis^2 on 2-D grids)");
  cmd->add_option("--n-list", cli.config.n_list, "N schedule for convergence/bayona sweeps");
  cmd->add_option("--domain", cli.config.domain, "domain 'a,b' or 'a,b,c,d'");
  cmd->add_option("--eps", cli.config.eps, "shape parameter for single-configuration commands");
  cmd->add_option("--eps-min", cli.config.eps_min, "smallest sweep shape parameter");
  cmd->add_option("--eps-max", cli.config.eps_max, "largest sweep shape parameter");
  cmd->add_option("--eps-num", cli.config.eps_num, "number of log-spaced sweep points");
  cmd->add_option("--shape-strategy", cli.config.shape_strategy,
                  "constant or boundary-halved (1-D)");
  cmd->add_option("--trials", cli.config.trials, "number of random-parameter trials");
  cmd->add_option("--noise", cli.config.noise, "uniform noise amplitude added to data values");
  cmd->add_option("--seed", cli.config.seed, "master seed for draws, noise, and random points");
  cmd->add_option("--function", cli.config.function, "integrand: genz1..genz4 or runge");
  cmd->add_option("--lebesgue-grid", cli.config.lebesgue_grid,
                  "Lebesgue evaluation grid size (0 = default)");
  cmd->add_option("--quad-tol", cli.config.quad_tol, "absolute quadrature tolerance for moments");
  cmd->add_option("--out", cli.config.out, "output path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RBF cubature construction and stability measurements"};
  app.require_subcommand(1);

  Cli cli;
  std::function<void(const rbfcub::SweepConfig&)> action;

  const struct {
    const char* name;
    const char* help;
    void (*run)(const rbfcub::SweepConfig&);
  } commands[] = {
      {"weights", "compute one cubature rule and its stability report (JSON)", rbfcub::run_weights},
      {"stability-sweep", "stability quantities over a log-spaced eps grid (CSV)",
       rbfcub::run_stability_sweep},
      {"error-sweep", "integration errors over an eps grid and trials (CSV)",
       rbfcub::run_error_sweep},
      {"convergence", "PHS error and stability versus N (CSV)", rbfcub::run_convergence},
      {"bayona", "weight decomposition w = w_hat - B I[tau] versus N (CSV)", rbfcub::run_bayona},
      {"points", "export a generated point set (CSV)", rbfcub::run_points_export},
  };
  for (const auto& c : commands) {
    CLI::App* cmd = app.add_subcommand(c.name, c.help);
    add_common_options(cmd, cli);
    cmd->callback([&action, run = c.run] { action = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (!cli.config_path.empty()) {
      // Load the file first, then re-parse so explicit flags win.
      rbfcub::SweepConfig from_file;
      rbfcub::load_config_json(cli.config_path, from_file);
      from_file.out = cli.config.out;
      cli.config = from_file;
      app.clear();
      app.parse(argc, argv);
    }
    action(cli.config);
  } catch (const rbfcub::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const rbfcub::SingularMatrixError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const rbfcub::QuadratureError& e) {
    std::fprintf(stderr, "numerical failure: %s (best estimate %.17g)\n", e.what(),
                 e.best_estimate);
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return 0;
}
