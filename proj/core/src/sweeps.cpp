#include "rbfcub/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <locale>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "rbfcub/cubature.hpp"
#include "rbfcub/parallel.hpp"
#include "rbfcub/rng.hpp"
#include "rbfcub/testfns.hpp"
#include "serialization_detail.hpp"

namespace rbfcub {

namespace {

using nlohmann::ordered_json;

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  if (path.empty()) {
    throw ConfigError("missing output path (--out)");
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw ConfigError("cannot open output file '" + path + "'");
  }
  os.imbue(std::locale::classic());
  return os;
}

Rectangle parse_domain(const std::string& text) {
  std::vector<double> vals;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stod(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw ConfigError("bad domain component '" + item + "'");
    }
  }
  try {
    if (vals.size() == 2) {
      return Rectangle::interval(vals[0], vals[1]);
    }
    if (vals.size() == 4) {
      return Rectangle::box(vals[0], vals[1], vals[2], vals[3]);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("domain must be 'a,b' or 'a,b,c,d'");
}

Kernel resolve_kernel(const SweepConfig& config, int dim) {
  try {
    if (config.kernel.find(':') != std::string::npos) {
      return parse_kernel(config.kernel);
    }
    std::string t = config.kernel;
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "wendland") {
      if (config.k < 0) {
        throw ConfigError("wendland kernel requires --k");
      }
      return Kernel::wendland(dim, config.k);
    }
    if (t == "phs") {
      if (config.k < 1) {
        throw ConfigError("phs kernel requires --k >= 1 (exponent 2k-1)");
      }
      return Kernel::phs_odd(config.k);
    }
    if (t == "tps") {
      return Kernel::phs_even_log(config.k >= 1 ? config.k : 1);
    }
    return parse_kernel(config.kernel);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

ShapeStrategy resolve_strategy(const SweepConfig& config) {
  if (config.shape_strategy == "constant") {
    return ShapeStrategy::constant;
  }
  if (config.shape_strategy == "boundary-halved") {
    return ShapeStrategy::boundary_halved;
  }
  throw ConfigError("shape strategy must be 'constant' or 'boundary-halved'");
}

PointSet resolve_points(const SweepConfig& config, const Rectangle& rect, int n) {
  try {
    if (!config.points_file.empty()) {
      std::ifstream is(config.points_file);
      if (!is) {
        throw ConfigError("cannot open points file '" + config.points_file + "'");
      }
      return points_from_list(rect, read_points_csv(is));
    }
    if (config.points == "equidistant") {
      if (rect.dim == 1) {
        return equidistant(rect, n);
      }
      const int per_axis = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
      if (per_axis * per_axis != n) {
        throw ConfigError("2-D equidistant grids need a perfect-square --n (n_per_axis^2)");
      }
      return equidistant(rect, per_axis);
    }
    if (config.points == "halton") {
      return halton(rect, n);
    }
    if (config.points == "random") {
      return random_uniform(rect, n, config.seed);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown point-set token '" + config.points + "'");
}

std::vector<double> eps_grid(const SweepConfig& config) {
  if (!(config.eps_min > 0.0) || !(config.eps_min < config.eps_max) || config.eps_num < 2) {
    throw ConfigError("eps sweep needs 0 < eps-min < eps-max and eps-num >= 2");
  }
  std::vector<double> grid(static_cast<std::size_t>(config.eps_num));
  const double l0 = std::log(config.eps_min);
  const double l1 = std::log(config.eps_max);
  for (int i = 0; i < config.eps_num; ++i) {
    grid[static_cast<std::size_t>(i)] =
        std::exp(l0 + (l1 - l0) * static_cast<double>(i) / (config.eps_num - 1));
  }
  return grid;
}

struct Integrand {
  int genz_family = 0;  // 0 = runge
};

Integrand resolve_function(const SweepConfig& config, const Rectangle& rect) {
  const std::string& f = config.function;
  if (f == "runge") {
    if (rect.dim != 1 || rect.lo[0] != 0.0 || rect.hi[0] != 1.0) {
      throw ConfigError("runge is defined on the unit interval 0,1");
    }
    return {0};
  }
  if (f.size() == 5 && f.rfind("genz", 0) == 0 && f[4] >= '1' && f[4] <= '4') {
    if (rect.dim != 2 || rect.lo[0] != 0.0 || rect.hi[0] != 1.0 || rect.lo[1] != 0.0 ||
        rect.hi[1] != 1.0) {
      throw ConfigError("genz functions are defined on the unit square 0,1,0,1");
    }
    return {f[4] - '0'};
  }
  throw ConfigError("unknown function token '" + f + "'");
}

// Per-trial parameter draws derive from the master seed through fixed
// splitmix64 streams, so one trial's draw serves every configuration.
std::uint64_t genz_draw_seed(std::uint64_t master, int trial) {
  return derive_seed(master, static_cast<std::uint64_t>(trial));
}
std::uint64_t noise_seed(std::uint64_t master, int trial) {
  return derive_seed(master ^ 0x6E6F697365ULL, static_cast<std::uint64_t>(trial));
}

double median(std::vector<double> v) {
  if (v.empty()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

ordered_json config_to_json(const SweepConfig& c, const std::string& command,
                            const Kernel* kernel) {
  ordered_json j;
  j["command"] = command;
  j["kernel"] = kernel ? kernel_token(*kernel) : c.kernel;
  j["degree"] = c.degree;
  j["points"] = c.points;
  if (!c.points_file.empty()) {
    j["points_file"] = c.points_file;
  }
  j["n"] = c.n;
  if (!c.n_list.empty()) {
    j["n_list"] = c.n_list;
  }
  j["seed"] = c.seed;
  j["domain"] = c.domain;
  j["eps"] = c.eps;
  j["eps_min"] = c.eps_min;
  j["eps_max"] = c.eps_max;
  j["eps_num"] = c.eps_num;
  j["trials"] = c.trials;
  j["noise"] = c.noise;
  j["shape_strategy"] = c.shape_strategy;
  j["function"] = c.function;
  j["lebesgue_grid"] = c.lebesgue_grid;
  j["quad_tol"] = c.quad_tol;
  j["out"] = c.out;
  return j;
}

void write_sidecar(const SweepConfig& c, const std::string& command, const Kernel* kernel) {
  auto os = open_output(c.out + ".config.json");
  os << config_to_json(c, command, kernel).dump(2) << "\n";
}

int require_trials(const SweepConfig& c) {
  if (c.trials < 1) {
    throw ConfigError("trials must be >= 1");
  }
  return c.trials;
}

double require_eps(const SweepConfig& c, const Kernel& kernel) {
  if (!kernel.has_shape()) {
    return 0.0;
  }
  if (!(c.eps > 0.0)) {
    throw ConfigError(kernel_token(kernel) + " requires --eps > 0");
  }
  return c.eps;
}

}  // namespace

void load_config_json(const std::string& path, SweepConfig& config) {
  std::ifstream is(path);
  if (!is) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  ordered_json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "kernel") config.kernel = value.get<std::string>();
      else if (key == "k") config.k = value.get<int>();
      else if (key == "degree") config.degree = value.get<int>();
      else if (key == "points") config.points = value.get<std::string>();
      else if (key == "points_file") config.points_file = value.get<std::string>();
      else if (key == "n") config.n = value.get<int>();
      else if (key == "n_list") config.n_list = value.get<std::vector<int>>();
      else if (key == "seed") config.seed = value.get<std::uint64_t>();
      else if (key == "domain") config.domain = value.get<std::string>();
      else if (key == "eps") config.eps = value.get<double>();
      else if (key == "eps_min") config.eps_min = value.get<double>();
      else if (key == "eps_max") config.eps_max = value.get<double>();
      else if (key == "eps_num") config.eps_num = value.get<int>();
      else if (key == "trials") config.trials = value.get<int>();
      else if (key == "noise") config.noise = value.get<double>();
      else if (key == "shape_strategy") config.shape_strategy = value.get<std::string>();
      else if (key == "function") config.function = value.get<std::string>();
      else if (key == "lebesgue_grid") config.lebesgue_grid = value.get<int>();
      else if (key == "quad_tol") config.quad_tol = value.get<double>();
      else if (key == "out") config.out = value.get<std::string>();
      else if (key == "moments_out") config.moments_out = value.get<std::string>();
      else if (key == "command") { /* informational in sidecars */ }
      else throw ConfigError("unknown config key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config key '" + key + "': " + e.what());
    }
  }
}

void run_weights(const SweepConfig& config) {
  const Rectangle rect = parse_domain(config.domain);
  const Kernel kernel = resolve_kernel(config, rect.dim);
  const PointSet ps = resolve_points(config, rect, config.n);
  const ShapeStrategy strategy = resolve_strategy(config);
  const double eps = require_eps(config, kernel);
  const std::vector<double> shapes = make_shape_parameters(kernel, ps, eps, strategy);

  std::optional<PolyBasis> basis;
  if (config.degree >= 0) {
    basis = MonomialBasis::create(rect.dim, config.degree);
  }
  const MomentVector moments =
      compute_moments(kernel, shapes, ps, basis ? &*basis : nullptr, config.quad_tol);
  const CubatureRule rule =
      compute_weights(kernel, shapes, ps, basis ? &*basis : nullptr, moments);
  const double lebesgue =
      lebesgue_estimate(kernel, shapes, ps, config.degree, config.lebesgue_grid);
  const double cond = condition_2norm(assemble(kernel, shapes, ps, basis ? &*basis : nullptr));
  const StabilityReport report = stability_report(rule, lebesgue, cond);

  ordered_json j = detail::rule_to_json(rule);
  const ordered_json rj = detail::report_to_json(report);
  for (const auto& [key, value] : rj.items()) {
    j[key] = value;
  }
  auto os = open_output(config.out);
  os << j.dump(2) << "\n";
  if (!config.moments_out.empty()) {
    auto ms = open_output(config.moments_out);
    write_moments_csv(ms, moments);
  }
  write_sidecar(config, "weights", &kernel);
}

void run_stability_sweep(const SweepConfig& config) {
  const Rectangle rect = parse_domain(config.domain);
  const Kernel kernel = resolve_kernel(config, rect.dim);
  const PointSet ps = resolve_points(config, rect, config.n);
  const ShapeStrategy strategy = resolve_strategy(config);
  const std::vector<double> grid = eps_grid(config);

  std::string h_inv;
  if (kernel.compact_support()) {
    const std::vector<double> h = separation(ps);
    h_inv = g17(1.0 / *std::min_element(h.begin(), h.end()));
  }

  struct Row {
    double eps = 0.0;
    double cond = 0.0;
    bool singular = false;
    StabilityReport rep;
  };
  std::vector<Row> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    Row& row = rows[i];
    row.eps = grid[i];
    const std::vector<double> shapes = make_shape_parameters(kernel, ps, row.eps, strategy);
    std::optional<PolyBasis> basis;
    if (config.degree >= 0) {
      basis = MonomialBasis::create(rect.dim, config.degree);
    }
    const SaddleSystem sys = assemble(kernel, shapes, ps, basis ? &*basis : nullptr);
    row.cond = condition_2norm(sys);
    try {
      const MomentVector moments =
          compute_moments(kernel, shapes, ps, basis ? &*basis : nullptr, config.quad_tol);
      const CubatureRule rule =
          compute_weights(kernel, shapes, ps, basis ? &*basis : nullptr, moments);
      const double lebesgue =
          lebesgue_estimate(kernel, shapes, ps, config.degree, config.lebesgue_grid);
      row.rep = stability_report(rule, lebesgue, row.cond);
    } catch (const SingularMatrixError&) {
      row.singular = true;
    }
  });

  auto os = open_output(config.out);
  os << "epsilon,sum_abs_weights,cn_one,lebesgue_estimate,cond_a,min_weight,is_stable,h_inv,"
        "status\n";
  for (const Row& row : rows) {
    os << g17(row.eps) << ',';
    if (row.singular) {
      os << ",,," << g17(row.cond) << ",,," << h_inv << ",singular\n";
    } else {
      os << g17(row.rep.sum_abs_weights) << ',' << g17(row.rep.cn_one) << ','
         << g17(row.rep.lebesgue_estimate) << ',' << g17(row.cond) << ','
         << g17(row.rep.min_weight) << ',' << (row.rep.is_stable ? "true" : "false") << ','
         << h_inv << ",ok\n";
    }
  }
  write_sidecar(config, "stability-sweep", &kernel);
}

void run_error_sweep(const SweepConfig& config) {
  const Rectangle rect = parse_domain(config.domain);
  const Kernel kernel = resolve_kernel(config, rect.dim);
  const PointSet ps = resolve_points(config, rect, config.n);
  const ShapeStrategy strategy = resolve_strategy(config);
  const Integrand integrand = resolve_function(config, rect);
  const int trials = require_trials(config);
  const std::vector<double> grid = eps_grid(config);
  const bool with_noise = config.noise > 0.0;

  // Function values and exact integrals are eps-independent.
  const Eigen::Index n = static_cast<Eigen::Index>(ps.size());
  std::vector<Eigen::VectorXd> values(static_cast<std::size_t>(trials));
  std::vector<Eigen::VectorXd> noisy_values(static_cast<std::size_t>(trials));
  std::vector<double> exact(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd f(n);
    if (integrand.genz_family == 0) {
      for (Eigen::Index i = 0; i < n; ++i) {
        f(i) = runge_normalized(ps.points[static_cast<std::size_t>(i)].x);
      }
      exact[static_cast<std::size_t>(t)] = 1.0;
    } else {
      const GenzFunction g = draw_genz(integrand.genz_family, genz_draw_seed(config.seed, t));
      for (Eigen::Index i = 0; i < n; ++i) {
        f(i) = genz_eval(g, ps.points[static_cast<std::size_t>(i)]);
      }
      exact[static_cast<std::size_t>(t)] = genz_exact_unit_square(g);
    }
    values[static_cast<std::size_t>(t)] = f;
    if (with_noise) {
      noisy_values[static_cast<std::size_t>(t)] =
          add_noise(f, {config.noise, noise_seed(config.seed, t)});
    }
  }

  struct EpsResult {
    double eps = 0.0;
    bool singular = false;
    double sum_abs = 0.0;
    double min_weight = 0.0;
    bool is_stable = false;
    std::vector<double> errors;
    std::vector<double> noisy_errors;
  };
  std::vector<EpsResult> results(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    EpsResult& res = results[i];
    res.eps = grid[i];
    const std::vector<double> shapes = make_shape_parameters(kernel, ps, res.eps, strategy);
    try {
      std::optional<PolyBasis> basis;
      if (config.degree >= 0) {
        basis = MonomialBasis::create(rect.dim, config.degree);
      }
      const MomentVector moments =
          compute_moments(kernel, shapes, ps, basis ? &*basis : nullptr, config.quad_tol);
      const CubatureRule rule =
          compute_weights(kernel, shapes, ps, basis ? &*basis : nullptr, moments);
      res.sum_abs = rule.sum_abs_weights();
      res.min_weight = rule.min_weight();
      res.is_stable = res.min_weight >= -1e-12 * res.sum_abs;
      for (int t = 0; t < trials; ++t) {
        const double approx = rule.weights.dot(values[static_cast<std::size_t>(t)]);
        res.errors.push_back(std::abs(approx - exact[static_cast<std::size_t>(t)]));
        if (with_noise) {
          const double napprox = rule.weights.dot(noisy_values[static_cast<std::size_t>(t)]);
          res.noisy_errors.push_back(std::abs(napprox - exact[static_cast<std::size_t>(t)]));
        }
      }
    } catch (const SingularMatrixError&) {
      res.singular = true;
    }
  });

  auto os = open_output(config.out);
  os << "epsilon,trial,abs_error,sum_abs_weights" << (with_noise ? ",noisy_abs_error" : "")
     << ",status\n";
  for (const EpsResult& res : results) {
    if (res.singular) {
      os << g17(res.eps) << ",,," << (with_noise ? "," : "") << ",singular\n";
      continue;
    }
    for (int t = 0; t < trials; ++t) {
      os << g17(res.eps) << ',' << t << ',' << g17(res.errors[static_cast<std::size_t>(t)]) << ','
         << g17(res.sum_abs);
      if (with_noise) {
        os << ',' << g17(res.noisy_errors[static_cast<std::size_t>(t)]);
      }
      os << ",ok\n";
    }
  }

  auto agg = open_output(config.out + ".agg.csv");
  agg << "epsilon,median_abs_error" << (with_noise ? ",median_noisy_abs_error" : "")
      << ",sum_abs_weights,min_weight,is_stable,status\n";
  for (const EpsResult& res : results) {
    if (res.singular) {
      agg << g17(res.eps) << ',' << (with_noise ? "," : "") << ",,,,singular\n";
      continue;
    }
    agg << g17(res.eps) << ',' << g17(median(res.errors));
    if (with_noise) {
      agg << ',' << g17(median(res.noisy_errors));
    }
    agg << ',' << g17(res.sum_abs) << ',' << g17(res.min_weight) << ','
        << (res.is_stable ? "true" : "false") << ",ok\n";
  }
  write_sidecar(config, "error-sweep", &kernel);
}

void run_convergence(const SweepConfig& config) {
  const Rectangle rect = parse_domain(config.domain);
  const Kernel kernel = resolve_kernel(config, rect.dim);
  if (!kernel.is_phs()) {
    throw ConfigError("convergence sweeps are defined for PHS kernels");
  }
  const Integrand integrand = resolve_function(config, rect);
  const int trials = require_trials(config);
  const std::vector<int> schedule =
      config.n_list.empty() ? std::vector<int>{25, 100, 225, 400, 625} : config.n_list;

  struct Row {
    int n = 0;
    bool singular = false;
    double med = 0.0, sum_abs = 0.0, cn1 = 0.0;
  };
  std::vector<Row> rows(schedule.size());
  parallel_for(schedule.size(), [&](std::size_t i) {
    Row& row = rows[i];
    row.n = schedule[i];
    const PointSet ps = resolve_points(config, rect, row.n);
    try {
      std::optional<PolyBasis> basis;
      if (config.degree >= 0) {
        basis = MonomialBasis::create(rect.dim, config.degree);
      }
      const MomentVector moments =
          compute_moments(kernel, {}, ps, basis ? &*basis : nullptr, config.quad_tol);
      const CubatureRule rule = compute_weights(kernel, {}, ps, basis ? &*basis : nullptr, moments);
      std::vector<double> errors;
      for (int t = 0; t < trials; ++t) {
        double approx = 0.0;
        double exact = 0.0;
        if (integrand.genz_family == 0) {
          for (std::size_t p = 0; p < ps.size(); ++p) {
            approx += rule.weights(static_cast<Eigen::Index>(p)) * runge_normalized(ps.points[p].x);
          }
          exact = 1.0;
        } else {
          const GenzFunction g =
              draw_genz(integrand.genz_family, genz_draw_seed(config.seed, t));
          for (std::size_t p = 0; p < ps.size(); ++p) {
            approx += rule.weights(static_cast<Eigen::Index>(p)) * genz_eval(g, ps.points[p]);
          }
          exact = genz_exact_unit_square(g);
        }
        errors.push_back(std::abs(approx - exact));
      }
      row.med = median(errors);
      row.sum_abs = rule.sum_abs_weights();
      row.cn1 = rule.cn_one();
    } catch (const SingularMatrixError&) {
      row.singular = true;
    }
  });

  auto os = open_output(config.out);
  os << "n,abs_error,sum_abs_weights,cn_one,status\n";
  for (const Row& row : rows) {
    if (row.singular) {
      os << row.n << ",,,,singular\n";
    } else {
      os << row.n << ',' << g17(row.med) << ',' << g17(row.sum_abs) << ',' << g17(row.cn1)
         << ",ok\n";
    }
  }
  write_sidecar(config, "convergence", &kernel);
}

void run_bayona(const SweepConfig& config) {
  const Rectangle rect = parse_domain(config.domain);
  const Kernel kernel = resolve_kernel(config, rect.dim);
  const ShapeStrategy strategy = resolve_strategy(config);
  const std::vector<int> schedule =
      config.n_list.empty() ? std::vector<int>{25, 50, 100} : config.n_list;
  if (kernel.has_shape()) {
    require_eps(config, kernel);
  }
  if (kernel.is_phs() && kernel.order() > config.degree + 1) {
    throw ConfigError(kernel_token(kernel) + " needs degree >= " +
                      std::to_string(kernel.min_poly_degree()) + " for the pure-RBF block");
  }

  struct Row {
    int n = 0;
    bool rank_deficient = false;
    double l1 = 0.0, resid = 0.0;
  };
  std::vector<Row> rows(schedule.size());
  parallel_for(schedule.size(), [&](std::size_t i) {
    Row& row = rows[i];
    row.n = schedule[i];
    const PointSet ps = resolve_points(config, rect, row.n);
    const std::vector<double> shapes =
        kernel.has_shape() ? make_shape_parameters(kernel, ps, config.eps, strategy)
                           : std::vector<double>{};
    try {
      std::optional<PolyBasis> basis;
      if (config.degree >= 0) {
        basis = MonomialBasis::create(rect.dim, config.degree);
      }
      const MomentVector moments =
          compute_moments(kernel, shapes, ps, basis ? &*basis : nullptr, config.quad_tol);
      const BayonaDecomposition dec =
          bayona_decompose(kernel, shapes, ps, config.degree, moments);
      const CubatureRule rule =
          compute_weights(kernel, shapes, ps, basis ? &*basis : nullptr, moments);
      row.l1 = dec.correction.cwiseAbs().sum();
      row.resid = (rule.weights - dec.augmented_weights).lpNorm<Eigen::Infinity>();
    } catch (const SingularMatrixError&) {
      row.rank_deficient = true;
    }
  });

  auto os = open_output(config.out);
  os << "n,l1_norm_correction,identity_residual,status\n";
  for (const Row& row : rows) {
    if (row.rank_deficient) {
      os << row.n << ",,,rank_deficient\n";
    } else {
      os << row.n << ',' << g17(row.l1) << ',' << g17(row.resid) << ",ok\n";
    }
  }
  write_sidecar(config, "bayona", &kernel);
}

void run_points_export(const SweepConfig& config) {
  const Rectangle rect = parse_domain(config.domain);
  const PointSet ps = resolve_points(config, rect, config.n);
  auto os = open_output(config.out);
  write_points_csv(os, ps);
  write_sidecar(config, "points", nullptr);
}

}  // namespace rbfcub
