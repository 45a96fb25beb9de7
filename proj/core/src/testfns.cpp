#include "rbfcub/testfns.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rbfcub/quadrature.hpp"
#include "rbfcub/rng.hpp"
#include "rbfcub/special_functions.hpp"

namespace rbfcub {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double genz_exact_oracle(const GenzFunction& g) {
  return integrate_2d([&](double x, double y) { return genz_eval(g, {x, y}); }, 0.0, 1.0, 0.0,
                      1.0, 1e-12);
}

}  // namespace

double genz_eval(const GenzFunction& g, const Point& x) {
  const auto& a = g.a;
  const auto& b = g.b;
  switch (g.family) {
    case 1:
      return std::cos(2.0 * std::numbers::pi * b[0] + a[0] * x.x + a[1] * x.y);
    case 2:
      return 1.0 / ((1.0 / (a[0] * a[0]) + (x.x - b[0]) * (x.x - b[0])) *
                    (1.0 / (a[1] * a[1]) + (x.y - b[1]) * (x.y - b[1])));
    case 3: {
      const double s = 1.0 + a[0] * x.x + a[1] * x.y;
      return 1.0 / (s * s * s);
    }
    case 4:
      return std::exp(-(a[0] * a[0] * (x.x - b[0]) * (x.x - b[0]) +
                        a[1] * a[1] * (x.y - b[1]) * (x.y - b[1])));
    default:
      throw std::invalid_argument("genz_eval: family must be in 1..4");
  }
}

double genz_exact_unit_square(const GenzFunction& g) {
  const auto& a = g.a;
  const auto& b = g.b;
  switch (g.family) {
    case 1: {
      if (a[0] == 0.0 || a[1] == 0.0) {
        return genz_exact_oracle(g);
      }
      const double c = 2.0 * std::numbers::pi * b[0];
      return (std::cos(c + a[0]) + std::cos(c + a[1]) - std::cos(c + a[0] + a[1]) - std::cos(c)) /
             (a[0] * a[1]);
    }
    case 2: {
      double v = 1.0;
      for (int i = 0; i < 2; ++i) {
        v *= a[i] * (std::atan(a[i] * (1.0 - b[i])) + std::atan(a[i] * b[i]));
      }
      return v;
    }
    case 3: {
      if (a[0] == 0.0 || a[1] == 0.0) {
        return genz_exact_oracle(g);
      }
      return (1.0 - 1.0 / (1.0 + a[0]) - 1.0 / (1.0 + a[1]) + 1.0 / (1.0 + a[0] + a[1])) /
             (2.0 * a[0] * a[1]);
    }
    case 4: {
      if (a[0] == 0.0 || a[1] == 0.0) {
        return genz_exact_oracle(g);
      }
      double v = 1.0;
      for (int i = 0; i < 2; ++i) {
        v *= kSqrtPi / (2.0 * a[i]) *
             (erf_accurate(a[i] * (1.0 - b[i])) + erf_accurate(a[i] * b[i]));
      }
      return v;
    }
    default:
      throw std::invalid_argument("genz_exact_unit_square: family must be in 1..4");
  }
}

GenzFunction draw_genz(int family, std::uint64_t seed) {
  if (family < 1 || family > 4) {
    throw std::invalid_argument("draw_genz: family must be in 1..4");
  }
  std::mt19937_64 rng(seed);
  GenzFunction g;
  g.family = family;
  g.a = {uniform01(rng), uniform01(rng)};
  g.b = {uniform01(rng), uniform01(rng)};
  return g;
}

double runge_constant() {
  return 1.0 / (std::atan(0.75) + std::atan(0.25));
}

double runge_normalized(double x) {
  const double t = x - 0.25;
  return runge_constant() / (1.0 + t * t);
}

Eigen::VectorXd add_noise(const Eigen::VectorXd& values, const NoiseSpec& spec) {
  if (spec.amplitude < 0.0) {
    throw std::invalid_argument("add_noise: amplitude must be nonnegative");
  }
  if (spec.amplitude == 0.0) {
    return values;
  }
  std::mt19937_64 rng(spec.seed);
  Eigen::VectorXd out = values;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    out(i) += uniform_in(rng, -spec.amplitude, spec.amplitude);
  }
  return out;
}

}  // namespace rbfcub
