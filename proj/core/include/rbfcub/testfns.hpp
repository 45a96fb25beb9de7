#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>

#include "rbfcub/pointset.hpp"

namespace rbfcub {

/// The four parametric Genz integrand families on [0,1]^2:
///   1  cos(2 pi b_1 + sum a_i x_i)                 (oscillatory)
///   2  prod (a_i^-2 + (x_i - b_i)^2)^-1            (product peak)
///   3  (1 + sum a_i x_i)^-(q+1)                    (corner peak)
///   4  exp(-sum a_i^2 (x_i - b_i)^2)               (Gaussian)
struct GenzFunction {
  int family = 1;
  std::array<double, 2> a{1.0, 1.0};
  std::array<double, 2> b{0.0, 0.0};
};

double genz_eval(const GenzFunction& g, const Point& x);

/// Exact integral over [0,1]^2 via the closed forms (iterated antiderivatives
/// for g1/g3, arctan and erf products for g2/g4). Parameters with a_i = 0
/// make some closed forms divide by a_i and fall back to the adaptive
/// quadrature oracle.
double genz_exact_unit_square(const GenzFunction& g);

/// a, b drawn i.i.d. uniform from [0,1]^2 with the pinned generator.
GenzFunction draw_genz(int family, std::uint64_t seed);

/// f(x) = c / (1 + (x - 0.25)^2) on [0,1] with c chosen so that I[f] = 1.
double runge_normalized(double x);
double runge_constant();

struct NoiseSpec {
  double amplitude = 0.0;
  std::uint64_t seed = 0;
};

/// values + n with n_i i.i.d. uniform on [-amplitude, amplitude], seeded.
Eigen::VectorXd add_noise(const Eigen::VectorXd& values, const NoiseSpec& spec);

}  // namespace rbfcub
