#include <doctest.h>

#include <cmath>

#include "rbfcub/quadrature.hpp"
#include "rbfcub/special_functions.hpp"
#include "rbfcub/testfns.hpp"

using namespace rbfcub;

TEST_SUITE_BEGIN("testfns");

TEST_CASE("pointwise evaluations") {
  CHECK(genz_eval({1, {0.0, 0.0}, {0.0, 0.0}}, {0.7, 0.2}) == 1.0);
  CHECK(genz_eval({2, {1.0, 1.0}, {0.0, 0.0}}, {0.0, 0.0}) == 1.0);
  CHECK(genz_eval({4, {0.8, 0.3}, {0.4, 0.9}}, {0.4, 0.9}) == 1.0);
}

TEST_CASE("closed-form exact integrals") {
  CHECK(genz_exact_unit_square({1, {1.0, 1.0}, {0.0, 0.0}}) ==
        doctest::Approx(2.0 * std::cos(1.0) - std::cos(2.0) - 1.0).epsilon(1e-14));
  CHECK(genz_exact_unit_square({1, {1.0, 1.0}, {0.0, 0.0}}) ==
        doctest::Approx(0.4967514).epsilon(1e-6));

  const double pi = std::acos(-1.0);
  CHECK(genz_exact_unit_square({2, {1.0, 1.0}, {0.0, 0.0}}) ==
        doctest::Approx(pi * pi / 16.0).epsilon(1e-14));

  const double int_exp = std::sqrt(pi) / 2.0 * erf_accurate(1.0);  // int_0^1 e^{-t^2}
  CHECK(genz_exact_unit_square({4, {1.0, 1.0}, {0.0, 0.0}}) ==
        doctest::Approx(int_exp * int_exp).epsilon(1e-14));
  CHECK(int_exp == doctest::Approx(0.7468241).epsilon(1e-6));
}

TEST_CASE("exact integrals match the quadrature oracle over random draws") {
  int checked = 0;
  for (int family = 1; family <= 4; ++family) {
    for (int trial = 0; trial < 25; ++trial) {
      const GenzFunction g = draw_genz(family, 1000 + 31 * family + trial);
      const double oracle = integrate_2d(
          [&](double x, double y) { return genz_eval(g, {x, y}); }, 0.0, 1.0, 0.0, 1.0, 1e-12);
      CHECK(genz_exact_unit_square(g) == doctest::Approx(oracle).epsilon(1e-10));
      ++checked;
    }
  }
  CHECK(checked == 100);
}

TEST_CASE("degenerate parameters fall back to the oracle") {
  for (int family : {1, 3, 4}) {
    const GenzFunction g{family, {0.0, 0.7}, {0.3, 0.4}};
    const double v = genz_exact_unit_square(g);
    CHECK(std::isfinite(v));
    const double oracle = integrate_2d(
        [&](double x, double y) { return genz_eval(g, {x, y}); }, 0.0, 1.0, 0.0, 1.0, 1e-12);
    CHECK(v == doctest::Approx(oracle).epsilon(1e-10));
  }
}

TEST_CASE("positivity and finiteness on the unit square") {
  for (int family = 1; family <= 4; ++family) {
    const GenzFunction g = draw_genz(family, 55 + family);
    for (double x = 0.0; x <= 1.0; x += 0.25) {
      for (double y = 0.0; y <= 1.0; y += 0.25) {
        const double v = genz_eval(g, {x, y});
        CHECK(std::isfinite(v));
        if (family >= 2) {
          CHECK(v > 0.0);
        }
      }
    }
  }
}

TEST_CASE("draws are deterministic and in the unit square") {
  const GenzFunction a = draw_genz(2, 91);
  const GenzFunction b = draw_genz(2, 91);
  CHECK(a.a == b.a);
  CHECK(a.b == b.b);
  for (double v : {a.a[0], a.a[1], a.b[0], a.b[1]}) {
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("normalized runge function") {
  CHECK(runge_constant() ==
        doctest::Approx(1.0 / (std::atan(0.75) + std::atan(0.25))).epsilon(1e-16));
  CHECK(runge_constant() == doctest::Approx(1.1255180270889436).epsilon(1e-14));
  CHECK(runge_normalized(0.25) == runge_constant());  // peak value
  const double mass = integrate_1d([](double x) { return runge_normalized(x); }, 0.0, 1.0, 1e-13);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("noise injection") {
  Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(50, 0.0, 1.0);
  CHECK((add_noise(v, {0.0, 9}) - v).cwiseAbs().maxCoeff() == 0.0);

  const Eigen::VectorXd noisy = add_noise(v, {1e-4, 9});
  CHECK((noisy - v).lpNorm<Eigen::Infinity>() <= 1e-4);
  CHECK((noisy - v).lpNorm<Eigen::Infinity>() > 0.0);

  CHECK((add_noise(v, {1e-4, 9}) - noisy).cwiseAbs().maxCoeff() == 0.0);  // reproducible
  CHECK((add_noise(v, {1e-4, 10}) - noisy).cwiseAbs().sum() > 0.0);       // seed-sensitive
}

TEST_SUITE_END();
