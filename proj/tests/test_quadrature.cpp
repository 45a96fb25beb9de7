#include <doctest.h>

#include <cmath>

#include "rbfcub/quadrature.hpp"
#include "rbfcub/special_functions.hpp"

using namespace rbfcub;

namespace {

// Test-only oracle for the oracle: composite Simpson with Richardson halving.
template <class F>
double simpson(F&& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) {
    s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return s * h / 3.0;
}

}  // namespace

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("erf matches the platform function") {
  double worst = 0.0;
  for (double x = -6.0; x <= 6.0; x += 0.0173) {
    worst = std::max(worst, std::abs(erf_accurate(x) - std::erf(x)));
  }
  CHECK(worst <= 1e-15);
  CHECK(erf_accurate(0.0) == 0.0);
  CHECK(erf_accurate(30.0) == 1.0);
  CHECK(erf_accurate(-30.0) == -1.0);
  CHECK(erfc_accurate(5.0) == doctest::Approx(std::erfc(5.0)).epsilon(1e-12));
}

TEST_CASE("erf against the quadrature definition") {
  const double two_over_sqrt_pi = 2.0 / std::sqrt(std::acos(-1.0));
  for (double x : {0.3, 1.0, 2.5}) {
    const double q =
        two_over_sqrt_pi * integrate_1d([](double t) { return std::exp(-t * t); }, 0.0, x, 1e-14);
    CHECK(erf_accurate(x) == doctest::Approx(q).epsilon(1e-14));
  }
}

TEST_CASE("known 1-D integrals") {
  CHECK(integrate_1d([](double x) { return x * x; }, 0.0, 1.0, 1e-14) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  const double pi = std::acos(-1.0);
  CHECK(integrate_1d([](double x) { return std::sin(x); }, 0.0, pi, 1e-13) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(integrate_1d([](double x) { return std::cos(50.0 * x); }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(std::sin(50.0) / 50.0).epsilon(1e-11));
  CHECK(integrate_1d([](double) { return 1.0; }, 0.3, 0.3, 1e-14) == 0.0);
}

TEST_CASE("adaptive result agrees with an independent Simpson oracle") {
  auto f = [](double x) { return std::exp(-(x - 0.3) * (x - 0.3)) + 0.1 * std::cos(9.0 * x); };
  const double coarse = simpson(f, 0.0, 1.0, 2048);
  const double fine = simpson(f, 0.0, 1.0, 4096);
  const double richardson = fine + (fine - coarse) / 15.0;
  CHECK(integrate_1d(f, 0.0, 1.0, 1e-12) == doctest::Approx(richardson).epsilon(1e-10));
}

TEST_CASE("2-D integrals") {
  CHECK(integrate_2d([](double x, double y) { return x * y; }, 0.0, 1.0, 0.0, 1.0, 1e-12) ==
        doctest::Approx(0.25).epsilon(1e-12));
  const double e1 = std::exp(1.0) - 1.0;
  CHECK(integrate_2d([](double x, double y) { return std::exp(x + y); }, 0.0, 1.0, 0.0, 1.0,
                     1e-11) == doctest::Approx(e1 * e1).epsilon(1e-11));
}

TEST_CASE("subdivision budget exhaustion carries the best estimate") {
  auto rough = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.37) + 1e-300); };
  try {
    integrate_1d(rough, 0.0, 1.0, 1e-12, 8);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.best_estimate > 0.0);
    CHECK(e.error_estimate > 1e-12);
  }
}

TEST_SUITE_END();
