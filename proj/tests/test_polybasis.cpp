#include <doctest.h>

#include <Eigen/Core>
#include <cmath>

#include "rbfcub/polybasis.hpp"

using namespace rbfcub;

TEST_SUITE_BEGIN("polybasis");

TEST_CASE("basis sizes and ordering") {
  CHECK(MonomialBasis::create(1, 3).size() == 4);
  CHECK(MonomialBasis::create(2, 2).size() == 6);
  CHECK(MonomialBasis::create(2, 5).size() == 21);

  const auto b = MonomialBasis::create(1, 1);
  const Eigen::VectorXd v = eval_monomials(b, {2.0, 0.0});
  CHECK(v(0) == 1.0);
  CHECK(v(1) == 2.0);

  const auto b2 = MonomialBasis::create(2, 2);
  const Eigen::VectorXd ones = eval_monomials(b2, {1.0, 1.0});
  for (Eigen::Index i = 0; i < ones.size(); ++i) {
    CHECK(ones(i) == 1.0);
  }
}

TEST_CASE("discrete inner product") {
  Eigen::VectorXd u = Eigen::VectorXd::Ones(4);
  CHECK(discrete_inner_product(u, u, 1.0) == 1.0);

  Eigen::Vector2d a(1.0, -1.0), b(1.0, 1.0);
  CHECK(discrete_inner_product(a, b, 2.0) == 0.0);

  Eigen::Vector3d c(1.0, 2.0, 3.0);
  CHECK(discrete_inner_product(c, c, 1.0) == doctest::Approx(14.0 / 3.0).epsilon(1e-15));

  Eigen::Vector2d short_v(1.0, 2.0);
  CHECK_THROWS_AS(discrete_inner_product(c, short_v, 1.0), std::invalid_argument);
}

TEST_CASE("constant dop is |Omega|^(-1/2)") {
  const auto ps = halton(Rectangle::interval(0.0, 1.0), 10);
  const auto dop = build_dops(ps, 0, 1.0);
  CHECK(eval_dops(dop, {0.37, 0.0})(0) == doctest::Approx(1.0).epsilon(1e-14));

  const auto ps4 = halton(Rectangle::interval(0.0, 4.0), 10);
  const auto dop4 = build_dops(ps4, 0, 4.0);
  CHECK(eval_dops(dop4, {1.3, 0.0})(0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("second dop is odd on symmetric points") {
  const auto ps =
      points_from_list(Rectangle::interval(-1.0, 1.0), {{-0.4, 0.0}, {0.4, 0.0}});
  const auto dop = build_dops(ps, 1, 2.0);
  const double left = eval_dops(dop, {-0.4, 0.0})(1);
  const double right = eval_dops(dop, {0.4, 0.0})(1);
  CHECK(left == doctest::Approx(-right).epsilon(1e-13));
}

TEST_CASE("gram matrix is the identity") {
  const auto ps = halton(Rectangle::interval(0.0, 1.0), 50);
  const auto dop = build_dops(ps, 2, 1.0);
  const Eigen::Index k = static_cast<Eigen::Index>(dop.size());
  const Eigen::Index n = static_cast<Eigen::Index>(ps.size());

  // Recompute every inner product directly from sampled values.
  Eigen::MatrixXd samples(k, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    samples.col(i) = eval_dops(dop, ps.points[static_cast<std::size_t>(i)]);
  }
  double worst = 0.0;
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      const double ip = discrete_inner_product(samples.row(a).transpose(),
                                               samples.row(b).transpose(), 1.0);
      worst = std::max(worst, std::abs(ip - (a == b ? 1.0 : 0.0)));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("gram identity holds on clustered 2-D points") {
  const auto ps = halton(Rectangle::unit(2), 60);
  const auto dop = build_dops(ps, 3, 1.0);
  const Eigen::Index k = static_cast<Eigen::Index>(dop.size());
  Eigen::MatrixXd samples(k, static_cast<Eigen::Index>(ps.size()));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    samples.col(static_cast<Eigen::Index>(i)) = eval_dops(dop, ps.points[i]);
  }
  const Eigen::MatrixXd gram =
      samples * samples.transpose() / static_cast<double>(ps.size());
  CHECK((gram - Eigen::MatrixXd::Identity(k, k)).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("scaling invariance") {
  const auto ps = halton(Rectangle::interval(0.0, 1.0), 30);
  const auto dop = build_dops(ps, 2, 1.0);

  PointSet scaled = ps;
  scaled.domain = Rectangle::interval(0.0, 2.0);
  for (auto& p : scaled.points) {
    p.x *= 2.0;
  }
  const auto dop2 = build_dops(scaled, 2, 2.0);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Eigen::VectorXd a = eval_dops(dop, ps.points[i]);
    const Eigen::VectorXd b = eval_dops(dop2, scaled.points[i]);
    for (Eigen::Index j = 0; j < a.size(); ++j) {
      CHECK(std::abs(std::abs(a(j)) - std::abs(b(j)) * std::sqrt(2.0)) <= 1e-10);
    }
  }
}

TEST_CASE("rank deficiency raises") {
  const auto two = points_from_list(Rectangle::interval(0.0, 1.0), {{0.2, 0.0}, {0.8, 0.0}});
  CHECK_THROWS_AS(build_dops(two, 2, 1.0), NonUnisolventError);
}

TEST_SUITE_END();
