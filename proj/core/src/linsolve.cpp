#include "rbfcub/linsolve.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <string>

namespace rbfcub {

SaddleSystem assemble(const Kernel& kernel, const std::vector<double>& shapes,
                      const PointSet& ps, const PolyBasis* basis) {
  const Eigen::Index n = static_cast<Eigen::Index>(ps.size());
  if (kernel.has_shape()) {
    if (shapes.size() != ps.size()) {
      throw std::invalid_argument("assemble: one shape parameter per center required");
    }
    for (double e : shapes) {
      if (!(e > 0.0)) {
        throw std::invalid_argument("assemble: shape parameters must be positive");
      }
    }
  } else if (!shapes.empty()) {
    throw std::invalid_argument("assemble: PHS kernels take no shape parameters");
  }

  const Eigen::Index k = basis ? static_cast<Eigen::Index>(poly_basis_size(*basis)) : 0;
  SaddleSystem sys;
  sys.n = n;
  sys.k = k;
  sys.a = Eigen::MatrixXd::Zero(n + k, n + k);

  const int dim = ps.dim();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double eps = kernel.has_shape() ? shapes[static_cast<std::size_t>(j)] : 1.0;
    const Point& xj = ps.points[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 0; i < n; ++i) {
      const double r = distance(ps.points[static_cast<std::size_t>(i)], xj, dim);
      if (i != j && r == 0.0) {
        throw std::invalid_argument("assemble: duplicate points at indices " +
                                    std::to_string(i) + ", " + std::to_string(j));
      }
      sys.a(i, j) = kernel_eval(kernel, eps * r);
    }
  }
  if (basis) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::VectorXd p = eval_poly_basis(*basis, ps.points[static_cast<std::size_t>(i)]);
      sys.a.block(i, n, 1, k) = p.transpose();
      sys.a.block(n, i, k, 1) = p;
    }
  }
  return sys;
}

SingularMatrixError::SingularMatrixError(Eigen::Index pivot_index_, double pivot_)
    : std::runtime_error("singular saddle matrix: pivot " + std::to_string(pivot_index_) +
                         " is " + std::to_string(pivot_)),
      pivot_index(pivot_index_),
      pivot(pivot_) {}

Factorization::Factorization(const SaddleSystem& sys) : a_(sys.a), lu_(sys.a) {
  pivots_ = lu_.matrixLU().diagonal().cwiseAbs();
  const double pivot_max = pivots_.size() ? pivots_.maxCoeff() : 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double tol = eps * eps * pivot_max;
  for (Eigen::Index i = 0; i < pivots_.size(); ++i) {
    if (!(pivots_(i) > tol)) {
      throw SingularMatrixError(i, pivots_(i));
    }
  }
}

SolveResult Factorization::solve(const Eigen::VectorXd& rhs) const {
  if (rhs.size() != a_.rows()) {
    throw std::invalid_argument("solve: rhs length must be N+K");
  }
  Eigen::VectorXd x = lu_.solve(rhs);
  Eigen::VectorXd r = rhs - a_ * x;
  x += lu_.solve(r);
  r = rhs - a_ * x;
  if (!x.allFinite()) {
    throw SingularMatrixError(0, 0.0);
  }
  return {std::move(x), r.lpNorm<Eigen::Infinity>()};
}

Eigen::MatrixXd Factorization::solve_many(const Eigen::MatrixXd& rhs) const {
  if (rhs.rows() != a_.rows()) {
    throw std::invalid_argument("solve_many: rhs rows must be N+K");
  }
  Eigen::MatrixXd x = lu_.solve(rhs);
  x += lu_.solve(rhs - a_ * x);
  if (!x.allFinite()) {
    throw SingularMatrixError(0, 0.0);
  }
  return x;
}

Eigen::Index Factorization::rank_estimate() const {
  const double pivot_max = pivots_.size() ? pivots_.maxCoeff() : 0.0;
  const double tol = static_cast<double>(pivots_.size()) *
                     std::numeric_limits<double>::epsilon() * pivot_max;
  return (pivots_.array() > tol).count();
}

double condition_2norm(const SaddleSystem& sys, Eigen::Index size_cap) {
  if (sys.size() > size_cap) {
    throw std::invalid_argument(
        "condition_2norm: system size " + std::to_string(sys.size()) +
        " exceeds the dense-SVD cap " + std::to_string(size_cap) +
        "; condition estimators for larger systems are out of scope");
  }
  Eigen::VectorXd sv;
  if (sys.size() <= 32) {
    sv = Eigen::JacobiSVD<Eigen::MatrixXd>(sys.a).singularValues();
  } else {
    sv = Eigen::BDCSVD<Eigen::MatrixXd>(sys.a).singularValues();
  }
  const double smin = sv(sv.size() - 1);
  if (smin == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return sv(0) / smin;
}

}  // namespace rbfcub
