#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <stdexcept>
#include <vector>

#include "rbfcub/kernels.hpp"
#include "rbfcub/pointset.hpp"
#include "rbfcub/polybasis.hpp"

namespace rbfcub {

/// The (N+K) x (N+K) saddle matrix [[Phi, P], [P^T, 0]] with
/// Phi(i,j) = phi(eps_j ||x_i - x_j||) and P(i,k) = p_k(x_i). K = 0 when no
/// polynomial basis is attached (pure RBF, d = -1).
struct SaddleSystem {
  Eigen::MatrixXd a;
  Eigen::Index n = 0;
  Eigen::Index k = 0;

  Eigen::Index size() const { return n + k; }
};

SaddleSystem assemble(const Kernel& kernel, const std::vector<double>& shapes,
                      const PointSet& ps, const PolyBasis* basis);

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(Eigen::Index pivot_index, double pivot);
  Eigen::Index pivot_index;
  double pivot;
};

struct SolveResult {
  Eigen::VectorXd x;
  double residual_inf = 0.0;
};

/// Pivoted LU of the full saddle matrix. Every solve applies one step of
/// iterative refinement in working precision and reports the refreshed
/// residual. The factorization is immutable and may serve concurrent solves.
///
/// Only essentially exact singularity is rejected (a pivot below eps^2
/// relative to the largest); ill-conditioned systems solve and report, since
/// the instability regimes are exactly what the measurements are for.
class Factorization {
 public:
  explicit Factorization(const SaddleSystem& sys);

  SolveResult solve(const Eigen::VectorXd& rhs) const;
  /// Column-wise solve with one refinement step per column.
  Eigen::MatrixXd solve_many(const Eigen::MatrixXd& rhs) const;

  /// Pivots with magnitude above n * eps * max |pivot|.
  Eigen::Index rank_estimate() const;
  const Eigen::VectorXd& pivot_magnitudes() const { return pivots_; }

 private:
  Eigen::MatrixXd a_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  Eigen::VectorXd pivots_;
};

/// sigma_max / sigma_min by full SVD; refuses systems above the documented
/// dense-SVD size cap.
double condition_2norm(const SaddleSystem& sys, Eigen::Index size_cap = 3000);

}  // namespace rbfcub
