#pragma once

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbfcub/kernels.hpp"
#include "rbfcub/linsolve.hpp"
#include "rbfcub/moments.hpp"
#include "rbfcub/pointset.hpp"
#include "rbfcub/polybasis.hpp"

namespace rbfcub {

enum class ShapeStrategy { constant, boundary_halved };

/// Per-center shape parameters for a reference eps. boundary_halved gives the
/// two interval endpoints eps/2 (their support then sticks out of the domain
/// by half, which equalizes all moments); it is defined for 1-D point sets
/// only. PHS kernels always get an empty list.
std::vector<double> make_shape_parameters(const Kernel& kernel, const PointSet& ps, double eps,
                                          ShapeStrategy strategy = ShapeStrategy::constant);

struct CubatureRule {
  PointSet points;
  Eigen::VectorXd weights;
  Eigen::VectorXd aux;  // the auxiliary vector v (length K)
  Kernel kernel;
  std::vector<double> shapes;
  int degree = -1;
  Rectangle domain;

  double sum_abs_weights() const { return weights.cwiseAbs().sum(); }
  double cn_one() const { return weights.sum(); }
  double min_weight() const { return weights.minCoeff(); }
};

/// Solves A (w, v) = (m_rbf, m_poly) for the cubature weights; degree -1
/// drops the polynomial block. The moments must have been computed for the
/// same kernel, shapes, points, and basis.
CubatureRule compute_weights(const Kernel& kernel, const std::vector<double>& shapes,
                             const PointSet& ps, int degree, const MomentVector& moments);

/// Same, with an explicit polynomial basis (monomial or DOP); the resulting
/// weights agree between the two bases to solver accuracy.
CubatureRule compute_weights(const Kernel& kernel, const std::vector<double>& shapes,
                             const PointSet& ps, const PolyBasis* basis,
                             const MomentVector& moments);

/// Evaluates all N cardinal functions. The coefficient block solves
/// A (alpha^(m), beta^(m)) = (e_m, 0) once at construction; each evaluation
/// is then one matrix-vector product against the stacked (phi(x), p(x)).
class CardinalEvaluator {
 public:
  CardinalEvaluator(const Kernel& kernel, std::vector<double> shapes, PointSet ps,
                    const PolyBasis* basis);

  Eigen::Index count() const { return coefficients_.cols(); }
  Eigen::VectorXd operator()(const Point& x) const;
  /// c(x) for a batch of points, one column per point.
  Eigen::MatrixXd evaluate(const std::vector<Point>& xs) const;
  const Eigen::MatrixXd& coefficients() const { return coefficients_; }
  Eigen::VectorXd stack(const Point& x) const;  // (phi(x), p(x))

 private:
  Kernel kernel_;
  std::vector<double> shapes_;
  PointSet ps_;
  std::optional<PolyBasis> basis_;
  Eigen::MatrixXd coefficients_;  // (N+K) x N
};

/// Grid lower bound of the Lebesgue constant sup_x sum_n |c_n(x)|. The grid
/// is 10*N equispaced points in 1-D and a grid_per_axis^2 tensor grid in 2-D
/// (default 200), always united with the data points, so the estimate is
/// >= 1 up to solver accuracy.
double lebesgue_estimate(const Kernel& kernel, const std::vector<double>& shapes,
                         const PointSet& ps, int degree, int grid_per_axis = 0);

struct StabilityReport {
  double sum_abs_weights = 0.0;  // ||C_N||_inf
  double cn_one = 0.0;           // C_N[1]
  double i_norm = 0.0;           // ||I||_inf = |Omega| (unit weight function)
  double min_weight = 0.0;
  double lebesgue_estimate = 0.0;
  double cond_a = 0.0;
  bool is_stable = false;
  /// Audit of sum_abs_weights <= i_norm * lebesgue + slack. The estimate is
  /// only a grid lower bound of the true Lebesgue constant, so the audit is
  /// advisory once cond_a exceeds 1e12.
  bool lebesgue_bound_ok = false;
  bool lebesgue_bound_advisory = false;
};

StabilityReport stability_report(const CubatureRule& rule, double lebesgue, double cond_a);

class NonoverlapError : public std::runtime_error {
 public:
  NonoverlapError(Eigen::Index index, double gap);
  Eigen::Index index;  // the worst offending center
  double gap;          // 1/eps_n - h_n at that center
};

struct ExplicitCardinal {
  Eigen::VectorXd alpha;  // one coefficient per translated kernel
  Eigen::VectorXd beta;   // one coefficient per DOP element
};

/// Closed-form cardinal coefficients for compactly supported kernels with
/// nonoverlapping supports (1/eps_n <= h_n for every center):
///   alpha_n = delta_mn - (|Omega|/N) sum_k p_k(x_m) p_k(x_n),
///   beta_l  = (|Omega|/N) p_l(x_m),
/// with {p_k} the DOP basis. Requires a Wendland kernel; violated nonoverlap
/// throws NonoverlapError carrying the worst (n, 1/eps_n - h_n).
ExplicitCardinal cardinal_explicit_compact(const PointSet& ps, int degree, const Kernel& kernel,
                                           const std::vector<double>& shapes,
                                           const DopBasis& dops, Eigen::Index m);

/// sum_n alpha_n phi(eps_n ||x - x_n||) + sum_l beta_l p_l(x).
double eval_rbf_combination(const Kernel& kernel, const std::vector<double>& shapes,
                            const PointSet& ps, const PolyBasis* basis,
                            const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta,
                            const Point& x);

/// Executable check of the conditional-stability statement: reports the
/// minimum weight, whether all weights clear -1e-12 * sum|w|, the relative
/// equal-moment residual, and whether the premises (nonnegative compact
/// kernel, nonoverlap) hold. Premise violations are reported, not fatal.
struct TheoremCheckReport {
  double min_weight = 0.0;
  double sum_abs_weights = 0.0;
  bool weights_nonnegative = false;
  double equal_moment_residual = 0.0;
  bool equal_moments_ok = false;
  bool kernel_admissible = false;  // nonnegative, bounded, compact support
  bool nonoverlap_ok = false;
  Eigen::Index worst_overlap_index = -1;
  double worst_overlap_gap = 0.0;
};

TheoremCheckReport theorem_check(const PointSet& ps, int degree, const Kernel& kernel,
                                 const std::vector<double>& shapes, const MomentVector& moments);

struct BayonaDecomposition {
  Eigen::VectorXd pure_weights;       // w_hat, from Phi w_hat = m_rbf
  Eigen::VectorXd correction;         // B I[tau]
  Eigen::VectorXd augmented_weights;  // w_hat - B I[tau]
};

/// Splits the polynomial-augmented weights as w = w_hat - B I[tau] with
/// B = Phi^{-1} P (P^T Phi^{-1} P)^{-1} and I[tau] = P^T w_hat - m_poly.
/// PHS kernels whose order exceeds degree+1 are refused: Phi alone carries
/// no solvability guarantee below the minimal polynomial degree.
BayonaDecomposition bayona_decompose(const Kernel& kernel, const std::vector<double>& shapes,
                                     const PointSet& ps, int degree, const MomentVector& moments);

std::string to_json_string(const CubatureRule& rule, int indent = 2);
std::string to_json_string(const StabilityReport& report, int indent = 2);

}  // namespace rbfcub
