#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <vector>

#include "rbfcub/kernels.hpp"
#include "rbfcub/pointset.hpp"
#include "rbfcub/polybasis.hpp"

namespace rbfcub {

/// Moments I[phi_n] and I[p_k] over rectangles with unit weight function.
///
/// Closed forms:
///  - 1-D Gaussian via the error function,
///  - 1-D PHS (odd exponent, and even exponent with log),
///  - 2-D Gaussian as a product of 1-D moments,
///  - 2-D PHS by splitting the shifted rectangle into eight right triangles
///    and summing reference integrals I_ref(alpha, beta) over the triangle
///    (0,0), (alpha,0), (alpha,beta).
///
/// Reference-integral prefactors: 1/144 (r^2 log r), 1/40 (r^3), 1/336 (r^5)
/// and 1/3456 (r^7). The r^7 denominator follows from the sec^9 theta
/// antiderivative, whose coefficient set is {48, 56, 70, 105}/3456 with
/// 105/3456 multiplying both the asinh term and the alpha^6 beta term; the
/// quadrature oracle confirms it to 1e-12 relative (see the test suite).
///
/// Everything else (notably all Wendland moments) goes through adaptive
/// Gauss-Kronrod quadrature restricted to supp(phi_n) intersected with the
/// rectangle, with the integration box always split at the center x_n: the
/// kernels have a kink there, and un-split quadrature errors of ~1e-9 get
/// amplified by the saddle solve into O(1) weight errors.

double moment_gaussian_1d(double eps, double xn, double a, double b);

/// phi(r) = r^exponent with odd exponent; requires a <= xn <= b.
double moment_phs_odd_1d(int exponent, double xn, double a, double b);

/// phi(r) = r^exponent log r with even exponent; requires a <= xn <= b.
/// The boundary terms vanish exactly for xn = a and xn = b.
double moment_phs_even_log_1d(int exponent, double xn, double a, double b);

double moment_gaussian_2d(double eps, const Point& xn, const Rectangle& rect);

/// I_ref(alpha, beta) for PHS kernels r^2 log r, r^3, r^5, r^7; zero for a
/// degenerate triangle (alpha = 0 or beta = 0).
double reference_integral(const Kernel& kernel, double alpha, double beta);

/// Eight-triangle assembly of the 2-D PHS moment for a center inside the
/// rectangle; Kronecker-delta factors drop the quadrant pairs that collapse
/// when the center sits on an edge.
double moment_phs_2d(const Kernel& kernel, const Point& xn, const Rectangle& rect);

/// Adaptive-quadrature moment of phi(eps ||. - xn||) over rect, to absolute
/// tolerance tol. Used for every Wendland moment and as the oracle for the
/// closed forms.
double moment_quadrature(const Kernel& kernel, double eps, const Point& xn,
                         const Rectangle& rect, double tol);

/// Exact monomial moments prod_i (hi_i^(a_i+1) - lo_i^(a_i+1))/(a_i+1);
/// DOP moments via the triangular change of basis.
Eigen::VectorXd poly_moments(const PolyBasis& basis, const Rectangle& rect);

enum class MomentMethod { closed_form, quadrature };

struct MomentVector {
  Eigen::VectorXd rbf;
  Eigen::VectorXd poly;
  std::vector<MomentMethod> tags;
  double quadrature_tol = 1e-12;
};

/// Assembles the right-hand side of the weight system: closed forms where
/// available, quadrature otherwise. basis may be null (pure RBF, d = -1).
/// Quadrature entries with identical clipped geometry are computed once and
/// evaluated in parallel with deterministic ordering.
MomentVector compute_moments(const Kernel& kernel, const std::vector<double>& shapes,
                             const PointSet& ps, const PolyBasis* basis,
                             double quad_tol = 1e-12);

/// Audit export: index,value,method columns.
void write_moments_csv(std::ostream& os, const MomentVector& mv);

}  // namespace rbfcub
