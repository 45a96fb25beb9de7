#pragma once

#include <Eigen/Core>
#include <array>
#include <stdexcept>
#include <variant>
#include <vector>

#include "rbfcub/pointset.hpp"

namespace rbfcub {

/// Basis of P_d in graded lexicographic order: degrees 0..d, and within
/// degree t the exponents (t,0), (t-1,1), ..., (0,t). K = d+1 in 1-D and
/// (d+1)(d+2)/2 in 2-D.
struct MonomialBasis {
  int dim = 1;
  int degree = 0;
  std::vector<std::array<int, 2>> exponents;

  static MonomialBasis create(int dim, int degree);
  std::size_t size() const { return exponents.size(); }
};

Eigen::VectorXd eval_monomials(const MonomialBasis& basis, const Point& p);

/// [u,v] = (|Omega|/N) * sum_n u_n v_n.
double discrete_inner_product(const Eigen::VectorXd& u, const Eigen::VectorXd& v, double volume);

class NonUnisolventError : public std::runtime_error {
 public:
  NonUnisolventError(std::size_t index, double pivot_norm);
  std::size_t index;
  double pivot_norm;
};

/// Discrete orthonormal polynomials w.r.t. the point-sampled inner product
/// above: coeffs is the K x K lower-triangular change of basis from the
/// monomials, so DOP values at x are coeffs * eval_monomials(x).
///
/// Built by modified Gram-Schmidt with one full reorthogonalization pass;
/// gram_tol = 1e3 * N * machine-eps bounds the admissible relative pivot
/// norm. The leading coefficient of each element is positive, and the first
/// element is the constant |Omega|^(-1/2).
struct DopBasis {
  MonomialBasis mono;
  Eigen::MatrixXd coeffs;
  PointSet points;
  double volume = 1.0;
  double gram_tol = 0.0;

  std::size_t size() const { return mono.size(); }
};

DopBasis build_dops(const PointSet& ps, int degree, double volume);

Eigen::VectorXd eval_dops(const DopBasis& basis, const Point& p);

using PolyBasis = std::variant<MonomialBasis, DopBasis>;

Eigen::VectorXd eval_poly_basis(const PolyBasis& basis, const Point& p);
std::size_t poly_basis_size(const PolyBasis& basis);
int poly_basis_degree(const PolyBasis& basis);

}  // namespace rbfcub
