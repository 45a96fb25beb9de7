#include "rbfcub/polybasis.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rbfcub {

MonomialBasis MonomialBasis::create(int dim, int degree) {
  if (dim != 1 && dim != 2) {
    throw std::invalid_argument("MonomialBasis: dim must be 1 or 2");
  }
  if (degree < 0 || degree > 16) {
    throw std::invalid_argument("MonomialBasis: degree must be in [0, 16]");
  }
  MonomialBasis b;
  b.dim = dim;
  b.degree = degree;
  for (int t = 0; t <= degree; ++t) {
    if (dim == 1) {
      b.exponents.push_back({t, 0});
    } else {
      for (int i = t; i >= 0; --i) {
        b.exponents.push_back({i, t - i});
      }
    }
  }
  return b;
}

Eigen::VectorXd eval_monomials(const MonomialBasis& basis, const Point& p) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(basis.size()));
  // Powers up to the degree, to avoid pow() in the hot assembly path.
  double px[1 + 16], py[1 + 16];
  const int d = basis.degree;
  px[0] = py[0] = 1.0;
  for (int i = 1; i <= d; ++i) {
    px[i] = px[i - 1] * p.x;
    py[i] = py[i - 1] * p.y;
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& e = basis.exponents[k];
    v(static_cast<Eigen::Index>(k)) = px[e[0]] * (basis.dim == 2 ? py[e[1]] : 1.0);
  }
  return v;
}

double discrete_inner_product(const Eigen::VectorXd& u, const Eigen::VectorXd& v, double volume) {
  if (u.size() != v.size() || u.size() == 0) {
    throw std::invalid_argument("discrete_inner_product: length mismatch");
  }
  if (!(volume > 0.0)) {
    throw std::invalid_argument("discrete_inner_product: volume must be positive");
  }
  return volume / static_cast<double>(u.size()) * u.dot(v);
}

NonUnisolventError::NonUnisolventError(std::size_t index_, double pivot_norm_)
    : std::runtime_error("build_dops: rank deficiency at basis element " + std::to_string(index_) +
                         " (relative pivot norm " + std::to_string(pivot_norm_) + ")"),
      index(index_),
      pivot_norm(pivot_norm_) {}

DopBasis build_dops(const PointSet& ps, int degree, double volume) {
  if (!(volume > 0.0)) {
    throw std::invalid_argument("build_dops: volume must be positive");
  }
  const auto mono = MonomialBasis::create(ps.dim(), degree);
  const Eigen::Index n = static_cast<Eigen::Index>(ps.size());
  const Eigen::Index k = static_cast<Eigen::Index>(mono.size());

  Eigen::MatrixXd values(k, n);  // row j = monomial j sampled at the points
  for (Eigen::Index i = 0; i < n; ++i) {
    values.col(i) = eval_monomials(mono, ps.points[static_cast<std::size_t>(i)]);
  }

  const double scale = volume / static_cast<double>(n);
  const double gram_tol =
      1e3 * static_cast<double>(n) * std::numeric_limits<double>::epsilon();

  Eigen::MatrixXd q(k, n);      // orthonormalized samples
  Eigen::MatrixXd coeffs = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    Eigen::VectorXd v = values.row(j).transpose();
    const double norm0 = std::sqrt(scale * v.squaredNorm());
    Eigen::VectorXd c = Eigen::VectorXd::Zero(k);
    c(j) = 1.0;
    // MGS plus one full repass; a single repass restores orthogonality lost
    // on clustered points.
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        const double proj = scale * q.row(i).dot(v);
        v -= proj * q.row(i).transpose();
        c -= proj * coeffs.row(i).transpose();
      }
    }
    const double norm = std::sqrt(scale * v.squaredNorm());
    if (!(norm > gram_tol * norm0)) {
      throw NonUnisolventError(static_cast<std::size_t>(j), norm / norm0);
    }
    q.row(j) = v.transpose() / norm;
    c /= norm;
    if (c(j) < 0.0) {  // leading coefficient positive
      c = -c;
      q.row(j) = -q.row(j);
    }
    coeffs.row(j) = c.transpose();
  }

  DopBasis dop;
  dop.mono = mono;
  dop.coeffs = std::move(coeffs);
  dop.points = ps;
  dop.volume = volume;
  dop.gram_tol = gram_tol;
  return dop;
}

Eigen::VectorXd eval_dops(const DopBasis& basis, const Point& p) {
  return basis.coeffs * eval_monomials(basis.mono, p);
}

Eigen::VectorXd eval_poly_basis(const PolyBasis& basis, const Point& p) {
  if (const auto* m = std::get_if<MonomialBasis>(&basis)) {
    return eval_monomials(*m, p);
  }
  return eval_dops(std::get<DopBasis>(basis), p);
}

std::size_t poly_basis_size(const PolyBasis& basis) {
  if (const auto* m = std::get_if<MonomialBasis>(&basis)) {
    return m->size();
  }
  return std::get<DopBasis>(basis).size();
}

int poly_basis_degree(const PolyBasis& basis) {
  if (const auto* m = std::get_if<MonomialBasis>(&basis)) {
    return m->degree;
  }
  return std::get<DopBasis>(basis).mono.degree;
}

}  // namespace rbfcub
