#include "rbfcub/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "serialization_detail.hpp"

namespace rbfcub {

namespace {

constexpr double kStabilityTol = 1e-12;  // weight sign tolerance, relative to sum|w|

Eigen::VectorXd rhs_from_moments(const MomentVector& moments, Eigen::Index n, Eigen::Index k) {
  if (moments.rbf.size() != n || moments.poly.size() != k) {
    throw std::invalid_argument("compute_weights: moments do not match the configuration");
  }
  Eigen::VectorXd rhs(n + k);
  rhs.head(n) = moments.rbf;
  rhs.tail(k) = moments.poly;
  return rhs;
}

std::vector<Point> lebesgue_grid(const PointSet& ps, int grid_per_axis) {
  const Rectangle& r = ps.domain;
  std::vector<Point> grid;
  if (r.dim == 1) {
    const int count = grid_per_axis > 0 ? grid_per_axis : 10 * static_cast<int>(ps.size());
    grid.reserve(static_cast<std::size_t>(count) + ps.size());
    for (int i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
      grid.push_back({r.lo[0] + t * (r.hi[0] - r.lo[0]), 0.0});
    }
  } else {
    const int per_axis = grid_per_axis > 0 ? grid_per_axis : 200;
    grid.reserve(static_cast<std::size_t>(per_axis) * per_axis + ps.size());
    for (int i = 0; i < per_axis; ++i) {
      const double tx = per_axis == 1 ? 0.0 : static_cast<double>(i) / (per_axis - 1);
      for (int j = 0; j < per_axis; ++j) {
        const double ty = per_axis == 1 ? 0.0 : static_cast<double>(j) / (per_axis - 1);
        grid.push_back({r.lo[0] + tx * (r.hi[0] - r.lo[0]), r.lo[1] + ty * (r.hi[1] - r.lo[1])});
      }
    }
  }
  grid.insert(grid.end(), ps.points.begin(), ps.points.end());
  return grid;
}

void check_nonoverlap(const Kernel& kernel, const std::vector<double>& shapes,
                      const std::vector<double>& h, Eigen::Index* worst_index, double* worst_gap) {
  *worst_index = -1;
  *worst_gap = -std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < h.size(); ++n) {
    const double gap = support_radius(kernel, shapes[n]) - h[n];
    if (gap > *worst_gap) {
      *worst_gap = gap;
      *worst_index = static_cast<Eigen::Index>(n);
    }
  }
}

// 1/eps_n <= h_n, with an ulp-level allowance so that eps = 1/h qualifies.
bool nonoverlap_holds(double worst_gap, const std::vector<double>& h) {
  const double scale = *std::max_element(h.begin(), h.end());
  return worst_gap <= 1e-12 * scale;
}

}  // namespace

std::vector<double> make_shape_parameters(const Kernel& kernel, const PointSet& ps, double eps,
                                          ShapeStrategy strategy) {
  if (!kernel.has_shape()) {
    return {};
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("make_shape_parameters: eps must be positive");
  }
  std::vector<double> shapes(ps.size(), eps);
  if (strategy == ShapeStrategy::boundary_halved) {
    if (ps.dim() != 1) {
      throw std::invalid_argument("make_shape_parameters: boundary-halved is 1-D only");
    }
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < ps.size(); ++i) {
      if (ps.points[i].x < ps.points[lo].x) lo = i;
      if (ps.points[i].x > ps.points[hi].x) hi = i;
    }
    shapes[lo] = eps / 2.0;
    shapes[hi] = eps / 2.0;
  }
  return shapes;
}

CubatureRule compute_weights(const Kernel& kernel, const std::vector<double>& shapes,
                             const PointSet& ps, int degree, const MomentVector& moments) {
  if (degree < 0) {
    return compute_weights(kernel, shapes, ps, static_cast<const PolyBasis*>(nullptr), moments);
  }
  const PolyBasis basis = MonomialBasis::create(ps.dim(), degree);
  return compute_weights(kernel, shapes, ps, &basis, moments);
}

CubatureRule compute_weights(const Kernel& kernel, const std::vector<double>& shapes,
                             const PointSet& ps, const PolyBasis* basis,
                             const MomentVector& moments) {
  const SaddleSystem sys = assemble(kernel, shapes, ps, basis);
  const Factorization factor(sys);
  const Eigen::VectorXd rhs = rhs_from_moments(moments, sys.n, sys.k);
  const SolveResult sol = factor.solve(rhs);

  CubatureRule rule;
  rule.points = ps;
  rule.weights = sol.x.head(sys.n);
  rule.aux = sol.x.tail(sys.k);
  rule.kernel = kernel;
  rule.shapes = shapes;
  rule.degree = basis ? poly_basis_degree(*basis) : -1;
  rule.domain = ps.domain;
  return rule;
}

CardinalEvaluator::CardinalEvaluator(const Kernel& kernel, std::vector<double> shapes,
                                     PointSet ps, const PolyBasis* basis)
    : kernel_(kernel), shapes_(std::move(shapes)), ps_(std::move(ps)) {
  if (basis) {
    basis_ = *basis;
  }
  const SaddleSystem sys = assemble(kernel_, shapes_, ps_, basis ? &*basis_ : nullptr);
  const Factorization factor(sys);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(sys.size(), sys.n);
  rhs.topRows(sys.n).setIdentity();
  coefficients_ = factor.solve_many(rhs);
}

Eigen::VectorXd CardinalEvaluator::stack(const Point& x) const {
  const Eigen::Index n = static_cast<Eigen::Index>(ps_.size());
  const Eigen::Index k = basis_ ? static_cast<Eigen::Index>(poly_basis_size(*basis_)) : 0;
  Eigen::VectorXd s(n + k);
  const int dim = ps_.dim();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double eps = kernel_.has_shape() ? shapes_[static_cast<std::size_t>(i)] : 1.0;
    s(i) = kernel_eval(kernel_, eps * distance(x, ps_.points[static_cast<std::size_t>(i)], dim));
  }
  if (k > 0) {
    s.tail(k) = eval_poly_basis(*basis_, x);
  }
  return s;
}

Eigen::VectorXd CardinalEvaluator::operator()(const Point& x) const {
  return coefficients_.transpose() * stack(x);
}

Eigen::MatrixXd CardinalEvaluator::evaluate(const std::vector<Point>& xs) const {
  Eigen::MatrixXd stacks(coefficients_.rows(), static_cast<Eigen::Index>(xs.size()));
  for (std::size_t j = 0; j < xs.size(); ++j) {
    stacks.col(static_cast<Eigen::Index>(j)) = stack(xs[j]);
  }
  return coefficients_.transpose() * stacks;
}

double lebesgue_estimate(const Kernel& kernel, const std::vector<double>& shapes,
                         const PointSet& ps, int degree, int grid_per_axis) {
  std::optional<PolyBasis> basis;
  if (degree >= 0) {
    basis = MonomialBasis::create(ps.dim(), degree);
  }
  const CardinalEvaluator cards(kernel, shapes, ps, basis ? &*basis : nullptr);
  const std::vector<Point> grid = lebesgue_grid(ps, grid_per_axis);

  double best = 0.0;
  constexpr std::size_t chunk = 256;
  std::vector<Point> batch;
  for (std::size_t start = 0; start < grid.size(); start += chunk) {
    const std::size_t stop = std::min(grid.size(), start + chunk);
    batch.assign(grid.begin() + static_cast<std::ptrdiff_t>(start),
                 grid.begin() + static_cast<std::ptrdiff_t>(stop));
    const Eigen::MatrixXd vals = cards.evaluate(batch);
    best = std::max(best, vals.cwiseAbs().colwise().sum().maxCoeff());
  }
  return best;
}

StabilityReport stability_report(const CubatureRule& rule, double lebesgue, double cond_a) {
  StabilityReport rep;
  rep.sum_abs_weights = rule.sum_abs_weights();
  rep.cn_one = rule.cn_one();
  rep.i_norm = rule.domain.volume();
  rep.min_weight = rule.min_weight();
  rep.lebesgue_estimate = lebesgue;
  rep.cond_a = cond_a;
  rep.is_stable = rep.min_weight >= -kStabilityTol * rep.sum_abs_weights;
  const double bound = rep.i_norm * lebesgue;
  rep.lebesgue_bound_ok = rep.sum_abs_weights <= bound + 1e-8 * bound;
  rep.lebesgue_bound_advisory = cond_a > 1e12;
  return rep;
}

NonoverlapError::NonoverlapError(Eigen::Index index_, double gap_)
    : std::runtime_error("nonoverlap condition violated at center " + std::to_string(index_) +
                         ": support radius exceeds the separation distance by " +
                         std::to_string(gap_)),
      index(index_),
      gap(gap_) {}

ExplicitCardinal cardinal_explicit_compact(const PointSet& ps, int degree, const Kernel& kernel,
                                           const std::vector<double>& shapes,
                                           const DopBasis& dops, Eigen::Index m) {
  if (!kernel.compact_support() || !kernel.nonnegative()) {
    throw std::invalid_argument(
        "cardinal_explicit_compact: requires a nonnegative compactly supported kernel");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(ps.size());
  if (m < 0 || m >= n) {
    throw std::invalid_argument("cardinal_explicit_compact: cardinal index out of range");
  }
  if (degree >= 0 && poly_basis_degree(PolyBasis{dops}) != degree) {
    throw std::invalid_argument("cardinal_explicit_compact: DOP basis degree mismatch");
  }
  const std::vector<double> h = separation(ps);
  Eigen::Index worst;
  double gap;
  check_nonoverlap(kernel, shapes, h, &worst, &gap);
  if (!nonoverlap_holds(gap, h)) {
    throw NonoverlapError(worst, gap);
  }

  ExplicitCardinal card;
  card.alpha = Eigen::VectorXd::Zero(n);
  card.alpha(m) = 1.0;
  if (degree < 0) {
    card.beta.resize(0);
    return card;  // c_m = phi_m
  }
  const double scale = dops.volume / static_cast<double>(n);
  const Eigen::VectorXd pm = eval_dops(dops, ps.points[static_cast<std::size_t>(m)]);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::VectorXd pi = eval_dops(dops, ps.points[static_cast<std::size_t>(i)]);
    card.alpha(i) -= scale * pm.dot(pi);
  }
  card.beta = scale * pm;
  return card;
}

double eval_rbf_combination(const Kernel& kernel, const std::vector<double>& shapes,
                            const PointSet& ps, const PolyBasis* basis,
                            const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta,
                            const Point& x) {
  double v = 0.0;
  const int dim = ps.dim();
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    const double eps = kernel.has_shape() ? shapes[static_cast<std::size_t>(i)] : 1.0;
    v += alpha(i) *
         kernel_eval(kernel, eps * distance(x, ps.points[static_cast<std::size_t>(i)], dim));
  }
  if (basis && beta.size() > 0) {
    v += beta.dot(eval_poly_basis(*basis, x));
  }
  return v;
}

TheoremCheckReport theorem_check(const PointSet& ps, int degree, const Kernel& kernel,
                                 const std::vector<double>& shapes, const MomentVector& moments) {
  TheoremCheckReport rep;
  rep.kernel_admissible = kernel.compact_support() && kernel.nonnegative();

  const std::vector<double> h = separation(ps);
  if (kernel.has_shape()) {
    check_nonoverlap(kernel, shapes, h, &rep.worst_overlap_index, &rep.worst_overlap_gap);
    rep.nonoverlap_ok = nonoverlap_holds(rep.worst_overlap_gap, h);
  }

  const double m_max = moments.rbf.cwiseAbs().maxCoeff();
  rep.equal_moment_residual =
      (moments.rbf.maxCoeff() - moments.rbf.minCoeff()) / (m_max > 0.0 ? m_max : 1.0);
  rep.equal_moments_ok = rep.equal_moment_residual <= 1e-10;

  const CubatureRule rule = compute_weights(kernel, shapes, ps, degree, moments);
  rep.min_weight = rule.min_weight();
  rep.sum_abs_weights = rule.sum_abs_weights();
  rep.weights_nonnegative = rep.min_weight >= -kStabilityTol * rep.sum_abs_weights;
  return rep;
}

BayonaDecomposition bayona_decompose(const Kernel& kernel, const std::vector<double>& shapes,
                                     const PointSet& ps, int degree, const MomentVector& moments) {
  if (kernel.is_phs() && kernel.order() > degree + 1) {
    throw std::invalid_argument(
        "bayona_decompose: " + kernel_token(kernel) + " has min_poly_degree " +
        std::to_string(kernel.min_poly_degree()) + ", so Phi alone carries no full-rank " +
        "guarantee for degree " + std::to_string(degree));
  }
  const SaddleSystem phi_sys = assemble(kernel, shapes, ps, nullptr);
  const Factorization phi(phi_sys);
  if (moments.rbf.size() != phi_sys.n) {
    throw std::invalid_argument("bayona_decompose: moments do not match the point set");
  }
  BayonaDecomposition dec;
  dec.pure_weights = phi.solve(moments.rbf).x;
  if (degree < 0) {
    dec.correction = Eigen::VectorXd::Zero(phi_sys.n);
    dec.augmented_weights = dec.pure_weights;
    return dec;
  }

  const MonomialBasis basis = MonomialBasis::create(ps.dim(), degree);
  const Eigen::Index k = static_cast<Eigen::Index>(basis.size());
  if (moments.poly.size() != k) {
    throw std::invalid_argument("bayona_decompose: polynomial moments do not match the degree");
  }
  Eigen::MatrixXd p(phi_sys.n, k);
  for (Eigen::Index i = 0; i < phi_sys.n; ++i) {
    p.row(i) = eval_monomials(basis, ps.points[static_cast<std::size_t>(i)]).transpose();
  }
  const Eigen::MatrixXd phi_inv_p = phi.solve_many(p);
  const Eigen::MatrixXd gram = p.transpose() * phi_inv_p;  // P^T Phi^{-1} P
  Eigen::PartialPivLU<Eigen::MatrixXd> gram_lu(gram);
  const Eigen::VectorXd gram_pivots = gram_lu.matrixLU().diagonal().cwiseAbs();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (gram_pivots.minCoeff() <= eps * eps * gram_pivots.maxCoeff()) {
    throw SingularMatrixError(0, gram_pivots.minCoeff());
  }
  const Eigen::VectorXd i_tau = p.transpose() * dec.pure_weights - moments.poly;
  dec.correction = phi_inv_p * gram_lu.solve(i_tau);
  dec.augmented_weights = dec.pure_weights - dec.correction;
  return dec;
}

std::string to_json_string(const CubatureRule& rule, int indent) {
  return detail::rule_to_json(rule).dump(indent);
}

std::string to_json_string(const StabilityReport& report, int indent) {
  return detail::report_to_json(report).dump(indent);
}

}  // namespace rbfcub
