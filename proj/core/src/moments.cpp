#include "rbfcub/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

#include "rbfcub/parallel.hpp"
#include "rbfcub/quadrature.hpp"
#include "rbfcub/special_functions.hpp"

namespace rbfcub {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double int_pow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) {
    r *= x;
  }
  return r;
}

bool has_closed_form(const Kernel& kernel, int dim) {
  switch (kernel.family) {
    case KernelFamily::gaussian:
      return true;
    case KernelFamily::wendland:
      return false;
    case KernelFamily::phs_odd:
      return dim == 1 || kernel.exponent() == 3 || kernel.exponent() == 5 ||
             kernel.exponent() == 7;
    case KernelFamily::phs_even_log:
      return dim == 1 || kernel.exponent() == 2;
  }
  return false;
}

double closed_form_moment(const Kernel& kernel, double eps, const Point& xn,
                          const Rectangle& rect) {
  if (kernel.family == KernelFamily::gaussian) {
    return rect.dim == 1 ? moment_gaussian_1d(eps, xn.x, rect.lo[0], rect.hi[0])
                         : moment_gaussian_2d(eps, xn, rect);
  }
  if (rect.dim == 1) {
    return kernel.family == KernelFamily::phs_odd
               ? moment_phs_odd_1d(kernel.exponent(), xn.x, rect.lo[0], rect.hi[0])
               : moment_phs_even_log_1d(kernel.exponent(), xn.x, rect.lo[0], rect.hi[0]);
  }
  return moment_phs_2d(kernel, xn, rect);
}

}  // namespace

double moment_gaussian_1d(double eps, double xn, double a, double b) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("moment_gaussian_1d: eps must be positive");
  }
  if (!(a < b)) {
    throw std::invalid_argument("moment_gaussian_1d: requires a < b");
  }
  return kSqrtPi / (2.0 * eps) *
         (erf_accurate(eps * (b - xn)) - erf_accurate(eps * (a - xn)));
}

double moment_phs_odd_1d(int exponent, double xn, double a, double b) {
  if (exponent < 1 || exponent % 2 == 0) {
    throw std::invalid_argument("moment_phs_odd_1d: exponent must be odd and positive");
  }
  if (xn < a || xn > b) {
    throw std::invalid_argument("moment_phs_odd_1d: center outside [a,b]");
  }
  const int p = exponent + 1;  // even, so both terms are nonnegative
  return (int_pow(a - xn, p) + int_pow(b - xn, p)) / p;
}

double moment_phs_even_log_1d(int exponent, double xn, double a, double b) {
  if (exponent < 2 || exponent % 2 != 0) {
    throw std::invalid_argument("moment_phs_even_log_1d: exponent must be even and positive");
  }
  if (xn < a || xn > b) {
    throw std::invalid_argument("moment_phs_even_log_1d: center outside [a,b]");
  }
  const int p = exponent + 1;
  const double inv_p = 1.0 / p;
  double m = 0.0;
  if (xn > a) {
    const double t = xn - a;
    m += int_pow(t, p) * (std::log(t) * inv_p - inv_p * inv_p);
  }
  if (xn < b) {
    const double t = b - xn;
    m += int_pow(t, p) * (std::log(t) * inv_p - inv_p * inv_p);
  }
  return m;
}

double moment_gaussian_2d(double eps, const Point& xn, const Rectangle& rect) {
  if (rect.dim != 2) {
    throw std::invalid_argument("moment_gaussian_2d: rectangle must be 2-D");
  }
  return moment_gaussian_1d(eps, xn.x, rect.lo[0], rect.hi[0]) *
         moment_gaussian_1d(eps, xn.y, rect.lo[1], rect.hi[1]);
}

double reference_integral(const Kernel& kernel, double alpha, double beta) {
  if (alpha < 0.0 || beta < 0.0) {
    throw std::invalid_argument("reference_integral: alpha, beta must be nonnegative");
  }
  if (alpha == 0.0 || beta == 0.0) {
    return 0.0;  // degenerate triangle
  }
  const double a2 = alpha * alpha;
  const double b2 = beta * beta;
  const double hyp = std::sqrt(a2 + b2);
  if (kernel.family == KernelFamily::phs_even_log && kernel.exponent() == 2) {
    return alpha / 144.0 *
           (24.0 * a2 * alpha * std::atan(beta / alpha) +
            6.0 * beta * (3.0 * a2 + b2) * std::log(a2 + b2) - 33.0 * a2 * beta -
            7.0 * b2 * beta);
  }
  if (kernel.family == KernelFamily::phs_odd) {
    const double asinh_ba = std::asinh(beta / alpha);
    switch (kernel.exponent()) {
      case 3:
        return alpha / 40.0 *
               (3.0 * a2 * a2 * asinh_ba + beta * (5.0 * a2 + 2.0 * b2) * hyp);
      case 5:
        return alpha / 336.0 *
               (15.0 * a2 * a2 * a2 * asinh_ba +
                beta * (33.0 * a2 * a2 + 26.0 * a2 * b2 + 8.0 * b2 * b2) * hyp);
      case 7:
        return alpha / 3456.0 *
               (105.0 * int_pow(alpha, 8) * asinh_ba +
                beta *
                    (279.0 * int_pow(alpha, 6) + 326.0 * a2 * a2 * b2 +
                     200.0 * a2 * b2 * b2 + 48.0 * int_pow(beta, 6)) *
                    hyp);
      default:
        break;
    }
  }
  throw std::invalid_argument("reference_integral: unsupported kernel " + kernel_token(kernel));
}

double moment_phs_2d(const Kernel& kernel, const Point& xn, const Rectangle& rect) {
  if (rect.dim != 2) {
    throw std::invalid_argument("moment_phs_2d: rectangle must be 2-D");
  }
  if (!rect.contains(xn)) {
    throw std::invalid_argument("moment_phs_2d: center outside the rectangle");
  }
  const double at = rect.lo[0] - xn.x;  // <= 0
  const double bt = rect.hi[0] - xn.x;  // >= 0
  const double ct = rect.lo[1] - xn.y;
  const double dt = rect.hi[1] - xn.y;
  double m = 0.0;
  if (bt * dt != 0.0) {
    m += reference_integral(kernel, bt, dt) + reference_integral(kernel, dt, bt);
  }
  if (at * dt != 0.0) {
    m += reference_integral(kernel, dt, -at) + reference_integral(kernel, -at, dt);
  }
  if (at * ct != 0.0) {
    m += reference_integral(kernel, -at, -ct) + reference_integral(kernel, -ct, -at);
  }
  if (bt * ct != 0.0) {
    m += reference_integral(kernel, -ct, bt) + reference_integral(kernel, bt, -ct);
  }
  return m;
}

double moment_quadrature(const Kernel& kernel, double eps, const Point& xn,
                         const Rectangle& rect, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("moment_quadrature: tol must be positive");
  }
  const double radius = kernel.has_shape() ? support_radius(kernel, eps) :
                        std::numeric_limits<double>::infinity();
  const double scale = kernel.has_shape() ? eps : 1.0;
  double lo0 = rect.lo[0], hi0 = rect.hi[0];
  double lo1 = rect.lo[1], hi1 = rect.hi[1];
  if (std::isfinite(radius)) {
    lo0 = std::max(lo0, xn.x - radius);
    hi0 = std::min(hi0, xn.x + radius);
    lo1 = std::max(lo1, xn.y - radius);
    hi1 = std::min(hi1, xn.y + radius);
    if (lo0 >= hi0 || (rect.dim == 2 && lo1 >= hi1)) {
      return 0.0;
    }
  }
  if (rect.dim == 1) {
    auto f = [&](double x) { return kernel_eval(kernel, scale * std::abs(x - xn.x)); };
    // Split at the center: phi(eps|x - xn|) has a kink there.
    if (xn.x > lo0 && xn.x < hi0) {
      return integrate_1d(f, lo0, xn.x, 0.5 * tol) + integrate_1d(f, xn.x, hi0, 0.5 * tol);
    }
    return integrate_1d(f, lo0, hi0, tol);
  }
  auto f = [&](double x, double y) {
    return kernel_eval(kernel, scale * std::hypot(x - xn.x, y - xn.y));
  };
  std::vector<double> xs{lo0}, ys{lo1};
  if (xn.x > lo0 && xn.x < hi0) {
    xs.push_back(xn.x);
  }
  xs.push_back(hi0);
  if (xn.y > lo1 && xn.y < hi1) {
    ys.push_back(xn.y);
  }
  ys.push_back(hi1);
  const double parts = static_cast<double>((xs.size() - 1) * (ys.size() - 1));
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      m += integrate_2d(f, xs[i], xs[i + 1], ys[j], ys[j + 1], tol / parts);
    }
  }
  return m;
}

Eigen::VectorXd poly_moments(const PolyBasis& basis, const Rectangle& rect) {
  const MonomialBasis* mono = nullptr;
  const DopBasis* dop = std::get_if<DopBasis>(&basis);
  mono = dop ? &dop->mono : &std::get<MonomialBasis>(basis);
  Eigen::VectorXd m(static_cast<Eigen::Index>(mono->size()));
  for (std::size_t i = 0; i < mono->size(); ++i) {
    const auto& e = mono->exponents[i];
    double v = (int_pow(rect.hi[0], e[0] + 1) - int_pow(rect.lo[0], e[0] + 1)) / (e[0] + 1);
    if (rect.dim == 2) {
      v *= (int_pow(rect.hi[1], e[1] + 1) - int_pow(rect.lo[1], e[1] + 1)) / (e[1] + 1);
    }
    m(static_cast<Eigen::Index>(i)) = v;
  }
  return dop ? Eigen::VectorXd(dop->coeffs * m) : m;
}

MomentVector compute_moments(const Kernel& kernel, const std::vector<double>& shapes,
                             const PointSet& ps, const PolyBasis* basis, double quad_tol) {
  const std::size_t n = ps.size();
  if (kernel.has_shape() && shapes.size() != n) {
    throw std::invalid_argument("compute_moments: one shape parameter per center required");
  }
  if (!kernel.has_shape() && !shapes.empty()) {
    throw std::invalid_argument("compute_moments: PHS kernels take no shape parameters");
  }
  MomentVector mv;
  mv.rbf.resize(static_cast<Eigen::Index>(n));
  mv.tags.resize(n);
  mv.quadrature_tol = quad_tol;

  const bool closed = has_closed_form(kernel, ps.dim());
  if (closed) {
    for (std::size_t i = 0; i < n; ++i) {
      const double eps = kernel.has_shape() ? shapes[i] : 0.0;
      mv.rbf(static_cast<Eigen::Index>(i)) = closed_form_moment(kernel, eps, ps.points[i], ps.domain);
      mv.tags[i] = MomentMethod::closed_form;
    }
  } else {
    // Entries sharing (eps, support box relative to the center) are equal;
    // on tensor grids this collapses the interior to a single quadrature.
    using Key = std::array<double, 5>;
    std::map<Key, double> cache;
    std::vector<Key> keys(n);
    const Rectangle& r = ps.domain;
    for (std::size_t i = 0; i < n; ++i) {
      const double eps = kernel.has_shape() ? shapes[i] : 0.0;
      const double radius = kernel.has_shape() ? support_radius(kernel, eps)
                                               : std::numeric_limits<double>::infinity();
      const Point& p = ps.points[i];
      Key key{std::max(r.lo[0] - p.x, -radius), std::min(r.hi[0] - p.x, radius),
              r.dim == 2 ? std::max(r.lo[1] - p.y, -radius) : 0.0,
              r.dim == 2 ? std::min(r.hi[1] - p.y, radius) : 0.0, eps};
      keys[i] = key;
      cache.emplace(key, 0.0);
    }
    std::vector<std::pair<const Key, double>*> unique;
    unique.reserve(cache.size());
    for (auto& kv : cache) {
      unique.push_back(&kv);
    }
    parallel_for(unique.size(), [&](std::size_t u) {
      const Key& key = unique[u]->first;
      Rectangle box;
      const double eps = key[4];
      // Reconstruct a center-relative box; the moment only depends on it.
      if (r.dim == 1) {
        box = Rectangle::interval(key[0], key[1]);
      } else {
        box = Rectangle::box(key[0], key[1], key[2], key[3]);
      }
      unique[u]->second = moment_quadrature(kernel, eps, Point{0.0, 0.0}, box, quad_tol);
    });
    for (std::size_t i = 0; i < n; ++i) {
      mv.rbf(static_cast<Eigen::Index>(i)) = cache[keys[i]];
      mv.tags[i] = MomentMethod::quadrature;
    }
  }

  if (basis) {
    mv.poly = poly_moments(*basis, ps.domain);
  } else {
    mv.poly.resize(0);
  }
  return mv;
}

void write_moments_csv(std::ostream& os, const MomentVector& mv) {
  os << "index,value,method\n";
  char buf[32];
  const auto row = [&](Eigen::Index i, double v, const char* tag) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << i << ',' << buf << ',' << tag << "\n";
  };
  for (Eigen::Index i = 0; i < mv.rbf.size(); ++i) {
    row(i, mv.rbf(i),
        mv.tags[static_cast<std::size_t>(i)] == MomentMethod::closed_form ? "closed_form"
                                                                          : "quadrature");
  }
  for (Eigen::Index i = 0; i < mv.poly.size(); ++i) {
    row(mv.rbf.size() + i, mv.poly(i), "closed_form");
  }
}

}  // namespace rbfcub
