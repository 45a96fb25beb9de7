#include "rbfcub/pointset.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rbfcub/polybasis.hpp"
#include "rbfcub/rng.hpp"

namespace rbfcub {

namespace {

void check_distinct(const std::vector<Point>& pts) {
  std::set<std::pair<double, double>> seen;
  for (const auto& p : pts) {
    if (!seen.insert({p.x, p.y}).second) {
      throw std::invalid_argument("point set contains duplicate points");
    }
  }
}

double radical_inverse(int index, int base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

void write_double(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

}  // namespace

double distance(const Point& p, const Point& q, int dim) {
  const double dx = p.x - q.x;
  if (dim == 1) {
    return std::abs(dx);
  }
  const double dy = p.y - q.y;
  return std::hypot(dx, dy);
}

Rectangle Rectangle::interval(double a, double b) {
  if (!(a < b)) {
    throw std::invalid_argument("interval: requires a < b");
  }
  Rectangle r;
  r.dim = 1;
  r.lo = {a, 0.0};
  r.hi = {b, 1.0};
  return r;
}

Rectangle Rectangle::box(double a, double b, double c, double d) {
  if (!(a < b) || !(c < d)) {
    throw std::invalid_argument("box: requires a < b and c < d");
  }
  Rectangle r;
  r.dim = 2;
  r.lo = {a, c};
  r.hi = {b, d};
  return r;
}

Rectangle Rectangle::unit(int dim) {
  return dim == 1 ? interval(0.0, 1.0) : box(0.0, 1.0, 0.0, 1.0);
}

double Rectangle::volume() const {
  double v = hi[0] - lo[0];
  if (dim == 2) {
    v *= hi[1] - lo[1];
  }
  return v;
}

bool Rectangle::contains(const Point& p) const {
  if (p.x < lo[0] || p.x > hi[0]) {
    return false;
  }
  return dim == 1 || (p.y >= lo[1] && p.y <= hi[1]);
}

PointSet equidistant(const Rectangle& rect, int n_per_axis) {
  if (n_per_axis < 2) {
    throw std::invalid_argument("equidistant: n_per_axis must be >= 2");
  }
  std::vector<double> axis[2];
  for (int d = 0; d < rect.dim; ++d) {
    axis[d].resize(n_per_axis);
    const double step = (rect.hi[d] - rect.lo[d]) / (n_per_axis - 1);
    for (int i = 0; i < n_per_axis; ++i) {
      axis[d][i] = (i == n_per_axis - 1) ? rect.hi[d] : rect.lo[d] + i * step;
    }
  }
  PointSet ps;
  ps.domain = rect;
  ps.recipe = PointRecipe::equidistant;
  if (rect.dim == 1) {
    for (double x : axis[0]) {
      ps.points.push_back({x, 0.0});
    }
  } else {
    for (double x : axis[0]) {
      for (double y : axis[1]) {
        ps.points.push_back({x, y});
      }
    }
  }
  return ps;
}

PointSet halton(const Rectangle& rect, int n) {
  if (n < 1) {
    throw std::invalid_argument("halton: n must be >= 1");
  }
  PointSet ps;
  ps.domain = rect;
  ps.recipe = PointRecipe::halton;
  ps.points.reserve(n);
  for (int i = 1; i <= n; ++i) {
    Point p;
    p.x = rect.lo[0] + (rect.hi[0] - rect.lo[0]) * radical_inverse(i, 2);
    if (rect.dim == 2) {
      p.y = rect.lo[1] + (rect.hi[1] - rect.lo[1]) * radical_inverse(i, 3);
    }
    ps.points.push_back(p);
  }
  return ps;
}

PointSet random_uniform(const Rectangle& rect, int n, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("random_uniform: n must be >= 1");
  }
  std::mt19937_64 rng(seed);
  PointSet ps;
  ps.domain = rect;
  ps.recipe = PointRecipe::random;
  ps.seed = seed;
  std::set<std::pair<double, double>> seen;
  while (static_cast<int>(ps.points.size()) < n) {
    Point p;
    p.x = uniform_in(rng, rect.lo[0], rect.hi[0]);
    p.y = rect.dim == 2 ? uniform_in(rng, rect.lo[1], rect.hi[1]) : 0.0;
    if (seen.insert({p.x, p.y}).second) {
      ps.points.push_back(p);
    }
  }
  return ps;
}

PointSet points_from_list(const Rectangle& rect, std::vector<Point> pts) {
  if (pts.empty()) {
    throw std::invalid_argument("points_from_list: empty point list");
  }
  check_distinct(pts);
  for (const auto& p : pts) {
    if (!rect.contains(p)) {
      throw std::invalid_argument("points_from_list: point outside the domain");
    }
  }
  PointSet ps;
  ps.domain = rect;
  ps.recipe = PointRecipe::external;
  ps.points = std::move(pts);
  return ps;
}

std::vector<double> separation(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n < 2) {
    throw std::invalid_argument("separation: at least two points required");
  }
  std::vector<double> h(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = distance(ps.points[i], ps.points[j], ps.dim());
      if (d < h[i]) h[i] = d;
      if (d < h[j]) h[j] = d;
    }
  }
  for (double v : h) {
    if (!(v > 0.0)) {
      throw std::invalid_argument("separation: duplicate points");
    }
  }
  return h;
}

bool unisolvency_check(const PointSet& ps, int degree) {
  if (degree < 0) {
    throw std::invalid_argument("unisolvency_check: degree must be >= 0");
  }
  const auto basis = MonomialBasis::create(ps.dim(), degree);
  const Eigen::Index n = static_cast<Eigen::Index>(ps.size());
  const Eigen::Index k = static_cast<Eigen::Index>(basis.size());
  if (n < k) {
    return false;
  }
  Eigen::MatrixXd vand(n, k);
  for (Eigen::Index i = 0; i < n; ++i) {
    vand.row(i) = eval_monomials(basis, ps.points[static_cast<std::size_t>(i)]).transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(vand);
  const auto& sv = svd.singularValues();
  const double tol = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * sv(0);
  return sv(sv.size() - 1) > tol;
}

void write_points_csv(std::ostream& os, const PointSet& ps) {
  os << (ps.dim() == 1 ? "x" : "x,y") << "\n";
  for (const auto& p : ps.points) {
    write_double(os, p.x);
    if (ps.dim() == 2) {
      os << ',';
      write_double(os, p.y);
    }
    os << "\n";
  }
}

std::vector<Point> read_points_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw std::invalid_argument("points csv: empty file");
  }
  int dim = 0;
  if (line == "x" || line == "x\r") {
    dim = 1;
  } else if (line == "x,y" || line == "x,y\r") {
    dim = 2;
  } else {
    throw std::invalid_argument("points csv: expected header 'x' or 'x,y'");
  }
  std::vector<Point> pts;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") {
      continue;
    }
    std::istringstream row(line);
    Point p;
    char sep = 0;
    if (!(row >> p.x)) {
      throw std::invalid_argument("points csv: bad row " + std::to_string(lineno));
    }
    if (dim == 2 && (!(row >> sep >> p.y) || sep != ',')) {
      throw std::invalid_argument("points csv: bad row " + std::to_string(lineno));
    }
    pts.push_back(p);
  }
  return pts;
}

}  // namespace rbfcub
