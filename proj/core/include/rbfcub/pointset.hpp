#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace rbfcub {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Point& p, const Point& q, int dim);

/// Axis-aligned integration domain: an interval [a,b] (dim 1) or a
/// rectangle [a,b] x [c,d] (dim 2), with positive volume.
struct Rectangle {
  int dim = 1;
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};

  static Rectangle interval(double a, double b);
  static Rectangle box(double a, double b, double c, double d);  // [a,b] x [c,d]
  static Rectangle unit(int dim);

  double volume() const;
  bool contains(const Point& p) const;
};

enum class PointRecipe { equidistant, halton, random, external };

struct PointSet {
  Rectangle domain;
  std::vector<Point> points;
  PointRecipe recipe = PointRecipe::external;
  std::uint64_t seed = 0;

  int dim() const { return domain.dim; }
  std::size_t size() const { return points.size(); }
};

/// n_per_axis points per axis including both endpoints; the 2-D grid is the
/// tensor product (n_per_axis^2 points, corners included).
PointSet equidistant(const Rectangle& rect, int n_per_axis);

/// First n Halton points (base 2; bases 2,3 in 2-D), affinely mapped onto the
/// rectangle. Indexing starts at 1, skipping the all-zeros point.
PointSet halton(const Rectangle& rect, int n);

/// n i.i.d. uniform points from a seeded mt19937_64 (see rng.hpp for the
/// exact double construction). Duplicate draws are rejected and redrawn.
PointSet random_uniform(const Rectangle& rect, int n, std::uint64_t seed);

PointSet points_from_list(const Rectangle& rect, std::vector<Point> pts);

/// Separation distances h_n = min_{m != n} ||x_n - x_m||; requires N >= 2.
std::vector<double> separation(const PointSet& ps);

/// True iff the N x K Vandermonde block for monomials up to degree d has full
/// column rank (rank-revealing SVD, tolerance N * eps * sigma_max).
bool unisolvency_check(const PointSet& ps, int degree);

/// CSV with header "x" (1-D) or "x,y" (2-D).
void write_points_csv(std::ostream& os, const PointSet& ps);
std::vector<Point> read_points_csv(std::istream& is);

}  // namespace rbfcub
