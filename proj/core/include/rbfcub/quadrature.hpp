#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rbfcub {

/// Raised when the adaptive subdivision budget is exhausted before the
/// requested absolute tolerance is met; best_estimate carries the value
/// accumulated so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(double best, double err)
      : std::runtime_error("adaptive quadrature did not converge"),
        best_estimate(best),
        error_estimate(err) {}
  double best_estimate;
  double error_estimate;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1,1] (QUADPACK dqk15).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
std::pair<double, double> gauss_kronrod_15(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kWgk[i] * fsum;
    if (i % 2 == 1) {
      gauss += kWg[i / 2] * fsum;
    }
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

struct Segment {
  double a, b, value, error;
};

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a,b] to absolute
/// tolerance tol: the segment with the largest error estimate is bisected
/// until the total estimate drops below tol.
template <class F>
double integrate_1d(F&& f, double a, double b, double tol, std::size_t max_segments = 4000) {
  if (a == b) {
    return 0.0;
  }
  auto [v0, e0] = detail::gauss_kronrod_15(f, a, b);
  std::vector<detail::Segment> segs{{a, b, v0, e0}};
  double total_err = e0;
  while (total_err > tol) {
    if (segs.size() >= max_segments) {
      double total = 0.0;
      for (const auto& s : segs) total += s.value;
      throw QuadratureError(total, total_err);
    }
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i) {
      if (segs[i].error > segs[worst].error) worst = i;
    }
    const detail::Segment s = segs[worst];
    const double mid = 0.5 * (s.a + s.b);
    auto [vl, el] = detail::gauss_kronrod_15(f, s.a, mid);
    auto [vr, er] = detail::gauss_kronrod_15(f, mid, s.b);
    total_err += el + er - s.error;
    segs[worst] = {s.a, mid, vl, el};
    segs.push_back({mid, s.b, vr, er});
  }
  double total = 0.0;
  for (const auto& s : segs) total += s.value;
  return total;
}

/// Iterated 2-D integration over [ax,bx] x [ay,by]: the inner integral runs
/// at a tolerance small enough that its noise cannot stall the outer one.
template <class F>
double integrate_2d(F&& f, double ax, double bx, double ay, double by, double tol,
                    std::size_t max_segments = 4000) {
  const double inner_tol = 0.25 * tol / std::max(bx - ax, 1e-30);
  auto outer = [&](double x) {
    return integrate_1d([&](double y) { return f(x, y); }, ay, by, inner_tol, max_segments);
  };
  return integrate_1d(outer, ax, bx, 0.5 * tol, max_segments);
}

}  // namespace rbfcub
