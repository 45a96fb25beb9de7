#pragma once

#include <string>
#include <string_view>

namespace rbfcub {

enum class KernelFamily { gaussian, wendland, phs_odd, phs_even_log };

/// A radial kernel phi: [0,inf) -> R, evaluated on pre-scaled radii.
/// Shape parameters never enter here; assembly and moment routines apply
/// them as phi(eps_n * ||x - x_n||), which keeps kernels stateless.
///
/// Families and their conditional positive definiteness order:
///   gaussian          exp(-r^2)         order 0
///   wendland(D,k)     phi_{D,k}(r)      order 0, supp = [0,1]
///   phs_odd(k)        r^(2k-1)          order k
///   phs_even_log(k)   r^(2k) log r      order k+1
///
/// Wendland closed forms, normalized so that phi(0) = 1. D in {2,3} uses
/// the phi_{3,k} construction (the standard tables define one function for
/// both of those space dimensions):
///   phi_{1,0} = (1-r)+            phi_{3,0} = (1-r)+^2
///   phi_{1,1} = (1-r)+^3 (3r+1)   phi_{3,1} = (1-r)+^4 (4r+1)
///   phi_{1,2} = (1-r)+^5 (8r^2+5r+1)
///   phi_{3,2} = (1-r)+^6 (35r^2+18r+3) / 3
struct Kernel {
  KernelFamily family = KernelFamily::gaussian;
  int d = 0;  // Wendland space-dimension parameter, in {1,2,3}
  int k = 0;  // Wendland smoothness in {0,1,2}; PHS index k >= 1

  static Kernel gaussian();
  static Kernel wendland(int d, int k);
  static Kernel phs_odd(int k);       // phi(r) = r^(2k-1)
  static Kernel phs_even_log(int k);  // phi(r) = r^(2k) log r

  bool is_phs() const {
    return family == KernelFamily::phs_odd || family == KernelFamily::phs_even_log;
  }
  /// PHS exponent: 2k-1 (odd) or 2k (even, log-weighted).
  int exponent() const;
  /// Conditional positive definiteness order.
  int order() const;
  /// Smallest polynomial degree guaranteeing a solvable saddle system
  /// (order - 1; -1 means no polynomial block is required).
  int min_poly_degree() const { return order() - 1; }
  /// Gaussian and Wendland kernels carry per-center shape parameters;
  /// PHS kernels carry none.
  bool has_shape() const { return !is_phs(); }
  bool compact_support() const { return family == KernelFamily::wendland; }
  /// Nonnegativity of phi on [0,inf) (restriction on kernels admissible
  /// for the compact-support stability results).
  bool nonnegative() const { return !(family == KernelFamily::phs_even_log); }
};

/// Evaluates phi(r) for r >= 0; throws std::domain_error for negative r.
/// phs_even_log returns exactly 0 at r = 0 (guarded limit of r^(2k) log r,
/// equivalently r^(2k-1) log(r^r)).
double kernel_eval(const Kernel& kernel, double r);

/// Radius of supp phi(eps * ||. - x_n||): 1/eps for Wendland, +inf for
/// globally supported kernels. eps must be positive for shaped kernels.
double support_radius(const Kernel& kernel, double eps);

/// Text tokens: "gauss", "wendland:D:k", "phs:E" with odd exponent E,
/// "tps:E" with even exponent E (log-weighted; bare "tps" means tps:2).
/// Parsing is case-insensitive; unknown tokens throw std::invalid_argument.
Kernel parse_kernel(std::string_view token);
std::string kernel_token(const Kernel& kernel);

}  // namespace rbfcub
