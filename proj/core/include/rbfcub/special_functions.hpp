#pragma once

namespace rbfcub {

/// Error function via Cody's rational Chebyshev approximations (the SPECFUN
/// coefficient sets): |x| <= 0.46875 uses a 4/4 rational in x^2, the middle
/// range computes erfc(x) = exp(-x^2) R(x) with a 7/7 rational, and |x| > 4
/// uses the asymptotic rational in 1/x^2. Absolute error is below 1e-15
/// everywhere (about 2 ulp relative away from the tails).
double erf_accurate(double x);

double erfc_accurate(double x);

}  // namespace rbfcub
