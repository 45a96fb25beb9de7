#include "rbfcub/quadrature.hpp"

// Node tables and the adaptive driver live in the header so that callers
// instantiate them directly over their integrand types.
