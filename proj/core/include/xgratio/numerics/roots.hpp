#pragma once

#include "xgratio/numerics/function_ref.hpp"

namespace xgratio::numerics {

struct RootOptions {
  int max_iterations = 200;
};

// Brent's bracketed root finder (bisection safeguarded by secant and inverse
// quadratic steps). Requires f(lo) * f(hi) <= 0, otherwise BracketError.
// Returns once the bracket is narrower than tol (plus a few ulps of |x|) or
// f hits zero exactly.
double find_root(FunctionRef<double(double)> f, double lo, double hi, double tol,
                 const RootOptions& opts = {});

}  // namespace xgratio::numerics
