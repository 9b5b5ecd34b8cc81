#pragma once

#include <span>
#include <vector>

#include "xgratio/numerics/function_ref.hpp"

namespace xgratio::numerics {

struct NelderMeadOptions {
  int max_iterations = 5000;
  // Stop when the spread of simplex values and the simplex diameter both
  // fall below these.
  double f_tol = 1e-12;
  double x_tol = 1e-9;
  // Edge length of the initial simplex (per coordinate).
  double initial_step = 0.25;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

using Objective = FunctionRef<double(std::span<const double>)>;

// Downhill simplex with the standard coefficients (reflection 1, expansion 2,
// contraction 1/2, shrink 1/2). Deterministic for a given (f, x0, opts).
// Non-finite objective values are treated as +inf, so the simplex backs
// away from them. Exhausting max_iterations returns the best vertex with
// converged = false.
NelderMeadResult minimize_nelder_mead(Objective f, std::span<const double> x0,
                                      const NelderMeadOptions& opts = {});

}  // namespace xgratio::numerics
