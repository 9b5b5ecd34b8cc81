#pragma once

#include <cstddef>

#include "xgratio/numerics/function_ref.hpp"

namespace xgratio::numerics {

struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 200;

  // Throws DomainError when a field breaks its invariant.
  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
  int subdivisions = 0;
};

using Integrand = FunctionRef<double(double)>;

/// Adaptive 21-point Gauss-Kronrod quadrature over [a, b] with bisection of
/// the worst panel and Wynn epsilon extrapolation, so integrable endpoint
/// singularities converge. Throws ConvergenceError (carrying the best
/// estimate) when the tolerance is not met within cfg.max_subdivisions.
QuadResult integrate_finite_detailed(Integrand f, double a, double b, const QuadConfig& cfg = {});
double integrate_finite(Integrand f, double a, double b, const QuadConfig& cfg = {});

/// Integral over (0, inf) through z = t / (1 - t) on [0, 1).
QuadResult integrate_semi_infinite_detailed(Integrand f, const QuadConfig& cfg = {});
double integrate_semi_infinite(Integrand f, const QuadConfig& cfg = {});

/// Integral over (a, inf) through z = a + t / (1 - t).
double integrate_tail(Integrand f, double a, const QuadConfig& cfg = {});

}  // namespace xgratio::numerics
