#pragma once

namespace xgratio::numerics {

// ln Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms) with the
// reflection formula below 1/2. Throws DomainError for x <= 0.
double log_gamma(double x);

// Euler's Beta function B(p, q) = Gamma(p) Gamma(q) / Gamma(p + q).
double beta_fn(double p, double q);

}  // namespace xgratio::numerics
