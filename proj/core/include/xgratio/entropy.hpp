#pragma once

#include "xgratio/numerics/quadrature.hpp"
#include "xgratio/ratio.hpp"

namespace xgratio {

// Order of a Renyi or Tsallis entropy: positive and different from 1.
// Order 1 throws OrderError, non-positive orders DomainError.
class EntropyOrder {
 public:
  explicit EntropyOrder(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

// The shape part of the density, pdf = K * kernel_h with
// K = alpha^2 beta^2 / ((1+alpha)(1+beta)).
double kernel_h(RatioParams p, double z);

// Shannon entropy split as ln(1/K) - E[ln kernel_h(Z)].
double shannon_entropy(RatioParams p, const numerics::QuadConfig& cfg = {});

// Integral of kernel_h^order over (0, inf). The kernel decays like z^-2, so
// the integral only exists for order > 1/2; smaller orders throw
// DivergenceError before any quadrature runs.
double kernel_power_integral(RatioParams p, double order, const numerics::QuadConfig& cfg = {});

// Integral of pdf^order, as K^order * kernel_power_integral.
double pdf_power_integral(RatioParams p, double order, const numerics::QuadConfig& cfg = {});

// gamma/(1-gamma) ln K + 1/(1-gamma) ln(integral of kernel_h^gamma)
double renyi_entropy(RatioParams p, EntropyOrder gamma, const numerics::QuadConfig& cfg = {});

// Logarithmic q-entropy 1/(1-q) ln(1 - integral of pdf^q). Requires the
// bracket to be positive; otherwise throws DomainError quoting the integral.
double tsallis_entropy(RatioParams p, EntropyOrder q, const numerics::QuadConfig& cfg = {});

// Conventional Tsallis entropy (1 - integral of pdf^q) / (q - 1), without the
// logarithm.
double tsallis_entropy_standard(RatioParams p, EntropyOrder q,
                                const numerics::QuadConfig& cfg = {});

}  // namespace xgratio
