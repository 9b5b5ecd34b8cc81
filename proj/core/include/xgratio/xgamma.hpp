#pragma once

#include "xgratio/numerics/rng.hpp"

namespace xgratio {

// Parameter of the one-parameter xgamma law, a rate (inverse time units).
class XGammaParams {
 public:
  explicit XGammaParams(double theta);
  double theta() const noexcept { return theta_; }

 private:
  double theta_;
};

// theta^2 / (1 + theta) * (1 + theta t^2 / 2) * exp(-theta t), t >= 0.
double xgamma_pdf(XGammaParams p, double t);
double xgamma_cdf(XGammaParams p, double t);
// (theta + 3) / (theta (theta + 1))
double xgamma_mean(XGammaParams p);

// Uniform variates consumed by one xgamma_sample call, at most.
inline constexpr int kXGammaUniformsPerDraw = 4;

// Exact draw from the two-component mixture: with probability
// theta / (1 + theta) an Exp(theta) variate, otherwise Gamma(3, theta) as a
// sum of three Exp(theta) variates.
double xgamma_sample(XGammaParams p, numerics::Rng& rng);

}  // namespace xgratio
