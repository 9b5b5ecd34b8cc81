#include "xgratio/xgamma.hpp"

#include <cmath>

#include "xgratio/errors.hpp"

namespace xgratio {

namespace {

void check_support(double t, const char* who) {
  if (!(t >= 0.0)) {
    throw DomainError(std::string(who) + ": argument must be non-negative");
  }
}

}  // namespace

XGammaParams::XGammaParams(double theta) : theta_(theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw DomainError("xgamma: theta must be positive and finite");
  }
}

double xgamma_pdf(XGammaParams p, double t) {
  check_support(t, "xgamma_pdf");
  const double th = p.theta();
  return th * th / (1.0 + th) * (1.0 + 0.5 * th * t * t) * std::exp(-th * t);
}

double xgamma_cdf(XGammaParams p, double t) {
  check_support(t, "xgamma_cdf");
  if (std::isinf(t)) {
    return 1.0;
  }
  const double th = p.theta();
  const double tt = th * t;
  // The bracket is >= 1 + theta, so the survival term never cancels.
  const double survival = (1.0 + th + tt + 0.5 * tt * tt) / (1.0 + th) * std::exp(-tt);
  return 1.0 - survival;
}

double xgamma_mean(XGammaParams p) {
  const double th = p.theta();
  return (th + 3.0) / (th * (th + 1.0));
}

double xgamma_sample(XGammaParams p, numerics::Rng& rng) {
  const double th = p.theta();
  const double branch = rng.uniform();
  if (branch < th / (1.0 + th)) {
    return rng.exponential(th);
  }
  return rng.exponential(th) + rng.exponential(th) + rng.exponential(th);
}

}  // namespace xgratio
