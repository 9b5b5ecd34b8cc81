#include "xgratio/entropy.hpp"

#include <cmath>
#include <sstream>

#include "xgratio/errors.hpp"

namespace xgratio {

namespace {

void require_convergent(double order) {
  if (!(order > 0.5)) {
    std::ostringstream os;
    os.precision(17);
    os << "entropy order " << order
       << " <= 1/2: the density decays like z^-2, so the power integral diverges";
    throw DivergenceError(os.str());
  }
}

// h(1/s) s^-2 in closed form: with u = s/(a + b s) and w = 1/(a + b s),
// h(1/s) = u^2 [1 + 3(a w^2 + b u^2) + 30ab w^2 u^2].
double reciprocal_log_kernel_core(double a, double b, double s) {
  const double d = a + b * s;
  const double u = s / d;
  const double w = 1.0 / d;
  const double bracket = 1.0 + 3.0 * (a * w * w + b * u * u) + 30.0 * a * b * w * w * u * u;
  return std::log(bracket) - 2.0 * std::log(d);
}

}  // namespace

EntropyOrder::EntropyOrder(double value) : value_(value) {
  if (value == 1.0) {
    throw OrderError("entropy order must differ from 1 (use the Shannon entropy there)");
  }
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("entropy order must be positive and finite");
  }
}

double kernel_h(RatioParams p, double z) { return ratio_kernel(p, z); }

double shannon_entropy(RatioParams p, const numerics::QuadConfig& cfg) {
  const double expected_log_kernel = numerics::integrate_semi_infinite(
      [&](double z) {
        const double f = ratio_pdf(p, z);
        return f > 0.0 ? ratio_log_kernel(p, z) * f : 0.0;
      },
      cfg);
  return -std::log(ratio_normalizing_constant(p)) - expected_log_kernel;
}

double kernel_power_integral(RatioParams p, double order, const numerics::QuadConfig& cfg) {
  require_convergent(order);
  const double head = numerics::integrate_finite(
      [&](double z) { return std::exp(order * ratio_log_kernel(p, z)); }, 0.0, 1.0, cfg);
  // On [1, inf) put z = 1/s, s = v^r with r = 1/(2q - 1). The factor
  // s^(2q-2) ds / dv cancels exactly, leaving a bounded integrand even though
  // h^q decays only like z^(-2q).
  const double r = 1.0 / (2.0 * order - 1.0);
  const double a = p.alpha();
  const double b = p.beta();
  const double tail = numerics::integrate_finite(
      [&](double v) {
        const double s = v > 0.0 ? std::pow(v, r) : 0.0;
        return r * std::exp(order * reciprocal_log_kernel_core(a, b, s));
      },
      0.0, 1.0, cfg);
  return head + tail;
}

double pdf_power_integral(RatioParams p, double order, const numerics::QuadConfig& cfg) {
  return std::pow(ratio_normalizing_constant(p), order) * kernel_power_integral(p, order, cfg);
}

double renyi_entropy(RatioParams p, EntropyOrder gamma, const numerics::QuadConfig& cfg) {
  const double g = gamma.value();
  require_convergent(g);
  const double scale = 1.0 / (1.0 - g);
  return g * scale * std::log(ratio_normalizing_constant(p)) +
         scale * std::log(kernel_power_integral(p, g, cfg));
}

double tsallis_entropy(RatioParams p, EntropyOrder q, const numerics::QuadConfig& cfg) {
  const double order = q.value();
  require_convergent(order);
  const double integral = pdf_power_integral(p, order, cfg);
  const double bracket = 1.0 - integral;
  if (!(bracket > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "logarithmic Tsallis entropy undefined: integral of pdf^q = " << integral
       << " is not below 1";
    throw DomainError(os.str());
  }
  return std::log(bracket) / (1.0 - order);
}

double tsallis_entropy_standard(RatioParams p, EntropyOrder q, const numerics::QuadConfig& cfg) {
  const double order = q.value();
  require_convergent(order);
  return (1.0 - pdf_power_integral(p, order, cfg)) / (order - 1.0);
}

}  // namespace xgratio
