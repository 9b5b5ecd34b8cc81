#include "xgratio/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

#include "xgratio/errors.hpp"
#include "xgratio/numerics/roots.hpp"
#include "xgratio/numerics/special.hpp"
#include "xgratio/xgamma.hpp"

namespace xgratio {

namespace {

void check_support(double z, const char* who) {
  if (!(z >= 0.0)) {
    throw DomainError(std::string(who) + ": z must be non-negative");
  }
}

// Everything below is written in u = 1/(az+b) and w = z u = z/(az+b), both
// bounded, so no power of z is ever formed.
struct Scaled {
  double u;
  double w;
};

Scaled scale(RatioParams p, double z) {
  if (std::isinf(z)) {
    return {0.0, 1.0 / p.alpha()};
  }
  const double u = 1.0 / (p.alpha() * z + p.beta());
  return {u, z * u};
}

// Kernel with the leading u^2 factored out.
double kernel_bracket(RatioParams p, Scaled s) {
  const double a = p.alpha();
  const double b = p.beta();
  const double w2 = s.w * s.w;
  const double u2 = s.u * s.u;
  return 1.0 + 3.0 * (a * w2 + b * u2) + 30.0 * a * b * w2 * u2;
}

// P(X / Y > z) with the leading factor beta^2/(1+beta) * u pulled out.
double survival_bracket(double a, double b, Scaled s) {
  const double w = s.w;
  const double u2 = s.u * s.u;
  return 1.0 + (a * w + a * a * w * w) / (1.0 + a) + b * u2 +
         (3.0 * a * b * w * u2 + 6.0 * a * a * b * w * w * u2) / (1.0 + a);
}

double survival_closed_form(double a, double b, double z) {
  if (std::isinf(z)) {
    return 0.0;
  }
  const double u = 1.0 / (a * z + b);
  const Scaled s{u, z * u};
  return b * b / (1.0 + b) * u * survival_bracket(a, b, s);
}

}  // namespace

RatioParams::RatioParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("ratio parameters alpha and beta must be positive and finite");
  }
}

MomentOrder::MomentOrder(double k) : k_(k) {
  if (!(k > -1.0 && k < 1.0)) {
    throw MomentExistenceError(k);
  }
}

double ratio_normalizing_constant(RatioParams p) {
  const double a = p.alpha();
  const double b = p.beta();
  return (a * a / (1.0 + a)) * (b * b / (1.0 + b));
}

double ratio_kernel(RatioParams p, double z) {
  check_support(z, "ratio_kernel");
  const Scaled s = scale(p, z);
  return s.u * s.u * kernel_bracket(p, s);
}

double ratio_log_kernel(RatioParams p, double z) {
  check_support(z, "ratio_log_kernel");
  if (std::isinf(z)) {
    return -z;
  }
  const Scaled s = scale(p, z);
  return 2.0 * std::log(s.u) + std::log(kernel_bracket(p, s));
}

double ratio_pdf(RatioParams p, double z) {
  check_support(z, "ratio_pdf");
  return ratio_normalizing_constant(p) * ratio_kernel(p, z);
}

double ratio_log_pdf(RatioParams p, double z) {
  check_support(z, "ratio_log_pdf");
  return std::log(ratio_normalizing_constant(p)) + ratio_log_kernel(p, z);
}

double ratio_survival(RatioParams p, double z) {
  check_support(z, "ratio_survival");
  if (z == 0.0) {
    return 1.0;
  }
  return survival_closed_form(p.alpha(), p.beta(), z);
}

double ratio_cdf(RatioParams p, double z) {
  check_support(z, "ratio_cdf");
  if (z == 0.0) {
    return 0.0;
  }
  if (std::isinf(z)) {
    return 1.0;
  }
  // P(X/Y <= z) = P(Y/X >= 1/z): the survival formula with the roles of
  // alpha and beta exchanged, evaluated at 1/z. Free of the 1 - S
  // cancellation near zero.
  return survival_closed_form(p.beta(), p.alpha(), 1.0 / z);
}

double ratio_hazard(RatioParams p, double z) {
  check_support(z, "ratio_hazard");
  const double sf = ratio_survival(p, z);
  if (!(sf > 0.0)) {
    throw DomainError("ratio_hazard: survival function underflows at z");
  }
  return ratio_pdf(p, z) / sf;
}

double ratio_reverse_hazard(RatioParams p, double z) {
  if (!(z > 0.0)) {
    throw DomainError("ratio_reverse_hazard: z must be positive (the cdf vanishes at 0)");
  }
  const double cdf = ratio_cdf(p, z);
  if (!(cdf > 0.0)) {
    throw DomainError("ratio_reverse_hazard: cdf underflows at z");
  }
  return ratio_pdf(p, z) / cdf;
}

double ratio_quantile(RatioParams p, double prob) {
  if (!(prob > 0.0 && prob < 1.0)) {
    throw DomainError("ratio_quantile: probability must lie strictly inside (0, 1)");
  }
  const double a = p.alpha();
  const double b = p.beta();
  double lo = 1.0 / (1.0 + std::max(a, b));
  double hi = 1.0 + 1.0 / std::min(a, b);
  for (int i = 0; i < 2100 && lo > 0.0 && ratio_cdf(p, lo) > prob; ++i) {
    lo *= 0.5;
  }
  for (int i = 0; i < 2100 && std::isfinite(hi) && ratio_cdf(p, hi) < prob; ++i) {
    hi *= 2.0;
  }
  // Work on whichever tail keeps the target away from 1.
  const double target_tail = 1.0 - prob;
  auto residual = [&](double z) {
    return prob <= 0.5 ? ratio_cdf(p, z) - prob : target_tail - ratio_survival(p, z);
  };
  numerics::RootOptions opts;
  opts.max_iterations = 500;
  return numerics::find_root(residual, lo, hi, 1e-300, opts);
}

namespace {

double moment_terms(RatioParams p, double k, double first_term_factor) {
  using numerics::beta_fn;
  const double a = p.alpha();
  const double b = p.beta();
  const double bracket = first_term_factor * beta_fn(k + 1.0, 1.0 - k) +
                         3.0 * b * beta_fn(k + 3.0, 1.0 - k) +
                         3.0 * a * beta_fn(k + 1.0, 3.0 - k) + 30.0 * beta_fn(k + 3.0, 3.0 - k);
  return std::pow(b / a, k) / ((1.0 + a) * (1.0 + b)) * bracket;
}

}  // namespace

double ratio_moment(RatioParams p, MomentOrder k) {
  if (k.value() == 0.0) {
    return 1.0;
  }
  return moment_terms(p, k.value(), p.alpha() * p.beta());
}

double ratio_moment_without_first_term_factor(RatioParams p, MomentOrder k) {
  return moment_terms(p, k.value(), 1.0);
}

double incomplete_moment(RatioParams p, MomentOrder k, double z, const numerics::QuadConfig& cfg) {
  check_support(z, "incomplete_moment");
  if (z == 0.0) {
    return 0.0;
  }
  if (std::isinf(z)) {
    return ratio_moment(p, k);
  }
  const double order = k.value();
  const double exponent = 1.0 / (1.0 + order);

  // On [0, min(z,1)] substitute u = s^(1/(1+k)); u^k du = ds / (1+k), which
  // removes the u^k singularity at the origin exactly.
  const double near = std::min(z, 1.0);
  auto near_integrand = [&](double s) { return ratio_pdf(p, std::pow(s, exponent)); };
  double total = numerics::integrate_finite(near_integrand, 0.0, std::pow(near, 1.0 + order), cfg) /
                 (1.0 + order);

  if (z > 1.0) {
    // On [1, z] substitute u = 1/w: u^k f(u) du = w^-k f_swap(w) dw, with
    // f_swap the density of 1/Z, over the bounded range [1/z, 1].
    const RatioParams inv = p.swapped();
    auto far_integrand = [&](double w) { return std::pow(w, -order) * ratio_pdf(inv, w); };
    total += numerics::integrate_finite(far_integrand, 1.0 / z, 1.0, cfg);
  }
  return total;
}

double tail_moment(RatioParams p, MomentOrder k, double z, const numerics::QuadConfig& cfg) {
  check_support(z, "tail_moment");
  if (z == 0.0) {
    return ratio_moment(p, k);
  }
  // Integral of u^k f(u) over [z, inf) is the incomplete moment of 1/Z of
  // order -k up to 1/z.
  return incomplete_moment(p.swapped(), MomentOrder(-k.value()), 1.0 / z, cfg);
}

SampleBatch ratio_sample(RatioParams p, std::size_t n, numerics::Rng& rng, unsigned threads) {
  if (n == 0) {
    throw DomainError("ratio_sample: n must be at least 1");
  }
  const XGammaParams px(p.alpha());
  const XGammaParams py(p.beta());
  const numerics::Rng x_stream = rng.split(0);
  const numerics::Rng y_stream = rng.split(1);
  const std::uint64_t base = rng.counter();
  constexpr std::uint64_t block = kXGammaUniformsPerDraw;

  SampleBatch batch;
  batch.seed = rng.seed();
  batch.values.resize(n);

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t offset = (base + i) * block;
      numerics::Rng rx = x_stream.at(offset);
      numerics::Rng ry = y_stream.at(offset);
      batch.values[i] = xgamma_sample(px, rx) / xgamma_sample(py, ry);
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, n / 1024));
  if (workers <= 1) {
    fill(0, n);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      if (begin < end) {
        pool.emplace_back(fill, begin, end);
      }
    }
  }
  rng.advance(n);
  return batch;
}

}  // namespace xgratio
