#include "xgratio/characterization.hpp"

#include <algorithm>
#include <cmath>

#include "xgratio/errors.hpp"

namespace xgratio {

namespace {

constexpr double kIdentityThreshold = 1e-9;
constexpr double kReconstructionThreshold = 1e-3;
constexpr double kIntegrandThreshold = 1e-6;
constexpr double kLogDerivativeThreshold = 1e-6;

void require_positive(double z, const char* who) {
  if (!(z > 0.0)) {
    throw DomainError(std::string(who) + ": z must be positive");
  }
}

double scaled_difference(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Composite Simpson on equally spaced samples; a 3/8 panel closes an odd
// number of intervals.
double simpson(const std::vector<double>& y, double h) {
  const std::size_t intervals = y.size() - 1;
  if (intervals == 1) {
    return 0.5 * h * (y[0] + y[1]);
  }
  std::size_t even = intervals % 2 == 0 ? intervals : intervals - 3;
  if (intervals == 3) {
    even = 0;
  }
  double s = 0.0;
  for (std::size_t i = 0; i + 2 <= even; i += 2) {
    s += h / 3.0 * (y[i] + 4.0 * y[i + 1] + y[i + 2]);
  }
  if (even != intervals) {
    const std::size_t i = even;
    s += 3.0 * h / 8.0 * (y[i] + 3.0 * y[i + 1] + 3.0 * y[i + 2] + y[i + 3]);
  }
  return s;
}

template <class Integrand>
ReconstructionReport reconstruct(RatioParams p, const ReconstructionOptions& opts,
                                 const numerics::QuadConfig& cfg, Integrand integrand,
                                 double sign) {
  if (!(opts.z_start > 0.0) || !(opts.z_max > opts.z_start)) {
    throw DomainError("reconstruction: need 0 < z_start < z_max");
  }
  if (opts.grid_n < 10) {
    throw DomainError("reconstruction: grid_n must be at least 10");
  }
  const RatioParams ref = opts.reference.value_or(p);
  const auto n = static_cast<std::size_t>(opts.grid_n);
  const double log_lo = std::log(opts.z_start);
  const double dv = (std::log(opts.z_max) - log_lo) / static_cast<double>(n - 1);

  // The integrands are finite differences of quadratures and carry noise near
  // 1e-9, so the outer rule cannot certify much tighter than 1e-8.
  numerics::QuadConfig outer = cfg;
  outer.abs_tol = std::max(cfg.abs_tol, 1e-8);
  outer.rel_tol = std::max(cfg.rel_tol, 1e-8);

  std::vector<double> z(n);
  std::vector<double> log_shape(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = std::exp(log_lo + dv * static_cast<double>(i));
  }
  z.back() = opts.z_max;
  for (std::size_t i = 1; i < n; ++i) {
    const double piece = numerics::integrate_finite(integrand, z[i - 1], z[i], outer);
    log_shape[i] = log_shape[i - 1] + sign * piece;
  }

  // Mass of the unnormalized curve over the grid, in v = ln z.
  std::vector<double> weighted(n);
  for (std::size_t i = 0; i < n; ++i) {
    weighted[i] = std::exp(log_shape[i]) * z[i];
  }
  const double mass = simpson(weighted, dv);
  const double target = ratio_cdf(ref, opts.z_max) - ratio_cdf(ref, opts.z_start);

  ReconstructionReport report;
  report.normalization = target / mass;
  report.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double rebuilt = report.normalization * std::exp(log_shape[i]);
    const double reference = ratio_pdf(ref, z[i]);
    const double dev = std::abs(rebuilt - reference) / reference;
    report.points.push_back({z[i], rebuilt, reference, dev});
    report.max_relative_deviation = std::max(report.max_relative_deviation, dev);
  }
  return report;
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  }
  out.back() = hi;
  return out;
}

}  // namespace

numerics::QuadConfig characterization_quad_config() {
  numerics::QuadConfig cfg;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-13;
  cfg.max_subdivisions = 400;
  return cfg;
}

double truncated_moment(RatioParams p, MomentOrder k, double z, TruncationSide side,
                        const numerics::QuadConfig& cfg) {
  require_positive(z, "truncated_moment");
  if (side == TruncationSide::right) {
    const double cdf = ratio_cdf(p, z);
    if (!(cdf > 0.0)) {
      throw DomainError("truncated_moment: P(Z <= z) vanishes");
    }
    return incomplete_moment(p, k, z, cfg) / cdf;
  }
  const double sf = ratio_survival(p, z);
  if (!(sf > 0.0)) {
    throw DomainError("truncated_moment: P(Z >= z) vanishes");
  }
  return tail_moment(p, k, z, cfg) / sf;
}

double g_of_z(RatioParams p, MomentOrder k, double z, const numerics::QuadConfig& cfg) {
  require_positive(z, "g_of_z");
  return incomplete_moment(p, k, z, cfg) / ratio_pdf(p, z);
}

double g1_of_z(RatioParams p, MomentOrder k, double z, const numerics::QuadConfig& cfg) {
  require_positive(z, "g1_of_z");
  return (ratio_moment(p, k) - incomplete_moment(p, k, z, cfg)) / ratio_pdf(p, z);
}

double pdf_log_derivative(RatioParams p, double z) {
  if (!(z >= 0.0)) {
    throw DomainError("pdf_log_derivative: z must be non-negative");
  }
  const double a = p.alpha();
  const double b = p.beta();
  // kernel'(z) / kernel(z) in u = 1/(az+b), w = z u:
  //   kernel  = u^2 [1 + 3(a w^2 + b u^2) + 30ab w^2 u^2]
  //   kernel' = u^3 [-2a + 6(-a^2 w^2 + ab w u - 2ab u^2) + 60ab(-2a w^2 u^2 + b w u^3)]
  const double u = 1.0 / (a * z + b);
  const double w = z * u;
  const double u2 = u * u;
  const double w2 = w * w;
  const double numerator = -2.0 * a + 6.0 * (-a * a * w2 + a * b * w * u - 2.0 * a * b * u2) +
                           60.0 * a * b * (-2.0 * a * w2 * u2 + b * w * u2 * u);
  const double denominator = 1.0 + 3.0 * (a * w2 + b * u2) + 30.0 * a * b * w2 * u2;
  return u * numerator / denominator;
}

double verify_pdf_logderivative(RatioParams p, double z) {
  require_positive(z, "verify_pdf_logderivative");
  const double h = 1e-5 * std::min(1.0, z);
  const double numeric = (ratio_log_pdf(p, z + h) - ratio_log_pdf(p, z - h)) / (2.0 * h);
  return pdf_log_derivative(p, z) - numeric;
}

double characterization_step(double z) { return std::max(1e-6, 1e-6 * z); }

double right_truncation_integrand(RatioParams p, MomentOrder k, double z,
                                  const numerics::QuadConfig& cfg) {
  require_positive(z, "right_truncation_integrand");
  const double h = characterization_step(z);
  const double g = g_of_z(p, k, z, cfg);
  const double dg = (g_of_z(p, k, z + h, cfg) - g_of_z(p, k, z - h, cfg)) / (2.0 * h);
  return (std::pow(z, k.value()) - dg) / g;
}

double left_truncation_integrand(RatioParams p, MomentOrder k, double z,
                                 const numerics::QuadConfig& cfg) {
  require_positive(z, "left_truncation_integrand");
  const double h = characterization_step(z);
  const double g1 = g1_of_z(p, k, z, cfg);
  const double dg1 = (g1_of_z(p, k, z + h, cfg) - g1_of_z(p, k, z - h, cfg)) / (2.0 * h);
  return (std::pow(z, k.value()) + dg1) / g1;
}

ReconstructionReport verify_lemma1_reconstruction(RatioParams p, MomentOrder k,
                                                  const ReconstructionOptions& opts,
                                                  const numerics::QuadConfig& cfg) {
  auto integrand = [&](double u) { return right_truncation_integrand(p, k, u, cfg); };
  return reconstruct(p, opts, cfg, integrand, 1.0);
}

ReconstructionReport verify_lemma2_reconstruction(RatioParams p, MomentOrder k,
                                                  const ReconstructionOptions& opts,
                                                  const numerics::QuadConfig& cfg) {
  auto integrand = [&](double u) { return left_truncation_integrand(p, k, u, cfg); };
  return reconstruct(p, opts, cfg, integrand, -1.0);
}

bool CharacterizationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

CharacterizationReport run_characterization_checks(RatioParams p, MomentOrder k,
                                                   const CheckSuiteOptions& opts) {
  const auto cfg = characterization_quad_config();
  const RatioParams ref =
      opts.mismatch_reference ? RatioParams(p.alpha(), p.beta() + 1.0) : p;

  CharacterizationReport report;
  auto record = [](CheckResult& check, double z, double residual) {
    check.points.push_back({z, residual});
    check.max_residual = std::max(check.max_residual, residual);
  };

  const auto identity_grid = geometric_grid(0.05, 50.0, 25);

  CheckResult right{"right_truncated_identity", kIdentityThreshold, 0.0, {}};
  CheckResult left{"left_truncated_identity", kIdentityThreshold, 0.0, {}};
  for (double z : identity_grid) {
    const double lhs_right = truncated_moment(p, k, z, TruncationSide::right, cfg);
    const double rhs_right = g_of_z(ref, k, z, cfg) * ratio_reverse_hazard(ref, z);
    record(right, z, scaled_difference(lhs_right, rhs_right));

    const double lhs_left = truncated_moment(p, k, z, TruncationSide::left, cfg);
    const double rhs_left = g1_of_z(ref, k, z, cfg) * ratio_hazard(ref, z);
    record(left, z, scaled_difference(lhs_left, rhs_left));
  }
  report.checks.push_back(std::move(right));
  report.checks.push_back(std::move(left));

  ReconstructionOptions recon;
  recon.z_max = opts.z_max;
  recon.grid_n = opts.grid_n;
  recon.reference = ref;
  for (int which = 1; which <= 2; ++which) {
    const ReconstructionReport rebuilt = which == 1 ? verify_lemma1_reconstruction(p, k, recon, cfg)
                                                    : verify_lemma2_reconstruction(p, k, recon, cfg);
    CheckResult check{which == 1 ? "right_truncation_reconstruction"
                                 : "left_truncation_reconstruction",
                      kReconstructionThreshold, 0.0, {}};
    for (const auto& pt : rebuilt.points) {
      record(check, pt.z, pt.relative_deviation);
    }
    report.checks.push_back(std::move(check));
  }

  const auto derivative_grid = geometric_grid(0.1, opts.z_max, 40);
  CheckResult left_integrand{"left_integrand_vs_log_derivative", kIntegrandThreshold, 0.0, {}};
  CheckResult log_derivative{"closed_form_log_derivative", kLogDerivativeThreshold, 0.0, {}};
  for (double z : derivative_grid) {
    const double psi = left_truncation_integrand(p, k, z, cfg);
    const double slope = pdf_log_derivative(ref, z);
    record(left_integrand, z, scaled_difference(psi, -slope));

    const double h = 1e-5 * std::min(1.0, z);
    const double numeric = (ratio_log_pdf(p, z + h) - ratio_log_pdf(p, z - h)) / (2.0 * h);
    record(log_derivative, z, std::abs(slope - numeric));
  }
  report.checks.push_back(std::move(left_integrand));
  report.checks.push_back(std::move(log_derivative));
  return report;
}

}  // namespace xgratio
