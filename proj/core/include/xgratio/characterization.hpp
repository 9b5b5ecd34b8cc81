#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xgratio/numerics/quadrature.hpp"
#include "xgratio/ratio.hpp"

namespace xgratio {

enum class TruncationSide {
  right,  // Z <= z
  left,   // Z >= z
};

// Quadrature settings used by the characterization checks unless overridden.
// The finite-difference derivatives of g and g1 need integrals several
// digits tighter than the library default.
numerics::QuadConfig characterization_quad_config();

// E(Z^k | Z <= z) or E(Z^k | Z >= z). The left side integrates the tail
// directly instead of subtracting from the full moment.
double truncated_moment(RatioParams p, MomentOrder k, double z, TruncationSide side,
                        const numerics::QuadConfig& cfg = characterization_quad_config());

// g(z) = I_k(z) / f(z), so that E(Z^k | Z <= z) = g(z) f(z) / F(z).
double g_of_z(RatioParams p, MomentOrder k, double z,
              const numerics::QuadConfig& cfg = characterization_quad_config());

// g1(z) = (E(Z^k) - I_k(z)) / f(z), so that E(Z^k | Z >= z) = g1(z) f(z) / S(z).
double g1_of_z(RatioParams p, MomentOrder k, double z,
               const numerics::QuadConfig& cfg = characterization_quad_config());

// f'(z) / f(z) from the closed-form derivative of the kernel.
double pdf_log_derivative(RatioParams p, double z);

// pdf_log_derivative minus a central difference of ln f. Small residuals
// certify the closed-form derivative.
double verify_pdf_logderivative(RatioParams p, double z);

// Step used for the central differences of g and g1.
double characterization_step(double z);

// (z^k - g'(z)) / g(z): the integrand whose exponentiated integral rebuilds
// the density from right-truncated moments.
double right_truncation_integrand(RatioParams p, MomentOrder k, double z,
                                  const numerics::QuadConfig& cfg = characterization_quad_config());

// (z^k + g1'(z)) / g1(z): equals -f'(z)/f(z) for this family.
double left_truncation_integrand(RatioParams p, MomentOrder k, double z,
                                 const numerics::QuadConfig& cfg = characterization_quad_config());

struct ReconstructionPoint {
  double z;
  double reconstructed;
  double reference;
  double relative_deviation;
};

struct ReconstructionReport {
  std::vector<ReconstructionPoint> points;
  double normalization = 0.0;
  double max_relative_deviation = 0.0;
};

struct ReconstructionOptions {
  double z_start = 1e-4;
  double z_max = 20.0;
  int grid_n = 400;
  // Density the reconstruction is compared against; defaults to the law
  // whose truncated moments are used.
  std::optional<RatioParams> reference;
};

// Rebuilds the density on a geometric grid from z_start to z_max by
// integrating the truncation integrand from z_start, exponentiating, and
// normalizing so the rebuilt curve carries the reference probability mass of
// [z_start, z_max]. Reports the relative deviation from the reference pdf.
ReconstructionReport verify_lemma1_reconstruction(
    RatioParams p, MomentOrder k, const ReconstructionOptions& opts = {},
    const numerics::QuadConfig& cfg = characterization_quad_config());

// Same, driven by the left-truncation integrand (the density is rebuilt as
// exp(-integral)).
ReconstructionReport verify_lemma2_reconstruction(
    RatioParams p, MomentOrder k, const ReconstructionOptions& opts = {},
    const numerics::QuadConfig& cfg = characterization_quad_config());

struct ResidualPoint {
  double z;
  double residual;
};

struct CheckResult {
  std::string name;
  double threshold = 0.0;
  double max_residual = 0.0;
  std::vector<ResidualPoint> points;
  bool passed() const noexcept { return max_residual <= threshold; }
};

struct CharacterizationReport {
  std::vector<CheckResult> checks;
  bool passed() const noexcept;
};

struct CheckSuiteOptions {
  int grid_n = 400;
  double z_max = 20.0;
  // Negative control: evaluate the reference side of every check with
  // beta + 1 instead of beta.
  bool mismatch_reference = false;
};

// Runs every truncated-moment identity and reconstruction above for one
// (params, k) pair.
CharacterizationReport run_characterization_checks(RatioParams p, MomentOrder k,
                                                   const CheckSuiteOptions& opts = {});

}  // namespace xgratio
