#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "xgratio/numerics/optimize.hpp"
#include "xgratio/ratio.hpp"
#include "xgratio/sample_batch.hpp"

namespace xgratio {

struct StandardErrors {
  double alpha;
  double beta;
};

struct FitResult {
  double alpha_hat = 0.0;
  double beta_hat = 0.0;
  double log_likelihood = 0.0;
  bool converged = false;
  int iterations = 0;
  // Absent when the observed information is not positive definite.
  std::optional<StandardErrors> standard_errors;
  double gradient_norm = 0.0;
};

struct HessianReport {
  // Hessian of the log-likelihood in (alpha, beta), symmetrized.
  std::array<std::array<double, 2>, 2> hessian{};
  // |H_ab - H_ba| relative to their magnitude, before symmetrizing.
  double asymmetry = 0.0;
  // Euclidean norm of the score at the evaluation point.
  double gradient_norm = 0.0;
  std::optional<StandardErrors> standard_errors;
  std::string diagnostic;
};

// Sum of ln f(z_i). Throws DataError naming the first non-positive index.
double log_likelihood(RatioParams p, const SampleBatch& data);

// Gradient of log_likelihood with respect to (alpha, beta), analytic.
std::array<double, 2> score(RatioParams p, const SampleBatch& data);

// Observed-information standard errors from a central-difference Jacobian of
// the analytic score.
HessianReport numerical_hessian_se(RatioParams p, const SampleBatch& data);

struct FitOptions {
  numerics::NelderMeadOptions simplex;
  int restarts = 2;
};

// Smallest batch fit_mle accepts.
inline constexpr std::size_t kMinFitSize = 10;

// Maximum-likelihood fit over (ln alpha, ln beta) with Nelder-Mead. Without
// `init`, starts from (1,1), (0.5,2), (2,0.5) and a moment-matched point and
// keeps the best optimum. Deterministic for fixed (data, init).
FitResult fit_mle(const SampleBatch& data, std::optional<RatioParams> init = std::nullopt,
                  const FitOptions& opts = {});

// Grid-search start matching E(Z^0.5) and E(Z^-0.5) to their sample means.
RatioParams moment_matched_start(const SampleBatch& data);

enum class SampleFormat { plain, csv };

// plain: one number per line. csv: comma-separated, `column` is zero-based,
// a non-numeric first row is taken as a header. Blank lines are skipped.
// Parse failures and non-positive values throw DataError carrying the
// 1-based line number; unreadable files throw IoError.
SampleBatch read_samples(const std::filesystem::path& path, SampleFormat format,
                         std::size_t column = 0);

}  // namespace xgratio
