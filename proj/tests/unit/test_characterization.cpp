#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracle_values.hpp"
#include "test_support.hpp"
#include "xgratio/characterization.hpp"
#include "xgratio/errors.hpp"
#include "xgratio/numerics/roots.hpp"
#include "xgratio/ratio.hpp"

using namespace xgratio;
using test_support::relative_error;

TEST_CASE("truncated_moment at k = 0 is one on both sides") {
  const RatioParams p(0.8, 1.3);
  for (double z : {0.01, 1.0, 40.0}) {
    CHECK(truncated_moment(p, MomentOrder(0.0), z, TruncationSide::right) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(truncated_moment(p, MomentOrder(0.0), z, TruncationSide::left) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("right-truncated moment tends to the full moment") {
  // The gap closes like z^(k-1): at z = 1e4 it is still -1.7835e-3 here
  // (mpmath), so the limit is checked further out.
  const RatioParams p(0.8, 1.3);
  const MomentOrder k(0.25);
  const double m = ratio_moment(p, k);
  CHECK(truncated_moment(p, k, 1e4, TruncationSide::right) / m - 1.0 ==
        doctest::Approx(-1.7835323944238393e-3).epsilon(1e-6));
  CHECK(truncated_moment(p, k, 1e8, TruncationSide::right) == doctest::Approx(m).epsilon(1e-4));
}

TEST_CASE("right-truncated moment against Monte Carlo") {
  const RatioParams p(1.0, 1.0);
  numerics::Rng rng(numerics::RngSeed{407});
  const auto batch = ratio_sample(p, 400000, rng);
  double s = 0.0;
  double s2 = 0.0;
  double m = 0.0;
  for (double z : batch.values) {
    if (z <= 1.0) {
      const double t = std::sqrt(z);
      s += t;
      s2 += t * t;
      m += 1.0;
    }
  }
  const double mean = s / m;
  const double se = std::sqrt((s2 / m - mean * mean) / m);
  CHECK(std::abs(truncated_moment(p, MomentOrder(0.5), 1.0, TruncationSide::right) - mean) <
        4.0 * se);
}

TEST_CASE("truncated moments factor through g, g1 and the hazards") {
  const RatioParams p(0.8, 1.3);
  for (double k : {-0.5, 0.25, 0.75}) {
    for (double z : {0.1, 1.0, 7.0}) {
      const MomentOrder mk(k);
      CAPTURE(k);
      CAPTURE(z);
      const double right = truncated_moment(p, mk, z, TruncationSide::right);
      CHECK(std::abs(g_of_z(p, mk, z) * ratio_reverse_hazard(p, z) - right) <
            1e-9 * std::max(1.0, std::abs(right)));
      const double left = truncated_moment(p, mk, z, TruncationSide::left);
      CHECK(std::abs(g1_of_z(p, mk, z) * ratio_hazard(p, z) - left) <
            1e-9 * std::max(1.0, std::abs(left)));
      CHECK(g_of_z(p, mk, z) + g1_of_z(p, mk, z) ==
            doctest::Approx(ratio_moment(p, mk) / ratio_pdf(p, z)).epsilon(1e-12));
    }
  }
}

TEST_CASE("g_of_z component oracle") {
  CHECK(relative_error(g_of_z(RatioParams(0.8, 1.3), MomentOrder(0.25), 2.0),
                       oracle::kGofZA08B13K025Z2) < 1e-9);
}

TEST_CASE("g and g1 near the origin") {
  const RatioParams p(0.8, 1.3);
  const double z = 1e-9;
  CHECK(g_of_z(p, MomentOrder(0.0), z) < 1e-8);
  const MomentOrder k(0.5);
  CHECK(g1_of_z(p, k, z) == doctest::Approx(ratio_moment(p, k) / ratio_pdf(p, 0.0)).epsilon(1e-6));
}

TEST_CASE("characterization z must be positive") {
  const RatioParams p(1.0, 1.0);
  CHECK_THROWS_AS(truncated_moment(p, MomentOrder(0.5), 0.0, TruncationSide::left), DomainError);
  CHECK_THROWS_AS(g_of_z(p, MomentOrder(0.5), -1.0), DomainError);
  CHECK_THROWS_AS(g1_of_z(p, MomentOrder(0.5), 0.0), DomainError);
  CHECK_THROWS_AS(verify_pdf_logderivative(p, 0.0), DomainError);
}

TEST_CASE("right-truncation reconstruction recovers the pdf") {
  const RatioParams p(1.0, 1.0);
  ReconstructionOptions opts;
  opts.z_max = 20.0;
  opts.grid_n = 400;
  const auto report = verify_lemma1_reconstruction(p, MomentOrder(0.5), opts);
  CHECK(report.points.size() == 400);
  CHECK(report.max_relative_deviation < 1e-3);

  const auto again = verify_lemma1_reconstruction(p, MomentOrder(0.5), opts);
  CHECK(again.max_relative_deviation == report.max_relative_deviation);
  CHECK(again.normalization == report.normalization);
}

TEST_CASE("right-truncation reconstruction at k = 0") {
  const RatioParams p(0.8, 1.3);
  ReconstructionOptions opts;
  opts.grid_n = 150;
  CHECK(verify_lemma1_reconstruction(p, MomentOrder(0.0), opts).max_relative_deviation < 1e-3);
}

TEST_CASE("left-truncation reconstruction with the exponent sign reversed") {
  const RatioParams p(2.0, 0.5);
  ReconstructionOptions opts;
  opts.grid_n = 150;
  CHECK(verify_lemma2_reconstruction(p, MomentOrder(-0.25), opts).max_relative_deviation < 1e-3);
}

TEST_CASE("reconstruction against a different density fails") {
  ReconstructionOptions opts;
  opts.grid_n = 100;
  opts.reference = RatioParams(1.0, 2.0);
  CHECK(verify_lemma1_reconstruction(RatioParams(1.0, 1.0), MomentOrder(0.5), opts)
            .max_relative_deviation > 1e-2);
}

TEST_CASE("left-truncation integrand is minus the log-derivative") {
  const RatioParams p(0.8, 1.3);
  for (double z : {0.2, 1.0, 5.0}) {
    CAPTURE(z);
    CHECK(left_truncation_integrand(p, MomentOrder(0.5), z) ==
          doctest::Approx(-pdf_log_derivative(p, z)).epsilon(1e-6));
  }
}

TEST_CASE("closed-form log-derivative against finite differences") {
  const RatioParams p(1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double z = 0.1 * std::pow(200.0, i / 60.0);
    worst = std::max(worst, std::abs(verify_pdf_logderivative(p, z)));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("log-derivative vanishes at an interior mode") {
  // For alpha = 0.3, beta = 0.8 the density has a local maximum near 0.944.
  const RatioParams p(0.3, 0.8);
  const double mode = numerics::find_root([&](double z) { return pdf_log_derivative(p, z); }, 0.6,
                                          2.0, 1e-14);
  CHECK(mode == doctest::Approx(0.944).epsilon(1e-3));
  CHECK(std::abs(pdf_log_derivative(p, mode)) < 1e-12);
  CHECK(pdf_log_derivative(p, mode * 0.9) > 0.0);
  CHECK(pdf_log_derivative(p, mode * 1.1) < 0.0);
}

TEST_CASE("log-derivative ignores the normalizing constant") {
  // f and c f share f'/f; the residual only sees the kernel through ln f.
  const RatioParams p(2.0, 0.5);
  for (double z : {0.3, 3.0}) {
    const double h = 1e-5 * std::min(1.0, z);
    const double kernel_slope =
        (ratio_log_kernel(p, z + h) - ratio_log_kernel(p, z - h)) / (2.0 * h);
    CHECK(pdf_log_derivative(p, z) == doctest::Approx(kernel_slope).epsilon(1e-8));
  }
}

TEST_CASE("check suite passes and the negative control fails") {
  CheckSuiteOptions opts;
  opts.grid_n = 120;
  const auto good = run_characterization_checks(RatioParams(1.0, 1.0), MomentOrder(0.5), opts);
  CHECK(good.checks.size() == 6);
  for (const auto& c : good.checks) {
    CAPTURE(c.name);
    CAPTURE(c.max_residual);
    CHECK(c.passed());
    CHECK_FALSE(c.points.empty());
  }
  CHECK(good.passed());

  opts.mismatch_reference = true;
  const auto bad = run_characterization_checks(RatioParams(1.0, 1.0), MomentOrder(0.5), opts);
  CHECK_FALSE(bad.passed());
}
