#include "xgratio/estimation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>
#include <vector>

#include "xgratio/errors.hpp"

namespace xgratio {

namespace {

// Neumaier summation keeps the likelihood independent of data order to the
// last few ulps.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// d ln f / d(alpha, beta) at one observation.
std::array<double, 2> point_score(double a, double b, double z) {
  const double u = 1.0 / (a * z + b);
  const double w = z * u;
  const double u2 = u * u;
  const double w2 = w * w;
  const double bracket = 1.0 + 3.0 * (a * w2 + b * u2) + 30.0 * a * b * w2 * u2;
  const double common = 12.0 * (a * w2 + b * u2);
  const double dh_da = -2.0 * w + 3.0 * w2 - common * w + 30.0 * b * w2 * u2 -
                       180.0 * a * b * w2 * w * u2;
  const double dh_db = -2.0 * u + 3.0 * u2 - common * u + 30.0 * a * w2 * u2 -
                       180.0 * a * b * w2 * u2 * u;
  return {2.0 / a - 1.0 / (1.0 + a) + dh_da / bracket,
          2.0 / b - 1.0 / (1.0 + b) + dh_db / bracket};
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  return value;
}

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << "line " << line << ": " << what;
  throw DataError(os.str(), line);
}

}  // namespace

double log_likelihood(RatioParams p, const SampleBatch& data) {
  validate_batch(data);
  CompensatedSum sum;
  for (double z : data.values) {
    sum.add(ratio_log_pdf(p, z));
  }
  return sum.value();
}

std::array<double, 2> score(RatioParams p, const SampleBatch& data) {
  validate_batch(data);
  CompensatedSum da;
  CompensatedSum db;
  for (double z : data.values) {
    const auto s = point_score(p.alpha(), p.beta(), z);
    da.add(s[0]);
    db.add(s[1]);
  }
  return {da.value(), db.value()};
}

HessianReport numerical_hessian_se(RatioParams p, const SampleBatch& data) {
  const std::array<double, 2> theta = {p.alpha(), p.beta()};
  HessianReport report;
  std::array<std::array<double, 2>, 2> raw{};
  for (std::size_t j = 0; j < 2; ++j) {
    const double h = 1e-5 * theta[j];
    auto plus = theta;
    auto minus = theta;
    plus[j] += h;
    minus[j] -= h;
    const auto sp = score(RatioParams(plus[0], plus[1]), data);
    const auto sm = score(RatioParams(minus[0], minus[1]), data);
    for (std::size_t i = 0; i < 2; ++i) {
      raw[i][j] = (sp[i] - sm[i]) / (2.0 * h);
    }
  }
  const double off_scale = std::max({std::abs(raw[0][1]), std::abs(raw[1][0]),
                                     std::numeric_limits<double>::min()});
  report.asymmetry = std::abs(raw[0][1] - raw[1][0]) / off_scale;
  const double off = 0.5 * (raw[0][1] + raw[1][0]);
  report.hessian = {{{raw[0][0], off}, {off, raw[1][1]}}};

  const auto g = score(p, data);
  report.gradient_norm = std::hypot(g[0], g[1]);

  // Observed information I = -H; standard errors from diag(I^-1).
  const double i00 = -report.hessian[0][0];
  const double i11 = -report.hessian[1][1];
  const double i01 = -off;
  const double det = i00 * i11 - i01 * i01;
  if (!(i00 > 0.0) || !(det > 0.0)) {
    report.diagnostic = "observed information is not positive definite";
    return report;
  }
  report.standard_errors = StandardErrors{std::sqrt(i11 / det), std::sqrt(i00 / det)};
  return report;
}

RatioParams moment_matched_start(const SampleBatch& data) {
  validate_batch(data);
  CompensatedSum pos;
  CompensatedSum neg;
  for (double z : data.values) {
    const double r = std::sqrt(z);
    pos.add(r);
    neg.add(1.0 / r);
  }
  const double n = static_cast<double>(data.size());
  const double log_pos = std::log(pos.value() / n);
  const double log_neg = std::log(neg.value() / n);

  const MomentOrder half(0.5);
  const MomentOrder minus_half(-0.5);
  constexpr int kSteps = 41;
  const double lo = std::log(0.02);
  const double hi = std::log(50.0);
  double best_loss = std::numeric_limits<double>::infinity();
  RatioParams best(1.0, 1.0);
  for (int i = 0; i < kSteps; ++i) {
    const double a = std::exp(lo + (hi - lo) * i / (kSteps - 1));
    for (int j = 0; j < kSteps; ++j) {
      const double b = std::exp(lo + (hi - lo) * j / (kSteps - 1));
      const RatioParams cand(a, b);
      const double ep = std::log(ratio_moment(cand, half)) - log_pos;
      const double en = std::log(ratio_moment(cand, minus_half)) - log_neg;
      const double loss = ep * ep + en * en;
      if (loss < best_loss) {
        best_loss = loss;
        best = cand;
      }
    }
  }
  return best;
}

FitResult fit_mle(const SampleBatch& data, std::optional<RatioParams> init, const FitOptions& opts) {
  validate_batch(data);
  if (data.size() < kMinFitSize) {
    std::ostringstream os;
    os << "fit_mle needs at least " << kMinFitSize << " observations, got " << data.size();
    throw DataError(os.str());
  }
  const double n = static_cast<double>(data.size());
  auto objective = [&](std::span<const double> x) {
    const double a = std::exp(x[0]);
    const double b = std::exp(x[1]);
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
      return std::numeric_limits<double>::infinity();
    }
    return -log_likelihood(RatioParams(a, b), data) / n;
  };

  std::vector<RatioParams> starts;
  if (init) {
    starts.push_back(*init);
  } else {
    starts = {RatioParams(1.0, 1.0), RatioParams(0.5, 2.0), RatioParams(2.0, 0.5),
              moment_matched_start(data)};
  }

  numerics::NelderMeadResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& start : starts) {
    std::vector<double> x = {std::log(start.alpha()), std::log(start.beta())};
    numerics::NelderMeadResult run = numerics::minimize_nelder_mead(objective, x, opts.simplex);
    int iterations = run.iterations;
    // Restart from the optimum with a fresh simplex to guard against a
    // prematurely collapsed one.
    for (int r = 0; r < opts.restarts; ++r) {
      numerics::NelderMeadOptions again = opts.simplex;
      again.initial_step = 0.05;
      auto next = numerics::minimize_nelder_mead(objective, run.x, again);
      iterations += next.iterations;
      const bool stalled = std::abs(next.value - run.value) <= 1e-13 * (1.0 + std::abs(run.value));
      if (next.value <= run.value) {
        next.converged = next.converged && (run.converged || stalled);
        run = std::move(next);
      }
      if (stalled) {
        break;
      }
    }
    run.iterations = iterations;
    if (run.value < best.value) {
      best = std::move(run);
    }
  }

  FitResult result;
  result.alpha_hat = std::exp(best.x[0]);
  result.beta_hat = std::exp(best.x[1]);
  const RatioParams fitted(result.alpha_hat, result.beta_hat);
  result.log_likelihood = log_likelihood(fitted, data);
  result.converged = best.converged;
  result.iterations = best.iterations;
  const HessianReport se = numerical_hessian_se(fitted, data);
  result.standard_errors = se.standard_errors;
  result.gradient_norm = se.gradient_norm;
  return result;
}

SampleBatch read_samples(const std::filesystem::path& path, SampleFormat format,
                         std::size_t column) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open sample file '" + path.string() + "'");
  }
  SampleBatch batch;
  std::string line;
  std::size_t line_no = 0;
  bool first_record = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view trimmed = trim(line);
    if (trimmed.empty()) {
      continue;
    }
    std::string_view field = trimmed;
    if (format == SampleFormat::csv) {
      std::size_t start = 0;
      for (std::size_t c = 0; c < column; ++c) {
        const auto comma = trimmed.find(',', start);
        if (comma == std::string_view::npos) {
          line_error(line_no, "missing column " + std::to_string(column));
        }
        start = comma + 1;
      }
      const auto end = trimmed.find(',', start);
      field = trimmed.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    }
    const auto value = parse_number(field);
    const bool header_row = format == SampleFormat::csv && first_record;
    first_record = false;
    if (!value) {
      if (header_row) {
        continue;
      }
      line_error(line_no, "cannot parse '" + std::string(trim(field)) + "' as a number");
    }
    if (!(*value > 0.0) || !std::isfinite(*value)) {
      line_error(line_no, "value " + std::string(trim(field)) + " is not a positive finite number");
    }
    batch.values.push_back(*value);
  }
  if (in.bad()) {
    throw IoError("error while reading '" + path.string() + "'");
  }
  if (batch.empty()) {
    throw DataError("sample file '" + path.string() + "' contains no observations");
  }
  return batch;
}

}  // namespace xgratio
