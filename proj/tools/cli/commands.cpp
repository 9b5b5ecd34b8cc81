#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "xgratio/xgratio.hpp"

namespace xgratio::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct LinearRange {
  double lo;
  double hi;
  int n;

  double at(int i) const {
    if (n == 1) {
      return lo;
    }
    if (i == n - 1) {
      return hi;
    }
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
};

LinearRange parse_range(const std::string& text, const char* flag) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    parts.push_back(item);
  }
  auto bad = [&]() {
    return UsageError(std::string(flag) + " expects lo:hi:n, got '" + text + "'");
  };
  if (parts.size() != 3) {
    throw bad();
  }
  LinearRange r{};
  try {
    std::size_t used = 0;
    r.lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw bad();
    r.hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw bad();
    r.n = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (r.n < 1 || !(r.lo <= r.hi)) {
    throw UsageError(std::string(flag) + " needs lo <= hi and n >= 1");
  }
  return r;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const Environment& env) {
  if (flag) {
    return *flag;
  }
  if (env.seed) {
    std::uint64_t value = 0;
    const std::string& s = *env.seed;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("XGRATIO_SEED must be an unsigned 64-bit integer, got '" + s + "'");
    }
    return value;
  }
  return kDefaultSeed;
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Writes to `path`, or to `out` when the path is empty.
void emit_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  file << text;
  file.flush();
  if (!file) {
    throw IoError("failed writing '" + path + "'");
  }
}

struct EvalArgs {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> at;
  std::string what = "pdf";
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const RatioParams p(a.alpha, a.beta);
  static const std::map<std::string, std::function<double(RatioParams, double)>> kinds = {
      {"pdf", ratio_pdf},       {"cdf", ratio_cdf},
      {"sf", ratio_survival},   {"hazard", ratio_hazard},
      {"rhazard", ratio_reverse_hazard}};
  const auto& fn = kinds.at(a.what);
  Json results = Json::array();
  for (double z : a.at) {
    results.push_back(Json{{"z", z}, {"value", fn(p, z)}});
  }
  write_json(out, Json{{"command", "eval"},
                       {"alpha", a.alpha},
                       {"beta", a.beta},
                       {"what", a.what},
                       {"results", results}});
  return kSuccess;
}

struct QuantileArgs {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> probs;
};

int cmd_quantile(const QuantileArgs& a, std::ostream& out) {
  const RatioParams p(a.alpha, a.beta);
  Json results = Json::array();
  for (double q : a.probs) {
    results.push_back(Json{{"prob", q}, {"z", ratio_quantile(p, q)}});
  }
  write_json(out, Json{{"command", "quantile"},
                       {"alpha", a.alpha},
                       {"beta", a.beta},
                       {"results", results}});
  return kSuccess;
}

struct SampleArgs {
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  unsigned threads = 1;
};

int cmd_sample(const SampleArgs& a, std::ostream& out, const Environment& env) {
  const RatioParams p(a.alpha, a.beta);
  const std::uint64_t seed = resolve_seed(a.seed, env);
  numerics::Rng rng(numerics::RngSeed{seed});
  const SampleBatch batch = ratio_sample(p, a.n, rng, a.threads);
  std::string text;
  text.reserve(batch.size() * 24);
  for (double v : batch.values) {
    text += format_number(v);
    text += '\n';
  }
  emit_text(a.out_path, text, out);
  write_json(out, Json{{"command", "sample"},
                       {"alpha", a.alpha},
                       {"beta", a.beta},
                       {"n", a.n},
                       {"seed", seed},
                       {"out", a.out_path}});
  return kSuccess;
}

struct MomentArgs {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> orders;
};

int cmd_moment(const MomentArgs& a, std::ostream& out) {
  const RatioParams p(a.alpha, a.beta);
  Json results = Json::array();
  for (double k : a.orders) {
    results.push_back(Json{{"k", k}, {"value", ratio_moment(p, MomentOrder(k))}});
  }
  write_json(out, Json{{"command", "moment"},
                       {"alpha", a.alpha},
                       {"beta", a.beta},
                       {"results", results}});
  return kSuccess;
}

struct EntropyArgs {
  double alpha = 0.0;
  double beta = 0.0;
  std::string kind = "shannon";
  std::optional<double> order;
};

int cmd_entropy(const EntropyArgs& a, std::ostream& out) {
  const RatioParams p(a.alpha, a.beta);
  Json record{{"command", "entropy"}, {"alpha", a.alpha}, {"beta", a.beta}, {"kind", a.kind}};
  if (a.kind == "shannon") {
    if (a.order) {
      throw UsageError("--order is not used by the Shannon entropy");
    }
    record["value"] = shannon_entropy(p);
  } else {
    if (!a.order) {
      throw UsageError("--order is required for --kind " + a.kind);
    }
    const EntropyOrder order(*a.order);
    record["order"] = *a.order;
    if (a.kind == "renyi") {
      record["value"] = renyi_entropy(p, order);
    } else {
      record["value"] = tsallis_entropy(p, order);
      record["standard_value"] = tsallis_entropy_standard(p, order);
    }
  }
  write_json(out, record);
  return kSuccess;
}

struct FitArgs {
  std::string data;
  std::string format = "plain";
  std::size_t column = 0;
  std::string init;
};

int cmd_fit(const FitArgs& a, std::ostream& out) {
  std::optional<RatioParams> init;
  if (!a.init.empty()) {
    const auto comma = a.init.find(',');
    if (comma == std::string::npos) {
      throw UsageError("--init expects alpha,beta");
    }
    try {
      init = RatioParams(std::stod(a.init.substr(0, comma)), std::stod(a.init.substr(comma + 1)));
    } catch (const std::logic_error&) {
      throw UsageError("--init expects two numbers separated by a comma");
    }
  }
  const SampleFormat format = a.format == "csv" ? SampleFormat::csv : SampleFormat::plain;
  const SampleBatch batch = read_samples(a.data, format, a.column);
  const FitResult fit = fit_mle(batch, init);
  Json se = nullptr;
  if (fit.standard_errors) {
    se = Json{{"alpha", fit.standard_errors->alpha}, {"beta", fit.standard_errors->beta}};
  }
  write_json(out, Json{{"command", "fit"},
                       {"n", batch.size()},
                       {"alpha_hat", fit.alpha_hat},
                       {"beta_hat", fit.beta_hat},
                       {"log_likelihood", fit.log_likelihood},
                       {"converged", fit.converged},
                       {"iterations", fit.iterations},
                       {"standard_errors", se},
                       {"gradient_norm", fit.gradient_norm}});
  return kSuccess;
}

struct CheckArgs {
  double alpha = 1.0;
  double beta = 1.0;
  double k = 0.5;
  int grid = 400;
  double z_max = 20.0;
  bool mismatch = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const RatioParams p(a.alpha, a.beta);
  CheckSuiteOptions opts;
  opts.grid_n = a.grid;
  opts.z_max = a.z_max;
  opts.mismatch_reference = a.mismatch;
  const CharacterizationReport report = run_characterization_checks(p, MomentOrder(a.k), opts);

  std::ostringstream os;
  os << "alpha=" << format_number(a.alpha) << '\n'
     << "beta=" << format_number(a.beta) << '\n'
     << "k=" << format_number(a.k) << '\n'
     << "grid=" << a.grid << '\n'
     << "z_max=" << format_number(a.z_max) << '\n'
     << "mismatch=" << (a.mismatch ? "true" : "false") << '\n';
  for (const auto& check : report.checks) {
    os << '\n' << '[' << check.name << "]\n";
    for (const auto& pt : check.points) {
      os << "z=" << format_number(pt.z) << " residual=" << format_number(pt.residual) << '\n';
    }
    os << "max_residual=" << format_number(check.max_residual) << '\n'
       << "threshold=" << format_number(check.threshold) << '\n'
       << "status=" << (check.passed() ? "pass" : "fail") << '\n';
  }
  os << "\n[summary]\n";
  for (const auto& check : report.checks) {
    os << check.name << '=' << format_number(check.max_residual) << ' '
       << (check.passed() ? "pass" : "fail") << '\n';
  }
  os << "overall=" << (report.passed() ? "pass" : "fail") << '\n';
  out << os.str();
  return report.passed() ? kSuccess : kCheckFailed;
}

struct TableArgs {
  double alpha = 0.0;
  double beta = 0.0;
  std::string what = "pdf";
  std::string range;
  std::string korder;
  std::string out_path;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  const RatioParams p(a.alpha, a.beta);
  std::string text;
  if (a.what == "moment") {
    if (a.korder.empty() || !a.range.empty()) {
      throw UsageError("--what moment takes --korder lo:hi:n (and no --range)");
    }
    const LinearRange r = parse_range(a.korder, "--korder");
    if (!(r.lo > -1.0 && r.hi < 1.0)) {
      throw MomentExistenceError(r.lo <= -1.0 ? r.lo : r.hi);
    }
    text = "k,value\n";
    for (int i = 0; i < r.n; ++i) {
      const double k = r.at(i);
      text += format_number(k) + ',' + format_number(ratio_moment(p, MomentOrder(k))) + '\n';
    }
  } else {
    if (a.range.empty() || !a.korder.empty()) {
      throw UsageError("--what " + a.what + " takes --range lo:hi:n (and no --korder)");
    }
    const LinearRange r = parse_range(a.range, "--range");
    if (r.lo < 0.0) {
      throw UsageError("--range must start at a non-negative z");
    }
    auto fn = a.what == "pdf" ? ratio_pdf : ratio_cdf;
    text = "z,value\n";
    for (int i = 0; i < r.n; ++i) {
      const double z = r.at(i);
      text += format_number(z) + ',' + format_number(fn(p, z)) + '\n';
    }
  }
  emit_text(a.out_path, text, out);
  return kSuccess;
}

void add_params(CLI::App* sub, double& alpha, double& beta, bool required = true) {
  auto* oa = sub->add_option("--alpha", alpha, "parameter of the numerator X")
                 ->check(CLI::PositiveNumber);
  auto* ob = sub->add_option("--beta", beta, "parameter of the denominator Y")
                 ->check(CLI::PositiveNumber);
  if (required) {
    oa->required();
    ob->required();
  }
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Distribution of the ratio of two independent xgamma random variables", "xgratio"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* s_eval = app.add_subcommand("eval", "density, cdf, survival or hazards at given points");
  add_params(s_eval, eval.alpha, eval.beta);
  s_eval->add_option("--at", eval.at, "evaluation points z >= 0")->required();
  s_eval->add_option("--what", eval.what, "quantity to evaluate")
      ->check(CLI::IsMember({"pdf", "cdf", "sf", "hazard", "rhazard"}));

  QuantileArgs quant;
  auto* s_quant = app.add_subcommand("quantile", "inverse cdf");
  add_params(s_quant, quant.alpha, quant.beta);
  s_quant->add_option("--prob", quant.probs, "probabilities in (0, 1)")->required();

  SampleArgs samp;
  auto* s_samp = app.add_subcommand("sample", "simulate X / Y and write one value per line");
  add_params(s_samp, samp.alpha, samp.beta);
  s_samp->add_option("-n", samp.n, "number of draws")->required()->check(CLI::PositiveNumber);
  s_samp->add_option("--seed", samp.seed, "RNG seed (falls back to XGRATIO_SEED)");
  s_samp->add_option("--out", samp.out_path, "output file")->required();
  s_samp->add_option("--threads", samp.threads, "worker threads (output does not depend on it)")
      ->check(CLI::Range(1u, 256u));

  MomentArgs mom;
  auto* s_mom = app.add_subcommand("moment", "fractional moments E(Z^k), -1 < k < 1");
  add_params(s_mom, mom.alpha, mom.beta);
  s_mom->add_option("-k", mom.orders, "moment orders")->required()->allow_extra_args();

  EntropyArgs ent;
  auto* s_ent = app.add_subcommand("entropy", "Shannon, Renyi or Tsallis entropy");
  add_params(s_ent, ent.alpha, ent.beta);
  s_ent->add_option("--kind", ent.kind, "entropy family")
      ->check(CLI::IsMember({"shannon", "renyi", "tsallis"}));
  s_ent->add_option("--order", ent.order, "Renyi/Tsallis order (> 1/2, != 1)");

  FitArgs fit;
  auto* s_fit = app.add_subcommand("fit", "maximum-likelihood fit of (alpha, beta)");
  s_fit->add_option("--data", fit.data, "sample file")->required();
  s_fit->add_option("--format", fit.format, "file format")
      ->check(CLI::IsMember({"plain", "csv"}));
  s_fit->add_option("--column", fit.column, "zero-based csv column");
  s_fit->add_option("--init", fit.init, "single starting point alpha,beta");

  CheckArgs chk;
  auto* s_chk = app.add_subcommand("check", "truncated-moment characterization self-test");
  add_params(s_chk, chk.alpha, chk.beta, false);
  s_chk->add_option("-k", chk.k, "moment order in (-1, 1)");
  s_chk->add_option("--grid", chk.grid, "reconstruction grid size")->check(CLI::Range(10, 100000));
  s_chk->add_option("--z-max", chk.z_max, "upper end of the reconstruction grid")
      ->check(CLI::PositiveNumber);
  s_chk->add_flag("--debug-mismatch", chk.mismatch,
                  "negative control: compare against beta + 1");

  TableArgs tab;
  auto* s_tab = app.add_subcommand("table", "two-column CSV for plotting");
  add_params(s_tab, tab.alpha, tab.beta);
  s_tab->add_option("--what", tab.what, "tabulated quantity")
      ->check(CLI::IsMember({"pdf", "cdf", "moment"}));
  s_tab->add_option("--range", tab.range, "z grid lo:hi:n (pdf, cdf)");
  s_tab->add_option("--korder", tab.korder, "k grid lo:hi:n (moment)");
  s_tab->add_option("--out", tab.out_path, "output file (stdout when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*s_eval) return cmd_eval(eval, out);
    if (*s_quant) return cmd_quantile(quant, out);
    if (*s_samp) return cmd_sample(samp, out, env);
    if (*s_mom) return cmd_moment(mom, out);
    if (*s_ent) return cmd_entropy(ent, out);
    if (*s_fit) return cmd_fit(fit, out);
    if (*s_chk) return cmd_check(chk, out);
    if (*s_tab) return cmd_table(tab, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace xgratio::cli
