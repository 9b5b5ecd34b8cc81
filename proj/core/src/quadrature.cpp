#include "xgratio/numerics/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

#include "xgratio/errors.hpp"

namespace xgratio::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMax = std::numeric_limits<double>::max();
constexpr double kMin = std::numeric_limits<double>::min();

// 21-point Kronrod extension of the 10-point Gauss rule on [-1, 1].
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct PanelEstimate {
  double result;
  double abserr;
  double resabs;
  double resasc;
};

PanelEstimate gauss_kronrod21(Integrand f, double a, double b, std::size_t& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  std::array<double, 10> fv1{};
  std::array<double, 10> fv2{};
  const double fc = f(center);
  double resg = 0.0;
  double resk = kWgk[10] * fc;
  double resabs = std::abs(resk);

  for (std::size_t j = 0; j < 5; ++j) {
    const std::size_t jtw = 2 * j + 1;
    const double abscissa = half * kXgk[jtw];
    const double f1 = f(center - abscissa);
    const double f2 = f(center + abscissa);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += kWg[j] * (f1 + f2);
    resk += kWgk[jtw] * (f1 + f2);
    resabs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (std::size_t j = 0; j < 5; ++j) {
    const std::size_t jtwm1 = 2 * j;
    const double abscissa = half * kXgk[jtwm1];
    const double f1 = f(center - abscissa);
    const double f2 = f(center + abscissa);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += kWgk[jtwm1] * (f1 + f2);
    resabs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
  }
  evaluations += 21;

  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }

  PanelEstimate out{};
  out.result = resk * half;
  out.resabs = resabs * abs_half;
  out.resasc = resasc * abs_half;
  double err = std::abs((resk - resg) * half);
  if (out.resasc != 0.0 && err != 0.0) {
    err = out.resasc * std::min(1.0, std::pow(200.0 * err / out.resasc, 1.5));
  }
  if (out.resabs > kMin / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * out.resabs, err);
  }
  out.abserr = err;
  return out;
}

// Panels of the adaptive partition, with the ordering of their error
// estimates kept alongside so the worst (or the nrmax-th worst) can be
// picked in constant time.
class Partition {
 public:
  Partition(double a, double b, double area, double err) {
    panels_.push_back({a, b, area, err, 0});
    order_.push_back(0);
  }

  struct Panel {
    double a;
    double b;
    double area;
    double err;
    int level;
  };

  const Panel& current() const { return panels_[current_]; }
  std::size_t size() const { return panels_.size(); }
  int maximum_level() const { return maximum_level_; }

  void split(double a1, double b1, double area1, double err1, double a2, double b2, double area2,
             double err2) {
    const int level = panels_[current_].level + 1;
    if (err2 > err1) {
      panels_[current_] = {a2, b2, area2, err2, level};
      panels_.push_back({a1, b1, area1, err1, level});
    } else {
      panels_[current_] = {a1, b1, area1, err1, level};
      panels_.push_back({a2, b2, area2, err2, level});
    }
    maximum_level_ = std::max(maximum_level_, level);
    order_.push_back(panels_.size() - 1);
    std::stable_sort(order_.begin(), order_.end(),
                     [this](std::size_t l, std::size_t r) { return panels_[l].err > panels_[r].err; });
    current_ = order_[nrmax_];
  }

  bool current_is_large() const { return panels_[current_].level < maximum_level_; }

  // Move to the worst panel that has not reached the deepest level yet.
  bool increase_nrmax(int limit) {
    const std::size_t last = panels_.size() - 1;
    const std::size_t half_limit = 1 + static_cast<std::size_t>(limit) / 2;
    const std::size_t jupbnd =
        last > half_limit ? static_cast<std::size_t>(limit) + 1 - last : last;
    for (std::size_t k = nrmax_; k <= jupbnd && nrmax_ < order_.size(); ++k) {
      current_ = order_[nrmax_];
      if (panels_[current_].level < maximum_level_) {
        return true;
      }
      ++nrmax_;
    }
    return false;
  }

  void start_extrapolation() { nrmax_ = 1; }

  void reset_nrmax() {
    nrmax_ = 0;
    current_ = order_[0];
  }

  double sum_areas() const {
    double s = 0.0;
    for (const auto& p : panels_) {
      s += p.area;
    }
    return s;
  }

 private:
  std::vector<Panel> panels_;
  std::vector<std::size_t> order_;
  std::size_t current_ = 0;
  std::size_t nrmax_ = 0;
  int maximum_level_ = 0;
};

// Wynn's epsilon algorithm on the sequence of partial areas.
class EpsilonTable {
 public:
  void append(double y) {
    if (n_ < list_.size()) {
      list_[n_++] = y;
    }
  }
  std::size_t size() const { return n_; }

  // Returns (extrapolated value, error estimate).
  std::pair<double, double> extrapolate() {
    const std::size_t n = n_ - 1;
    const double current = list_[n];
    double absolute = kMax;
    double relative = 5.0 * kEps * std::abs(current);
    const std::size_t newelm = n / 2;
    const std::size_t n_orig = n;
    std::size_t n_final = n;
    const std::size_t nres_orig = nres_;

    double result = current;
    double abserr = kMax;

    if (n < 2) {
      return {current, std::max(absolute, relative)};
    }

    list_[n + 2] = list_[n];
    list_[n] = kMax;

    for (std::size_t i = 0; i < newelm; ++i) {
      double res = list_[n - 2 * i + 2];
      const double e0 = list_[n - 2 * i - 2];
      const double e1 = list_[n - 2 * i - 1];
      const double e2 = res;
      const double e1abs = std::abs(e1);
      const double delta2 = e2 - e1;
      const double err2 = std::abs(delta2);
      const double tol2 = std::max(std::abs(e2), e1abs) * kEps;
      const double delta3 = e1 - e0;
      const double err3 = std::abs(delta3);
      const double tol3 = std::max(e1abs, std::abs(e0)) * kEps;

      if (err2 <= tol2 && err3 <= tol3) {
        // e0, e1, e2 agree to machine accuracy.
        result = res;
        absolute = err2 + err3;
        relative = 5.0 * kEps * std::abs(res);
        return {result, std::max(absolute, relative)};
      }

      const double e3 = list_[n - 2 * i];
      list_[n - 2 * i] = e1;
      const double delta1 = e1 - e3;
      const double err1 = std::abs(delta1);
      const double tol1 = std::max(e1abs, std::abs(e3)) * kEps;

      if (err1 <= tol1 || err2 <= tol2 || err3 <= tol3) {
        n_final = 2 * i;
        break;
      }
      const double ss = (1.0 / delta1 + 1.0 / delta2) - 1.0 / delta3;
      if (std::abs(ss * e1) <= 1e-4) {
        n_final = 2 * i;
        break;
      }
      res = e1 + 1.0 / ss;
      list_[n - 2 * i] = res;
      const double error = err2 + std::abs(res - e2) + err3;
      if (error <= abserr) {
        abserr = error;
        result = res;
      }
    }

    constexpr std::size_t limexp = 50 - 1;
    if (n_final == limexp) {
      n_final = 2 * (limexp / 2);
    }
    if (n_orig % 2 == 1) {
      for (std::size_t i = 0; i <= newelm; ++i) {
        list_[1 + i * 2] = list_[i * 2 + 3];
      }
    } else {
      for (std::size_t i = 0; i <= newelm; ++i) {
        list_[i * 2] = list_[i * 2 + 2];
      }
    }
    if (n_orig != n_final) {
      for (std::size_t i = 0; i <= n_final; ++i) {
        list_[i] = list_[n_orig - n_final + i];
      }
    }
    n_ = n_final + 1;

    if (nres_orig < 3) {
      last3_[nres_orig] = result;
      abserr = kMax;
    } else {
      abserr = std::abs(result - last3_[2]) + std::abs(result - last3_[1]) +
               std::abs(result - last3_[0]);
      last3_[0] = last3_[1];
      last3_[1] = last3_[2];
      last3_[2] = result;
    }
    nres_ = nres_orig + 1;
    return {result, std::max(abserr, 5.0 * kEps * std::abs(result))};
  }

 private:
  std::array<double, 52> list_{};
  std::size_t n_ = 0;
  std::array<double, 3> last3_{};
  std::size_t nres_ = 0;
};

enum class Failure { none, subdivisions, roundoff, bad_integrand, extrapolation, divergence };

const char* describe(Failure f) {
  switch (f) {
    case Failure::subdivisions:
      return "maximum number of subdivisions reached";
    case Failure::roundoff:
      return "roundoff error prevents reaching the requested tolerance";
    case Failure::bad_integrand:
      return "non-integrable behaviour inside the interval";
    case Failure::extrapolation:
      return "extrapolation table does not converge";
    case Failure::divergence:
      return "integral is divergent or converges too slowly";
    case Failure::none:
      break;
  }
  return "ok";
}

[[noreturn]] void fail(Failure why, const QuadResult& best) {
  std::ostringstream os;
  os.precision(17);
  os << "quadrature did not converge: " << describe(why) << " (best estimate " << best.value
     << ", error bound " << best.abs_error << ")";
  throw ConvergenceError(os.str(), best.value, best.abs_error);
}

bool subinterval_too_small(double a1, double a2, double b2) {
  const double tmp = (1.0 + 100.0 * kEps) * (std::abs(a2) + 1000.0 * kMin);
  return std::abs(a1) <= tmp && std::abs(b2) <= tmp;
}

QuadResult adaptive(Integrand f, double a, double b, const QuadConfig& cfg) {
  const double epsabs = cfg.abs_tol;
  const double epsrel = cfg.rel_tol;
  const int limit = cfg.max_subdivisions;

  QuadResult out;
  const PanelEstimate first = gauss_kronrod21(f, a, b, out.evaluations);
  out.value = first.result;
  out.abs_error = first.abserr;
  out.subdivisions = 1;

  double tolerance = std::max(epsabs, epsrel * std::abs(first.result));
  if (first.abserr <= 100.0 * kEps * first.resabs && first.abserr > tolerance) {
    fail(Failure::roundoff, out);
  }
  if ((first.abserr <= tolerance && first.abserr != first.resasc) || first.abserr == 0.0) {
    return out;
  }
  if (limit == 1) {
    fail(Failure::subdivisions, out);
  }

  Partition part(a, b, first.result, first.abserr);
  EpsilonTable table;
  table.append(first.result);

  double area = first.result;
  double errsum = first.abserr;
  double res_ext = first.result;
  double err_ext = kMax;
  double correction = 0.0;
  double error_over_large = 0.0;
  double ertest = 0.0;
  int ktmin = 0;
  int roundoff1 = 0;
  int roundoff2 = 0;
  int roundoff3 = 0;
  Failure failure = Failure::none;
  bool roundoff_in_extrapolation = false;
  bool extrapolate = false;
  bool disallow_extrapolation = false;
  const bool positive_integrand =
      std::abs(first.result) >= (1.0 - 50.0 * kEps) * first.resabs;

  int iteration = 1;
  bool sum_partition = false;
  do {
    const auto panel = part.current();
    const int current_level = panel.level + 1;
    const double a1 = panel.a;
    const double b1 = 0.5 * (panel.a + panel.b);
    const double a2 = b1;
    const double b2 = panel.b;
    ++iteration;

    const PanelEstimate left = gauss_kronrod21(f, a1, b1, out.evaluations);
    const PanelEstimate right = gauss_kronrod21(f, a2, b2, out.evaluations);
    const double area12 = left.result + right.result;
    const double error12 = left.abserr + right.abserr;
    const double last_e = panel.err;

    errsum += error12 - panel.err;
    area += area12 - panel.area;
    tolerance = std::max(epsabs, epsrel * std::abs(area));

    if (left.resasc != left.abserr && right.resasc != right.abserr) {
      const double delta = panel.area - area12;
      if (std::abs(delta) <= 1e-5 * std::abs(area12) && error12 >= 0.99 * panel.err) {
        if (!extrapolate) {
          ++roundoff1;
        } else {
          ++roundoff2;
        }
      }
      if (iteration > 10 && error12 > panel.err) {
        ++roundoff3;
      }
    }
    if (roundoff1 + roundoff2 >= 10 || roundoff3 >= 20) {
      failure = Failure::roundoff;
    }
    if (roundoff2 >= 5) {
      roundoff_in_extrapolation = true;
    }
    if (subinterval_too_small(a1, a2, b2)) {
      failure = Failure::bad_integrand;
    }

    part.split(a1, b1, left.result, left.abserr, a2, b2, right.result, right.abserr);

    if (errsum <= tolerance) {
      sum_partition = true;
      break;
    }
    if (failure != Failure::none) {
      break;
    }
    if (iteration >= limit - 1) {
      failure = Failure::subdivisions;
      break;
    }
    if (iteration == 2) {
      error_over_large = errsum;
      ertest = tolerance;
      table.append(area);
      continue;
    }
    if (disallow_extrapolation) {
      continue;
    }

    error_over_large -= last_e;
    if (current_level < part.maximum_level()) {
      error_over_large += error12;
    }
    if (!extrapolate) {
      // Only extrapolate once the smallest panels carry the largest error.
      if (part.current_is_large()) {
        continue;
      }
      extrapolate = true;
      part.start_extrapolation();
    }
    if (!roundoff_in_extrapolation && error_over_large > ertest) {
      if (part.increase_nrmax(limit)) {
        continue;
      }
    }

    table.append(area);
    const auto [reseps, abseps] = table.extrapolate();
    ++ktmin;
    if (ktmin > 5 && err_ext < 1e-3 * errsum) {
      failure = Failure::extrapolation;
    }
    if (abseps < err_ext) {
      ktmin = 0;
      err_ext = abseps;
      res_ext = reseps;
      correction = error_over_large;
      ertest = std::max(epsabs, epsrel * std::abs(reseps));
      if (err_ext <= ertest) {
        break;
      }
    }
    if (table.size() == 1) {
      disallow_extrapolation = true;
    }
    if (failure == Failure::extrapolation) {
      break;
    }
    part.reset_nrmax();
    extrapolate = false;
    error_over_large = errsum;
  } while (iteration < limit);

  out.subdivisions = static_cast<int>(part.size());

  if (!sum_partition && err_ext != kMax) {
    bool use_partition = false;
    if (failure != Failure::none || roundoff_in_extrapolation) {
      if (roundoff_in_extrapolation) {
        err_ext += correction;
      }
      if (failure == Failure::none) {
        failure = Failure::roundoff;
      }
      if (res_ext != 0.0 && area != 0.0) {
        use_partition = err_ext / std::abs(res_ext) > errsum / std::abs(area);
      } else if (err_ext > errsum) {
        use_partition = true;
      } else if (area == 0.0) {
        out.value = res_ext;
        out.abs_error = err_ext;
        fail(failure, out);
      }
    }
    if (!use_partition) {
      out.value = res_ext;
      out.abs_error = err_ext;
      const double max_area = std::max(std::abs(res_ext), std::abs(area));
      if (!(!positive_integrand && max_area < 0.01 * first.resabs)) {
        const double ratio = res_ext / area;
        if (ratio < 0.01 || ratio > 100.0 || errsum > std::abs(area)) {
          failure = Failure::divergence;
        }
      }
      if (failure != Failure::none) {
        fail(failure, out);
      }
      return out;
    }
  }

  out.value = part.sum_areas();
  out.abs_error = errsum;
  if (failure != Failure::none && !sum_partition) {
    fail(failure, out);
  }
  return out;
}

}  // namespace

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1) {
    throw DomainError("QuadConfig: tolerances must be positive and max_subdivisions >= 1");
  }
}

QuadResult integrate_finite_detailed(Integrand f, double a, double b, const QuadConfig& cfg) {
  cfg.validate();
  if (!(a <= b)) {
    throw DomainError("integrate_finite: lower limit exceeds upper limit");
  }
  if (a == b) {
    return {};
  }
  return adaptive(f, a, b, cfg);
}

double integrate_finite(Integrand f, double a, double b, const QuadConfig& cfg) {
  return integrate_finite_detailed(f, a, b, cfg).value;
}

QuadResult integrate_semi_infinite_detailed(Integrand f, const QuadConfig& cfg) {
  cfg.validate();
  auto mapped = [&f](double t) {
    const double one_minus = 1.0 - t;
    const double z = t / one_minus;
    return f(z) / (one_minus * one_minus);
  };
  return adaptive(mapped, 0.0, 1.0, cfg);
}

double integrate_semi_infinite(Integrand f, const QuadConfig& cfg) {
  return integrate_semi_infinite_detailed(f, cfg).value;
}

double integrate_tail(Integrand f, double a, const QuadConfig& cfg) {
  auto shifted = [&f, a](double z) { return f(a + z); };
  return integrate_semi_infinite(shifted, cfg);
}

}  // namespace xgratio::numerics
