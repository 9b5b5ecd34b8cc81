#include "xgratio/numerics/roots.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "xgratio/errors.hpp"

namespace xgratio::numerics {

double find_root(FunctionRef<double(double)> f, double lo, double hi, double tol,
                 const RootOptions& opts) {
  if (!(lo <= hi)) {
    throw DomainError("find_root: expected lo <= hi");
  }
  if (!(tol > 0.0)) {
    throw DomainError("find_root: tolerance must be positive");
  }
  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) {
    return a;
  }
  if (fb == 0.0) {
    return b;
  }
  if (std::signbit(fa) == std::signbit(fb)) {
    throw BracketError("find_root: f(lo) and f(hi) have the same sign");
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    if (std::signbit(fb) == std::signbit(fc)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
    const double mid = 0.5 * (c - b);
    if (std::abs(mid) <= tol1 || fb == 0.0) {
      return b;
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // Interpolation step: secant when only two points are distinct,
      // inverse quadratic otherwise.
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * mid * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * mid * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < std::min(3.0 * mid * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = mid;
        e = d;
      }
    } else {
      d = mid;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (mid > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  return b;
}

}  // namespace xgratio::numerics
