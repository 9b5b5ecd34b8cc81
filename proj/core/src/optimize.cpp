#include "xgratio/numerics/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "xgratio/errors.hpp"

namespace xgratio::numerics {

namespace {

double finite_or_inf(double v) {
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

}  // namespace

NelderMeadResult minimize_nelder_mead(Objective f, std::span<const double> x0,
                                      const NelderMeadOptions& opts) {
  const std::size_t dim = x0.size();
  if (dim == 0) {
    throw DomainError("minimize_nelder_mead: empty starting point");
  }
  auto eval = [&f](const std::vector<double>& x) { return finite_or_inf(f(x)); };

  std::vector<std::vector<double>> simplex(dim + 1, std::vector<double>(x0.begin(), x0.end()));
  for (std::size_t i = 0; i < dim; ++i) {
    simplex[i + 1][i] += opts.initial_step;
  }
  std::vector<double> values(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) {
    values[i] = eval(simplex[i]);
  }
  if (!std::isfinite(values[0])) {
    throw DomainError("minimize_nelder_mead: objective is not finite at the starting point");
  }

  std::vector<std::size_t> idx(dim + 1);
  std::vector<double> centroid(dim);
  std::vector<double> trial(dim);
  std::vector<double> trial2(dim);

  NelderMeadResult out;
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&values](std::size_t l, std::size_t r) { return values[l] < values[r]; });
    const std::size_t best = idx.front();
    const std::size_t worst = idx.back();
    const std::size_t second_worst = idx[dim - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        diameter = std::max(diameter, std::abs(simplex[i][j] - simplex[best][j]));
      }
    }
    const double spread = values[worst] - values[best];
    if (std::isfinite(spread) && spread <= opts.f_tol * (1.0 + std::abs(values[best])) &&
        diameter <= opts.x_tol) {
      out.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) {
        continue;
      }
      for (std::size_t j = 0; j < dim; ++j) {
        centroid[j] += simplex[i][j];
      }
    }
    for (double& c : centroid) {
      c /= static_cast<double>(dim);
    }

    auto along = [&](double coeff, std::vector<double>& dst) {
      for (std::size_t j = 0; j < dim; ++j) {
        dst[j] = centroid[j] + coeff * (simplex[worst][j] - centroid[j]);
      }
    };

    along(-1.0, trial);
    const double f_reflect = eval(trial);
    if (f_reflect < values[best]) {
      along(-2.0, trial2);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        simplex[worst] = trial2;
        values[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        values[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[second_worst]) {
      simplex[worst] = trial;
      values[worst] = f_reflect;
      continue;
    }
    // Contraction, outside if the reflection improved on the worst vertex.
    const bool outside = f_reflect < values[worst];
    along(outside ? -0.5 : 0.5, trial2);
    const double f_contract = eval(trial2);
    if (f_contract < (outside ? f_reflect : values[worst])) {
      simplex[worst] = trial2;
      values[worst] = f_contract;
      continue;
    }
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) {
        continue;
      }
      for (std::size_t j = 0; j < dim; ++j) {
        simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
      }
      values[i] = eval(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best = static_cast<std::size_t>(best_it - values.begin());
  out.x = simplex[best];
  out.value = values[best];
  out.iterations = iter;
  return out;
}

}  // namespace xgratio::numerics
