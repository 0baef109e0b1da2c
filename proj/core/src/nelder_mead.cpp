#include "mdisc/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mdisc {

namespace {
constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;
}  // namespace

NelderMeadResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> x0, double initial_step,
                                      double diameter_tol, std::size_t max_evals) {
  const std::size_t n = x0.size();
  NelderMeadResult result;

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += initial_step;

  std::vector<double> values(n + 1);
  std::size_t evals = 0;
  auto eval = [&](std::span<const double> x) {
    ++evals;
    return f(x);
  };
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);

  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order[0];
    const std::size_t worst = order[n];
    const std::size_t second_worst = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      double d = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double delta = simplex[order[i]][j] - simplex[best][j];
        d += delta * delta;
      }
      diameter = std::max(diameter, std::sqrt(d));
    }
    if (diameter < diameter_tol) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    for (std::size_t j = 0; j < n; ++j)
      xr[j] = centroid[j] + kReflect * (centroid[j] - simplex[worst][j]);
    const double fr = eval(xr);

    if (fr < values[best]) {
      for (std::size_t j = 0; j < n; ++j)
        xe[j] = centroid[j] + kExpand * (xr[j] - centroid[j]);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[worst] = xe;
        values[worst] = fe;
      } else {
        simplex[worst] = xr;
        values[worst] = fr;
      }
    } else if (fr < values[second_worst]) {
      simplex[worst] = xr;
      values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      const auto& pivot = outside ? xr : simplex[worst];
      for (std::size_t j = 0; j < n; ++j)
        xc[j] = centroid[j] + kContract * (pivot[j] - centroid[j]);
      const double fc = eval(xc);
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = xc;
        values[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t j = 0; j < n; ++j)
            simplex[i][j] = simplex[best][j] + kShrink * (simplex[i][j] - simplex[best][j]);
          values[i] = eval(simplex[i]);
        }
      }
    }
  }

  const std::size_t best =
      std::distance(values.begin(), std::min_element(values.begin(), values.end()));
  result.x = simplex[best];
  result.value = values[best];
  result.evaluations = evals;
  return result;
}

}  // namespace mdisc
