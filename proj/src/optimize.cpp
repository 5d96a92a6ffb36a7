#include "resdil/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "resdil/errors.hpp"

namespace resdil {

Maximum1D golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                  double x_tolerance) {
  if (!(lo <= hi)) throw ValidationError("golden section: empty interval");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > x_tolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? Maximum1D{c, fc} : Maximum1D{d, fd};
}

MaximumND nelder_mead_maximize(const std::function<double(const std::vector<double>&)>& f,
                               std::vector<double> start, const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  if (n == 0) throw ValidationError("Nelder-Mead needs at least one parameter");

  // Internally minimize g = -f.
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.step;
  std::vector<double> g(n + 1);
  for (std::size_t i = 0; i <= n; ++i) g[i] = -f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return g[a] < g[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];
    if (g[worst] - g[best] < options.value_tolerance) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
    }
    const auto along = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
      return x;
    };

    std::vector<double> reflected = along(-1.0);
    const double g_reflected = -f(reflected);
    if (g_reflected < g[best]) {
      std::vector<double> expanded = along(-2.0);
      const double g_expanded = -f(expanded);
      if (g_expanded < g_reflected) {
        simplex[worst] = std::move(expanded);
        g[worst] = g_expanded;
      } else {
        simplex[worst] = std::move(reflected);
        g[worst] = g_reflected;
      }
      continue;
    }
    if (g_reflected < g[second_worst]) {
      simplex[worst] = std::move(reflected);
      g[worst] = g_reflected;
      continue;
    }
    const bool outside = g_reflected < g[worst];
    std::vector<double> contracted = along(outside ? -0.5 : 0.5);
    const double g_contracted = -f(contracted);
    if (g_contracted < std::min(g_reflected, g[worst])) {
      simplex[worst] = std::move(contracted);
      g[worst] = g_contracted;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) {
        simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
      }
      g[i] = -f(simplex[i]);
    }
  }
  const std::size_t best =
      static_cast<std::size_t>(std::min_element(g.begin(), g.end()) - g.begin());
  return {simplex[best], -g[best], iter};
}

}  // namespace resdil
