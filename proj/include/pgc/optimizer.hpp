#pragma once

// Derivative-free local search used by the rate-region tracers. The
// objectives here contain min() kinks, so nothing below relies on gradients.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "pgc/model.hpp"

namespace pgc {

/// Search effort for the inner-bound optimizers.
struct OptimizerBudget {
  int rho_grid = 5;         // seed points per correlation axis
  int gamma_grid = 5;       // seed points for the helper power split
  int max_iterations = 400; // simplex iterations per local refinement
  int restarts = 3;         // refined seeds per direction

  friend bool operator==(const OptimizerBudget&, const OptimizerBudget&) = default;
};

inline void validate_budget(const OptimizerBudget& b) {
  if (b.rho_grid < 1 || b.gamma_grid < 1 || b.max_iterations < 1 || b.restarts < 1) {
    throw ValidationError("optimizer budget must be positive");
  }
}

struct LocalOptimum {
  std::vector<double> x;
  double value;
};

/// Nelder-Mead maximization of `f` starting at x0 with per-coordinate
/// initial steps. Stops after max_iter iterations or once the simplex value
/// spread drops below ftol.
inline LocalOptimum nelder_mead_maximize(const std::function<double(const std::vector<double>&)>& f,
                                         std::vector<double> x0, const std::vector<double>& step,
                                         int max_iter, double ftol = 1e-13) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> val(n + 1);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];
  // Minimize the negated objective.
  auto g = [&](const std::vector<double>& x) {
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : -v;
  };
  for (std::size_t i = 0; i <= n; ++i) val[i] = g(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  for (int it = 0; it < max_iter; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
    if (std::abs(val[worst] - val[best]) <= ftol * (1.0 + std::abs(val[best]))) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[i][d] / static_cast<double>(n);
    }
    for (std::size_t d = 0; d < n; ++d) trial[d] = centroid[d] + (centroid[d] - pts[worst][d]);
    const double fr = g(trial);
    if (fr < val[best]) {
      for (std::size_t d = 0; d < n; ++d) trial2[d] = centroid[d] + 2.0 * (centroid[d] - pts[worst][d]);
      const double fe = g(trial2);
      if (fe < fr) {
        pts[worst] = trial2;
        val[worst] = fe;
      } else {
        pts[worst] = trial;
        val[worst] = fr;
      }
      continue;
    }
    if (fr < val[second]) {
      pts[worst] = trial;
      val[worst] = fr;
      continue;
    }
    const bool outside = fr < val[worst];
    for (std::size_t d = 0; d < n; ++d) {
      const double ref = outside ? trial[d] : pts[worst][d];
      trial2[d] = centroid[d] + 0.5 * (ref - centroid[d]);
    }
    const double fc = g(trial2);
    if (fc < std::min(fr, val[worst])) {
      pts[worst] = trial2;
      val[worst] = fc;
      continue;
    }
    // shrink
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t d = 0; d < n; ++d) pts[i][d] = pts[best][d] + 0.5 * (pts[i][d] - pts[best][d]);
      val[i] = g(pts[i]);
    }
  }
  const auto it = std::min_element(val.begin(), val.end());
  const auto i = static_cast<std::size_t>(it - val.begin());
  return {pts[i], -val[i]};
}

/// Golden-section maximization of a unimodal function on [lo, hi].
inline std::pair<double, double> golden_section_maximize(const std::function<double(double)>& f,
                                                         double lo, double hi, double xtol = 1e-12) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

/// Maximizes f on [lo, hi] by a uniform scan of `samples` points followed by
/// golden-section search in the bracket around the best sample. The result
/// is never below the best scanned value.
inline std::pair<double, double> scan_then_golden(const std::function<double(double)>& f, double lo,
                                                  double hi, int samples, double xtol = 1e-12) {
  samples = std::max(samples, 3);
  const double h = (hi - lo) / (samples - 1);
  int best = 0;
  double best_v = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double v = f(lo + h * i);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  const double a = lo + h * std::max(best - 1, 0);
  const double b = lo + h * std::min(best + 1, samples - 1);
  auto refined = golden_section_maximize(f, a, b, xtol);
  if (refined.second >= best_v) return refined;
  return {lo + h * best, best_v};
}

}  // namespace pgc
