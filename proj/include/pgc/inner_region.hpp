#pragma once

// Inner region: achievable rate pairs of the Gaussian Marton-type scheme,
// maximized direction by direction over the helper strategy, convexified by
// time sharing and combined with the decoder-role swap; plus the alternating
// single-user baseline.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <thread>
#include <vector>

#include "pgc/closed_form.hpp"
#include "pgc/gaussian_core.hpp"
#include "pgc/model.hpp"
#include "pgc/optimizer.hpp"
#include "pgc/region.hpp"

namespace pgc {

/// (max(0, min(f1,g1)), max(0, min(f2,g2))).
inline RatePair achievable_point(const ChannelConfig& cfg, const HelperStrategy& s) {
  return {std::max(0.0, user_rate(1, cfg, s)), std::max(0.0, user_rate(2, cfg, s))};
}

/// Where an inner-boundary vertex comes from. The strategy is evaluated with
/// the helper using power `helper_power` (<= P0), on the role-swapped
/// channel when `swapped` is set (coordinates exchanged afterwards).
struct InnerSource {
  HelperStrategy strategy;
  double helper_power = 0.0;
  bool swapped = false;
};

using InnerBoundary = RegionBoundary<InnerSource>;

/// Channel the source's strategy is meant for.
inline ChannelConfig effective_config(const ChannelConfig& cfg, const InnerSource& src) {
  ChannelConfig c = src.swapped ? role_swap(cfg) : cfg;
  c.p0 = src.helper_power;
  return c;
}

namespace detail {

inline RatePair apply_projection(RatePair r, Projection p) {
  if (p == Projection::R1Axis) r.r2 = 0.0;
  if (p == Projection::R2Axis) r.r1 = 0.0;
  return r;
}

}  // namespace detail

/// Rate pair of a vertex recomputed with `rates(cfg_eff, strategy)`.
template <class RateFn>
RatePair recompute_vertex(const ChannelConfig& cfg, const BoundaryVertex<InnerSource>& v, RateFn rates) {
  RatePair r = rates(effective_config(cfg, v.source), v.source.strategy);
  if (v.source.swapped) r = {r.r2, r.r1};
  return detail::apply_projection(r, v.projection);
}

struct DirectionResult {
  InnerSource source;
  RatePair rate;
  double value = 0.0;  // cos(theta) r1 + sin(theta) r2
};

namespace detail {

// Optimizer coordinates: rho1, rho2, gamma, helper power fraction.
struct SearchPoint {
  double rho1, rho2, gamma, power;
};

inline SearchPoint decode(const std::vector<double>& x) {
  SearchPoint p{x[0], x[1], std::clamp(x[2], 0.0, 1.0), std::clamp(x[3], 0.0, 1.0)};
  const double r2 = p.rho1 * p.rho1 + p.rho2 * p.rho2;
  if (r2 > 1.0) {
    const double r = std::sqrt(r2);
    p.rho1 /= r;
    p.rho2 /= r;
  }
  return p;
}

struct Profiled {
  double value;
  DirectionResult result;
};

// Best per-user auxiliaries at a fixed (rho, gamma, power); the two users'
// rates depend on disjoint coefficient sets, so they are maximized separately.
inline Profiled profile(const ChannelConfig& cfg, const SearchPoint& p, double c, double s,
                        int polish = 0) {
  ChannelConfig eff = cfg;
  eff.p0 = p.power * cfg.p0;
  const auto b = beta_from_rho(eff, {p.rho1, p.rho2});
  HelperStrategy base;
  base.beta1 = b.beta1;
  base.beta2 = b.beta2;
  base.gamma = p.gamma;
  // Guard the power constraint against rounding in beta_from_rho.
  if (base.beta1 * base.beta1 * eff.q1 + base.beta2 * base.beta2 * eff.q2 > eff.p0) {
    const double scale = std::sqrt(eff.p0 / (base.beta1 * base.beta1 * eff.q1 + base.beta2 * base.beta2 * eff.q2));
    base.beta1 *= scale;
    base.beta2 *= scale;
  }
  const auto u1 = best_user_alpha(1, eff, base, polish);
  auto merged = u1.strategy;
  const auto u2 = best_user_alpha(2, eff, merged, polish);
  merged = u2.strategy;
  const RatePair r{std::max(0.0, u1.rate), std::max(0.0, u2.rate)};
  const double v = c * r.r1 + s * r.r2;
  return {v, {{merged, eff.p0, false}, r, v}};
}

inline std::vector<double> linspace(double lo, double hi, int n) {
  if (n == 1) return {0.5 * (lo + hi)};
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  return out;
}

}  // namespace detail

/// Approximately maximizes cos(theta) r1 + sin(theta) r2 over the helper
/// strategy (and helper power backoff). Seeds: a (rho1, rho2, gamma) grid at
/// full power, the silent helper, and the two single-user strategies; the
/// best `restarts` seeds are refined by a simplex search over
/// (rho, gamma, power) followed by a polish of the auxiliary coefficients.
/// The result never falls below the best seed.
inline DirectionResult optimize_direction(const ChannelConfig& cfg, double theta,
                                          const OptimizerBudget& budget = {}) {
  validate_budget(budget);
  const double c = std::cos(theta), s = std::sin(theta);
  std::vector<detail::SearchPoint> seeds;
  const auto rhos = detail::linspace(-1.0, 1.0, budget.rho_grid);
  const auto gammas = detail::linspace(0.0, 1.0, budget.gamma_grid);
  for (double r1 : rhos) {
    for (double r2 : rhos) {
      if (r1 * r1 + r2 * r2 > 1.0 + 1e-12) continue;
      for (double g : gammas) seeds.push_back({r1, r2, g, 1.0});
    }
  }
  seeds.push_back({0.0, 0.0, 1.0, 0.0});
  for (int k = 1; k <= 2; ++k) {
    const auto pp = pp_helper(k, cfg, budget);
    const auto rho = rho_from_beta(cfg, pp.strategy.beta1, pp.strategy.beta2);
    seeds.push_back({rho.rho1, rho.rho2, pp.strategy.gamma, 1.0});
  }

  std::vector<detail::Profiled> scored;
  scored.reserve(seeds.size());
  for (const auto& p : seeds) scored.push_back(detail::profile(cfg, p, c, s));

  std::vector<std::size_t> order(scored.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scored[a].value > scored[b].value; });

  DirectionResult best = scored[order.front()].result;
  const int restarts = std::min<int>(budget.restarts, static_cast<int>(order.size()));
  for (int i = 0; i < restarts; ++i) {
    const auto& sp = seeds[order[i]];
    auto obj = [&](const std::vector<double>& x) {
      return detail::profile(cfg, detail::decode(x), c, s).value;
    };
    const auto opt = nelder_mead_maximize(obj, {sp.rho1, sp.rho2, sp.gamma, sp.power},
                                          {0.1, 0.1, 0.1, 0.1}, budget.max_iterations);
    const auto polished = detail::profile(cfg, detail::decode(opt.x), c, s, budget.max_iterations);
    if (polished.value > best.value) best = polished.result;
  }
  return best;
}

namespace detail {

template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
}

}  // namespace detail

/// Single-user helper strategy for user k as a boundary vertex.
inline BoundaryVertex<InnerSource> single_user_vertex(int k, const ChannelConfig& cfg,
                                                      const OptimizerBudget& budget = {}) {
  const auto pp = pp_helper(k, cfg, budget);
  BoundaryVertex<InnerSource> v;
  v.source = {pp.strategy, cfg.p0, false};
  v.rate = k == 1 ? RatePair{pp.rate, 0.0} : RatePair{0.0, pp.rate};
  v.projection = k == 1 ? Projection::R1Axis : Projection::R2Axis;
  return v;
}

/// Convex inner boundary from `resolution` scalarization directions in both
/// decoding orders, plus the single-user axis points.
inline InnerBoundary inner_region_boundary(const ChannelConfig& cfg, int resolution = 16,
                                           const OptimizerBudget& budget = {}) {
  if (resolution < 8) throw ValidationError("inner resolution must be at least 8");
  validate_budget(budget);
  const ChannelConfig swapped = role_swap(cfg);
  std::vector<BoundaryVertex<InnerSource>> pts(2 * static_cast<std::size_t>(resolution));
  detail::parallel_for(pts.size(), [&](std::size_t i) {
    const std::size_t d = i / 2;
    const double theta = (static_cast<double>(d) + 0.5) * (std::numbers::pi / 2) / resolution;
    if (i % 2 == 0) {
      const auto r = optimize_direction(cfg, theta, budget);
      pts[i] = {r.rate, r.source, Projection::None};
    } else {
      auto r = optimize_direction(swapped, std::numbers::pi / 2 - theta, budget);
      r.source.swapped = true;
      pts[i] = {{r.rate.r2, r.rate.r1}, r.source, Projection::None};
    }
  });
  pts.push_back(single_user_vertex(1, cfg, budget));
  pts.push_back(single_user_vertex(2, cfg, budget));
  return convex_pareto_hull(pts);
}

using TimeSharingBoundary = RegionBoundary<double>;  // source: share of user 1

/// Alternating single-user assistance: user 1 (with the helper) for a
/// fraction lambda of the time, user 2 for the rest, the other user silent.
inline TimeSharingBoundary time_sharing_boundary(const ChannelConfig& cfg, int resolution = 64,
                                                 const OptimizerBudget& budget = {}) {
  if (resolution < 2) throw ValidationError("time-sharing resolution must be at least 2");
  const double a = pp_helper_rate(1, cfg, budget);
  const double b = pp_helper_rate(2, cfg, budget);
  std::vector<BoundaryVertex<double>> pts;
  for (int i = 0; i < resolution; ++i) {
    const double lambda = static_cast<double>(i) / (resolution - 1);
    pts.push_back({{lambda * a, (1.0 - lambda) * b}, lambda, Projection::None});
  }
  return pareto_frontier(pts);
}

}  // namespace pgc
