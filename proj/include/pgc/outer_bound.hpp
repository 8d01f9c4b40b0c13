#pragma once

// Outer bound on the capacity region: for a correlation point rho in the unit
// disk each user's rate is bounded by
//
//   ub_k = min{ A_k(rho), 0.5 log(1 + P_k) }
//   A_k  = 0.5 log(1 + P_k / (eta_k^2 P0 + 2 eta_k rho_k sqrt(P0 Q_k) + Q_k + 1))
//        + 0.5 log((1 - |rho|^2) eta_k^2 P0 + 1)
//
// and the outer region is the union of the boxes [0,ub1] x [0,ub2] over the
// disk.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "pgc/model.hpp"
#include "pgc/optimizer.hpp"
#include "pgc/region.hpp"

namespace pgc {

namespace detail {

// A_k as a function of the own correlation and the squared radius.
inline double outer_first_term(int k, const ChannelConfig& cfg, double rho_k, double radius2) {
  const double e = cfg.eta(k);
  const double den = e * e * cfg.p0 + 2.0 * e * rho_k * std::sqrt(cfg.p0 * cfg.q(k)) + cfg.q(k) + 1.0;
  const double residual = std::max(0.0, 1.0 - radius2);
  return half_log2(1.0 + cfg.p(k) / den) + half_log2(residual * e * e * cfg.p0 + 1.0);
}

inline double awgn_rate(double p) { return half_log2(1.0 + p); }

}  // namespace detail

/// First argument of the min in the outer bound for user k (the term that
/// dirty-paper coding can meet).
/// A state of zero power carries no correlation with the helper.
inline double outer_first_term(int k, const ChannelConfig& cfg, const CorrelationPoint& rho) {
  const double r1 = cfg.q1 > 0.0 ? rho.rho1 : 0.0;
  const double r2 = cfg.q2 > 0.0 ? rho.rho2 : 0.0;
  return detail::outer_first_term(k, cfg, k == 1 ? r1 : r2, r1 * r1 + r2 * r2);
}

inline RatePair outer_rate_bounds(const ChannelConfig& cfg, const CorrelationPoint& rho) {
  validate_correlation(rho);
  return {std::min(outer_first_term(1, cfg, rho), detail::awgn_rate(cfg.p1)),
          std::min(outer_first_term(2, cfg, rho), detail::awgn_rate(cfg.p2))};
}

using OuterBoundary = RegionBoundary<CorrelationPoint>;

struct OuterRegion {
  OuterBoundary frontier;     // Pareto polyline of the union of boxes
  OuterBoundary convex_hull;  // its convexification
  double convexification_gap = 0.0;  // max vertical distance hull - frontier
  std::size_t samples = 0;           // ub evaluations retained
};

namespace detail {

struct EpsilonSolution {
  bool feasible = false;
  CorrelationPoint rho;
};

// Smallest-|rho_lead| solution of A_lead(rho_lead, s) >= level at squared
// radius s, with the remaining radius spent on the other user's correlation
// in the sign that helps it.
inline EpsilonSolution epsilon_point(const ChannelConfig& cfg, double level, double s) {
  const double kappa = cfg.eta1 * std::sqrt(cfg.p0 * cfg.q1);
  if (level > awgn_rate(cfg.p1)) return {};
  double rho1 = 0.0;
  const double need = 2.0 * (level - half_log2(std::max(0.0, 1.0 - s) * cfg.eta1 * cfg.eta1 * cfg.p0 + 1.0));
  const double target = std::exp2(need);
  if (target > 1.0) {
    const double d = cfg.eta1 * cfg.eta1 * cfg.p0 + cfg.q1 + 1.0;
    const double m = 0.5 * (cfg.p1 / (target - 1.0) - d);  // need kappa*rho1 <= m
    if (m < 0.0) {
      if (kappa == 0.0) return {};
      rho1 = m / kappa;
      if (rho1 * rho1 > s) return {};
    }
  }
  const double kappa2 = cfg.eta2 * std::sqrt(cfg.p0 * cfg.q2);
  double rho2 = 0.0;
  if (kappa2 != 0.0) {
    rho2 = -std::copysign(std::sqrt(std::max(0.0, s - rho1 * rho1)), kappa2);
  }
  return {true, {rho1, rho2}};
}

// max ub2 subject to ub1 >= level; returns the maximizing correlation point.
inline EpsilonSolution epsilon_constraint(const ChannelConfig& cfg, double level, int samples) {
  auto value = [&](double s) {
    const auto sol = epsilon_point(cfg, level, s);
    if (!sol.feasible) return -std::numeric_limits<double>::infinity();
    return std::min(outer_first_term(2, cfg, sol.rho), awgn_rate(cfg.p2));
  };
  const auto [s, v] = scan_then_golden(value, 0.0, 1.0, samples, 1e-13);
  if (!std::isfinite(v)) return {};
  return epsilon_point(cfg, level, s);
}

// Largest ub1 over the disk (attained with rho2 = 0).
inline double max_outer_rate1(const ChannelConfig& cfg, int samples) {
  const double kappa = cfg.eta1 * std::sqrt(cfg.p0 * cfg.q1);
  const double sign = kappa > 0.0 ? -1.0 : 1.0;
  auto value = [&](double r) { return detail::outer_first_term(1, cfg, sign * r, r * r); };
  const double best = scan_then_golden(value, 0.0, 1.0, samples, 1e-13).second;
  return std::min(best, awgn_rate(cfg.p1));
}

inline CorrelationPoint swap_rho(const CorrelationPoint& r) { return {r.rho2, r.rho1}; }

}  // namespace detail

/// Largest rate the outer bound allows user k on its own.
inline double outer_max_rate(int k, const ChannelConfig& cfg, int samples = 4097) {
  return detail::max_outer_rate1(k == 1 ? cfg : role_swap(cfg), samples);
}

/// Chord lift below which the outer frontier is not refined further.
inline constexpr double kOuterLiftTol = 1e-9;

/// Traces the outer-region frontier. A polar grid over the correlation disk
/// (resolution radii x 4*resolution angles) seeds the frontier; it is then
/// pushed onto the exact boundary by epsilon-constraint solves at a ladder of
/// levels for each user, and midpoints are inserted wherever the exact
/// boundary rises above the current chord.
inline OuterRegion outer_region_boundary(const ChannelConfig& cfg, int resolution = 64) {
  if (resolution < 8) throw ValidationError("outer resolution must be at least 8");
  std::vector<BoundaryVertex<CorrelationPoint>> pts;
  auto add = [&](const CorrelationPoint& rho) {
    pts.push_back({outer_rate_bounds(cfg, rho), rho, Projection::None});
  };

  const int angles = 4 * resolution;
  for (int i = 0; i <= resolution; ++i) {
    const double r = static_cast<double>(i) / resolution;
    for (int j = 0; j < (i == 0 ? 1 : angles); ++j) {
      const double phi = 2.0 * std::numbers::pi * j / angles;
      double c = std::cos(phi), s = std::sin(phi);
      // exact axis directions keep the grid symmetric under rho1 <-> rho2
      if (j * 4 == angles || j * 4 == 3 * angles) c = 0.0;
      if (j * 2 == angles || j == 0) s = 0.0;
      add({r * c, r * s});
    }
  }

  const ChannelConfig swapped = role_swap(cfg);
  const int samples = 8 * resolution + 1;
  auto solve = [&](int lead, double level) {
    if (lead == 1) {
      const auto sol = detail::epsilon_constraint(cfg, level, samples);
      if (sol.feasible) add(sol.rho);
    } else {
      const auto sol = detail::epsilon_constraint(swapped, level, samples);
      if (sol.feasible) add(detail::swap_rho(sol.rho));
    }
  };

  const double top1 = detail::max_outer_rate1(cfg, samples);
  const double top2 = detail::max_outer_rate1(swapped, samples);
  const int levels = 4 * resolution;
  for (int lead = 1; lead <= 2; ++lead) {
    const double top = lead == 1 ? top1 : top2;
    for (int i = 0; i <= levels; ++i) {
      const double level = i == levels ? top * (1.0 - 1e-14) : top * i / levels;
      solve(lead, level);
    }
  }

  auto frontier = pareto_frontier(pts);
  // Bisect level intervals while the exact boundary keeps rising above the
  // current chord.
  struct Interval {
    int lead;
    double lo, hi;
  };
  std::vector<Interval> todo;
  for (std::size_t i = 0; i + 1 < frontier.vertices.size(); ++i) {
    const auto& a = frontier.vertices[i].rate;
    const auto& b = frontier.vertices[i + 1].rate;
    todo.push_back({1, a.r1, b.r1});
    todo.push_back({2, b.r2, a.r2});
  }
  for (int pass = 0; pass < 40 && !todo.empty(); ++pass) {
    std::vector<Interval> next;
    for (const auto& iv : todo) {
      if (iv.hi - iv.lo <= 1e-9) continue;
      const double mid = 0.5 * (iv.lo + iv.hi);
      const std::size_t before = pts.size();
      solve(iv.lead, mid);
      if (pts.size() == before) continue;
      const RatePair p = pts.back().rate;
      const double lift = iv.lead == 1 ? p.r2 - boundary_height(frontier, p.r1)
                                       : p.r1 - boundary_width(frontier, p.r2);
      if (lift > kOuterLiftTol) {
        next.push_back({iv.lead, iv.lo, mid});
        next.push_back({iv.lead, mid, iv.hi});
      }
    }
    frontier = pareto_frontier(pts);
    todo = std::move(next);
  }

  OuterRegion out;
  out.samples = pts.size();
  out.convex_hull = convex_pareto_hull(frontier.vertices);
  out.frontier = std::move(frontier);
  for (const auto& v : out.convex_hull.vertices) {
    out.convexification_gap =
        std::max(out.convexification_gap, v.rate.r2 - boundary_height(out.frontier, v.rate.r1));
  }
  return out;
}

}  // namespace pgc
