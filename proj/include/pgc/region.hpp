#pragma once

// Rate-region boundaries stored as Pareto polylines. The region described by
// a boundary is the down-closure of the polyline (every rate pair that is
// componentwise below some point on it).

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "pgc/model.hpp"

namespace pgc {

/// How a vertex was derived from the point its source produces.
enum class Projection {
  None,    // the source's own rate pair
  R1Axis,  // r2 set to 0
  R2Axis,  // r1 set to 0
};

template <class Source>
struct BoundaryVertex {
  RatePair rate;
  Source source{};
  Projection projection = Projection::None;
};

/// Vertices sorted by increasing r1 with strictly decreasing r2.
template <class Source>
struct RegionBoundary {
  std::vector<BoundaryVertex<Source>> vertices;

  bool empty() const { return vertices.empty(); }
  std::size_t size() const { return vertices.size(); }

  double max_r1() const { return vertices.empty() ? 0.0 : vertices.back().rate.r1; }
  double max_r2() const { return vertices.empty() ? 0.0 : vertices.front().rate.r2; }
};

/// Keeps the points not weakly dominated by another point and sorts them
/// into boundary order. Exact duplicates collapse to the first occurrence.
template <class Source>
RegionBoundary<Source> pareto_frontier(std::vector<BoundaryVertex<Source>> pts) {
  std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    if (a.rate.r1 != b.rate.r1) return a.rate.r1 > b.rate.r1;
    return a.rate.r2 > b.rate.r2;
  });
  RegionBoundary<Source> out;
  double best_r2 = -std::numeric_limits<double>::infinity();
  for (auto& p : pts) {
    if (p.rate.r2 > best_r2) {
      best_r2 = p.rate.r2;
      out.vertices.push_back(std::move(p));
    }
  }
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

/// Upper-right boundary of the convex hull of the down-closure of `pts`
/// (time sharing between the points, plus rate reduction). Hull vertices
/// keep their sources; the axis endpoints are projections of the extreme
/// points.
template <class Source>
RegionBoundary<Source> convex_pareto_hull(const std::vector<BoundaryVertex<Source>>& pts) {
  if (pts.empty()) return {};
  std::vector<BoundaryVertex<Source>> cand;
  cand.reserve(pts.size() + 2);
  const BoundaryVertex<Source>* top = nullptr;
  const BoundaryVertex<Source>* right = nullptr;
  for (const auto& p : pts) {
    if (!(p.rate.r1 >= 0.0 && p.rate.r2 >= 0.0)) continue;
    cand.push_back(p);
    if (!top || p.rate.r2 > top->rate.r2) top = &p;
    if (!right || p.rate.r1 > right->rate.r1) right = &p;
  }
  if (cand.empty()) return {};
  cand.push_back({{0.0, top->rate.r2}, top->source, Projection::R2Axis});
  cand.push_back({{right->rate.r1, 0.0}, right->source, Projection::R1Axis});

  std::stable_sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
    if (a.rate.r1 != b.rate.r1) return a.rate.r1 < b.rate.r1;
    return a.rate.r2 > b.rate.r2;
  });
  // Andrew's monotone chain, upper part.
  std::vector<BoundaryVertex<Source>> hull;
  auto cross = [](const RatePair& o, const RatePair& a, const RatePair& b) {
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
  };
  for (const auto& p : cand) {
    if (!hull.empty() && hull.back().rate.r1 == p.rate.r1) continue;  // lower duplicate in r1
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2].rate, hull.back().rate, p.rate) >= 0.0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return pareto_frontier(std::move(hull));
}

/// Largest r2 in the region at abscissa r1, or -infinity beyond the region.
template <class Source>
double boundary_height(const RegionBoundary<Source>& b, double r1) {
  const auto& v = b.vertices;
  if (v.empty() || r1 > v.back().rate.r1) return -std::numeric_limits<double>::infinity();
  if (r1 <= v.front().rate.r1) return v.front().rate.r2;
  const auto it = std::lower_bound(v.begin(), v.end(), r1,
                                   [](const auto& vx, double x) { return vx.rate.r1 < x; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double w = (r1 - lo.rate.r1) / (hi.rate.r1 - lo.rate.r1);
  return lo.rate.r2 + w * (hi.rate.r2 - lo.rate.r2);
}

/// Largest r1 in the region at ordinate r2, or -infinity above the region.
template <class Source>
double boundary_width(const RegionBoundary<Source>& b, double r2) {
  const auto& v = b.vertices;
  if (v.empty() || r2 > v.front().rate.r2) return -std::numeric_limits<double>::infinity();
  if (r2 <= v.back().rate.r2) return v.back().rate.r1;
  // first vertex with r2 < target; r2 decreases along the polyline
  const auto it = std::partition_point(v.begin(), v.end(),
                                       [&](const auto& vx) { return vx.rate.r2 >= r2; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double w = (lo.rate.r2 - r2) / (lo.rate.r2 - hi.rate.r2);
  return lo.rate.r1 + w * (hi.rate.r1 - lo.rate.r1);
}

/// True iff p - (tol, tol) lies in the region.
template <class Source>
bool region_contains(const RegionBoundary<Source>& b, const RatePair& p, double tol) {
  const double x = std::max(0.0, p.r1 - tol);
  const double y = p.r2 - tol;
  if (y <= 0.0 && x <= 0.0) return true;
  if (b.empty()) return false;
  return y <= boundary_height(b, x);
}

/// max over the region of cos(theta) r1 + sin(theta) r2.
template <class Source>
double scalarized_max(const RegionBoundary<Source>& b, double theta) {
  double best = 0.0;
  for (const auto& v : b.vertices) {
    best = std::max(best, std::cos(theta) * v.rate.r1 + std::sin(theta) * v.rate.r2);
  }
  return best;
}

/// Largest amount by which a vertex of `inner` sticks out of `outer`,
/// measured vertically (0 when every vertex is contained).
template <class S1, class S2>
double max_excess(const RegionBoundary<S1>& inner, const RegionBoundary<S2>& outer) {
  double worst = 0.0;
  for (const auto& v : inner.vertices) {
    const double h = boundary_height(outer, v.rate.r1);
    const double e = std::isfinite(h) ? v.rate.r2 - h : v.rate.r1 - outer.max_r1();
    worst = std::max(worst, e);
  }
  return worst;
}

}  // namespace pgc
