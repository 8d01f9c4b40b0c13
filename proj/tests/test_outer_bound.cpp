#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace pgc;
using pgc::test::fig2a;

TEST(OuterBound, RateBoundExamples) {
  const auto c = fig2a();
  auto ub = outer_rate_bounds(c, {0, 0});
  EXPECT_NEAR(ub.r1, 1.0, 1e-12);
  EXPECT_NEAR(ub.r2, 1.0, 1e-12);
  ub = outer_rate_bounds(c, {1, 0});
  EXPECT_NEAR(ub.r1, half_log2(1.0 + 5.0 / (15.0 + 2.0 * std::sqrt(24.0))), 1e-12);
  EXPECT_NEAR(ub.r1, 0.13249, 1e-5);

  const auto z = validate_config(0.7, 1.3, 4, 5, 3, 0, 0);
  CaseGenerator gen(2);
  for (int i = 0; i < 100; ++i) {
    const auto r = outer_rate_bounds(z, gen.disk_point());
    EXPECT_NEAR(r.r1, half_log2(6.0), 1e-12);
    EXPECT_NEAR(r.r2, half_log2(4.0), 1e-12);
  }
}

TEST(OuterBound, RejectsPointsOutsideDisk) {
  EXPECT_THROW(outer_rate_bounds(fig2a(), {0.9, 0.9}), ValidationError);
}

TEST(OuterBound, CappedByAwgnRate) {
  CaseGenerator gen(7);
  for (int i = 0; i < 10000; ++i) {
    const auto c = gen.config();
    const auto r = outer_rate_bounds(c, gen.disk_point());
    ASSERT_LE(r.r1, half_log2(1.0 + c.p1) + 1e-12);
    ASSERT_LE(r.r2, half_log2(1.0 + c.p2) + 1e-12);
    ASSERT_GE(r.r1, 0.0);
    ASSERT_GE(r.r2, 0.0);
  }
}

TEST(OuterRegion, ContainsOriginCorner) {
  const auto o = outer_region_boundary(fig2a(), 16);
  EXPECT_TRUE(region_contains(o.frontier, {1.0, 1.0}, 1e-12));
  EXPECT_THROW(outer_region_boundary(fig2a(), 7), ValidationError);
}

TEST(OuterRegion, FrontierIsStrictlyMonotone) {
  for (const auto& c : pgc::test::figure_configs()) {
    const auto o = outer_region_boundary(c, 16);
    ASSERT_FALSE(o.frontier.empty());
    for (std::size_t i = 1; i < o.frontier.size(); ++i) {
      EXPECT_GT(o.frontier.vertices[i].rate.r1, o.frontier.vertices[i - 1].rate.r1);
      EXPECT_LT(o.frontier.vertices[i].rate.r2, o.frontier.vertices[i - 1].rate.r2);
    }
    for (const auto& v : o.frontier.vertices) {
      // every vertex is the bound at its own correlation point
      const auto r = outer_rate_bounds(c, v.source);
      EXPECT_EQ(r, v.rate);
    }
  }
}

TEST(OuterRegion, DominatesEverySample) {
  CaseGenerator gen(19);
  for (const auto& c : pgc::test::figure_configs()) {
    const auto o = outer_region_boundary(c, 32);
    for (int i = 0; i < 20000; ++i) {
      const auto p = outer_rate_bounds(c, gen.disk_point());
      ASSERT_TRUE(region_contains(o.frontier, p, 1e-9)) << p.r1 << "," << p.r2;
    }
  }
}

TEST(OuterRegion, RefinementMonotone) {
  for (const auto& c : pgc::test::figure_configs()) {
    const auto coarse = outer_region_boundary(c, 16);
    const auto fine = outer_region_boundary(c, 32);
    for (const auto& v : coarse.frontier.vertices) {
      EXPECT_TRUE(region_contains(fine.frontier, v.rate, 1e-6));
    }
  }
}

TEST(OuterRegion, SymmetricConfigGivesSymmetricFrontier) {
  for (const auto& c : {fig2a(), pgc::test::fig2c(), validate_config(1.3, 1.3, 7, 2, 2, 30, 30)}) {
    const auto o = outer_region_boundary(c, 32);
    for (const auto& v : o.frontier.vertices) {
      const RatePair m{v.rate.r2, v.rate.r1};
      EXPECT_TRUE(region_contains(o.frontier, m, 1e-9));
      EXPECT_NEAR(boundary_height(o.frontier, v.rate.r2), v.rate.r1, 1e-9);
    }
  }
}

TEST(OuterRegion, AwgnRectangle) {
  const auto c = validate_config(1, 1, 2, 5, 5, 0, 0);
  const auto o = outer_region_boundary(c, 16);
  ASSERT_EQ(o.frontier.size(), 1u);
  EXPECT_NEAR(o.frontier.vertices[0].rate.r1, half_log2(6.0), 1e-12);
  EXPECT_NEAR(o.frontier.vertices[0].rate.r2, half_log2(6.0), 1e-12);
}

TEST(OuterRegion, NegativeCorrelationsMatter) {
  const auto c = validate_config(1, 1, 10, 100, 100, 10, 10);
  const auto o = outer_region_boundary(c, 32);
  // best user-1 bound with both correlations restricted to [0, 1]
  double restricted = 0.0;
  for (int i = 0; i <= 400; ++i) {
    for (int j = 0; j <= 400; ++j) {
      const CorrelationPoint rho{i / 400.0, j / 400.0};
      if (rho.norm2() > 1.0) continue;
      restricted = std::max(restricted, outer_rate_bounds(c, rho).r1);
    }
  }
  EXPECT_NEAR(o.frontier.max_r1(), half_log2(101.0), 1e-9);
  EXPECT_GT(o.frontier.max_r1(), restricted + 0.1);
}

TEST(OuterRegion, MaxRateMatchesFrontier) {
  for (const auto& c : pgc::test::figure_configs()) {
    const auto o = outer_region_boundary(c, 16);
    EXPECT_NEAR(o.frontier.max_r1(), outer_max_rate(1, c), 1e-9);
    EXPECT_NEAR(o.frontier.max_r2(), outer_max_rate(2, c), 1e-9);
  }
  EXPECT_NEAR(outer_max_rate(1, fig2a()), 1.0084435476323883, 1e-12);
  EXPECT_NEAR(outer_max_rate(1, pgc::test::fig2b()), 0.8185044886949611, 1e-12);
}

TEST(OuterRegion, ConvexHullCoversFrontier) {
  for (const auto& c : pgc::test::figure_configs()) {
    const auto o = outer_region_boundary(c, 16);
    for (const auto& v : o.frontier.vertices) EXPECT_TRUE(region_contains(o.convex_hull, v.rate, 1e-12));
    EXPECT_GE(o.convexification_gap, 0.0);
  }
}
