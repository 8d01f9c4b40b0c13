#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "support.hpp"

using namespace pgc;
using pgc::test::fig2a;

TEST(Model, ValidatesFigureConfigs) {
  const auto c = validate_config(1, 1, 2, 5, 5, 12, 12);
  EXPECT_EQ(c.p0, 2.0);
  EXPECT_EQ(c.q2, 12.0);
  const auto b = validate_config(0.8, 1, 2, 5, 5, 12, 12);
  EXPECT_EQ(b.eta1, 0.8);
}

TEST(Model, RejectsNegativeHelperPower) {
  try {
    validate_config(1, 1, -1, 5, 5, 12, 12);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "p0 negative");
  }
}

TEST(Model, AcceptsExactlyNonnegativeFinitePowers) {
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double values[] = {-1.0, -1e-300, -0.0, 0.0, 1e-300, 3.5, inf, -inf, nan};
  for (int field = 0; field < 7; ++field) {
    for (double v : values) {
      double raw[7] = {1, 1, 2, 5, 5, 12, 12};
      raw[field] = v;
      const bool is_gain = field < 2;
      const bool ok = std::isfinite(v) && (is_gain || v >= 0.0);
      bool accepted = true;
      try {
        validate_config(raw[0], raw[1], raw[2], raw[3], raw[4], raw[5], raw[6]);
      } catch (const ValidationError&) {
        accepted = false;
      }
      EXPECT_EQ(accepted, ok) << "field " << field << " value " << v;
    }
  }
}

TEST(Model, NegativeGainsAllowed) {
  EXPECT_NO_THROW(validate_config(-1.5, -0.2, 2, 5, 5, 12, 12));
}

TEST(Model, BetaFromRhoExamples) {
  const auto c = fig2a();
  auto b = beta_from_rho(c, {0, 0});
  EXPECT_EQ(b.beta1, 0.0);
  EXPECT_EQ(b.beta2, 0.0);
  b = beta_from_rho(c, {1, 0});
  EXPECT_NEAR(b.beta1, std::sqrt(2.0 / 12.0), 1e-15);
  EXPECT_NEAR(b.beta1, 0.40825, 1e-5);
  EXPECT_EQ(b.beta2, 0.0);
  const auto z = validate_config(1, 1, 2, 5, 5, 0, 12);
  b = beta_from_rho(z, {0.5, 0});
  EXPECT_EQ(b.beta1, 0.0);
  EXPECT_EQ(b.beta2, 0.0);
}

TEST(Model, RhoFromBetaExamples) {
  auto r = rho_from_beta(fig2a(), 0, 0);
  EXPECT_EQ(r.rho1, 0.0);
  EXPECT_EQ(r.rho2, 0.0);
  r = rho_from_beta(fig2a(), 0.40825, 0);
  EXPECT_NEAR(r.rho1, 1.0, 1e-4);
  r = rho_from_beta(validate_config(1, 1, 50, 5, 5, 100, 100), 0.5, 0.5);
  EXPECT_NEAR(r.rho1, 0.5 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r.rho2, 0.5 * std::sqrt(2.0), 1e-15);
}

TEST(Model, RhoFromBetaWithoutHelperPower) {
  const auto c = validate_config(1, 1, 0, 5, 5, 12, 12);
  try {
    rho_from_beta(c, 0.1, 0);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "helper has no power");
  }
  EXPECT_NO_THROW(rho_from_beta(c, 0, 0));
}

TEST(Model, BetaRhoRoundTrip) {
  CaseGenerator gen(11);
  for (int i = 0; i < 10000; ++i) {
    auto c = gen.config();
    c.q1 = std::max(c.q1, 1e-3);
    c.q2 = std::max(c.q2, 1e-3);
    const auto rho = gen.disk_point();
    const auto b = beta_from_rho(c, rho);
    const auto back = rho_from_beta(c, b.beta1, b.beta2);
    ASSERT_NEAR(back.rho1, rho.rho1, 1e-12);
    ASSERT_NEAR(back.rho2, rho.rho2, 1e-12);
  }
}

TEST(Model, BetaFromRhoRespectsPowerOnDiskGrid) {
  for (const auto& c : pgc::test::figure_configs()) {
    for (int i = -50; i <= 50; ++i) {
      for (int j = -50; j <= 50; ++j) {
        CorrelationPoint rho{i / 50.0, j / 50.0};
        if (rho.norm2() > 1.0) continue;
        const auto b = beta_from_rho(c, rho);
        HelperStrategy s;
        s.beta1 = b.beta1;
        s.beta2 = b.beta2;
        ASSERT_NO_THROW(validate_strategy(c, s));
        EXPECT_NEAR(b.beta1 * b.beta1 * c.q1 + b.beta2 * b.beta2 * c.q2, rho.norm2() * c.p0, 1e-12);
        EXPECT_GE(s.p0_prime(c), 0.0);
      }
    }
  }
}

TEST(Model, StrategyValidation) {
  const auto c = fig2a();
  HelperStrategy s;
  s.gamma = 1.5;
  EXPECT_THROW(validate_strategy(c, s), ValidationError);
  s.gamma = -0.1;
  EXPECT_THROW(validate_strategy(c, s), ValidationError);
  s.gamma = 0.3;
  s.beta1 = 0.5;  // 0.25 * 12 = 3 > 2
  EXPECT_THROW(validate_strategy(c, s), ValidationError);
  s.beta1 = std::sqrt(2.0 / 12.0);
  EXPECT_NO_THROW(validate_strategy(c, s));
  EXPECT_NEAR(s.p0_prime(c), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(s.gamma_bar(), 0.7);
}

TEST(Model, CorrelationValidation) {
  EXPECT_NO_THROW(validate_correlation({0.6, 0.8}));
  EXPECT_THROW(validate_correlation({0.8, 0.8}), ValidationError);
  EXPECT_THROW(validate_correlation({std::nan(""), 0.0}), ValidationError);
}

TEST(Model, RoleSwap) {
  const auto c = validate_config(0.8, 1, 2, 5, 5, 12, 12);
  EXPECT_EQ(role_swap(c), validate_config(1, 0.8, 2, 5, 5, 12, 12));
  EXPECT_EQ(role_swap(role_swap(c)), c);
  EXPECT_EQ(role_swap(fig2a()), fig2a());
  const auto d = validate_config(0.3, -2, 7, 1, 3, 4, 9);
  EXPECT_EQ(role_swap(d), validate_config(-2, 0.3, 7, 3, 1, 9, 4));
}
