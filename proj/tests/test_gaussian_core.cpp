#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "support.hpp"

using namespace pgc;
using pgc::test::fig2a;
using pgc::test::plain;
using enum pgc::Var;

namespace {

Eigen::MatrixXd block(const CovarianceMatrix& cov, const std::vector<Var>& vars) {
  Eigen::MatrixXd m(vars.size(), vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = 0; j < vars.size(); ++j) m(i, j) = cov(vars[i], vars[j]);
  }
  return m;
}

// Plain determinant formula, valid for nonsingular blocks.
double eigen_mi(const CovarianceMatrix& cov, std::vector<Var> a, std::vector<Var> b) {
  std::vector<Var> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  const double la = std::log(block(cov, a).determinant());
  const double lb = std::log(block(cov, b).determinant());
  const double lab = std::log(block(cov, ab).determinant());
  return 0.5 * (la + lb - lab) / std::log(2.0);
}

}  // namespace

TEST(GaussianCore, CovarianceExamples) {
  const auto c = fig2a();
  auto s = plain(1.0);
  s.alpha11 = 1.0;
  const auto cov = build_joint_covariance(c, s);
  EXPECT_NEAR(cov(Y1, Y1), 20.0, 1e-12);
  EXPECT_EQ(cov(X0, S1), 0.0);
  EXPECT_NEAR(cov(U, Y1), 14.0, 1e-12);
  for (int i = 0; i < kNumVars; ++i) {
    for (int j = 0; j < kNumVars; ++j) EXPECT_EQ(cov.at(i, j), cov.at(j, i));
  }
}

TEST(GaussianCore, CovarianceMatchesChannelEquation) {
  CaseGenerator gen(3);
  for (int i = 0; i < 2000; ++i) {
    const auto c = gen.config();
    const auto s = gen.strategy(c);
    const auto cov = build_joint_covariance(c, s);
    // Var(Y1) = eta1^2 Var(X0) + 2 eta1 Cov(X0,S1) + Q1 + P1 + 1
    const double vy1 = c.eta1 * c.eta1 * cov(X0, X0) + 2 * c.eta1 * cov(X0, S1) + c.q1 + c.p1 + 1.0;
    EXPECT_NEAR(cov(Y1, Y1), vy1, 1e-9 * vy1);
    EXPECT_NEAR(cov(X0, X0), c.p0, 1e-9 * std::max(1.0, c.p0));
    EXPECT_NEAR(cov(X0, S1), s.beta1 * c.q1, 1e-9 * std::max(1.0, c.q1));
    EXPECT_EQ(cov(S1, S2), 0.0);
    EXPECT_EQ(cov(X1, S1), 0.0);
  }
}

TEST(GaussianCore, RejectsInvalidStrategy) {
  EXPECT_THROW(build_joint_covariance(fig2a(), plain(1.0, 1.0, 0.0)), ValidationError);
}

TEST(GaussianCore, PositiveSemidefiniteOnRandomDraws) {
  CaseGenerator gen(5);
  for (int i = 0; i < 10000; ++i) {
    const auto c = gen.config();
    const auto cov = build_joint_covariance(c, gen.strategy(c));
    Eigen::MatrixXd m(kNumVars, kNumVars);
    for (int a = 0; a < kNumVars; ++a) {
      for (int b = 0; b < kNumVars; ++b) m(a, b) = cov.at(a, b);
    }
    const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().minCoeff();
    ASSERT_GE(lmin, -1e-9 * std::max(1.0, cov.max_diagonal()));
    for (int a = 0; a < kNumVars; ++a) ASSERT_GE(cov.at(a, a), 0.0);
  }
}

TEST(GaussianCore, MutualInformationExamples) {
  const auto c = fig2a();
  auto s = plain(1.0);
  s.alpha11 = 2.0 / 3.0;
  const auto cov = build_joint_covariance(c, s);
  EXPECT_EQ(gaussian_mi(cov, {X1}, {S1}), 0.0);
  EXPECT_EQ(gaussian_mi(cov, {S1}, {S2}), 0.0);
  EXPECT_NEAR(gaussian_mi(cov, {X1}, {Y1}), 0.5 * std::log2(20.0 / 15.0), 1e-12);
  EXPECT_NEAR(gaussian_mi(cov, {X1}, {Y1}), 0.20752, 1e-5);
  EXPECT_NEAR(gaussian_cmi(cov, {X1}, {Y1}, {U}), 0.5 * std::log2(14.0 / 3.0), 1e-12);
  EXPECT_EQ(gaussian_cmi(cov, {S1}, {S2}, {X0}), 0.0);
  EXPECT_EQ(gaussian_cmi(cov, {X1}, {Y1}, {}), gaussian_mi(cov, {X1}, {Y1}));
}

TEST(GaussianCore, SetPreconditions) {
  const auto cov = build_joint_covariance(fig2a(), plain(1.0));
  EXPECT_THROW(gaussian_mi(cov, {X1, S1}, {S1}), ValidationError);
  EXPECT_THROW(gaussian_cmi(cov, {X1}, {Y1}, {Y1}), ValidationError);
  EXPECT_THROW(gaussian_mi(cov, {}, {Y1}), ValidationError);
}

TEST(GaussianCore, AgreesWithDeterminantFormula) {
  CaseGenerator gen(9);
  for (int i = 0; i < 2000; ++i) {
    const auto c = gen.config();
    auto s = gen.strategy(c);
    s.gamma = std::clamp(s.gamma, 0.05, 0.95);
    const auto cov = build_joint_covariance(c, s);
    EXPECT_NEAR(gaussian_mi(cov, {U, X1}, {Y1}), eigen_mi(cov, {U, X1}, {Y1}), 1e-8);
    EXPECT_NEAR(gaussian_mi(cov, {V}, {U, S1, S2}), eigen_mi(cov, {V}, {U, S1, S2}), 1e-8);
    EXPECT_NEAR(gaussian_mi(cov, {X2}, {Y2}), eigen_mi(cov, {X2}, {Y2}), 1e-8);
  }
}

TEST(GaussianCore, SymmetricAndNonnegative) {
  CaseGenerator gen(13);
  for (int i = 0; i < 2000; ++i) {
    const auto c = gen.config();
    const auto cov = build_joint_covariance(c, gen.strategy(c));
    const double ab = gaussian_mi(cov, {U, X1}, {Y1, S2});
    EXPECT_NEAR(ab, gaussian_mi(cov, {Y1, S2}, {U, X1}), 1e-9);
    EXPECT_GE(ab, 0.0);
    EXPECT_GE(gaussian_cmi(cov, {X2}, {Y2}, {V}), 0.0);
  }
}

TEST(GaussianCore, ConstantVariableCarriesNoInformation) {
  // beta = 0, gamma = 1, all alphas zero: V~ is identically zero.
  const auto cov = build_joint_covariance(fig2a(), plain(1.0));
  EXPECT_EQ(cov(V, V), 0.0);
  EXPECT_EQ(gaussian_mi(cov, {V}, {U, S1, S2}), 0.0);
  EXPECT_NEAR(gaussian_cmi(cov, {X2}, {Y2}, {V}), gaussian_mi(cov, {X2}, {Y2}), 1e-15);
}

TEST(GaussianCore, DeterministicRelationIsInfinite) {
  // gamma = 1: V~ = eta2*alpha20*X01' + a21 S1 + a22 S2 is a function of (U~, S1, S2).
  auto s = plain(1.0);
  s.alpha20 = 0.7;
  s.alpha21 = 0.2;
  const auto cov = build_joint_covariance(fig2a(), s);
  EXPECT_TRUE(std::isinf(gaussian_mi(cov, {V}, {U, S1, S2})));
}

TEST(GaussianCore, ScaleInvariance) {
  CaseGenerator gen(17);
  for (int i = 0; i < 1000; ++i) {
    const auto c = gen.config();
    const auto cov = build_joint_covariance(c, gen.strategy(c));
    const double k = gen.coin() ? gen.uni(0.01, 50.0) : -gen.uni(0.01, 50.0);
    for (Var aux : {U, V}) {
      const auto sc = cov.scaled(aux, k);
      const auto t0 = remark1_terms(cov);
      const auto t1 = remark1_terms(sc);
      EXPECT_NEAR(t0.dpc1, t1.dpc1, 1e-9);
      EXPECT_NEAR(t0.dec1, t1.dec1, 1e-9);
      EXPECT_NEAR(t0.dpc2, t1.dpc2, 1e-9);
      EXPECT_NEAR(t0.dec2, t1.dec2, 1e-9);
      EXPECT_NEAR(gaussian_cmi(cov, {V}, {U}, {S1, S2}), gaussian_cmi(sc, {V}, {U}, {S1, S2}), 1e-9);
    }
  }
}

TEST(GaussianCore, Remark1Examples) {
  const auto c = fig2a();
  auto s = with_alpha(plain(1.0), Alpha1{2.0 / 3.0, 0.0});
  EXPECT_NEAR(remark1_rates(c, s).r1, 1.0, 1e-12);

  const auto h = with_dpc_alphas(c, plain(0.5));
  const auto r = remark1_rates(c, h);
  EXPECT_NEAR(r.r1, 0.5, 1e-12);
  EXPECT_NEAR(r.r2, 0.5 * std::log2(8.0 / 3.0), 1e-12);
}

TEST(GaussianCore, GammaOneLeavesUserTwoNothing) {
  // V~ depends on (U~, S) only; any non-constant choice gives r2 = 0.
  const auto c = fig2a();
  auto s = with_alpha(plain(1.0), Alpha1{2.0 / 3.0, 0.0});
  s = with_alpha(s, alpha2_cancel(c, 0, 0));
  EXPECT_EQ(remark1_rates(c, s).r2, 0.0);
}

TEST(GaussianCore, Prop2Examples) {
  const auto c = fig2a();
  const auto h = with_dpc_alphas(c, plain(0.5));
  const auto p = prop2_bounds(c, h);
  const auto t = remark1_terms(build_joint_covariance(c, h));
  EXPECT_NEAR(p.b1, t.rate1(), 1e-15);
  // golden value from the log-det evaluation
  EXPECT_NEAR(p.bsum, 1.20751874963942, 1e-12);
  EXPECT_LE(t.rate1() + t.rate2(), p.bsum + 1e-9);

  // V~ = eta2 X02' is independent of (U~, S): the binning term vanishes and
  // the sum bound is the smaller of the two summed user bounds.
  auto ind = with_alpha(plain(0.5), Alpha1{0.4, 0.1});
  const auto cov = build_joint_covariance(c, ind);
  EXPECT_EQ(gaussian_cmi(cov, {V}, {U}, {S1, S2}), 0.0);
  const auto q = prop2_bounds(c, ind);
  const auto u = remark1_terms(cov);
  EXPECT_NEAR(q.bsum, std::min(u.dpc1 + u.dpc2, u.dec1 + u.dec2), 1e-12);
  EXPECT_GE(q.bsum, q.b1 + q.b2 - 1e-12);
}

TEST(GaussianCore, ChainRuleAndSumRate) {
  CaseGenerator gen(21);
  for (int i = 0; i < 2000; ++i) {
    const auto c = gen.config();
    const auto s = gen.strategy(c);
    const auto cov = build_joint_covariance(c, s);
    EXPECT_NEAR(gaussian_mi(cov, {V}, {U, S1, S2}),
                gaussian_mi(cov, {V}, {S1, S2}) + gaussian_cmi(cov, {V}, {U}, {S1, S2}), 1e-9);
    const auto t = remark1_terms(cov);
    EXPECT_LE(t.rate1() + t.rate2(), prop2_bounds(c, s).bsum + 1e-9);
  }
}
