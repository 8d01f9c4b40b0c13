#pragma once

// Closed-form second-order statistics and rate expressions of the Gaussian
// inner bound, the special auxiliary coefficients (dirty-paper optimal and
// full-cancellation), the reduced dirty-paper rates, and the single-user
// helper rate used by the time-sharing baseline.
//
// Rates are in bits per channel use.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "pgc/model.hpp"
#include "pgc/optimizer.hpp"

namespace pgc {

struct SecondOrderStats {
  double sigma2_y1, sigma2_y2;
  double sigma2_y1_given_x1, sigma2_y2_given_x2;
  double sigma2_u1, sigma2_u2;
  double sigma_u1y1, sigma_u2y2;
  double h1, h2;

  double sigma2_y(int k) const { return k == 1 ? sigma2_y1 : sigma2_y2; }
  double sigma2_y_given_x(int k) const { return k == 1 ? sigma2_y1_given_x1 : sigma2_y2_given_x2; }
  double sigma2_u(int k) const { return k == 1 ? sigma2_u1 : sigma2_u2; }
  double sigma_uy(int k) const { return k == 1 ? sigma_u1y1 : sigma_u2y2; }
  double h(int k) const { return k == 1 ? h1 : h2; }
};

namespace detail {

// sum_{i<j} (a_i b_j - a_j b_i)^2 v_i v_j, the determinant of the 2x2
// covariance of a.W and b.W for independent W_i of variance v_i.
inline double gram_det(const std::array<double, 5>& a, const std::array<double, 5>& b,
                       const std::array<double, 5>& v) {
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      const double m = a[i] * b[j] - a[j] * b[i];
      sum += m * m * v[i] * v[j];
    }
  }
  return sum;
}

}  // namespace detail

inline SecondOrderStats second_order_stats(const ChannelConfig& cfg, const HelperStrategy& s) {
  validate_strategy(cfg, s);
  const double p0p = s.p0_prime(cfg);
  const double p01 = s.gamma * p0p;
  const double p02 = s.gamma_bar() * p0p;
  const double e1 = cfg.eta1, e2 = cfg.eta2;
  SecondOrderStats st{};
  st.sigma2_y1_given_x1 = e1 * e1 * cfg.p0 + (2.0 * s.beta1 * e1 + 1.0) * cfg.q1 + 1.0;
  st.sigma2_y2_given_x2 = e2 * e2 * cfg.p0 + (2.0 * s.beta2 * e2 + 1.0) * cfg.q2 + 1.0;
  st.sigma2_y1 = st.sigma2_y1_given_x1 + cfg.p1;
  st.sigma2_y2 = st.sigma2_y2_given_x2 + cfg.p2;
  st.sigma2_u1 = e1 * e1 * p01 + s.alpha11 * s.alpha11 * cfg.q1 + s.alpha12 * s.alpha12 * cfg.q2;
  st.sigma2_u2 = e2 * e2 * (p02 + s.alpha20 * s.alpha20 * p01) + s.alpha21 * s.alpha21 * cfg.q1 +
                 s.alpha22 * s.alpha22 * cfg.q2;
  st.sigma_u1y1 = e1 * e1 * p01 + (1.0 + s.beta1 * e1) * s.alpha11 * cfg.q1 +
                  s.alpha12 * s.beta2 * e1 * cfg.q2;
  st.sigma_u2y2 = e2 * e2 * (p02 + s.alpha20 * p01) + s.alpha22 * cfg.q2 * (1.0 + s.beta2 * e2) +
                  s.alpha21 * s.beta1 * e2 * cfg.q1;
  // h_k = sigma2_y|x * sigma2_u - sigma_uy^2, expanded over the independent
  // components (X01', X02', S1, S2, Z_k) so that no subtraction occurs.
  const std::array<double, 5> var{p01, p02, cfg.q1, cfg.q2, 1.0};
  st.h1 = detail::gram_det({e1, e1, 1.0 + e1 * s.beta1, e1 * s.beta2, 1.0},
                           {e1, 0.0, s.alpha11, s.alpha12, 0.0}, var);
  st.h2 = detail::gram_det({e2, e2, e2 * s.beta1, 1.0 + e2 * s.beta2, 1.0},
                           {e2 * s.alpha20, e2, s.alpha21, s.alpha22, 0.0}, var);
  return st;
}

namespace detail {

inline double degenerate_tol(const SecondOrderStats& st, int k) {
  return kDegenerate * std::max({1.0, st.sigma2_y(k), st.sigma2_u(k)});
}

// Variance of user k's auxiliary given everything it is binned against:
// (S1,S2) for user 1 and (U~,S1,S2) for user 2.
inline double residual_aux_variance(int k, const ChannelConfig& cfg, const HelperStrategy& s,
                                    double tol) {
  const double p0p = s.p0_prime(cfg);
  if (k == 1) return cfg.eta1 * cfg.eta1 * s.gamma * p0p;
  double v = cfg.eta2 * cfg.eta2 * s.gamma_bar() * p0p;
  // X01' is only removable through U~ when U~ actually carries it.
  if (cfg.eta1 * cfg.eta1 * s.gamma * p0p <= tol) {
    v += cfg.eta2 * cfg.eta2 * s.alpha20 * s.alpha20 * s.gamma * p0p;
  }
  return v;
}

}  // namespace detail

/// Dirty-paper term of user k: I(aux,X_k;Y_k) minus the binning cost.
/// Returns -infinity when the auxiliary is a nonconstant function of the
/// quantities it is binned against, and I(X_k;Y_k) when it is constant.
inline double rate_f(int k, const ChannelConfig& cfg, const HelperStrategy& s) {
  const auto st = second_order_stats(cfg, s);
  const double tol = detail::degenerate_tol(st, k);
  if (st.sigma2_u(k) <= tol) return half_log2(st.sigma2_y(k) / st.sigma2_y_given_x(k));
  const double num = detail::residual_aux_variance(k, cfg, s, tol);
  if (num <= tol) return -std::numeric_limits<double>::infinity();
  return half_log2(num * st.sigma2_y(k) / st.h(k));
}

/// Decoding term of user k: I(X_k;Y_k|aux).
inline double rate_g(int k, const ChannelConfig& cfg, const HelperStrategy& s) {
  const auto st = second_order_stats(cfg, s);
  const double pk = cfg.p(k);
  if (st.sigma2_u(k) <= detail::degenerate_tol(st, k)) {
    return half_log2(1.0 + pk / st.sigma2_y_given_x(k));
  }
  return half_log2(1.0 + pk * st.sigma2_u(k) / st.h(k));
}

struct Alpha1 {
  double a11 = 0.0;
  double a12 = 0.0;
};

struct Alpha2 {
  double a20 = 0.0;
  double a21 = 0.0;
  double a22 = 0.0;
};

inline double residual_power(const ChannelConfig& cfg, double beta1, double beta2) {
  return std::max(0.0, cfg.p0 - beta1 * beta1 * cfg.q1 - beta2 * beta2 * cfg.q2);
}

/// User 1's dirty-paper coefficients; maximize rate_f(1) over alpha_1.
inline Alpha1 alpha1_dpc(const ChannelConfig& cfg, double beta1, double beta2, double gamma) {
  const double p0p = residual_power(cfg, beta1, beta2);
  const double e = cfg.eta1;
  const double den = e * e * p0p + 1.0;
  return {(1.0 + e * beta1) * e * e * gamma * p0p / den, beta2 * e * e * e * gamma * p0p / den};
}

/// User 2's dirty-paper coefficients.
inline Alpha2 alpha2_dpc(const ChannelConfig& cfg, double beta1, double beta2, double gamma) {
  const double p0p = residual_power(cfg, beta1, beta2);
  const double e = cfg.eta2;
  const double share = e * e * (1.0 - gamma) * p0p;
  const double den = share + 1.0;
  return {share / den, beta1 * e * share / den, (1.0 + e * beta2) * share / den};
}

/// Coefficients that cancel the states completely at receiver 1 given U~.
inline Alpha1 alpha1_cancel(const ChannelConfig& cfg, double beta1, double beta2) {
  return {1.0 + cfg.eta1 * beta1, cfg.eta1 * beta2};
}

inline Alpha2 alpha2_cancel(const ChannelConfig& cfg, double beta1, double beta2) {
  return {1.0, cfg.eta2 * beta1, 1.0 + cfg.eta2 * beta2};
}

inline HelperStrategy with_alpha(HelperStrategy s, const Alpha1& a) {
  s.alpha11 = a.a11;
  s.alpha12 = a.a12;
  return s;
}

inline HelperStrategy with_alpha(HelperStrategy s, const Alpha2& a) {
  s.alpha20 = a.a20;
  s.alpha21 = a.a21;
  s.alpha22 = a.a22;
  return s;
}

/// Both users' dirty-paper coefficients for the strategy's beta and gamma.
inline HelperStrategy with_dpc_alphas(const ChannelConfig& cfg, HelperStrategy s) {
  s = with_alpha(s, alpha1_dpc(cfg, s.beta1, s.beta2, s.gamma));
  return with_alpha(s, alpha2_dpc(cfg, s.beta1, s.beta2, s.gamma));
}

inline HelperStrategy with_cancel_alphas(const ChannelConfig& cfg, HelperStrategy s) {
  s = with_alpha(s, alpha1_cancel(cfg, s.beta1, s.beta2));
  return with_alpha(s, alpha2_cancel(cfg, s.beta1, s.beta2));
}

/// rate_f(k) evaluated at the dirty-paper coefficients, in reduced form.
inline double reduced_f(int k, const ChannelConfig& cfg, double beta1, double beta2, double gamma) {
  const double p0p = residual_power(cfg, beta1, beta2);
  const double e = cfg.eta(k);
  const double bq = k == 1 ? beta1 * cfg.q1 : beta2 * cfg.q2;
  const double interference = e * e * cfg.p0 + 2.0 * e * bq + cfg.q(k) + 1.0;
  const double first = half_log2(1.0 + cfg.p(k) / interference);
  if (k == 1) {
    return first + half_log2(1.0 + e * e * gamma * p0p / (1.0 + e * e * (1.0 - gamma) * p0p));
  }
  return first + half_log2(1.0 + e * e * (1.0 - gamma) * p0p);
}

/// Achievable rate of user k: min(f_k, g_k), unclamped.
inline double user_rate(int k, const ChannelConfig& cfg, const HelperStrategy& s) {
  return std::min(rate_f(k, cfg, s), rate_g(k, cfg, s));
}

namespace detail {

inline std::array<double, 3> alpha_vec(int k, const HelperStrategy& s) {
  if (k == 1) return {s.alpha11, s.alpha12, 0.0};
  return {s.alpha20, s.alpha21, s.alpha22};
}

inline HelperStrategy set_alpha_vec(int k, HelperStrategy s, const std::array<double, 3>& a) {
  if (k == 1) {
    s.alpha11 = a[0];
    s.alpha12 = a[1];
  } else {
    s.alpha20 = a[0];
    s.alpha21 = a[1];
    s.alpha22 = a[2];
  }
  return s;
}

}  // namespace detail

/// Best auxiliary coefficients found for user k at fixed (beta, gamma).
struct UserChoice {
  double rate;              // min(f_k, g_k), unclamped
  HelperStrategy strategy;  // input strategy with user k's alphas replaced
};

/// Maximizes min(f_k, g_k) over user k's auxiliary coefficients. Candidates
/// are the dirty-paper and cancellation coefficients, the constant auxiliary,
/// and the f = g crossing on the segment between the first two; with
/// `polish_iterations` > 0 the best candidate is refined by a simplex search.
inline UserChoice best_user_alpha(int k, const ChannelConfig& cfg, const HelperStrategy& base,
                                  int polish_iterations = 0) {
  std::array<double, 3> a_dpc{}, a_cancel{};
  if (k == 1) {
    const auto a = alpha1_dpc(cfg, base.beta1, base.beta2, base.gamma);
    const auto b = alpha1_cancel(cfg, base.beta1, base.beta2);
    a_dpc = {a.a11, a.a12, 0.0};
    a_cancel = {b.a11, b.a12, 0.0};
  } else {
    const auto a = alpha2_dpc(cfg, base.beta1, base.beta2, base.gamma);
    const auto b = alpha2_cancel(cfg, base.beta1, base.beta2);
    a_dpc = {a.a20, a.a21, a.a22};
    a_cancel = {b.a20, b.a21, b.a22};
  }

  UserChoice best{-std::numeric_limits<double>::infinity(), base};
  auto consider = [&](const std::array<double, 3>& a) {
    const auto s = detail::set_alpha_vec(k, base, a);
    const double r = user_rate(k, cfg, s);
    if (r > best.rate) best = {r, s};
  };
  consider(a_dpc);
  consider(a_cancel);
  consider({0.0, 0.0, 0.0});

  auto along = [&](double t) {
    std::array<double, 3> a{};
    for (int i = 0; i < 3; ++i) a[i] = a_dpc[i] + t * (a_cancel[i] - a_dpc[i]);
    return a;
  };
  auto gap = [&](double t) {
    const auto s = detail::set_alpha_vec(k, base, along(t));
    return rate_f(k, cfg, s) - rate_g(k, cfg, s);
  };
  double lo = 0.0, hi = 1.0;
  if (gap(lo) > 0.0 && gap(hi) < 0.0) {
    for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (gap(mid) > 0.0 ? lo : hi) = mid;
    }
    consider(along(lo));
    consider(along(hi));
  }

  if (polish_iterations > 0) {
    const int dim = k == 1 ? 2 : 3;
    const auto start = detail::alpha_vec(k, best.strategy);
    std::vector<double> x0(start.begin(), start.begin() + dim);
    std::vector<double> step(dim);
    for (int i = 0; i < dim; ++i) step[i] = 0.05 * std::max(0.1, std::abs(x0[i]));
    auto obj = [&](const std::vector<double>& x) {
      std::array<double, 3> a{};
      for (int i = 0; i < dim; ++i) a[i] = x[i];
      return user_rate(k, cfg, detail::set_alpha_vec(k, base, a));
    };
    const auto opt = nelder_mead_maximize(obj, x0, step, polish_iterations);
    std::array<double, 3> a{};
    for (int i = 0; i < dim; ++i) a[i] = opt.x[i];
    consider(a);
  }
  return best;
}

/// Single-user helper-assisted rate and the strategy achieving it.
struct PointToPointResult {
  double rate;
  HelperStrategy strategy;
};

/// Best rate of user k when the helper assists only that user: the other
/// user's cancellation coefficient is 0 and gamma is 1 (k=1) or 0 (k=2), so
/// the whole residual power builds user k's auxiliary.
inline PointToPointResult pp_helper(int k, const ChannelConfig& cfg, const OptimizerBudget& budget = {}) {
  validate_budget(budget);
  const double gamma = k == 1 ? 1.0 : 0.0;
  const double qk = cfg.q(k);
  auto strategy_at = [&](double rho) {
    HelperStrategy s;
    s.gamma = gamma;
    const double beta = qk > 0.0 ? rho * std::sqrt(cfg.p0 / qk) : 0.0;
    (k == 1 ? s.beta1 : s.beta2) = beta;
    return s;
  };
  auto profile = [&](double rho) { return best_user_alpha(k, cfg, strategy_at(rho)).rate; };

  double rho_best = 0.0;
  if (qk > 0.0 && cfg.p0 > 0.0) {
    rho_best = scan_then_golden(profile, -1.0, 1.0, 16 * budget.rho_grid + 1).first;
  }
  const auto choice = best_user_alpha(k, cfg, strategy_at(rho_best), budget.max_iterations);
  return {std::max(0.0, choice.rate), choice.strategy};
}

inline double pp_helper_rate(int k, const ChannelConfig& cfg, const OptimizerBudget& budget = {}) {
  return pp_helper(k, cfg, budget).rate;
}

}  // namespace pgc
