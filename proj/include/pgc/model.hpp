#pragma once

// Domain types for the two-user parallel Gaussian channel with a
// state-cognitive helper:
//
//   Y1 = eta1*X0 + X1 + S1 + Z1
//   Y2 = eta2*X0 + X2 + S2 + Z2
//
// with unit-variance noise, independent Gaussian states S_j ~ N(0, Q_j)
// known noncausally to the helper (input X0, power P0), and users X_k with
// power P_k.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace pgc {

/// Raised when an input violates a domain invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical result contradicts a mathematical invariant
/// (e.g. a mutual information that comes out clearly negative).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Threshold below which a variance or numerator is treated as zero.
inline constexpr double kDegenerate = 1e-12;

inline constexpr double kLn2 = 0.69314718055994530942;

/// 0.5 * log2(x).
inline double half_log2(double x) { return 0.5 * std::log2(x); }

struct ChannelConfig {
  double eta1 = 1.0;
  double eta2 = 1.0;
  double p0 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;

  double eta(int k) const { return k == 1 ? eta1 : eta2; }
  double p(int k) const { return k == 1 ? p1 : p2; }
  double q(int k) const { return k == 1 ? q1 : q2; }

  friend bool operator==(const ChannelConfig&, const ChannelConfig&) = default;
};

/// Validates the seven raw channel parameters. Powers must be nonnegative,
/// everything finite. Gains may take any real value.
inline ChannelConfig validate_config(double eta1, double eta2, double p0, double p1,
                                     double p2, double q1, double q2) {
  const std::pair<const char*, double> fields[] = {
      {"eta1", eta1}, {"eta2", eta2}, {"p0", p0}, {"p1", p1},
      {"p2", p2},     {"q1", q1},     {"q2", q2}};
  for (const auto& [name, v] : fields) {
    if (!std::isfinite(v)) throw ValidationError(std::string(name) + " not finite");
  }
  for (const auto& [name, v] : fields) {
    if (name[0] != 'e' && v < 0.0) throw ValidationError(std::string(name) + " negative");
  }
  return ChannelConfig{eta1, eta2, p0, p1, p2, q1, q2};
}

inline ChannelConfig validate_config(const ChannelConfig& c) {
  return validate_config(c.eta1, c.eta2, c.p0, c.p1, c.p2, c.q1, c.q2);
}

/// Free parameters of the Gaussian inner-bound construction. The helper
/// signal is X0 = X01' + X02' + beta1*S1 + beta2*S2 where X01' carries the
/// share gamma of the residual power P0' used to build user 1's auxiliary.
struct HelperStrategy {
  double alpha11 = 0.0;
  double alpha12 = 0.0;
  double alpha20 = 0.0;
  double alpha21 = 0.0;
  double alpha22 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double gamma = 1.0;

  double gamma_bar() const { return 1.0 - gamma; }

  /// Helper power left after direct state cancellation. Tiny negative
  /// values from rounding at the constraint boundary are clamped to zero.
  double p0_prime(const ChannelConfig& cfg) const {
    const double r = cfg.p0 - beta1 * beta1 * cfg.q1 - beta2 * beta2 * cfg.q2;
    return r > 0.0 ? r : 0.0;
  }

  double beta(int k) const { return k == 1 ? beta1 : beta2; }

  friend bool operator==(const HelperStrategy&, const HelperStrategy&) = default;
};

/// Throws ValidationError unless gamma in [0,1], all parameters finite and
/// beta1^2 Q1 + beta2^2 Q2 <= P0 (relative slack 1e-12).
inline void validate_strategy(const ChannelConfig& cfg, const HelperStrategy& s) {
  const double v[] = {s.alpha11, s.alpha12, s.alpha20, s.alpha21,
                      s.alpha22, s.beta1,   s.beta2,   s.gamma};
  for (double x : v) {
    if (!std::isfinite(x)) throw ValidationError("strategy parameter not finite");
  }
  if (s.gamma < 0.0 || s.gamma > 1.0) throw ValidationError("gamma outside [0,1]");
  const double used = s.beta1 * s.beta1 * cfg.q1 + s.beta2 * s.beta2 * cfg.q2;
  if (used > cfg.p0 * (1.0 + 1e-12) + 1e-300) {
    throw ValidationError("helper power constraint violated");
  }
}

/// Normalized correlations between X0 and (S1, S2).
struct CorrelationPoint {
  double rho1 = 0.0;
  double rho2 = 0.0;

  double norm2() const { return rho1 * rho1 + rho2 * rho2; }
  double rho(int k) const { return k == 1 ? rho1 : rho2; }
};

inline void validate_correlation(const CorrelationPoint& r) {
  if (!std::isfinite(r.rho1) || !std::isfinite(r.rho2)) {
    throw ValidationError("correlation not finite");
  }
  if (r.norm2() > 1.0 + 1e-12) throw ValidationError("correlation outside unit disk");
}

struct RatePair {
  double r1 = 0.0;
  double r2 = 0.0;

  friend bool operator==(const RatePair&, const RatePair&) = default;
};

struct BetaPair {
  double beta1 = 0.0;
  double beta2 = 0.0;
};

/// beta_j = rho_j * sqrt(P0 / Q_j); zero when Q_j = 0 (nothing to cancel).
inline BetaPair beta_from_rho(const ChannelConfig& cfg, const CorrelationPoint& rho) {
  auto one = [&](double r, double q) { return q > 0.0 ? r * std::sqrt(cfg.p0 / q) : 0.0; };
  return {one(rho.rho1, cfg.q1), one(rho.rho2, cfg.q2)};
}

/// Inverse of beta_from_rho: rho_j = beta_j * sqrt(Q_j / P0).
inline CorrelationPoint rho_from_beta(const ChannelConfig& cfg, double beta1, double beta2) {
  if (cfg.p0 <= 0.0) {
    if (beta1 != 0.0 || beta2 != 0.0) throw ValidationError("helper has no power");
    return {};
  }
  return {beta1 * std::sqrt(cfg.q1 / cfg.p0), beta2 * std::sqrt(cfg.q2 / cfg.p0)};
}

/// Exchanges the roles of users 1 and 2.
inline ChannelConfig role_swap(const ChannelConfig& c) {
  return ChannelConfig{c.eta2, c.eta1, c.p0, c.p2, c.p1, c.q2, c.q1};
}

/// Strategy with the given correlations and split, auxiliaries zero.
inline HelperStrategy strategy_from_rho(const ChannelConfig& cfg, const CorrelationPoint& rho,
                                        double gamma) {
  const auto b = beta_from_rho(cfg, rho);
  HelperStrategy s;
  s.beta1 = b.beta1;
  s.beta2 = b.beta2;
  s.gamma = gamma;
  return s;
}

}  // namespace pgc
