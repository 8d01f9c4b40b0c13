#pragma once

// Exact second-order description of the Gaussian inner-bound construction and
// log-determinant evaluation of the mutual-information terms that define the
// discrete-memoryless inner bound. Everything in closed_form.hpp is checked
// against this module.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>

#include "pgc/model.hpp"

namespace pgc {

/// Canonical variable order. U and V are the auxiliaries scaled by eta1 and
/// eta2 respectively (U~ = eta1*U, V~ = eta2*V); scaling an auxiliary leaves
/// every information quantity unchanged.
enum class Var : int { U = 0, V, X0, X1, X2, S1, S2, Y1, Y2 };

inline constexpr int kNumVars = 9;

inline constexpr std::array<const char*, kNumVars> kVarNames = {
    "U", "V", "X0", "X1", "X2", "S1", "S2", "Y1", "Y2"};

class VariableSet {
 public:
  constexpr VariableSet() = default;
  constexpr VariableSet(std::initializer_list<Var> vars) {
    for (Var v : vars) mask_ |= bit(v);
  }

  constexpr bool contains(Var v) const { return (mask_ & bit(v)) != 0; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool disjoint(VariableSet o) const { return (mask_ & o.mask_) == 0; }
  constexpr VariableSet operator|(VariableSet o) const { return from_mask(mask_ | o.mask_); }
  constexpr std::uint16_t mask() const { return mask_; }

  constexpr int size() const {
    int n = 0;
    for (int i = 0; i < kNumVars; ++i) n += (mask_ >> i) & 1;
    return n;
  }

 private:
  static constexpr std::uint16_t bit(Var v) {
    return static_cast<std::uint16_t>(1u << static_cast<int>(v));
  }
  static constexpr VariableSet from_mask(std::uint16_t m) {
    VariableSet s;
    s.mask_ = m;
    return s;
  }
  std::uint16_t mask_ = 0;
};

/// Symmetric 9x9 covariance over the canonical variables.
class CovarianceMatrix {
 public:
  double operator()(Var a, Var b) const { return at(static_cast<int>(a), static_cast<int>(b)); }
  double at(int i, int j) const { return static_cast<double>(m_[i * kNumVars + j]); }
  long double extended(int i, int j) const { return m_[i * kNumVars + j]; }
  void set(int i, int j, long double v) {
    m_[i * kNumVars + j] = v;
    m_[j * kNumVars + i] = v;
  }

  /// Multiplies row and column of `v` by c.
  CovarianceMatrix scaled(Var v, double c) const {
    CovarianceMatrix out = *this;
    const int k = static_cast<int>(v);
    for (int j = 0; j < kNumVars; ++j) {
      out.m_[k * kNumVars + j] *= c;
      out.m_[j * kNumVars + k] *= c;
    }
    return out;
  }

  double max_diagonal() const {
    double m = 0.0;
    for (int i = 0; i < kNumVars; ++i) m = std::max(m, at(i, i));
    return m;
  }

 private:
  // extended precision: conditional variances can be tiny differences of
  // large entries
  std::array<long double, kNumVars * kNumVars> m_{};
};

namespace detail {

// Latent generators: X01', X02', X1, X2, S1, S2, Z1, Z2.
inline constexpr int kNumGenerators = 8;

struct LinearModel {
  std::array<double, kNumGenerators> variance{};
  std::array<std::array<double, kNumGenerators>, kNumVars> loading{};
};

inline LinearModel linear_model(const ChannelConfig& cfg, const HelperStrategy& s) {
  LinearModel lm;
  const double p0p = s.p0_prime(cfg);
  lm.variance = {s.gamma * p0p, s.gamma_bar() * p0p, cfg.p1, cfg.p2, cfg.q1, cfg.q2, 1.0, 1.0};
  auto& L = lm.loading;
  L[0] = {cfg.eta1, 0, 0, 0, s.alpha11, s.alpha12, 0, 0};
  L[1] = {cfg.eta2 * s.alpha20, cfg.eta2, 0, 0, s.alpha21, s.alpha22, 0, 0};
  L[2] = {1, 1, 0, 0, s.beta1, s.beta2, 0, 0};
  L[3] = {0, 0, 1, 0, 0, 0, 0, 0};
  L[4] = {0, 0, 0, 1, 0, 0, 0, 0};
  L[5] = {0, 0, 0, 0, 1, 0, 0, 0};
  L[6] = {0, 0, 0, 0, 0, 1, 0, 0};
  for (int g = 0; g < kNumGenerators; ++g) {
    L[7][g] = cfg.eta1 * L[2][g];
    L[8][g] = cfg.eta2 * L[2][g];
  }
  L[7][2] += 1.0;
  L[7][4] += 1.0;
  L[7][6] += 1.0;
  L[8][3] += 1.0;
  L[8][5] += 1.0;
  L[8][7] += 1.0;
  return lm;
}

}  // namespace detail

/// Covariance of (U~, V~, X0, X1, X2, S1, S2, Y1, Y2) under the Gaussian
/// construction with independent generators.
inline CovarianceMatrix build_joint_covariance(const ChannelConfig& cfg, const HelperStrategy& s) {
  validate_strategy(cfg, s);
  const auto lm = detail::linear_model(cfg, s);
  CovarianceMatrix c;
  for (int i = 0; i < kNumVars; ++i) {
    for (int j = i; j < kNumVars; ++j) {
      long double acc = 0.0L;
      for (int g = 0; g < detail::kNumGenerators; ++g) {
        acc += static_cast<long double>(lm.loading[i][g]) * lm.loading[j][g] * lm.variance[g];
      }
      c.set(i, j, acc);
    }
  }
  return c;
}

namespace detail {

struct RankLogDet {
  int rank = 0;
  long double logdet = 0.0;  // natural log of the pseudo-determinant
};

// Rank and pseudo-log-determinant of Sigma_{A|C}, obtained by pivoted
// symmetric elimination of C followed by pivoted factorization of the A
// block. Pivots at or below `tol` are treated as exact zeros.
inline RankLogDet conditional_rank_logdet(const CovarianceMatrix& cov, VariableSet a,
                                          VariableSet c, double tol) {
  std::array<int, kNumVars> idx{};
  std::array<bool, kNumVars> is_cond{};
  int m = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (c.contains(static_cast<Var>(i))) {
      idx[m] = i;
      is_cond[m] = true;
      ++m;
    }
  }
  for (int i = 0; i < kNumVars; ++i) {
    if (a.contains(static_cast<Var>(i))) idx[m++] = i;
  }
  // extended precision: conditioning sets can be nearly singular
  std::array<std::array<long double, kNumVars>, kNumVars> w{};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) w[i][j] = cov.extended(idx[i], idx[j]);
  }
  std::array<bool, kNumVars> done{};

  auto eliminate = [&](int p) {
    const long double d = w[p][p];
    for (int i = 0; i < m; ++i) {
      if (done[i] || i == p) continue;
      const long double f = w[i][p] / d;
      if (f == 0.0) continue;
      for (int j = 0; j < m; ++j) {
        if (done[j] || j == p) continue;
        w[i][j] -= f * w[p][j];
      }
    }
    done[p] = true;
  };
  auto pick = [&](bool cond) {
    int best = -1;
    long double best_v = tol;
    for (int i = 0; i < m; ++i) {
      if (done[i] || is_cond[i] != cond) continue;
      if (w[i][i] > best_v) {
        best_v = w[i][i];
        best = i;
      }
    }
    return best;
  };

  for (int p = pick(true); p >= 0; p = pick(true)) eliminate(p);
  RankLogDet out;
  for (int p = pick(false); p >= 0; p = pick(false)) {
    out.logdet += std::log(w[p][p]);
    ++out.rank;
    eliminate(p);
  }
  return out;
}

inline double clamp_information(double v) {
  if (v < -1e-9) throw ConsistencyError("mutual information evaluated negative");
  return v < 0.0 ? 0.0 : v;
}

}  // namespace detail

/// I(A;B|C) in bits. Constant coordinates are dropped; a deterministic
/// relation between A and B given C yields +infinity.
inline double gaussian_cmi(const CovarianceMatrix& cov, VariableSet a, VariableSet b,
                           VariableSet c) {
  if (a.empty() || b.empty()) throw ValidationError("empty variable set");
  if (!a.disjoint(b) || !a.disjoint(c) || !b.disjoint(c)) {
    throw ValidationError("variable sets overlap");
  }
  double scale = 1.0;
  const VariableSet all = a | b | c;
  for (int i = 0; i < kNumVars; ++i) {
    if (all.contains(static_cast<Var>(i))) scale = std::max(scale, cov.at(i, i));
  }
  const double tol = kDegenerate * scale;
  const auto given_c = detail::conditional_rank_logdet(cov, a, c, tol);
  const auto given_bc = detail::conditional_rank_logdet(cov, a, b | c, tol);
  if (given_bc.rank < given_c.rank) return std::numeric_limits<double>::infinity();
  return detail::clamp_information(static_cast<double>(0.5L * (given_c.logdet - given_bc.logdet)) / kLn2);
}

/// I(A;B) in bits.
inline double gaussian_mi(const CovarianceMatrix& cov, VariableSet a, VariableSet b) {
  return gaussian_cmi(cov, a, b, VariableSet{});
}

/// The four unclamped rate expressions of the Marton-type inner bound with
/// user 1's auxiliary encoded first.
struct Remark1Terms {
  double dpc1;  // I(U,X1;Y1) - I(U;S1,S2)
  double dec1;  // I(X1;Y1|U)
  double dpc2;  // I(V,X2;Y2) - I(V;U,S1,S2)
  double dec2;  // I(X2;Y2|V)

  double rate1() const { return std::min(dpc1, dec1); }
  double rate2() const { return std::min(dpc2, dec2); }
};

inline Remark1Terms remark1_terms(const CovarianceMatrix& cov) {
  using enum Var;
  Remark1Terms t{};
  t.dpc1 = gaussian_mi(cov, {U, X1}, {Y1}) - gaussian_mi(cov, {U}, {S1, S2});
  t.dec1 = gaussian_cmi(cov, {X1}, {Y1}, {U});
  t.dpc2 = gaussian_mi(cov, {V, X2}, {Y2}) - gaussian_mi(cov, {V}, {U, S1, S2});
  t.dec2 = gaussian_cmi(cov, {X2}, {Y2}, {V});
  return t;
}

/// Rate pair of the sequential (Marton-type) region for one strategy,
/// every term evaluated from the covariance, clamped at zero.
inline RatePair remark1_rates(const ChannelConfig& cfg, const HelperStrategy& s) {
  const auto t = remark1_terms(build_joint_covariance(cfg, s));
  return {std::max(0.0, t.rate1()), std::max(0.0, t.rate2())};
}

/// Individual and sum-rate bounds of the joint-decoding form of the inner
/// bound for one strategy (bits, unclamped).
struct Prop2Bounds {
  double b1;
  double b2;
  double bsum;
};

inline Prop2Bounds prop2_bounds(const ChannelConfig& cfg, const HelperStrategy& s) {
  using enum Var;
  const auto cov = build_joint_covariance(cfg, s);
  const double u_dpc = gaussian_mi(cov, {U, X1}, {Y1}) - gaussian_mi(cov, {U}, {S1, S2});
  const double u_dec = gaussian_cmi(cov, {X1}, {Y1}, {U});
  const double v_dpc = gaussian_mi(cov, {V, X2}, {Y2}) - gaussian_mi(cov, {V}, {S1, S2});
  const double v_dec = gaussian_cmi(cov, {X2}, {Y2}, {V});
  const double binning = gaussian_cmi(cov, {V}, {U}, {S1, S2});
  return {std::min(u_dpc, u_dec), std::min(v_dpc, v_dec),
          std::min(u_dpc + v_dpc - binning, u_dec + v_dec)};
}

}  // namespace pgc
