#pragma once

// Partition of the channel parameters into dirty-paper-tight (A),
// full-cancellation (C) and uncharacterized (B) cases per user, and the
// capacity-boundary segments they certify.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "pgc/closed_form.hpp"
#include "pgc/model.hpp"
#include "pgc/optimizer.hpp"
#include "pgc/outer_bound.hpp"

namespace pgc {

enum class SegmentClass { A, B, C };

inline std::string_view to_string(SegmentClass c) {
  switch (c) {
    case SegmentClass::A: return "A";
    case SegmentClass::B: return "B";
    case SegmentClass::C: return "C";
  }
  return "?";
}

inline constexpr double kClassTie = 1e-12;

/// f and g of user k at the dirty-paper and at the cancellation coefficients.
struct ClassEvidence {
  double f_dpc, g_dpc;
  double f_cancel, g_cancel;
};

inline ClassEvidence class_evidence(int k, const ChannelConfig& cfg, double beta1, double beta2,
                                    double gamma) {
  HelperStrategy s;
  s.beta1 = beta1;
  s.beta2 = beta2;
  s.gamma = gamma;
  validate_strategy(cfg, s);
  const auto dpc = k == 1 ? with_alpha(s, alpha1_dpc(cfg, beta1, beta2, gamma))
                          : with_alpha(s, alpha2_dpc(cfg, beta1, beta2, gamma));
  const auto cancel = k == 1 ? with_alpha(s, alpha1_cancel(cfg, beta1, beta2))
                             : with_alpha(s, alpha2_cancel(cfg, beta1, beta2));
  return {rate_f(k, cfg, dpc), rate_g(k, cfg, dpc), rate_f(k, cfg, cancel), rate_g(k, cfg, cancel)};
}

inline SegmentClass classify(const ClassEvidence& e) {
  if (e.f_dpc <= e.g_dpc + kClassTie) return SegmentClass::A;
  if (e.f_cancel >= e.g_cancel - kClassTie) return SegmentClass::C;
  return SegmentClass::B;
}

inline SegmentClass classify(int k, const ChannelConfig& cfg, double beta1, double beta2, double gamma) {
  return classify(class_evidence(k, cfg, beta1, beta2, gamma));
}

/// One classified (beta, gamma) witness for a user.
struct Witness {
  CorrelationPoint rho;
  double beta1 = 0.0, beta2 = 0.0, gamma = 1.0;
  SegmentClass cls = SegmentClass::B;
  ClassEvidence evidence{};
  std::optional<double> rate;  // characterized rate when cls is A or C
};

struct UserSegment {
  SegmentClass cls = SegmentClass::B;
  std::optional<double> rate;        // best characterized rate
  std::optional<Witness> witness;    // witness of `rate`
  std::optional<double> best_a_rate; // best dirty-paper-tight rate, even when C wins
  Witness reference;                 // the beta = 0 witness
  std::size_t witnesses_a = 0, witnesses_b = 0, witnesses_c = 0;
};

struct SegmentReport {
  UserSegment user1, user2;

  const UserSegment& user(int k) const { return k == 1 ? user1 : user2; }
};

namespace detail {

inline Witness make_witness(int k, const ChannelConfig& cfg, const CorrelationPoint& rho) {
  Witness w;
  w.rho = rho;
  const auto b = beta_from_rho(cfg, rho);
  w.beta1 = b.beta1;
  w.beta2 = b.beta2;
  w.gamma = k == 1 ? 1.0 : 0.0;
  w.evidence = class_evidence(k, cfg, w.beta1, w.beta2, w.gamma);
  w.cls = classify(w.evidence);
  if (w.cls == SegmentClass::A) w.rate = reduced_f(k, cfg, w.beta1, w.beta2, w.gamma);
  if (w.cls == SegmentClass::C) w.rate = half_log2(1.0 + cfg.p(k));
  return w;
}

inline UserSegment segment_for(int k, const ChannelConfig& cfg, const OptimizerBudget& budget) {
  std::vector<CorrelationPoint> cands;
  const int radii = 4 * budget.rho_grid;
  const int angles = 16 * budget.rho_grid;
  cands.push_back({0.0, 0.0});
  for (int i = 1; i <= radii; ++i) {
    const double r = static_cast<double>(i) / radii;
    for (int j = 0; j < angles; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / angles;
      cands.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
  }
  // The dirty-paper-tight rate equals the outer bound's first term, which
  // peaks with the other user's correlation at zero.
  const double kappa = cfg.eta(k) * std::sqrt(cfg.p0 * cfg.q(k));
  const double sign = kappa > 0.0 ? -1.0 : 1.0;
  auto along = [&](double r) {
    return k == 1 ? CorrelationPoint{sign * r, 0.0} : CorrelationPoint{0.0, sign * r};
  };
  const double r_star = scan_then_golden(
      [&](double r) { return outer_first_term(k, cfg, along(r)); }, 0.0, 1.0, 64 * budget.rho_grid + 1,
      1e-13).first;
  cands.push_back(along(r_star));

  UserSegment seg;
  seg.reference = make_witness(k, cfg, {0.0, 0.0});
  std::optional<Witness> best_a, any_c;
  for (const auto& rho : cands) {
    const auto w = make_witness(k, cfg, rho);
    switch (w.cls) {
      case SegmentClass::A:
        ++seg.witnesses_a;
        if (!best_a || *w.rate > *best_a->rate) best_a = w;
        break;
      case SegmentClass::B: ++seg.witnesses_b; break;
      case SegmentClass::C:
        ++seg.witnesses_c;
        if (!any_c) any_c = w;
        break;
    }
  }
  if (best_a) seg.best_a_rate = best_a->rate;
  if (any_c) {
    seg.cls = SegmentClass::C;
    seg.rate = any_c->rate;
    seg.witness = any_c;
  } else if (best_a) {
    seg.cls = SegmentClass::A;
    seg.rate = best_a->rate;
    seg.witness = best_a;
  }
  return seg;
}

}  // namespace detail

/// Characterized capacity-boundary segments: user 1 is classified with
/// gamma = 1 and user 2 with gamma = 0 over a grid of correlation points
/// (plus the point maximizing the dirty-paper-tight rate).
inline SegmentReport capacity_segments(const ChannelConfig& cfg, const OptimizerBudget& budget = {}) {
  validate_budget(budget);
  return {detail::segment_for(1, cfg, budget), detail::segment_for(2, cfg, budget)};
}

}  // namespace pgc
