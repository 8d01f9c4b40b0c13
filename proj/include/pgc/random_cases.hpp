#pragma once

// Seeded random channel configurations and helper strategies for sweeps.

#include <cmath>
#include <numbers>
#include <cstdint>
#include <random>

#include "pgc/model.hpp"

namespace pgc {

class CaseGenerator {
 public:
  explicit CaseGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Gains in +-[0.1, 2], helper power in (0, 60], user powers in [0.1, 20],
  /// state powers in [0, 120]. No zero-power corner cases.
  ChannelConfig config() {
    auto gain = [&] {
      const double m = uni(0.1, 2.0);
      return coin() ? m : -m;
    };
    const double e1 = gain(), e2 = gain();
    return validate_config(e1, e2, uni(0.05, 60.0), uni(0.1, 20.0), uni(0.1, 20.0), uni(0.0, 120.0),
                           uni(0.0, 120.0));
  }

  /// Uniform point of the closed unit disk.
  CorrelationPoint disk_point() {
    const double r = std::sqrt(uni(0.0, 1.0));
    const double phi = uni(0.0, 2.0 * std::numbers::pi);
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  /// Random strategy for `cfg`: correlations uniform in the disk, gamma in
  /// [0,1], auxiliary coefficients in [-2, 2].
  HelperStrategy strategy(const ChannelConfig& cfg) {
    HelperStrategy s = strategy_from_rho(cfg, disk_point(), uni(0.0, 1.0));
    s.alpha11 = uni(-2.0, 2.0);
    s.alpha12 = uni(-2.0, 2.0);
    s.alpha20 = uni(-2.0, 2.0);
    s.alpha21 = uni(-2.0, 2.0);
    s.alpha22 = uni(-2.0, 2.0);
    return s;
  }

  double uni(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return std::bernoulli_distribution(0.5)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pgc
