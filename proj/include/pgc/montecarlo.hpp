#pragma once

// Seeded sampling of the joint Gaussian system, used to check the analytic
// covariance empirically.
//
// Random numbers come from a counter-based generator: the uniform for
// (seed, counter) is SplitMix64(seed ^ SplitMix64(counter)), so every sample
// index maps to fixed variates regardless of how the work is split.
// Gaussians use the Box-Muller transform on consecutive counter pairs.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <thread>
#include <vector>

#include "pgc/gaussian_core.hpp"
#include "pgc/model.hpp"

namespace pgc {

namespace mc {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Uniform in (0, 1) for the given seed and counter.
inline double uniform(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t bits = splitmix64(seed ^ splitmix64(counter));
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

inline constexpr std::size_t kChunk = 1u << 15;

struct Accumulator {
  std::array<double, kNumVars> sum{};
  std::array<double, kNumVars * kNumVars> cross{};
};

inline Accumulator sample_chunk(const detail::LinearModel& lm, std::uint64_t seed,
                                std::uint64_t first, std::uint64_t last) {
  Accumulator acc;
  std::array<double, detail::kNumGenerators> sd{};
  for (int g = 0; g < detail::kNumGenerators; ++g) sd[g] = std::sqrt(lm.variance[g]);
  std::array<double, detail::kNumGenerators> gen{};
  std::array<double, kNumVars> x{};
  for (std::uint64_t i = first; i < last; ++i) {
    const std::uint64_t base = i * detail::kNumGenerators;
    for (int p = 0; p < detail::kNumGenerators / 2; ++p) {
      const double u1 = uniform(seed, base + 2 * p);
      const double u2 = uniform(seed, base + 2 * p + 1);
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double t = 2.0 * std::numbers::pi * u2;
      gen[2 * p] = sd[2 * p] * r * std::cos(t);
      gen[2 * p + 1] = sd[2 * p + 1] * r * std::sin(t);
    }
    for (int v = 0; v < kNumVars; ++v) {
      double s = 0.0;
      for (int g = 0; g < detail::kNumGenerators; ++g) s += lm.loading[v][g] * gen[g];
      x[v] = s;
      acc.sum[v] += s;
    }
    for (int a = 0; a < kNumVars; ++a) {
      for (int b = a; b < kNumVars; ++b) acc.cross[a * kNumVars + b] += x[a] * x[b];
    }
  }
  return acc;
}

}  // namespace mc

/// Empirical (unbiased) covariance of n draws of the nine canonical
/// variables. Bitwise identical for any worker count.
inline CovarianceMatrix sample_empirical_covariance(const ChannelConfig& cfg, const HelperStrategy& s,
                                                    std::uint64_t n, std::uint64_t seed,
                                                    unsigned workers = 0) {
  if (n < 2) throw ValidationError("need at least 2 samples");
  validate_strategy(cfg, s);
  const auto lm = detail::linear_model(cfg, s);
  const std::size_t chunks = static_cast<std::size_t>((n + mc::kChunk - 1) / mc::kChunk);
  std::vector<mc::Accumulator> parts(chunks);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, chunks));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < chunks; c += workers) {
          const std::uint64_t first = c * mc::kChunk;
          parts[c] = mc::sample_chunk(lm, seed, first, std::min<std::uint64_t>(n, first + mc::kChunk));
        }
      });
    }
  }
  mc::Accumulator total;
  for (const auto& p : parts) {
    for (int v = 0; v < kNumVars; ++v) total.sum[v] += p.sum[v];
    for (std::size_t i = 0; i < total.cross.size(); ++i) total.cross[i] += p.cross[i];
  }
  const double nn = static_cast<double>(n);
  CovarianceMatrix out;
  for (int a = 0; a < kNumVars; ++a) {
    for (int b = a; b < kNumVars; ++b) {
      const double c = (total.cross[a * kNumVars + b] - total.sum[a] * total.sum[b] / nn) / (nn - 1.0);
      out.set(a, b, c);
    }
  }
  return out;
}

struct McReport {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  double tol_rel = 0.0;
  bool pass = false;
};

/// Compares the empirical covariance with build_joint_covariance. The
/// relative error of entry (i,j) is measured against the natural scale
/// max(sqrt(C_ii C_jj), 1) of that entry.
inline McReport covariance_check(const ChannelConfig& cfg, const HelperStrategy& s, std::uint64_t n,
                                 std::uint64_t seed, double tol_rel, unsigned workers = 0) {
  if (!(tol_rel > 0.0)) throw ValidationError("tolerance must be positive");
  const auto analytic = build_joint_covariance(cfg, s);
  const auto empirical = sample_empirical_covariance(cfg, s, n, seed, workers);
  McReport rep;
  rep.samples = n;
  rep.seed = seed;
  rep.tol_rel = tol_rel;
  for (int a = 0; a < kNumVars; ++a) {
    for (int b = a; b < kNumVars; ++b) {
      const double err = std::abs(empirical.at(a, b) - analytic.at(a, b));
      const double scale = std::max(std::sqrt(analytic.at(a, a) * analytic.at(b, b)), 1.0);
      rep.max_abs_error = std::max(rep.max_abs_error, err);
      rep.max_rel_error = std::max(rep.max_rel_error, err / scale);
    }
  }
  rep.pass = rep.max_rel_error <= tol_rel;
  return rep;
}

}  // namespace pgc
