#pragma once

// Command-line front end: configuration loading, region/classification
// reports, verification sweeps and Monte Carlo checks.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgc/pgc.hpp"

namespace pgc::cli {

enum class Unit { Bits, Nats };

struct McSettings {
  std::uint64_t n = 1000000;
  std::uint64_t seed = 7;
  double tol = 0.01;
};

struct RunConfig {
  ChannelConfig channel;
  int directions = 16;  // inner-region scalarization directions
  int rho_grid = 64;    // outer-region disk resolution
  OptimizerBudget budget;
  Unit unit = Unit::Bits;
  McSettings mc;
};

/// Configuration problems (exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Closed-form expressions checked by `verify`. Replaceable so a corrupted
/// build can be exercised as a negative control.
struct Formulas {
  std::function<double(int, const ChannelConfig&, const HelperStrategy&)> f = rate_f;
  std::function<double(int, const ChannelConfig&, const HelperStrategy&)> g = rate_g;
  std::function<double(int, const ChannelConfig&, double, double, double)> reduced = reduced_f;
};

struct CheckResult {
  std::string name;
  double worst = 0.0;
  double tol = 0.0;
  std::size_t cases = 0;
  bool pass() const { return worst <= tol; }
};

/// Identity checks over `count` seeded random strategies, on random
/// configurations or on `fixed` when given.
std::vector<CheckResult> verify_sweep(std::optional<ChannelConfig> fixed, std::size_t count,
                                      std::uint64_t seed, const Formulas& formulas = {});

struct RegionFiles {
  std::filesystem::path outer_csv, inner_csv, ts_csv, report_json, region_svg;
};

RegionFiles run_region(const RunConfig& rc, const std::filesystem::path& out_dir);
std::filesystem::path run_classify(const RunConfig& rc, const std::filesystem::path& out_dir);
/// Returns true when every strategy passes.
bool run_mc(const RunConfig& rc, const std::filesystem::path& out_dir, std::ostream& log);

/// Full command line. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const Formulas& formulas = {});

}  // namespace pgc::cli
