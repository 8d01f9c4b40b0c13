// Rates of one helper strategy and the classified boundary segments for a
// channel given on the command line (defaults: eta=(1,1), P0=2, P=5, Q=12).

#include <cstdio>
#include <cstdlib>
#include <string>

#include "pgc/pgc.hpp"

int main(int argc, char** argv) {
  double v[7] = {1, 1, 2, 5, 5, 12, 12};
  for (int i = 1; i < argc && i <= 7; ++i) v[i - 1] = std::atof(argv[i]);
  const auto cfg = pgc::validate_config(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);

  pgc::HelperStrategy s;
  s.gamma = 0.5;
  s = pgc::with_dpc_alphas(cfg, s);
  const auto r = pgc::achievable_point(cfg, s);
  std::printf("beta=0 gamma=0.5, dirty-paper coefficients: (R1, R2) = (%.6f, %.6f) bits\n", r.r1, r.r2);

  const auto ub = pgc::outer_rate_bounds(cfg, {0.0, 0.0});
  std::printf("outer bound at rho=(0,0): (%.6f, %.6f) bits\n", ub.r1, ub.r2);

  const auto seg = pgc::capacity_segments(cfg);
  for (int k = 1; k <= 2; ++k) {
    const auto& u = seg.user(k);
    std::printf("user %d: class %s", k, std::string(pgc::to_string(u.cls)).c_str());
    if (u.rate) std::printf(", capacity-achieving rate %.6f bits", *u.rate);
    std::printf("\n");
  }
}
