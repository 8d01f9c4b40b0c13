#pragma once

#include <array>
#include <cmath>

#include "pgc/pgc.hpp"

namespace pgc::test {

inline ChannelConfig fig2a() { return validate_config(1, 1, 2, 5, 5, 12, 12); }
inline ChannelConfig fig2b() { return validate_config(0.8, 1, 2, 5, 5, 12, 12); }
inline ChannelConfig fig2c() { return validate_config(1, 1, 50, 5, 5, 100, 100); }
inline ChannelConfig fig2d() { return validate_config(0.5, 1, 50, 5, 5, 100, 100); }

inline std::array<ChannelConfig, 4> figure_configs() { return {fig2a(), fig2b(), fig2c(), fig2d()}; }

inline HelperStrategy plain(double gamma, double beta1 = 0.0, double beta2 = 0.0) {
  HelperStrategy s;
  s.gamma = gamma;
  s.beta1 = beta1;
  s.beta2 = beta2;
  return s;
}

}  // namespace pgc::test
