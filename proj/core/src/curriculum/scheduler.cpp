#include "locorl/curriculum/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

namespace locorl::curriculum {

VelocityBounds bounds_at(const SchedulerConfig& cfg, std::int64_t episode) {
  if (episode < 0) throw std::invalid_argument("bounds_at: episode must be >= 0");
  if (cfg.ramp_episodes < 1) throw std::invalid_argument("bounds_at: ramp_episodes must be >= 1");
  if ((cfg.final_lower.array() > cfg.v_core.array()).any() ||
      (cfg.final_upper.array() < cfg.v_core.array()).any())
    throw std::invalid_argument("bounds_at: final bounds must contain v_core");

  const double f = std::min(1.0, static_cast<double>(episode) /
                                     static_cast<double>(cfg.ramp_episodes));
  VelocityBounds b;
  b.lower = cfg.v_core + f * (cfg.final_lower - cfg.v_core);
  b.upper = cfg.v_core + f * (cfg.final_upper - cfg.v_core);
  return b;
}

Eigen::Vector3d sample_target(const VelocityBounds& bounds, math::RngStream& rng) {
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) {
    const double lo = bounds.lower[i];
    const double hi = bounds.upper[i];
    v[i] = lo < hi ? rng.uniform(lo, hi) : lo;
  }
  return v;
}

}  // namespace locorl::curriculum
