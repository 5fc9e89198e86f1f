#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "locorl/math/rng.hpp"

namespace locorl::curriculum {

// Widening box of commanded velocities (vx, vy, wz). Starts as the single
// point v_core and reaches the final bounds after ramp_episodes episodes.
struct SchedulerConfig {
  Eigen::Vector3d v_core{0.4, 0.0, 0.0};
  Eigen::Vector3d final_lower{-0.6, -0.6, -0.6};
  Eigen::Vector3d final_upper{0.6, 0.6, 0.6};
  std::int64_t ramp_episodes = 3000;  // episode count at which widening stops
};

struct VelocityBounds {
  Eigen::Vector3d lower = Eigen::Vector3d::Zero();
  Eigen::Vector3d upper = Eigen::Vector3d::Zero();

  bool contains(const Eigen::Vector3d& v) const {
    return (v.array() >= lower.array()).all() && (v.array() <= upper.array()).all();
  }
};

VelocityBounds bounds_at(const SchedulerConfig& cfg, std::int64_t episode);

// Componentwise uniform draw; degenerate components return the point.
Eigen::Vector3d sample_target(const VelocityBounds& bounds, math::RngStream& rng);

}  // namespace locorl::curriculum
