#pragma once

#include <Eigen/Core>

#include "locorl/io/binary.hpp"

namespace locorl::env {

// Gravity-aligned frame re-anchored periodically at the base link. Base
// velocity expressed here penalizes drift from the commanded heading even
// when the local-frame velocity looks correct.
struct ReferenceFrame {
  Eigen::Vector2d anchor_xy = Eigen::Vector2d::Zero();
  double yaw = 0.0;
  double last_update_s = 0.0;
  double period_s = 1.0;

  void save(io::BinaryWriter& w) const;
  void load(io::BinaryReader& r);
};

// Re-anchor at the base (position + yaw, z stays world-aligned) once the
// period has elapsed; otherwise leave the frame untouched.
void update_reference_frame(ReferenceFrame& frame, const Eigen::Vector2d& base_xy,
                            double base_yaw, double now_s);

// Rotate a world-frame planar velocity into the reference frame.
Eigen::Vector2d world_to_frame(const ReferenceFrame& frame, const Eigen::Vector2d& v_world);

// Rotate a world-frame planar velocity into a frame at the given yaw.
Eigen::Vector2d world_to_yaw_frame(double yaw, const Eigen::Vector2d& v_world);

}  // namespace locorl::env
