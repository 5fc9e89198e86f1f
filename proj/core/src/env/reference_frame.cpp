#include "locorl/env/reference_frame.hpp"

#include <cmath>

namespace locorl::env {

void ReferenceFrame::save(io::BinaryWriter& w) const {
  w.put_f64(anchor_xy.x());
  w.put_f64(anchor_xy.y());
  w.put_f64(yaw);
  w.put_f64(last_update_s);
  w.put_f64(period_s);
}

void ReferenceFrame::load(io::BinaryReader& r) {
  anchor_xy.x() = r.get_f64();
  anchor_xy.y() = r.get_f64();
  yaw = r.get_f64();
  last_update_s = r.get_f64();
  period_s = r.get_f64();
}

void update_reference_frame(ReferenceFrame& frame, const Eigen::Vector2d& base_xy,
                            double base_yaw, double now_s) {
  if (now_s - frame.last_update_s < frame.period_s) return;
  frame.anchor_xy = base_xy;
  frame.yaw = base_yaw;
  frame.last_update_s = now_s;
}

Eigen::Vector2d world_to_yaw_frame(double yaw, const Eigen::Vector2d& v_world) {
  const double c = std::cos(yaw);
  const double s = std::sin(yaw);
  return {c * v_world.x() + s * v_world.y(), -s * v_world.x() + c * v_world.y()};
}

Eigen::Vector2d world_to_frame(const ReferenceFrame& frame, const Eigen::Vector2d& v_world) {
  return world_to_yaw_frame(frame.yaw, v_world);
}

}  // namespace locorl::env
