#include "locorl/env/observation.hpp"

#include <stdexcept>

namespace locorl::env {

Eigen::VectorXd ObservationLayout::compose(const Eigen::VectorXd& q, const Eigen::VectorXd& qd,
                                           const Eigen::VectorXd& orientation,
                                           const Eigen::Vector3d& omega_b,
                                           const Eigen::Vector2d& v_ref,
                                           const Eigen::Vector2d& v_local,
                                           const Eigen::Vector3d& v_des,
                                           const Eigen::Vector3d& v_cmd) const {
  if (n_joints < 1) throw std::invalid_argument("ObservationLayout: n_joints must be >= 1");
  if (orientation_dims < 1 || orientation_dims > 3)
    throw std::invalid_argument("ObservationLayout: orientation_dims must be 1..3");
  if (q.size() != n_joints || qd.size() != n_joints)
    throw std::invalid_argument("ObservationLayout::compose: joint segment size mismatch");
  if (orientation.size() != orientation_dims)
    throw std::invalid_argument("ObservationLayout::compose: orientation segment size mismatch");

  Eigen::VectorXd obs(width());
  obs.segment(q_offset(), n_joints) = q;
  obs.segment(qd_offset(), n_joints) = qd;
  obs.segment(orientation_offset(), orientation_dims) = orientation;
  obs.segment(omega_offset(), 3) = omega_b;
  obs.segment(v_ref_offset(), 2) = v_ref;
  obs.segment(v_local_offset(), 2) = v_local;
  obs.segment(v_des_offset(), 3) = v_des;
  obs.segment(v_cmd_offset(), 3) = v_cmd;
  return obs;
}

std::vector<sim2real::ChannelRole> ObservationLayout::channel_roles() const {
  using sim2real::ChannelRole;
  std::vector<ChannelRole> roles(static_cast<std::size_t>(width()));
  auto fill = [&](int offset, int count, ChannelRole role) {
    for (int i = 0; i < count; ++i) roles[static_cast<std::size_t>(offset + i)] = role;
  };
  fill(q_offset(), n_joints, ChannelRole::encoder);
  fill(qd_offset(), n_joints, ChannelRole::velocity);
  fill(orientation_offset(), orientation_dims, ChannelRole::gyro);
  fill(omega_offset(), 3, ChannelRole::gyro);
  fill(v_ref_offset(), 2, ChannelRole::velocity);
  fill(v_local_offset(), 2, ChannelRole::velocity);
  fill(v_des_offset(), 3, ChannelRole::command);
  fill(v_cmd_offset(), 3, ChannelRole::command);
  return roles;
}

}  // namespace locorl::env
