#pragma once

#include <vector>

#include <Eigen/Core>

#include "locorl/sim2real/randomization.hpp"

namespace locorl::env {

// Fixed segment order of the observation vector:
//   q (n) | qdot (n) | R (1..3) | omega_b (3) | v_ref (2) | v_local (2)
//   | v_des (3) | v_cmd (3)
// Total width = 2 n + dim(R) + 13.
struct ObservationLayout {
  int n_joints = 0;
  int orientation_dims = 2;

  int width() const { return 2 * n_joints + orientation_dims + 13; }

  int q_offset() const { return 0; }
  int qd_offset() const { return n_joints; }
  int orientation_offset() const { return 2 * n_joints; }
  int omega_offset() const { return 2 * n_joints + orientation_dims; }
  int v_ref_offset() const { return omega_offset() + 3; }
  int v_local_offset() const { return v_ref_offset() + 2; }
  int v_des_offset() const { return v_local_offset() + 2; }
  int v_cmd_offset() const { return v_des_offset() + 3; }

  Eigen::VectorXd compose(const Eigen::VectorXd& q, const Eigen::VectorXd& qd,
                          const Eigen::VectorXd& orientation, const Eigen::Vector3d& omega_b,
                          const Eigen::Vector2d& v_ref, const Eigen::Vector2d& v_local,
                          const Eigen::Vector3d& v_des, const Eigen::Vector3d& v_cmd) const;

  // Noise roles per channel: encoders for q, velocity for qdot and the two
  // base-velocity estimates, gyro for R and omega_b, command for v_des/v_cmd.
  std::vector<sim2real::ChannelRole> channel_roles() const;
};

}  // namespace locorl::env
