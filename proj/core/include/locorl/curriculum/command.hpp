#pragma once

#include <Eigen/Core>

#include "locorl/io/binary.hpp"

namespace locorl::curriculum {

// Linear ramp between the previous and the current desired velocity; the
// ramped value is what the policy is asked (and rewarded) to track.
struct CommandState {
  Eigen::Vector3d v_old = Eigen::Vector3d::Zero();
  Eigen::Vector3d v_des = Eigen::Vector3d::Zero();
  double progress = 1.0;   // fraction of the transition completed
  double duration = 1.0;   // seconds

  void save(io::BinaryWriter& w) const;
  void load(io::BinaryReader& r);
};

// Begin a transition toward v_des from wherever the command currently is.
void command_set_target(CommandState& s, const Eigen::Vector3d& v_des);

// Command at the current progress.
Eigen::Vector3d current_command(const CommandState& s);

// Advance the ramp by dt and return the new command.
Eigen::Vector3d step_command(CommandState& s, double dt);

}  // namespace locorl::curriculum
