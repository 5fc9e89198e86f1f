#pragma once

#include <vector>

#include <Eigen/Core>

namespace locorl::rl {

// One environment step as recorded during collection. `state` is the
// observation the policy acted on (post sensing wrappers, pre scaling).
struct Transition {
  Eigen::VectorXd state;
  Eigen::VectorXd action_unit;  // [0,1]^m beta sample space
  double log_prob = 0.0;
  double reward = 0.0;
  Eigen::Vector4d weighted_terms = Eigen::Vector4d::Zero();  // w*r for vel/reg/alive/foot
  double kernel_vel = 0.0;  // K(e_v) of this step, for tracking diagnostics
  double value_estimate = 0.0;
  bool done = false;       // episode terminated at this step (fall)
  bool truncated = false;  // cut by the epoch boundary, not by failure
};

// Per-environment trajectory segment of one epoch.
struct Rollout {
  std::vector<Transition> steps;
  // Critic value of the state after the last step; used when the segment
  // was truncated rather than terminated.
  double bootstrap_value = 0.0;
  // Episodes completed (done=true count) within this segment.
  int episodes_finished = 0;
};

struct AdvantageBatch {
  Eigen::VectorXd advantages;
  Eigen::VectorXd value_targets;  // A_t + V(s_t), computed before normalization
};

}  // namespace locorl::rl
