#pragma once

#include <utility>

#include <Eigen/Core>

namespace locorl::reward {

struct RewardWeights {
  double w_vel = 42.0;
  double w_reg = 4.0;
  double w_alive = 4.0;
  double w_foot = 18.0;
  double l_vel = 9.0;
  double l_reg = 3.0;
  double l_foot = 10.0;
  double dt = 0.025;  // policy control period, 40 Hz
};

// Dynamic priority of a reward term; raised toward 1 once per epoch via
// C <- C^decay.
struct CurriculumCoeff {
  double value = 1.0;
  double decay = 1.0;  // k_d in (0, 1)
};

CurriculumCoeff update_curriculum_coeff(CurriculumCoeff c);

struct AliveThresholds {
  double min_base_height = 0.3;  // meters
  double max_roll = 0.5;         // radians, compared on |roll|
  double max_pitch = 0.5;
};

enum class Side { left, right };

// Per-step foot geometry plus the persistent swing-side memory.
struct FootState {
  double left_height = 0.0;   // sole height above ground
  double right_height = 0.0;
  double left_roll = 0.0;     // foot roll angle phi_x
  double right_roll = 0.0;
  double desired_clearance = 0.05;  // target swing-foot lift, meters
  double clearance_weight = 5.0;    // scales the two height components
  Side swing = Side::left;
};

// Tracking term: C_v * K(e_v) * dt with the five-component error
// [cmd_x - local_x, cmd_y - local_y, cmd_x - ref_x, cmd_y - ref_y, cmd_w - w].
double velocity_reward(const Eigen::Vector3d& v_cmd, const Eigen::Vector2d& v_local,
                       const Eigen::Vector2d& v_ref, double omega_z, double c_v,
                       const RewardWeights& w);
double velocity_tracking_kernel(const Eigen::Vector3d& v_cmd, const Eigen::Vector2d& v_local,
                                const Eigen::Vector2d& v_ref, double omega_z,
                                const RewardWeights& w);

// Nominal-pose term: K(|q_reg - q|) * dt over the regularized joint subset.
double pose_regularization_reward(const Eigen::VectorXd& q_reg, const Eigen::VectorXd& q_subset,
                                  const RewardWeights& w);

// (dt, keep going) while the base is high enough and level enough;
// (0, terminate) the moment any threshold is reached.
std::pair<double, bool> alive_reward_and_termination(double base_height, double roll, double pitch,
                                                     const AliveThresholds& th, double dt);

double foot_clearance_reward(const FootState& foot, double c_f, const RewardWeights& w);

// The swing candidate is the foot closest to the trunk along z; the side
// only switches when the candidate beats the incumbent by more than the
// hysteresis margin. Ties keep the previous side.
Side resolve_swing_leg(double left_trunk_dz, double right_trunk_dz, Side previous,
                       double hysteresis_margin);

struct RewardBreakdown {
  double total = 0.0;
  double vel = 0.0;    // raw terms, before weighting
  double reg = 0.0;
  double alive = 0.0;
  double foot = 0.0;
  bool terminate = false;
};

RewardBreakdown total_reward(double r_vel, double r_reg, double r_alive, bool terminate,
                             double r_foot, const RewardWeights& w);

}  // namespace locorl::reward
