#include "locorl/reward/reward.hpp"

#include <cmath>
#include <stdexcept>

#include "locorl/math/kernel.hpp"

namespace locorl::reward {

CurriculumCoeff update_curriculum_coeff(CurriculumCoeff c) {
  if (!(c.value > 0.0 && c.value <= 1.0))
    throw std::invalid_argument("update_curriculum_coeff: C must lie in (0, 1]");
  if (!(c.decay > 0.0 && c.decay < 1.0))
    throw std::invalid_argument("update_curriculum_coeff: decay must lie in (0, 1)");
  c.value = std::pow(c.value, c.decay);
  return c;
}

double velocity_tracking_kernel(const Eigen::Vector3d& v_cmd, const Eigen::Vector2d& v_local,
                                const Eigen::Vector2d& v_ref, double omega_z,
                                const RewardWeights& w) {
  Eigen::Matrix<double, 5, 1> err;
  err << v_cmd.x() - v_local.x(), v_cmd.y() - v_local.y(), v_cmd.x() - v_ref.x(),
      v_cmd.y() - v_ref.y(), v_cmd.z() - omega_z;
  return math::kernel_eval(err.norm(), w.l_vel);
}

double velocity_reward(const Eigen::Vector3d& v_cmd, const Eigen::Vector2d& v_local,
                       const Eigen::Vector2d& v_ref, double omega_z, double c_v,
                       const RewardWeights& w) {
  if (!(c_v > 0.0 && c_v <= 1.0))
    throw std::invalid_argument("velocity_reward: C_v must lie in (0, 1]");
  return c_v * velocity_tracking_kernel(v_cmd, v_local, v_ref, omega_z, w) * w.dt;
}

double pose_regularization_reward(const Eigen::VectorXd& q_reg, const Eigen::VectorXd& q_subset,
                                  const RewardWeights& w) {
  if (q_reg.size() != q_subset.size())
    throw std::invalid_argument("pose_regularization_reward: subset length mismatch");
  const double deviation = (q_reg - q_subset).norm();  // norm of empty subset is 0
  return math::kernel_eval(deviation, w.l_reg) * w.dt;
}

std::pair<double, bool> alive_reward_and_termination(double base_height, double roll, double pitch,
                                                     const AliveThresholds& th, double dt) {
  const bool alive = base_height > th.min_base_height && std::abs(roll) < th.max_roll &&
                     std::abs(pitch) < th.max_pitch;
  return alive ? std::pair{dt, false} : std::pair{0.0, true};
}

double foot_clearance_reward(const FootState& foot, double c_f, const RewardWeights& w) {
  if (!(c_f > 0.0 && c_f <= 1.0))
    throw std::invalid_argument("foot_clearance_reward: C_f must lie in (0, 1]");
  const bool right_swing = foot.swing == Side::right;
  const double swing_z = right_swing ? foot.right_height : foot.left_height;
  const double stance_z = right_swing ? foot.left_height : foot.right_height;
  const double swing_roll = right_swing ? foot.right_roll : foot.left_roll;
  const double stance_roll = right_swing ? foot.left_roll : foot.right_roll;

  Eigen::Vector4d err;
  err << foot.clearance_weight * (foot.desired_clearance - swing_z), swing_roll, stance_roll,
      foot.clearance_weight * stance_z;
  return c_f * math::kernel_eval(err.norm(), w.l_foot) * w.dt;
}

Side resolve_swing_leg(double left_trunk_dz, double right_trunk_dz, Side previous,
                       double hysteresis_margin) {
  const double left_dist = std::abs(left_trunk_dz);
  const double right_dist = std::abs(right_trunk_dz);
  const Side candidate = left_dist < right_dist ? Side::left : Side::right;
  if (candidate == previous) return previous;
  const double incumbent_dist = previous == Side::left ? left_dist : right_dist;
  const double candidate_dist = candidate == Side::left ? left_dist : right_dist;
  return candidate_dist + hysteresis_margin < incumbent_dist ? candidate : previous;
}

RewardBreakdown total_reward(double r_vel, double r_reg, double r_alive, bool terminate,
                             double r_foot, const RewardWeights& w) {
  RewardBreakdown out;
  out.vel = r_vel;
  out.reg = r_reg;
  out.alive = r_alive;
  out.foot = r_foot;
  out.terminate = terminate;
  out.total = w.w_vel * r_vel + w.w_reg * r_reg + w.w_alive * r_alive + w.w_foot * r_foot;
  return out;
}

}  // namespace locorl::reward
