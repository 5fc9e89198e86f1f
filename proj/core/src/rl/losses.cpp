#include "locorl/rl/losses.hpp"

#include <cmath>
#include <stdexcept>

#include "locorl/errors.hpp"

namespace locorl::rl {

ActorLossResult ppo_actor_loss(const Eigen::VectorXd& log_prob_new,
                               const Eigen::VectorXd& log_prob_old,
                               const Eigen::VectorXd& advantages, double clip_epsilon) {
  const Eigen::Index n = log_prob_new.size();
  if (log_prob_old.size() != n || advantages.size() != n)
    throw std::invalid_argument("ppo_actor_loss: sequence length mismatch");
  if (!(clip_epsilon > 0.0)) throw std::invalid_argument("ppo_actor_loss: clip epsilon must be > 0");
  if (n == 0) throw std::invalid_argument("ppo_actor_loss: empty batch");

  ActorLossResult out;
  out.dloss_dlogp.setZero(n);

  double surrogate_sum = 0.0;
  double ratio_sum = 0.0;
  Eigen::Index clipped = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double log_ratio = log_prob_new[i] - log_prob_old[i];
    if (!std::isfinite(log_ratio) || std::abs(log_ratio) > 20.0)
      throw DivergenceError("ppo_actor_loss: probability ratio diverged");
    const double ratio = std::exp(log_ratio);
    ratio_sum += ratio;
    const double a = advantages[i];
    const double unclipped = ratio * a;
    const double clipped_ratio = std::clamp(ratio, 1.0 - clip_epsilon, 1.0 + clip_epsilon);
    const double clipped_val = clipped_ratio * a;
    // min() selects the clipped branch exactly when the ratio moved past
    // the trust band in the direction the advantage favors; there the
    // surrogate is constant in theta and the sample contributes no gradient.
    const bool clip_active = (a >= 0.0 && ratio > 1.0 + clip_epsilon) ||
                             (a < 0.0 && ratio < 1.0 - clip_epsilon);
    surrogate_sum += clip_active ? clipped_val : unclipped;
    if (clip_active)
      ++clipped;
    else
      out.dloss_dlogp[i] = -unclipped / static_cast<double>(n);  // d(ratio*A)/d(logp) = ratio*A
  }

  out.loss = -surrogate_sum / static_cast<double>(n);
  out.clip_fraction = static_cast<double>(clipped) / static_cast<double>(n);
  out.mean_ratio = ratio_sum / static_cast<double>(n);
  return out;
}

CriticLossResult critic_loss(const Eigen::VectorXd& values_pred,
                             const Eigen::VectorXd& value_targets) {
  const Eigen::Index n = values_pred.size();
  if (value_targets.size() != n) throw std::invalid_argument("critic_loss: length mismatch");
  if (n == 0) throw std::invalid_argument("critic_loss: empty batch");

  CriticLossResult out;
  const Eigen::VectorXd err = values_pred - value_targets;
  out.loss = err.squaredNorm() / static_cast<double>(n);
  out.dloss_dvalue = 2.0 * err / static_cast<double>(n);
  return out;
}

Eigen::VectorXd normalize_advantages(const Eigen::VectorXd& advantages) {
  const Eigen::Index n = advantages.size();
  if (n == 0) throw std::invalid_argument("normalize_advantages: empty batch");
  const double mean = advantages.mean();
  if (n == 1) return Eigen::VectorXd::Zero(1);
  const double var = (advantages.array() - mean).square().sum() / static_cast<double>(n - 1);
  const double sd = std::sqrt(var);
  if (sd < 1e-12) return (advantages.array() - mean).matrix();
  return ((advantages.array() - mean) / sd).matrix();
}

}  // namespace locorl::rl
