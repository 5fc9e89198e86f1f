#pragma once

#include <Eigen/Core>

namespace locorl::rl {

struct ActorLossResult {
  double loss = 0.0;                // negated mean surrogate (minimize = ascend)
  Eigen::VectorXd dloss_dlogp;      // per-sample d(loss)/d(log_prob_new)
  double clip_fraction = 0.0;       // share of samples on the clipped branch
  double mean_ratio = 0.0;
};

// Clipped-ratio surrogate. Advantages are expected pre-normalized.
// Throws DivergenceError when any |log ratio| exceeds 20.
ActorLossResult ppo_actor_loss(const Eigen::VectorXd& log_prob_new,
                               const Eigen::VectorXd& log_prob_old,
                               const Eigen::VectorXd& advantages, double clip_epsilon);

struct CriticLossResult {
  double loss = 0.0;             // mean squared error
  Eigen::VectorXd dloss_dvalue;  // 2 (V - target) / N per sample
};

CriticLossResult critic_loss(const Eigen::VectorXd& values_pred,
                             const Eigen::VectorXd& value_targets);

// Shift/scale to zero mean, unit standard deviation. Batches of size 1
// (or zero variance) are only centered.
Eigen::VectorXd normalize_advantages(const Eigen::VectorXd& advantages);

}  // namespace locorl::rl
