#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace locorl::math {

struct AdamConfig {
  double learning_rate = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Bias-corrected Adam over a flat parameter vector.
class AdamState {
 public:
  AdamState(Eigen::Index n, AdamConfig cfg = {});

  // In-place update of params from grads; increments the step counter.
  // Throws std::invalid_argument on shape mismatch and DivergenceError on
  // non-finite gradients.
  void step(Eigen::Ref<Eigen::VectorXd> params, const Eigen::Ref<const Eigen::VectorXd>& grads);

  const Eigen::VectorXd& first_moment() const { return m_; }
  const Eigen::VectorXd& second_moment() const { return v_; }
  std::int64_t step_count() const { return t_; }
  const AdamConfig& config() const { return cfg_; }

  // Checkpoint restore.
  void restore(const Eigen::VectorXd& m, const Eigen::VectorXd& v, std::int64_t t);

 private:
  Eigen::VectorXd m_;
  Eigen::VectorXd v_;
  std::int64_t t_ = 0;
  AdamConfig cfg_;
};

}  // namespace locorl::math
