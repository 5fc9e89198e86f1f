#include "locorl/math/adam.hpp"

#include <cmath>
#include <stdexcept>

#include "locorl/errors.hpp"

namespace locorl::math {

AdamState::AdamState(Eigen::Index n, AdamConfig cfg)
    : m_(Eigen::VectorXd::Zero(n)), v_(Eigen::VectorXd::Zero(n)), cfg_(cfg) {}

void AdamState::step(Eigen::Ref<Eigen::VectorXd> params,
                     const Eigen::Ref<const Eigen::VectorXd>& grads) {
  if (params.size() != m_.size() || grads.size() != m_.size())
    throw std::invalid_argument("AdamState::step: shape mismatch");
  if (!grads.allFinite())
    throw DivergenceError("AdamState::step: non-finite gradient");

  ++t_;
  m_ = cfg_.beta1 * m_ + (1.0 - cfg_.beta1) * grads;
  v_ = cfg_.beta2 * v_ + (1.0 - cfg_.beta2) * grads.cwiseProduct(grads);
  const double mc = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
  const double vc = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
  params -= cfg_.learning_rate *
            (m_ / mc).cwiseQuotient(((v_ / vc).cwiseSqrt().array() + cfg_.epsilon).matrix());
}

void AdamState::restore(const Eigen::VectorXd& m, const Eigen::VectorXd& v, std::int64_t t) {
  if (m.size() != m_.size() || v.size() != v_.size())
    throw std::invalid_argument("AdamState::restore: shape mismatch");
  m_ = m;
  v_ = v;
  t_ = t;
}

}  // namespace locorl::math
