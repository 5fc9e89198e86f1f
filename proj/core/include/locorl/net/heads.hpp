#pragma once

#include <vector>

#include <Eigen/Core>

#include "locorl/math/beta.hpp"

namespace locorl::net {

// The actor's last layer has two units per action dimension. They map to
// Beta shape parameters through alpha = 1 + softplus(raw_a),
// beta = 1 + softplus(raw_b), which keeps the distribution unimodal.
std::vector<math::BetaParams> actor_head(const Eigen::Ref<const Eigen::VectorXd>& raw);

// d(alpha)/d(raw_a) resp. d(beta)/d(raw_b) for the same raw vector.
Eigen::VectorXd actor_head_grad(const Eigen::Ref<const Eigen::VectorXd>& raw);

}  // namespace locorl::net
