#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "locorl/rl/rollout.hpp"

namespace locorl::rl {

// Generalized advantage estimation over one trajectory segment.
// dones[t] marks that the episode ended at step t (the next array entry,
// if any, belongs to a fresh episode and the bootstrap across the boundary
// is zero). `bootstrap` is V(s_T) when the segment was truncated mid-episode
// and 0 when the final step terminated.
AdvantageBatch compute_gae(const Eigen::VectorXd& rewards, const Eigen::VectorXd& values,
                           const std::vector<std::uint8_t>& dones, double bootstrap, double gamma,
                           double lambda);

}  // namespace locorl::rl
