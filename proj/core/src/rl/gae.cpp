#include "locorl/rl/gae.hpp"

#include <stdexcept>

namespace locorl::rl {

AdvantageBatch compute_gae(const Eigen::VectorXd& rewards, const Eigen::VectorXd& values,
                           const std::vector<std::uint8_t>& dones, double bootstrap, double gamma,
                           double lambda) {
  const Eigen::Index n = rewards.size();
  if (n < 1) throw std::invalid_argument("compute_gae: empty trajectory");
  if (values.size() != n || static_cast<Eigen::Index>(dones.size()) != n)
    throw std::invalid_argument("compute_gae: sequence length mismatch");

  AdvantageBatch out;
  out.advantages.resize(n);
  out.value_targets.resize(n);

  double gae = 0.0;
  double next_value = bootstrap;
  for (Eigen::Index t = n - 1; t >= 0; --t) {
    const double nonterminal = dones[static_cast<std::size_t>(t)] ? 0.0 : 1.0;
    const double delta = rewards[t] + gamma * next_value * nonterminal - values[t];
    gae = delta + gamma * lambda * nonterminal * gae;
    out.advantages[t] = gae;
    out.value_targets[t] = gae + values[t];
    next_value = values[t];
  }
  return out;
}

}  // namespace locorl::rl
