#include "locorl/net/heads.hpp"

#include <stdexcept>

namespace locorl::net {

std::vector<math::BetaParams> actor_head(const Eigen::Ref<const Eigen::VectorXd>& raw) {
  if (raw.size() % 2 != 0)
    throw std::invalid_argument("actor_head: raw output width must be even (two units per dim)");
  std::vector<math::BetaParams> out(static_cast<std::size_t>(raw.size() / 2));
  for (Eigen::Index i = 0; i < raw.size() / 2; ++i) {
    out[static_cast<std::size_t>(i)] = {1.0 + math::softplus(raw[2 * i]),
                                        1.0 + math::softplus(raw[2 * i + 1])};
  }
  return out;
}

Eigen::VectorXd actor_head_grad(const Eigen::Ref<const Eigen::VectorXd>& raw) {
  if (raw.size() % 2 != 0)
    throw std::invalid_argument("actor_head_grad: raw output width must be even");
  Eigen::VectorXd g(raw.size());
  for (Eigen::Index i = 0; i < raw.size(); ++i) g[i] = math::sigmoid(raw[i]);
  return g;
}

}  // namespace locorl::net
