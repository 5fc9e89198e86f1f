#include "locorl/sim2real/randomization.hpp"

#include <stdexcept>

namespace locorl::sim2real {

void EpisodeRandomization::save(io::BinaryWriter& w) const {
  w.put_vec(pd_scales);
  w.put_f64(mu_tangential);
  w.put_f64(mu_torsional);
  w.put_f64(latency_s);
}

void EpisodeRandomization::load(io::BinaryReader& r) {
  pd_scales = r.get_vec();
  mu_tangential = r.get_f64();
  mu_torsional = r.get_f64();
  latency_s = r.get_f64();
}

EpisodeRandomization sample_episode_randomization(int n_joints, const NoiseConfig& noise,
                                                  const FrictionConfig& friction,
                                                  const LatencyConfig& latency,
                                                  math::RngStream& rng) {
  if (n_joints < 0) throw std::invalid_argument("sample_episode_randomization: bad joint count");
  EpisodeRandomization out;
  out.pd_scales.resize(n_joints);
  for (int i = 0; i < n_joints; ++i) {
    out.pd_scales[i] = noise.pd_scale_halfwidth > 0.0
                           ? rng.uniform(1.0 - noise.pd_scale_halfwidth,
                                         1.0 + noise.pd_scale_halfwidth)
                           : 1.0;
  }
  out.mu_tangential = friction.tangential_min < friction.tangential_max
                          ? rng.uniform(friction.tangential_min, friction.tangential_max)
                          : friction.tangential_min;
  out.mu_torsional = friction.torsional_min < friction.torsional_max
                         ? rng.uniform(friction.torsional_min, friction.torsional_max)
                         : friction.torsional_min;
  out.latency_s = latency.min_s < latency.max_s ? rng.uniform(latency.min_s, latency.max_s)
                                                : latency.min_s;
  return out;
}

Eigen::VectorXd apply_pd_noise(const Eigen::Ref<const Eigen::VectorXd>& delta,
                               const Eigen::Ref<const Eigen::VectorXd>& scales) {
  if (delta.size() != scales.size())
    throw std::invalid_argument("apply_pd_noise: length mismatch");
  return delta.cwiseProduct(scales);
}

Eigen::VectorXd apply_sensor_noise(const Eigen::Ref<const Eigen::VectorXd>& observation,
                                   const std::vector<ChannelRole>& roles,
                                   const NoiseConfig& noise, math::RngStream& rng) {
  if (static_cast<Eigen::Index>(roles.size()) != observation.size())
    throw std::invalid_argument("apply_sensor_noise: every channel needs a tagged role");
  Eigen::VectorXd out = observation;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    double std_dev = 0.0;
    switch (roles[static_cast<std::size_t>(i)]) {
      case ChannelRole::gyro: std_dev = noise.gyro_std; break;
      case ChannelRole::accelerometer: std_dev = noise.accel_std; break;
      case ChannelRole::encoder: std_dev = noise.encoder_std; break;
      case ChannelRole::velocity: std_dev = noise.velocity_std; break;
      case ChannelRole::command: std_dev = 0.0; break;
    }
    if (std_dev > 0.0) out[i] += std_dev * rng.normal();
  }
  return out;
}

}  // namespace locorl::sim2real
