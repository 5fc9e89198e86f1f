#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "locorl/io/binary.hpp"
#include "locorl/math/rng.hpp"

namespace locorl::sim2real {

struct NoiseConfig {
  double pd_scale_halfwidth = 0.1;  // eta_pd ~ U(1 - e, 1 + e)
  double gyro_std = 1e-4;
  double accel_std = 1e-4;
  double encoder_std = 1e-3;
  double velocity_std = 1e-3;
};

struct FrictionConfig {
  double tangential_min = 0.4;
  double tangential_max = 0.8;
  double torsional_min = 0.1;
  double torsional_max = 0.3;
};

struct LatencyConfig {
  double min_s = 0.0;
  double max_s = 0.050;
  double eval_latency_s = 0.008;  // fixed value used outside training
};

// Which noise std applies to an observation channel. Command channels are
// generated robot-side, never sensed, and stay exempt from noise and delay.
enum class ChannelRole : std::uint8_t { gyro, accelerometer, encoder, velocity, command };

// Values drawn once at each episode start and held fixed until the next
// reset.
struct EpisodeRandomization {
  Eigen::VectorXd pd_scales;  // one per joint
  double mu_tangential = 0.6;
  double mu_torsional = 0.2;
  double latency_s = 0.0;

  void save(io::BinaryWriter& w) const;
  void load(io::BinaryReader& r);
};

EpisodeRandomization sample_episode_randomization(int n_joints, const NoiseConfig& noise,
                                                  const FrictionConfig& friction,
                                                  const LatencyConfig& latency,
                                                  math::RngStream& rng);

// Componentwise eta_pd * delta.
Eigen::VectorXd apply_pd_noise(const Eigen::Ref<const Eigen::VectorXd>& delta,
                               const Eigen::Ref<const Eigen::VectorXd>& scales);

// Additive zero-mean Gaussian per channel according to its role; command
// channels pass through untouched. Channels whose role has zero std are
// left bit-identical and consume no randomness.
Eigen::VectorXd apply_sensor_noise(const Eigen::Ref<const Eigen::VectorXd>& observation,
                                   const std::vector<ChannelRole>& roles,
                                   const NoiseConfig& noise, math::RngStream& rng);

}  // namespace locorl::sim2real
