#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "locorl/net/mlp.hpp"

namespace locorl::net {

// Full mutable training state. Restoring it continues a run exactly where
// it stopped: parameters, optimizer moments, curriculum values, RNG states
// and per-environment snapshots are all included.
struct Checkpoint {
  static constexpr std::uint32_t kFormatVersion = 1;

  MlpSpec actor_spec;
  MlpSpec critic_spec;
  Eigen::VectorXd actor_params;
  Eigen::VectorXd critic_params;

  Eigen::VectorXd actor_adam_m, actor_adam_v;
  std::int64_t actor_adam_t = 0;
  Eigen::VectorXd critic_adam_m, critic_adam_v;
  std::int64_t critic_adam_t = 0;

  std::int64_t epoch = 0;
  std::int64_t episode_counter = 0;
  std::int64_t total_steps = 0;
  double c_v = 0.0;
  double c_f = 0.0;

  std::uint64_t trainer_rng_state = 0;
  std::uint64_t trainer_rng_seq = 0;

  // Opaque per-environment state blobs (sim state, command ramp,
  // randomization draw, latency history, per-env RNG).
  std::vector<std::vector<std::uint8_t>> env_blobs;
};

// Atomic write (temp file + rename). Throws CheckpointError on I/O failure.
void save_checkpoint(const Checkpoint& ck, const std::string& path);

// Throws CheckpointError on bad magic, unsupported version, truncation or
// payload corruption. Never returns partially filled state.
Checkpoint load_checkpoint(const std::string& path);

// Validates that a loaded checkpoint matches the network shapes a run
// expects; throws CheckpointError naming the mismatch.
void require_spec_match(const Checkpoint& ck, const MlpSpec& actor, const MlpSpec& critic);

}  // namespace locorl::net
