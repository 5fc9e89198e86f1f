#pragma once

#include <stdexcept>
#include <string>

namespace locorl {

// Training produced values the optimizer cannot continue from
// (exploding ratios, non-finite gradients or parameters).
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed config file, unknown key, or inconsistent module wiring.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Checkpoint file cannot be restored (bad magic, version, truncation,
// or a spec that does not match the requesting setup).
class CheckpointError : public std::runtime_error {
 public:
  explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

// The physics state went non-finite; the episode is aborted.
class SimulationFault : public std::runtime_error {
 public:
  explicit SimulationFault(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace locorl
