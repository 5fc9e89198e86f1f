#pragma once

#include <cstdint>

namespace locorl::math {

// Deterministic per-owner random stream (PCG32). Streams derived from the
// same seed with different keys are statistically independent, so every
// environment, wrapper and trainer can own one without cross-talk.
// Identical (seed, key) always reproduces the identical sample sequence.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t key);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform();
  // Uniform on (0, 1) (never returns an endpoint).
  double uniform_open();
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double normal();

  // Derive an independent child stream; deterministic in (this stream's
  // original seed is irrelevant -- derivation uses only the arguments).
  static RngStream derive(std::uint64_t seed, std::uint64_t key);

  // Checkpoint support.
  std::uint64_t state() const { return state_; }
  std::uint64_t sequence() const { return inc_; }
  static RngStream restore(std::uint64_t state, std::uint64_t sequence);

  bool operator==(const RngStream&) const = default;

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 1;
};

}  // namespace locorl::math
