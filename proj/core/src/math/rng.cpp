#include "locorl/math/rng.hpp"

#include <cmath>
#include <numbers>

namespace locorl::math {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kPcgMult = 6364136223846793005ULL;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t key) {
  // Scramble the inputs so nearby seeds/keys give unrelated streams.
  std::uint64_t s = seed;
  const std::uint64_t init_state = splitmix64(s);
  std::uint64_t k = key ^ 0xda3e39cb94b95bdbULL;
  const std::uint64_t init_seq = splitmix64(k);

  inc_ = (init_seq << 1u) | 1u;
  state_ = 0;
  next_u32();
  state_ += init_state;
  next_u32();
}

RngStream RngStream::derive(std::uint64_t seed, std::uint64_t key) {
  return RngStream(seed, key);
}

RngStream RngStream::restore(std::uint64_t state, std::uint64_t sequence) {
  RngStream r;
  r.state_ = state;
  r.inc_ = sequence;
  return r;
}

std::uint32_t RngStream::next_u32() {
  const std::uint64_t old = state_;
  state_ = old * kPcgMult + inc_;
  const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const auto rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t hi = next_u32();
  const std::uint64_t lo = next_u32();
  return (hi << 32) | lo;
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + uniform() * (hi - lo);
}

double RngStream::normal() {
  const double u1 = uniform_open();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace locorl::math
