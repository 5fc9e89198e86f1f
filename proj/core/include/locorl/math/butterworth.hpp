#pragma once

#include <Eigen/Core>

#include "locorl/io/binary.hpp"

namespace locorl::math {

// Second-order low-pass Butterworth, discretized with the bilinear
// transform (prewarped so the -3 dB point lands exactly on the cutoff).
// One delay line per channel.
class ButterworthFilter {
 public:
  ButterworthFilter(int channels, double cutoff_hz, double sample_hz);

  Eigen::VectorXd step(const Eigen::Ref<const Eigen::VectorXd>& input);

  // Zero the delay lines.
  void reset();
  // Load the delay lines with the steady-state response to `value`, so a
  // constant input passes through unchanged from the first step.
  void prime(const Eigen::Ref<const Eigen::VectorXd>& value);

  int channels() const { return static_cast<int>(x1_.size()); }
  double cutoff_hz() const { return cutoff_hz_; }
  double sample_hz() const { return sample_hz_; }

  void save(io::BinaryWriter& w) const;
  void load(io::BinaryReader& r);

 private:
  double b0_, b1_, b2_, a1_, a2_;
  double cutoff_hz_, sample_hz_;
  Eigen::VectorXd x1_, x2_, y1_, y2_;
};

}  // namespace locorl::math
