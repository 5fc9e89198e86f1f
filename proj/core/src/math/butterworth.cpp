#include "locorl/math/butterworth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace locorl::math {

ButterworthFilter::ButterworthFilter(int channels, double cutoff_hz, double sample_hz)
    : cutoff_hz_(cutoff_hz), sample_hz_(sample_hz) {
  if (channels < 1) throw std::invalid_argument("ButterworthFilter: channels must be >= 1");
  if (!(cutoff_hz > 0.0) || !(cutoff_hz < 0.5 * sample_hz))
    throw std::invalid_argument("ButterworthFilter: cutoff must lie in (0, sample_rate/2)");

  const double w = std::tan(std::numbers::pi * cutoff_hz / sample_hz);
  const double k = 1.0 + std::numbers::sqrt2 * w + w * w;
  b0_ = w * w / k;
  b1_ = 2.0 * b0_;
  b2_ = b0_;
  a1_ = 2.0 * (w * w - 1.0) / k;
  a2_ = (1.0 - std::numbers::sqrt2 * w + w * w) / k;

  x1_ = Eigen::VectorXd::Zero(channels);
  x2_ = Eigen::VectorXd::Zero(channels);
  y1_ = Eigen::VectorXd::Zero(channels);
  y2_ = Eigen::VectorXd::Zero(channels);
}

Eigen::VectorXd ButterworthFilter::step(const Eigen::Ref<const Eigen::VectorXd>& input) {
  if (input.size() != x1_.size())
    throw std::invalid_argument("ButterworthFilter::step: channel count mismatch");
  Eigen::VectorXd y = b0_ * input + b1_ * x1_ + b2_ * x2_ - a1_ * y1_ - a2_ * y2_;
  x2_ = x1_;
  x1_ = input;
  y2_ = y1_;
  y1_ = y;
  return y;
}

void ButterworthFilter::reset() {
  x1_.setZero();
  x2_.setZero();
  y1_.setZero();
  y2_.setZero();
}

void ButterworthFilter::prime(const Eigen::Ref<const Eigen::VectorXd>& value) {
  if (value.size() != x1_.size())
    throw std::invalid_argument("ButterworthFilter::prime: channel count mismatch");
  x1_ = value;
  x2_ = value;
  y1_ = value;  // unity DC gain: steady state output equals the input
  y2_ = value;
}

void ButterworthFilter::save(io::BinaryWriter& w) const {
  w.put_vec(x1_);
  w.put_vec(x2_);
  w.put_vec(y1_);
  w.put_vec(y2_);
}

void ButterworthFilter::load(io::BinaryReader& r) {
  x1_ = r.get_vec();
  x2_ = r.get_vec();
  y1_ = r.get_vec();
  y2_ = r.get_vec();
}

}  // namespace locorl::math
