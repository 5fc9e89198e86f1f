#pragma once

#include <deque>
#include <utility>

#include <Eigen/Core>

#include "locorl/io/binary.hpp"

namespace locorl::sim2real {

// History of timestamped observations recorded at the policy frequency.
// Reading at (now - latency) linearly interpolates between the two records
// bracketing that instant, imitating an actuated system whose sensed state
// lags its commands.
class LatencyBuffer {
 public:
  explicit LatencyBuffer(double horizon_s = 0.1);

  // Timestamps must be strictly increasing.
  void record(double time_s, const Eigen::VectorXd& observation);

  // Observation at (now_s - latency_s). Before enough history exists the
  // oldest record is returned and *cold is set.
  Eigen::VectorXd delayed(double now_s, double latency_s, bool* cold = nullptr) const;

  void clear();
  bool empty() const { return records_.empty(); }

  void save(io::BinaryWriter& w) const;
  void load(io::BinaryReader& r);

 private:
  double horizon_s_;
  std::deque<std::pair<double, Eigen::VectorXd>> records_;
};

}  // namespace locorl::sim2real
