#include "locorl/sim2real/latency.hpp"

#include <stdexcept>

namespace locorl::sim2real {

LatencyBuffer::LatencyBuffer(double horizon_s) : horizon_s_(horizon_s) {
  if (!(horizon_s > 0.0)) throw std::invalid_argument("LatencyBuffer: horizon must be > 0");
}

void LatencyBuffer::record(double time_s, const Eigen::VectorXd& observation) {
  if (!records_.empty() && !(time_s > records_.back().first))
    throw std::invalid_argument("LatencyBuffer::record: timestamps must be strictly increasing");
  records_.emplace_back(time_s, observation);
  // Keep one record older than the horizon so interpolation at the edge
  // still has a left bracket.
  while (records_.size() > 2 && records_[1].first < time_s - horizon_s_) records_.pop_front();
}

Eigen::VectorXd LatencyBuffer::delayed(double now_s, double latency_s, bool* cold) const {
  if (records_.empty()) throw std::logic_error("LatencyBuffer::delayed: no records");
  if (latency_s < 0.0) throw std::invalid_argument("LatencyBuffer::delayed: negative latency");
  if (cold) *cold = false;

  const double target = now_s - latency_s;
  if (target >= records_.back().first) return records_.back().second;
  if (target <= records_.front().first) {
    if (cold && target < records_.front().first) *cold = true;
    return records_.front().second;
  }
  // Binary search for the first record with time > target.
  std::size_t lo = 0, hi = records_.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (records_[mid].first <= target)
      lo = mid;
    else
      hi = mid;
  }
  const auto& [t0, obs0] = records_[lo];
  const auto& [t1, obs1] = records_[hi];
  const double f = (target - t0) / (t1 - t0);
  return obs0 + f * (obs1 - obs0);
}

void LatencyBuffer::clear() { records_.clear(); }

void LatencyBuffer::save(io::BinaryWriter& w) const {
  w.put_f64(horizon_s_);
  w.put_u64(records_.size());
  for (const auto& [t, obs] : records_) {
    w.put_f64(t);
    w.put_vec(obs);
  }
}

void LatencyBuffer::load(io::BinaryReader& r) {
  horizon_s_ = r.get_f64();
  const std::uint64_t n = r.get_u64();
  records_.clear();
  for (std::uint64_t i = 0; i < n; ++i) {
    const double t = r.get_f64();
    records_.emplace_back(t, r.get_vec());
  }
}

}  // namespace locorl::sim2real
