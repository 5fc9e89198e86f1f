#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "locorl/errors.hpp"

namespace locorl::io {

// Little-endian binary serialization into a byte vector. Used by the
// checkpoint format and by environment state snapshots.
class BinaryWriter {
 public:
  void put_u32(std::uint32_t v) { put_raw(&v, sizeof v); }
  void put_u64(std::uint64_t v) { put_raw(&v, sizeof v); }
  void put_i64(std::int64_t v) { put_raw(&v, sizeof v); }
  void put_f64(double v) { put_raw(&v, sizeof v); }

  void put_bytes(const std::vector<std::uint8_t>& b) {
    put_u64(b.size());
    bytes_.insert(bytes_.end(), b.begin(), b.end());
  }

  void put_string(const std::string& s) {
    put_u64(s.size());
    bytes_.insert(bytes_.end(), s.begin(), s.end());
  }

  void put_vec(const Eigen::VectorXd& v) {
    put_u64(static_cast<std::uint64_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) put_f64(v[i]);
  }

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

 private:
  void put_raw(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    bytes_.insert(bytes_.end(), b, b + n);
  }
  std::vector<std::uint8_t> bytes_;
};

class BinaryReader {
 public:
  explicit BinaryReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  std::uint32_t get_u32() { return get_raw<std::uint32_t>(); }
  std::uint64_t get_u64() { return get_raw<std::uint64_t>(); }
  std::int64_t get_i64() { return get_raw<std::int64_t>(); }
  double get_f64() { return get_raw<double>(); }

  std::vector<std::uint8_t> get_bytes() {
    const std::uint64_t n = get_u64();
    check(n);
    std::vector<std::uint8_t> out(bytes_.begin() + pos_, bytes_.begin() + pos_ + n);
    pos_ += n;
    return out;
  }

  std::string get_string() {
    const std::uint64_t n = get_u64();
    check(n);
    std::string out(bytes_.begin() + pos_, bytes_.begin() + pos_ + n);
    pos_ += n;
    return out;
  }

  Eigen::VectorXd get_vec() {
    const std::uint64_t n = get_u64();
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (std::uint64_t i = 0; i < n; ++i) v[static_cast<Eigen::Index>(i)] = get_f64();
    return v;
  }

  bool exhausted() const { return pos_ == bytes_.size(); }

 private:
  template <typename T>
  T get_raw() {
    check(sizeof(T));
    T v;
    std::memcpy(&v, bytes_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }
  void check(std::uint64_t n) const {
    if (pos_ + n > bytes_.size())
      throw CheckpointError("binary stream truncated");
  }
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

// FNV-1a over a byte range; guards checkpoints against trailing corruption.
inline std::uint64_t fnv1a(const std::uint8_t* data, std::size_t n) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace locorl::io
