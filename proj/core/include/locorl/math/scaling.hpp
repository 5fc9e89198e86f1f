#pragma once

#include <algorithm>
#include <stdexcept>

namespace locorl::math {

// Affine map of a unit-interval sample onto [lo, hi].
inline double scale_unit_to_bounds(double u, double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("scale_unit_to_bounds: lo must be < hi");
  return lo + u * (hi - lo);
}

inline double unit_from_bounds(double x, double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("unit_from_bounds: lo must be < hi");
  return (x - lo) / (hi - lo);
}

inline double clamp01(double u) { return std::clamp(u, 0.0, 1.0); }

}  // namespace locorl::math
