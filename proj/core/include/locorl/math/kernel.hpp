#pragma once

#include <cmath>
#include <stdexcept>

namespace locorl::math {

struct LogisticKernelParams {
  double sensitivity = 1.0;  // l > 0
};

// Smooth bell K(x|l) = 2 / (e^{lx} + e^{-lx}); K(0) = 1, even in x,
// strictly decreasing in |x|, range (0, 1].
inline double kernel_eval(double x, double l) {
  if (!(l > 0.0) || !std::isfinite(x) || !std::isfinite(l))
    throw std::invalid_argument("kernel_eval: need finite x and l > 0");
  return 1.0 / std::cosh(l * x);
}

inline double kernel_eval(double x, const LogisticKernelParams& p) {
  return kernel_eval(x, p.sensitivity);
}

}  // namespace locorl::math
