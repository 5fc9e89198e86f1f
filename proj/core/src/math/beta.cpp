#include "locorl/math/beta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace locorl::math {

namespace {

constexpr double kEdge = 1e-6;

void require_valid(const BetaParams& p) {
  if (!(p.alpha > 1.0) || !(p.beta > 1.0) || !std::isfinite(p.alpha) || !std::isfinite(p.beta))
    throw std::invalid_argument("BetaParams: alpha and beta must be finite and > 1");
}

}  // namespace

double softplus(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double sigmoid(double x) {
  return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

double digamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("digamma: x must be > 0");
  double r = 0.0;
  while (x < 6.0) {
    r -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Asymptotic expansion, accurate to ~1e-14 for x >= 6.
  r += std::log(x) - 0.5 * inv -
       inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 / 240.0)));
  return r;
}

double beta_log_prob(const BetaParams& p, double x) {
  require_valid(p);
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("beta_log_prob: x outside [0, 1]");
  const double xc = std::clamp(x, kEdge, 1.0 - kEdge);
  const double log_norm = std::lgamma(p.alpha) + std::lgamma(p.beta) - std::lgamma(p.alpha + p.beta);
  return (p.alpha - 1.0) * std::log(xc) + (p.beta - 1.0) * std::log1p(-xc) - log_norm;
}

std::pair<double, double> beta_log_prob_grad(const BetaParams& p, double x) {
  require_valid(p);
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("beta_log_prob_grad: x outside [0, 1]");
  const double xc = std::clamp(x, kEdge, 1.0 - kEdge);
  const double psi_sum = digamma(p.alpha + p.beta);
  return {std::log(xc) - digamma(p.alpha) + psi_sum,
          std::log1p(-xc) - digamma(p.beta) + psi_sum};
}

double gamma_sample(double shape, RngStream& rng) {
  if (!(shape >= 1.0)) throw std::invalid_argument("gamma_sample: shape must be >= 1");
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double z = rng.normal();
    double v = 1.0 + c * z;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = rng.uniform_open();
    if (std::log(u) < 0.5 * z * z + d - d * v + d * std::log(v)) return d * v;
  }
}

double beta_sample(const BetaParams& p, RngStream& rng) {
  require_valid(p);
  const double x = gamma_sample(p.alpha, rng);
  const double y = gamma_sample(p.beta, rng);
  const double s = x / (x + y);
  return std::clamp(s, kEdge, 1.0 - kEdge);
}

double beta_mode(const BetaParams& p) {
  require_valid(p);
  return (p.alpha - 1.0) / (p.alpha + p.beta - 2.0);
}

}  // namespace locorl::math
