#pragma once

#include <utility>

#include "locorl/math/rng.hpp"

namespace locorl::math {

// Shape parameters of one action dimension's Beta distribution.
// The actor head keeps both above 1 so the density is unimodal and the
// mode is well defined.
struct BetaParams {
  double alpha = 2.0;
  double beta = 2.0;
};

double softplus(double x);
double sigmoid(double x);
double digamma(double x);

// log of the Beta(alpha, beta) density at x in [0, 1]. x is clamped to
// [1e-6, 1 - 1e-6] before evaluation so bound-touching actions stay finite.
double beta_log_prob(const BetaParams& p, double x);

// (d logp / d alpha, d logp / d beta) at x, with the same clamping.
std::pair<double, double> beta_log_prob_grad(const BetaParams& p, double x);

// Draw from Beta(alpha, beta) via two Gamma variates.
double beta_sample(const BetaParams& p, RngStream& rng);

// (alpha - 1) / (alpha + beta - 2); requires alpha, beta > 1.
double beta_mode(const BetaParams& p);

// Marsaglia-Tsang Gamma(shape, 1) sampler, shape >= 1.
double gamma_sample(double shape, RngStream& rng);

}  // namespace locorl::math
