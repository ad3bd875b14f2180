// Copyright 2026 The privexp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVEXP_INFERENCE_HPP_
#define PRIVEXP_INFERENCE_HPP_

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "privexp/expfam.hpp"
#include "privexp/mechanisms.hpp"

namespace privexp {

struct GaussianParams {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

// Product of two normal densities, renormalized:
//   Sigma3 = (Sigma1^-1 + Sigma2^-1)^-1
//   mu3    = Sigma3 (Sigma1^-1 mu1 + Sigma2^-1 mu2).
// Inputs must be symmetric positive definite.
GaussianParams norm_product(const Eigen::VectorXd& mu1,
                            const Eigen::MatrixXd& sigma1,
                            const Eigen::VectorXd& mu2,
                            const Eigen::MatrixXd& sigma2);

// Noise-variance augmentation update. Per coordinate j draws
//   t ~ InverseGaussian(eps / (delta |y_j - s_j|), eps^2 / delta^2)
// and returns sigma2_j = 1/t. Residuals are floored at 1e-10 so the
// inverse-Gaussian mean stays finite.
Eigen::VectorXd update_sigma2(const Eigen::VectorXd& y,
                              const Eigen::VectorXd& s_center, double delta,
                              double epsilon, RngHandle& rng);

struct GibbsOptions {
  long iters = 5000;
  long burnin = 2000;
  bool keep_trace = false;   // record every iteration, burn-in included
  long rejection_cap = 1000; // attempts per statistic draw before keeping the
                             // previous value
  // Diagnostic knob: pin theta instead of resampling it, so the (s, sigma2)
  // sub-chain can be checked against the closed-form product density.
  std::optional<Eigen::VectorXd> fixed_theta;
};

struct TraceRow {
  long iter = 0;
  bool burnin = false;
  Eigen::VectorXd theta;   // theta_dim (k probabilities for multinomial)
  Eigen::VectorXd s;       // full-statistic draw, free coordinates
  Eigen::VectorXd sigma2;  // release_dim
};

struct Chain {
  std::vector<Eigen::VectorXd> samples;  // post-burn-in theta draws
  std::vector<TraceRow> trace;           // filled when keep_trace is set
  long iters = 0;
  long burnin = 0;
  // Rejection diagnostics: total rejected proposals and the number of
  // iterations in which the cap was exhausted (previous value retained).
  long s_rejections = 0;
  long s_cap_hits = 0;
  long sc_rejections = 0;
  long sc_cap_hits = 0;

  double rejection_rate() const {
    const double draws = static_cast<double>(iters);
    return draws > 0 ? static_cast<double>(s_rejections) /
                           (static_cast<double>(s_rejections) + draws)
                     : 0.0;
  }
};

// Gibbs sampler for a release of (bounded) statistics. Per iteration:
//   theta ~ p(theta; conjugate_update(lambda, s, n))
//   (mu, Sigma) = moments(theta)
//   s ~ NormProduct(n mu, n Sigma, y, diag(sigma2)), rejected until
//       valid_stats (the multinomial folds the k-th noisy count in as the
//       extra linear observation y_k ~ N(n - sum s, sigma2_k))
//   sigma2 ~ augmentation update.
// The sampler itself is family-generic; boundedness is enforced where the
// release is produced.
Chain gibbs_bounded(const NoisyRelease& release, const HyperParams& prior,
                    const GibbsOptions& opts, RngHandle& rng);

// Gibbs sampler for a truncated release (univariate family with unbounded
// statistics). Uses the random-sum CLT over the three intervals
// [-inf, a], [a, b], [b, inf]; the full statistic s = s_l + s_c + s_u drives
// the conjugate update, and a fresh center draw s_c drives the sigma2 update.
// Side intervals with mass below 1e-12 contribute (m, V) = (0, 0).
Chain gibbs_truncated(const NoisyRelease& release, const HyperParams& prior,
                      const GibbsOptions& opts, RngHandle& rng);

// Baseline that performs a conjugate update pretending the noisy statistics
// are exact, after projecting them onto the closed valid region
// (componentwise for the multinomial: negative counts to zero, others kept).
HyperParams naive_posterior(const NoisyRelease& release,
                            const HyperParams& prior);

}  // namespace privexp

#endif  // PRIVEXP_INFERENCE_HPP_
