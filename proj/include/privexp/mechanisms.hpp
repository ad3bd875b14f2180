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

#ifndef PRIVEXP_MECHANISMS_HPP_
#define PRIVEXP_MECHANISMS_HPP_

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "privexp/expfam.hpp"
#include "privexp/truncation.hpp"

namespace privexp {

// The public release record: the only artifact that crosses the data-owner
// boundary. Inference and evaluation consume releases, never raw datasets.
// The neighboring relation is the fixed-n (bounded DP) variant, so n is
// public.
struct NoisyRelease {
  std::string family_id;
  int categories = 0;  // k, multinomial only
  long n = 0;
  double epsilon = 0.0;
  double delta_s = 0.0;                 // sensitivity used for the noise scale
  std::optional<Interval> bounds;       // present iff statistics were truncated
  Eigen::VectorXd y;                    // release_dim coordinates

  FamilySpec spec() const;
};

// L1 sensitivity of the untruncated statistic: bernoulli 1, multinomial 2.
// Unbounded statistics (exponential) throw MustTruncate.
double sensitivity_bounded(const FamilySpec& spec);

// y = s + Laplace(0, delta_s/epsilon) per coordinate. The multinomial
// releases all k noisy counts.
NoisyRelease release_bounded(const FamilySpec& spec, const Dataset& data,
                             double epsilon, RngHandle& rng);

// Truncated release: records outside [bounds.lo, bounds.hi] are redacted,
// s_hat = sum of t(x) over the survivors, and y = s_hat + Laplace noise
// scaled by trunc_sensitivity(bounds)/epsilon.
NoisyRelease release_truncated(const FamilySpec& spec, const Dataset& data,
                               double epsilon, const Interval& bounds,
                               RngHandle& rng);

// One-posterior-sampling baseline for the bernoulli model: k_samples draws
// from the tempered posterior p(theta) p(x|theta)^gamma restricted to
// [a0, 1-a0], each consuming epsilon/k_samples of the budget. The
// temperature is the standard exponential-mechanism calibration
// gamma = eps_ops / (2 delta_u) with delta_u = log((1-a0)/a0); each draw is
// a truncated Beta(alpha + gamma s, beta + gamma (n-s)) sampled by inverse
// CDF on [a0, 1-a0].
std::vector<double> ops_release(const FamilySpec& spec, const Dataset& data,
                                double epsilon, const HyperParams& prior,
                                RngHandle& rng, int k_samples = 100,
                                double a0 = 0.1);

}  // namespace privexp

#endif  // PRIVEXP_MECHANISMS_HPP_
