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

#include "privexp/mechanisms.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>

namespace privexp {

FamilySpec NoisyRelease::spec() const {
  if (family_id == "bernoulli") return FamilySpec::bernoulli();
  if (family_id == "multinomial") return FamilySpec::multinomial(categories);
  if (family_id == "exponential") return FamilySpec::exponential();
  throw ConfigError("release: unknown family '" + family_id + "'");
}

double sensitivity_bounded(const FamilySpec& spec) {
  switch (spec.family()) {
    case Family::kBernoulli:
      return 1.0;
    case Family::kMultinomial:
      // Switching one record between categories moves two counts by one.
      return 2.0;
    case Family::kExponential:
      throw MustTruncate(
          "exponential statistics are unbounded; release requires truncation "
          "bounds");
  }
  throw UnsupportedOperation("sensitivity_bounded: unknown family");
}

namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("release: epsilon must be positive");
}

// Public counts for the release vector: all k counts for the multinomial,
// the statistic itself otherwise.
Eigen::VectorXd public_stats(const FamilySpec& spec, const Dataset& data) {
  if (spec.family() != Family::kMultinomial) return suff_stats(spec, data);
  validate_support(spec, data);
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(spec.categories());
  for (double x : data.values) counts(static_cast<int>(x)) += 1.0;
  return counts;
}

}  // namespace

NoisyRelease release_bounded(const FamilySpec& spec, const Dataset& data,
                             double epsilon, RngHandle& rng) {
  check_epsilon(epsilon);
  const double delta = sensitivity_bounded(spec);
  const Eigen::VectorXd s = public_stats(spec, data);

  NoisyRelease rel;
  rel.family_id = spec.id();
  rel.categories = spec.categories();
  rel.n = data.n();
  rel.epsilon = epsilon;
  rel.delta_s = delta;
  rel.y = rng.laplace(s, delta / epsilon);
  return rel;
}

NoisyRelease release_truncated(const FamilySpec& spec, const Dataset& data,
                               double epsilon, const Interval& bounds,
                               RngHandle& rng) {
  check_epsilon(epsilon);
  const double delta = trunc_sensitivity(spec, bounds);
  validate_support(spec, data);

  Eigen::VectorXd s_hat = Eigen::VectorXd::Zero(spec.stat_dim());
  for (double x : data.values)
    if (x >= bounds.lo && x <= bounds.hi) s_hat(0) += x;

  NoisyRelease rel;
  rel.family_id = spec.id();
  rel.categories = spec.categories();
  rel.n = data.n();
  rel.epsilon = epsilon;
  rel.delta_s = delta;
  rel.bounds = bounds;
  rel.y = rng.laplace(s_hat, delta / epsilon);
  return rel;
}

std::vector<double> ops_release(const FamilySpec& spec, const Dataset& data,
                                double epsilon, const HyperParams& prior,
                                RngHandle& rng, int k_samples, double a0) {
  if (spec.family() != Family::kBernoulli)
    throw UnsupportedOperation("ops_release: bernoulli family only");
  if (!(a0 > 0.0) || !(a0 < 0.5))
    throw DomainError("ops_release: a0 must lie in (0, 0.5)");
  if (k_samples < 1) throw DomainError("ops_release: k_samples must be >= 1");
  check_epsilon(epsilon);

  const double s = suff_stats(spec, data)(0);
  const double n = static_cast<double>(data.n());
  const double eps_ops = epsilon / k_samples;
  const double delta_u = std::log((1.0 - a0) / a0);
  const double gamma = eps_ops / (2.0 * delta_u);

  const double a = prior.beta_alpha() + gamma * s;
  const double b = prior.beta_beta() + gamma * (n - s);

  // Inverse-CDF sampling of Beta(a, b) restricted to [a0, 1-a0].
  const double flo = boost::math::ibeta(a, b, a0);
  const double fhi = boost::math::ibeta(a, b, 1.0 - a0);
  std::vector<double> draws;
  draws.reserve(static_cast<std::size_t>(k_samples));
  for (int i = 0; i < k_samples; ++i) {
    const double u = rng.uniform(flo, fhi);
    double theta = boost::math::ibeta_inv(a, b, u);
    theta = std::min(std::max(theta, a0), 1.0 - a0);
    draws.push_back(theta);
  }
  return draws;
}

}  // namespace privexp
