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

#include "privexp/truncation.hpp"

#include <cmath>

#include "privexp/dual.hpp"
#include "privexp/natural_form.hpp"

namespace privexp {

namespace {

// Whether the interval covers the whole support, in which case truncation is
// a no-op and the log-mass correction is exactly zero.
bool covers_support(const FamilySpec& spec, const Interval& iv) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  switch (spec.family()) {
    case Family::kBernoulli:
      return iv.lo < 0.0 && iv.hi >= 1.0;
    case Family::kExponential:
      return iv.lo <= 0.0 && iv.hi == kInf;
    default:
      return false;
  }
}

void require_univariate(const FamilySpec& spec, const char* op) {
  if (!spec.univariate())
    throw UnsupportedOperation(std::string(op) +
                               ": truncation requires a univariate family");
}

}  // namespace

double interval_mass(const FamilySpec& spec, const Eigen::VectorXd& theta,
                     const Interval& iv) {
  require_univariate(spec, "interval_mass");
  if (!(iv.lo < iv.hi)) throw DomainError("interval_mass: requires lo < hi");
  const Eigen::VectorXd eta = natural_params(spec, theta);
  std::vector<double> e(eta.data(), eta.data() + eta.size());
  return natural::interval_mass_nat(spec, iv.lo, iv.hi, e);
}

double trunc_log_partition(const FamilySpec& spec, const Eigen::VectorXd& eta,
                           const Interval& iv) {
  require_univariate(spec, "trunc_log_partition");
  std::vector<double> e(eta.data(), eta.data() + eta.size());
  const double a = natural::log_partition(spec, e);
  if (covers_support(spec, iv)) return a;
  const double q = natural::interval_mass_nat(spec, iv.lo, iv.hi, e);
  if (!(q > 0.0))
    throw DegenerateInterval("trunc_log_partition: interval mass is zero");
  return a + std::log(q);
}

Moments trunc_moments(const FamilySpec& spec, const Eigen::VectorXd& theta,
                      const Interval& iv) {
  require_univariate(spec, "trunc_moments");
  Moments base = moments(spec, theta);
  if (covers_support(spec, iv)) return base;

  const Eigen::VectorXd eta = natural_params(spec, theta);
  if (!(interval_mass(spec, theta, iv) > kDegenerateMass))
    throw DegenerateInterval("trunc_moments: interval mass below 1e-12");

  const ValueGradHess corr = grad_hess(
      [&spec, &iv](const std::vector<Dual2>& e) {
        return log(natural::interval_mass_nat(spec, iv.lo, iv.hi, e));
      },
      eta);
  base.mu += corr.grad;
  base.sigma += corr.hess;
  return base;
}

RsCltParams rs_clt(const FamilySpec& spec, const Eigen::VectorXd& theta,
                   const Interval& iv, double n) {
  require_univariate(spec, "rs_clt");
  if (!(n >= 1.0)) throw DomainError("rs_clt: requires n >= 1");
  const double q = interval_mass(spec, theta, iv);
  if (!(q > kDegenerateMass))
    throw DegenerateInterval("rs_clt: interval mass below 1e-12");
  const Moments trunc = trunc_moments(spec, theta, iv);

  RsCltParams out;
  out.q = q;
  out.m = n * q * trunc.mu;
  out.V = n * q * trunc.sigma +
          n * q * (1.0 - q) * trunc.mu * trunc.mu.transpose();
  return out;
}

double trunc_sensitivity(const FamilySpec& spec, const Interval& iv) {
  require_univariate(spec, "trunc_sensitivity");
  if (!iv.finite())
    throw DomainError("trunc_sensitivity: bounds must be finite");
  if (!(iv.lo < iv.hi)) throw DomainError("trunc_sensitivity: requires lo < hi");
  // Both shipped univariate families have t(x) = x.
  const double ta = iv.lo;
  const double tb = iv.hi;
  const double max_abs = std::max(std::abs(ta), std::abs(tb));
  const double max_diff = std::abs(tb - ta);
  return std::max(max_abs, max_diff);
}

}  // namespace privexp
