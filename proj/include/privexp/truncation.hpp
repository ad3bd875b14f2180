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

#ifndef PRIVEXP_TRUNCATION_HPP_
#define PRIVEXP_TRUNCATION_HPP_

#include <Eigen/Dense>
#include <limits>

#include "privexp/expfam.hpp"

namespace privexp {

// Truncation interval with extended-real endpoints. Intersected with the
// family support before use.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  static Interval all() { return Interval{}; }
  bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
};

// Normal-approximation parameters for a random-sum of truncated statistics:
//   q = Pr(x in interval),  m = n q mu_hat,  V = n q Sigma_hat
//                                              + n q (1-q) mu_hat mu_hat'.
struct RsCltParams {
  Eigen::VectorXd m;
  Eigen::MatrixXd V;
  double q = 0.0;
};

// Interval mass below which truncated quantities are rejected as degenerate
// rather than regularized.
inline constexpr double kDegenerateMass = 1e-12;

// q = F(hi; theta) - F(lo; theta), with F(-inf) = 0 and F(+inf) = 1.
double interval_mass(const FamilySpec& spec, const Eigen::VectorXd& theta,
                     const Interval& iv);

// A_hat(eta) = A(eta) + log(F(hi; eta) - F(lo; eta)). Throws
// DegenerateInterval when the mass vanishes.
double trunc_log_partition(const FamilySpec& spec, const Eigen::VectorXd& eta,
                           const Interval& iv);

// Moments of t(x) under the family truncated to the interval:
//   mu_hat    = mu    + d/deta  log(F(hi; eta) - F(lo; eta))
//   Sigma_hat = Sigma + d2/deta2 log(F(hi; eta) - F(lo; eta)),
// with the correction derivatives computed by the autodiff module.
Moments trunc_moments(const FamilySpec& spec, const Eigen::VectorXd& theta,
                      const Interval& iv);

// Random-sum CLT parameters for s_hat = sum over records inside the interval
// of t(x), with n total records.
RsCltParams rs_clt(const FamilySpec& spec, const Eigen::VectorXd& theta,
                   const Interval& iv, double n);

// L1 sensitivity bound of the truncated statistic
//   sum_j max{ max_{x in [a,b]} |t_j(x)|, max_{x,y in [a,b]} |t_j(x)-t_j(y)| }.
// Shipped statistics are monotone in x, so the extrema sit at the endpoints.
// Requires finite bounds.
double trunc_sensitivity(const FamilySpec& spec, const Interval& iv);

}  // namespace privexp

#endif  // PRIVEXP_TRUNCATION_HPP_
