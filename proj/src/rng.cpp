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

#include "privexp/rng.hpp"

#include <cmath>

#include "privexp/errors.hpp"

namespace privexp {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RngHandle::RngHandle(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : state_) word = splitmix64(sm);
}

RngHandle::RngHandle(std::uint64_t seed, std::uint64_t stream)
    : RngHandle(seed ^ stream) {}

std::uint64_t RngHandle::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RngHandle::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngHandle::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double RngHandle::normal() {
  for (;;) {
    const double u = 2.0 * uniform() - 1.0;
    const double v = 2.0 * uniform() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

double RngHandle::normal(double mean, double sd) { return mean + sd * normal(); }

double RngHandle::laplace(double loc, double scale) {
  if (!(scale > 0.0)) throw DomainError("laplace: scale must be positive");
  for (;;) {
    const double u = uniform() - 0.5;
    const double t = 1.0 - 2.0 * std::abs(u);
    if (t <= 0.0) continue;
    return loc - scale * std::copysign(std::log(t), u);
  }
}

Eigen::VectorXd RngHandle::laplace(const Eigen::VectorXd& loc, double scale) {
  Eigen::VectorXd out(loc.size());
  for (Eigen::Index j = 0; j < loc.size(); ++j) out(j) = laplace(loc(j), scale);
  return out;
}

double RngHandle::exponential_rate(double rate) {
  if (!(rate > 0.0)) throw DomainError("exponential: rate must be positive");
  for (;;) {
    const double u = uniform();
    if (u > 0.0) return -std::log(u) / rate;
  }
}

double RngHandle::gamma_shape_rate(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw DomainError("gamma: shape and rate must be positive");
  if (shape < 1.0) {
    // Boost: gamma(a) = gamma(a+1) * U^(1/a).
    double u;
    do {
      u = uniform();
    } while (u <= 0.0);
    return gamma_shape_rate(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
    if (u > 0.0 &&
        std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
      return d * v / rate;
  }
}

double RngHandle::beta(double a, double b) {
  for (;;) {
    const double x = gamma_shape_rate(a, 1.0);
    const double y = gamma_shape_rate(b, 1.0);
    if (x + y > 0.0) return x / (x + y);
  }
}

Eigen::VectorXd RngHandle::dirichlet(const Eigen::VectorXd& alphas) {
  for (;;) {
    Eigen::VectorXd g(alphas.size());
    for (Eigen::Index j = 0; j < alphas.size(); ++j)
      g(j) = gamma_shape_rate(alphas(j), 1.0);
    const double total = g.sum();
    if (total > 0.0) return g / total;
  }
}

long RngHandle::binomial(long n, double p) {
  if (n < 0 || p < 0.0 || p > 1.0)
    throw DomainError("binomial: invalid parameters");
  long count = 0;
  for (long i = 0; i < n; ++i)
    if (uniform() < p) ++count;
  return count;
}

int RngHandle::categorical(const Eigen::VectorXd& probs) {
  const double u = uniform() * probs.sum();
  double acc = 0.0;
  for (Eigen::Index j = 0; j < probs.size(); ++j) {
    acc += probs(j);
    if (u < acc) return static_cast<int>(j);
  }
  return static_cast<int>(probs.size() - 1);
}

double RngHandle::inverse_gaussian(double mean, double shape) {
  if (!(mean > 0.0) || !(shape > 0.0))
    throw DomainError("inverse_gaussian: mean and shape must be positive");
  const double nu = normal();
  const double y = nu * nu;
  double x = mean + mean * mean * y / (2.0 * shape) -
             (mean / (2.0 * shape)) *
                 std::sqrt(4.0 * mean * shape * y + mean * mean * y * y);
  if (!(x > 0.0)) x = mean * 1e-300;  // cancellation guard at huge y
  const double u = uniform();
  if (u <= mean / (mean + x)) return x;
  return mean * mean / x;
}

Eigen::VectorXd RngHandle::mvnormal(const Eigen::VectorXd& mean,
                                    const Eigen::MatrixXd& cov) {
  const Eigen::Index d = mean.size();
  if (cov.rows() != d || cov.cols() != d)
    throw DomainError("mvnormal: dimension mismatch");
  if (cov.isZero(0.0)) return mean;

  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    Eigen::MatrixXd ridged =
        cov + 1e-10 * Eigen::MatrixXd::Identity(d, d);
    llt.compute(ridged);
    if (llt.info() != Eigen::Success)
      throw Error("mvnormal: covariance not positive semidefinite");
  }
  Eigen::VectorXd z(d);
  for (Eigen::Index j = 0; j < d; ++j) z(j) = normal();
  return mean + llt.matrixL() * z;
}

}  // namespace privexp
