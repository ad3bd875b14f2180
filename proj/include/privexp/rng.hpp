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

#ifndef PRIVEXP_RNG_HPP_
#define PRIVEXP_RNG_HPP_

#include <Eigen/Dense>
#include <array>
#include <cstdint>

namespace privexp {

// Seedable deterministic variate generator. The base generator is
// xoshiro256++ seeded through splitmix64, so a given seed produces the same
// stream on every platform for the same build; none of the C++ standard
// library distributions (which are implementation-defined) are used.
//
// Not cryptographic: this library is a research simulation of a DP release,
// not a hardened deployment.
//
// One handle per chain/trial. Handles are movable between threads but must
// not be shared concurrently.
class RngHandle {
 public:
  explicit RngHandle(std::uint64_t seed);

  // Substream constructor; equivalent to RngHandle(seed ^ stream). Used for
  // per-trial and per-chain streams.
  RngHandle(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi);

  // Standard normal via the Marsaglia polar method (spare deviate discarded
  // so consumption stays easy to reason about).
  double normal();
  double normal(double mean, double sd);

  // Laplace(loc, scale) by inverse CDF; scale > 0.
  double laplace(double loc, double scale);
  Eigen::VectorXd laplace(const Eigen::VectorXd& loc, double scale);

  // Exponential with rate parameter; strictly positive draws.
  double exponential_rate(double rate);

  // Gamma(shape, rate) via Marsaglia-Tsang, with the u^(1/shape) boost for
  // shape < 1.
  double gamma_shape_rate(double shape, double rate);

  double beta(double a, double b);
  Eigen::VectorXd dirichlet(const Eigen::VectorXd& alphas);
  long binomial(long n, double p);
  int categorical(const Eigen::VectorXd& probs);

  // InverseGaussian(x; mean, shape) with density
  //   sqrt(shape/(2 pi x^3)) exp{-shape (x-mean)^2 / (2 mean^2 x)},
  // sampled by the Michael-Schucany-Haas transform (chi-square(1) root plus
  // a uniform acceptance branch); exact and rejection-free.
  double inverse_gaussian(double mean, double shape);

  // Multivariate normal via Cholesky; retries once with a 1e-10 ridge when
  // the factorization fails, then errors on an indefinite matrix.
  Eigen::VectorXd mvnormal(const Eigen::VectorXd& mean,
                           const Eigen::MatrixXd& cov);

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace privexp

#endif  // PRIVEXP_RNG_HPP_
