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

#ifndef PRIVEXP_EXPFAM_HPP_
#define PRIVEXP_EXPFAM_HPP_

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "privexp/errors.hpp"
#include "privexp/rng.hpp"

namespace privexp {

enum class Family { kBernoulli, kMultinomial, kExponential };

// Description of one of the three shipped exponential families:
//   bernoulli     x in {0,1},        t(x) = x,        theta in (0,1)
//   multinomial   one-hot over k,    t(x) = first k-1 indicators (free
//                 coordinates, so the statistic covariance is full rank),
//                 theta on the open probability simplex
//   exponential   x in (0,inf),      t(x) = x,        rate lambda > 0
class FamilySpec {
 public:
  static FamilySpec bernoulli() { return FamilySpec(Family::kBernoulli, 0); }
  static FamilySpec multinomial(int k) {
    if (k < 2) throw DomainError("multinomial: k must be >= 2");
    return FamilySpec(Family::kMultinomial, k);
  }
  static FamilySpec exponential() { return FamilySpec(Family::kExponential, 0); }

  Family family() const { return family_; }
  int categories() const { return k_; }

  // Dimension of the sufficient statistic t(x): 1, k-1, 1.
  int stat_dim() const {
    return family_ == Family::kMultinomial ? k_ - 1 : 1;
  }

  // Width of the public release vector: the multinomial releases all k noisy
  // counts even though inference works in the k-1 free coordinates.
  int release_dim() const { return family_ == Family::kMultinomial ? k_ : 1; }

  // Dimension of theta as passed around externally (k probabilities for the
  // multinomial, a scalar otherwise).
  int theta_dim() const { return family_ == Family::kMultinomial ? k_ : 1; }

  bool bounded_stats() const { return family_ != Family::kExponential; }
  bool univariate() const { return family_ != Family::kMultinomial; }

  std::string id() const {
    switch (family_) {
      case Family::kBernoulli: return "bernoulli";
      case Family::kMultinomial: return "multinomial";
      case Family::kExponential: return "exponential";
    }
    return "";
  }

  bool operator==(const FamilySpec& o) const {
    return family_ == o.family_ && k_ == o.k_;
  }

 private:
  FamilySpec(Family f, int k) : family_(f), k_(k) {}
  Family family_;
  int k_;
};

// Conjugate-prior hyperparameters in natural form: lambda1 (dim = stat_dim)
// and the pseudo-count lambda2. The induced classical parameters are related
// by a fixed bijection per family:
//   beta:      alpha = lambda1,           beta  = lambda2 - lambda1
//   dirichlet: alpha_j = lambda1_j (j<k), alpha_k = lambda2 - sum(lambda1)
//   gamma:     rate = lambda1,            shape = lambda2 + 1
// Construction validates that every induced parameter is strictly positive.
class HyperParams {
 public:
  static HyperParams beta(double alpha, double beta);
  static HyperParams dirichlet(const Eigen::VectorXd& alphas);
  static HyperParams gamma(double shape, double rate);

  // Natural form directly; validates the induced parameters.
  static HyperParams natural(const FamilySpec& spec,
                             const Eigen::VectorXd& lambda1, double lambda2);

  const FamilySpec& spec() const { return spec_; }
  const Eigen::VectorXd& lambda1() const { return lambda1_; }
  double lambda2() const { return lambda2_; }

  double beta_alpha() const;
  double beta_beta() const;
  Eigen::VectorXd dirichlet_alphas() const;
  double gamma_shape() const;
  double gamma_rate() const;

 private:
  HyperParams(const FamilySpec& spec, Eigen::VectorXd lambda1, double lambda2);
  void validate() const;
  FamilySpec spec_;
  Eigen::VectorXd lambda1_;
  double lambda2_;
};

// Raw records. Univariate families store the observed value; the multinomial
// stores the category index (0-based) of the one-hot observation.
struct Dataset {
  std::vector<double> values;
  long n() const { return static_cast<long>(values.size()); }
};

struct Moments {
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;
};

// Throws SupportViolation unless every record lies in the family's support.
void validate_support(const FamilySpec& spec, const Dataset& data);

// s = sum_i t(x_i), in free coordinates.
Eigen::VectorXd suff_stats(const FamilySpec& spec, const Dataset& data);

// eta(theta); throws DomainError at the parameter-domain boundary.
Eigen::VectorXd natural_params(const FamilySpec& spec,
                               const Eigen::VectorXd& theta);

// Inverse map theta(eta).
Eigen::VectorXd theta_from_natural(const FamilySpec& spec,
                                   const Eigen::VectorXd& eta);

// A(eta); throws DomainError outside the natural domain.
double log_partition(const FamilySpec& spec, const Eigen::VectorXd& eta);

// mu = dA/deta, Sigma = d2A/deta deta' at eta(theta), via the autodiff
// module; Sigma is symmetric PSD.
Moments moments(const FamilySpec& spec, const Eigen::VectorXd& theta);

// lambda1' = lambda1 + s, lambda2' = lambda2 + n. Throws InvalidStats if an
// induced parameter would be nonpositive (callers performing rejection catch
// invalid draws with valid_stats first).
HyperParams conjugate_update(const HyperParams& prior, const Eigen::VectorXd& s,
                             double n);

// One draw from the induced beta/Dirichlet/gamma. Draws are clamped away
// from the parameter-domain boundary (probabilities into
// [1e-12, 1-1e-12], rates to >= 1e-12) so eta(theta) stays finite.
Eigen::VectorXd sample_posterior_param(const HyperParams& posterior,
                                       RngHandle& rng);

// Exact CDF of a univariate family; multinomial -> UnsupportedOperation.
double cdf(const FamilySpec& spec, const Eigen::VectorXd& theta, double x);

// n iid draws from p(x | theta).
Dataset sample_data(const FamilySpec& spec, const Eigen::VectorXd& theta,
                    long n, RngHandle& rng);

// Whether a (possibly Gibbs-sampled, real-valued) statistic vector is
// admissible: bernoulli 0 <= s <= n; multinomial s_j >= 0 and sum <= n;
// exponential s > 0.
bool valid_stats(const FamilySpec& spec, const Eigen::VectorXd& s, double n);

// Projection of an arbitrary vector onto the closed valid-statistic region
// (used for initialization and the naive baseline's clamping rule).
Eigen::VectorXd clamp_stats(const FamilySpec& spec, const Eigen::VectorXd& s,
                            double n);

}  // namespace privexp

#endif  // PRIVEXP_EXPFAM_HPP_
