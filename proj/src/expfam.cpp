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

#include "privexp/expfam.hpp"

#include <cmath>
#include <limits>

#include "privexp/dual.hpp"
#include "privexp/natural_form.hpp"

namespace privexp {

namespace {

constexpr double kThetaClamp = 1e-12;

bool is_integral(double x) { return x == std::floor(x); }

}  // namespace

// ---------------------------------------------------------------------------
// HyperParams

HyperParams::HyperParams(const FamilySpec& spec, Eigen::VectorXd lambda1,
                         double lambda2)
    : spec_(spec), lambda1_(std::move(lambda1)), lambda2_(lambda2) {
  if (lambda1_.size() != spec_.stat_dim())
    throw InvalidStats("hyperparams: lambda1 has wrong dimension");
  validate();
}

void HyperParams::validate() const {
  switch (spec_.family()) {
    case Family::kBernoulli:
      if (!(beta_alpha() > 0.0) || !(beta_beta() > 0.0))
        throw InvalidStats("hyperparams: induced beta parameters nonpositive");
      return;
    case Family::kMultinomial: {
      const Eigen::VectorXd a = dirichlet_alphas();
      for (Eigen::Index j = 0; j < a.size(); ++j)
        if (!(a(j) > 0.0))
          throw InvalidStats(
              "hyperparams: induced Dirichlet parameters nonpositive");
      return;
    }
    case Family::kExponential:
      if (!(gamma_shape() > 0.0) || !(gamma_rate() > 0.0))
        throw InvalidStats("hyperparams: induced gamma parameters nonpositive");
      return;
  }
}

HyperParams HyperParams::beta(double alpha, double beta) {
  Eigen::VectorXd l1(1);
  l1 << alpha;
  return HyperParams(FamilySpec::bernoulli(), l1, alpha + beta);
}

HyperParams HyperParams::dirichlet(const Eigen::VectorXd& alphas) {
  const int k = static_cast<int>(alphas.size());
  return HyperParams(FamilySpec::multinomial(k), alphas.head(k - 1),
                     alphas.sum());
}

HyperParams HyperParams::gamma(double shape, double rate) {
  Eigen::VectorXd l1(1);
  l1 << rate;
  return HyperParams(FamilySpec::exponential(), l1, shape - 1.0);
}

HyperParams HyperParams::natural(const FamilySpec& spec,
                                 const Eigen::VectorXd& lambda1,
                                 double lambda2) {
  return HyperParams(spec, lambda1, lambda2);
}

double HyperParams::beta_alpha() const { return lambda1_(0); }
double HyperParams::beta_beta() const { return lambda2_ - lambda1_(0); }

Eigen::VectorXd HyperParams::dirichlet_alphas() const {
  const int k = spec_.categories();
  Eigen::VectorXd a(k);
  a.head(k - 1) = lambda1_;
  a(k - 1) = lambda2_ - lambda1_.sum();
  return a;
}

double HyperParams::gamma_shape() const { return lambda2_ + 1.0; }
double HyperParams::gamma_rate() const { return lambda1_(0); }

// ---------------------------------------------------------------------------
// Support and statistics

void validate_support(const FamilySpec& spec, const Dataset& data) {
  switch (spec.family()) {
    case Family::kBernoulli:
      for (double x : data.values)
        if (x != 0.0 && x != 1.0)
          throw SupportViolation("bernoulli record must be 0 or 1");
      return;
    case Family::kMultinomial:
      for (double x : data.values)
        if (!is_integral(x) || x < 0.0 || x >= spec.categories())
          throw SupportViolation("multinomial record must be a category index");
      return;
    case Family::kExponential:
      for (double x : data.values)
        if (!(x > 0.0))
          throw SupportViolation("exponential record must be positive");
      return;
  }
}

Eigen::VectorXd suff_stats(const FamilySpec& spec, const Dataset& data) {
  validate_support(spec, data);
  Eigen::VectorXd s = Eigen::VectorXd::Zero(spec.stat_dim());
  switch (spec.family()) {
    case Family::kBernoulli:
    case Family::kExponential:
      for (double x : data.values) s(0) += x;
      return s;
    case Family::kMultinomial:
      for (double x : data.values) {
        const int c = static_cast<int>(x);
        if (c < spec.categories() - 1) s(c) += 1.0;
      }
      return s;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parameter maps

Eigen::VectorXd natural_params(const FamilySpec& spec,
                               const Eigen::VectorXd& theta) {
  if (theta.size() != spec.theta_dim())
    throw DomainError("natural_params: theta has wrong dimension");
  switch (spec.family()) {
    case Family::kBernoulli: {
      const double t = theta(0);
      if (!(t > 0.0) || !(t < 1.0))
        throw DomainError("bernoulli theta must lie in (0,1)");
      Eigen::VectorXd eta(1);
      eta << std::log(t) - std::log1p(-t);
      return eta;
    }
    case Family::kMultinomial: {
      const int k = spec.categories();
      for (int j = 0; j < k; ++j)
        if (!(theta(j) > 0.0) || !(theta(j) < 1.0))
          throw DomainError("multinomial theta must lie in the open simplex");
      if (std::abs(theta.sum() - 1.0) > 1e-6)
        throw DomainError("multinomial theta must sum to 1");
      Eigen::VectorXd eta(k - 1);
      for (int j = 0; j < k - 1; ++j)
        eta(j) = std::log(theta(j)) - std::log(theta(k - 1));
      return eta;
    }
    case Family::kExponential: {
      const double rate = theta(0);
      if (!(rate > 0.0)) throw DomainError("exponential rate must be positive");
      Eigen::VectorXd eta(1);
      eta << -rate;
      return eta;
    }
  }
  throw UnsupportedOperation("natural_params: unknown family");
}

Eigen::VectorXd theta_from_natural(const FamilySpec& spec,
                                   const Eigen::VectorXd& eta) {
  switch (spec.family()) {
    case Family::kBernoulli: {
      Eigen::VectorXd theta(1);
      theta << natural::sigmoid(eta(0));
      return theta;
    }
    case Family::kMultinomial: {
      const int k = spec.categories();
      Eigen::VectorXd theta(k);
      const double m = std::max(0.0, eta.maxCoeff());
      double z = std::exp(-m);
      for (int j = 0; j < k - 1; ++j) z += std::exp(eta(j) - m);
      for (int j = 0; j < k - 1; ++j) theta(j) = std::exp(eta(j) - m) / z;
      theta(k - 1) = std::exp(-m) / z;
      return theta;
    }
    case Family::kExponential: {
      if (!(eta(0) < 0.0))
        throw DomainError("theta_from_natural: exponential requires eta < 0");
      Eigen::VectorXd theta(1);
      theta << -eta(0);
      return theta;
    }
  }
  throw UnsupportedOperation("theta_from_natural: unknown family");
}

double log_partition(const FamilySpec& spec, const Eigen::VectorXd& eta) {
  std::vector<double> e(eta.data(), eta.data() + eta.size());
  return natural::log_partition(spec, e);
}

Moments moments(const FamilySpec& spec, const Eigen::VectorXd& theta) {
  const Eigen::VectorXd eta = natural_params(spec, theta);
  const ValueGradHess vgh = grad_hess(
      [&spec](const std::vector<Dual2>& e) {
        return natural::log_partition(spec, e);
      },
      eta);
  return Moments{vgh.grad, vgh.hess};
}

// ---------------------------------------------------------------------------
// Conjugacy and sampling

HyperParams conjugate_update(const HyperParams& prior, const Eigen::VectorXd& s,
                             double n) {
  if (s.size() != prior.spec().stat_dim())
    throw InvalidStats("conjugate_update: statistic has wrong dimension");
  return HyperParams::natural(prior.spec(), prior.lambda1() + s,
                              prior.lambda2() + n);
}

Eigen::VectorXd sample_posterior_param(const HyperParams& posterior,
                                       RngHandle& rng) {
  switch (posterior.spec().family()) {
    case Family::kBernoulli: {
      double t = rng.beta(posterior.beta_alpha(), posterior.beta_beta());
      t = std::min(std::max(t, kThetaClamp), 1.0 - kThetaClamp);
      Eigen::VectorXd theta(1);
      theta << t;
      return theta;
    }
    case Family::kMultinomial: {
      Eigen::VectorXd theta = rng.dirichlet(posterior.dirichlet_alphas());
      for (Eigen::Index j = 0; j < theta.size(); ++j)
        theta(j) = std::min(std::max(theta(j), kThetaClamp), 1.0 - kThetaClamp);
      theta /= theta.sum();
      return theta;
    }
    case Family::kExponential: {
      double rate =
          rng.gamma_shape_rate(posterior.gamma_shape(), posterior.gamma_rate());
      rate = std::max(rate, kThetaClamp);
      Eigen::VectorXd theta(1);
      theta << rate;
      return theta;
    }
  }
  throw UnsupportedOperation("sample_posterior_param: unknown family");
}

double cdf(const FamilySpec& spec, const Eigen::VectorXd& theta, double x) {
  switch (spec.family()) {
    case Family::kBernoulli: {
      const double t = theta(0);
      if (!(t > 0.0) || !(t < 1.0))
        throw DomainError("bernoulli theta must lie in (0,1)");
      if (x < 0.0) return 0.0;
      if (x < 1.0) return 1.0 - t;
      return 1.0;
    }
    case Family::kExponential: {
      const double rate = theta(0);
      if (!(rate > 0.0)) throw DomainError("exponential rate must be positive");
      if (x <= 0.0) return 0.0;
      if (x == std::numeric_limits<double>::infinity()) return 1.0;
      return -std::expm1(-rate * x);
    }
    case Family::kMultinomial:
      throw UnsupportedOperation("cdf: not defined for the multinomial family");
  }
  throw UnsupportedOperation("cdf: unknown family");
}

Dataset sample_data(const FamilySpec& spec, const Eigen::VectorXd& theta,
                    long n, RngHandle& rng) {
  natural_params(spec, theta);  // boundary check
  Dataset data;
  data.values.reserve(static_cast<std::size_t>(n));
  switch (spec.family()) {
    case Family::kBernoulli:
      for (long i = 0; i < n; ++i)
        data.values.push_back(rng.uniform() < theta(0) ? 1.0 : 0.0);
      return data;
    case Family::kMultinomial:
      for (long i = 0; i < n; ++i)
        data.values.push_back(static_cast<double>(rng.categorical(theta)));
      return data;
    case Family::kExponential:
      for (long i = 0; i < n; ++i)
        data.values.push_back(rng.exponential_rate(theta(0)));
      return data;
  }
  return data;
}

bool valid_stats(const FamilySpec& spec, const Eigen::VectorXd& s, double n) {
  switch (spec.family()) {
    case Family::kBernoulli:
      return s(0) >= 0.0 && s(0) <= n;
    case Family::kMultinomial: {
      double total = 0.0;
      for (Eigen::Index j = 0; j < s.size(); ++j) {
        if (s(j) < 0.0) return false;
        total += s(j);
      }
      return total <= n;
    }
    case Family::kExponential:
      return s(0) > 0.0;
  }
  return false;
}

Eigen::VectorXd clamp_stats(const FamilySpec& spec, const Eigen::VectorXd& s,
                            double n) {
  Eigen::VectorXd out = s;
  switch (spec.family()) {
    case Family::kBernoulli:
      out(0) = std::min(std::max(out(0), 0.0), n);
      return out;
    case Family::kMultinomial: {
      for (Eigen::Index j = 0; j < out.size(); ++j)
        out(j) = std::min(std::max(out(j), 0.0), n);
      const double total = out.sum();
      if (total > n) out *= n / total;
      return out;
    }
    case Family::kExponential:
      out(0) = std::max(out(0), 0.0);
      return out;
  }
  return out;
}

}  // namespace privexp
