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

#include "privexp/inference.hpp"

#include <cmath>

namespace privexp {

namespace {

constexpr double kResidualFloor = 1e-10;

Eigen::MatrixXd spd_inverse(const Eigen::MatrixXd& m, const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw Error(std::string("norm_product: ") + what +
                " is singular or not positive definite");
  return llt.solve(Eigen::MatrixXd::Identity(m.rows(), m.cols()));
}

// Free-coordinate view of a release vector (drops the k-th noisy count).
Eigen::VectorXd free_coords(const FamilySpec& spec, const Eigen::VectorXd& y) {
  if (spec.family() != Family::kMultinomial) return y;
  return y.head(spec.categories() - 1);
}

// Release-space prediction of a statistic draw: the multinomial appends the
// implied k-th count n - sum(s).
Eigen::VectorXd predicted_release(const FamilySpec& spec,
                                  const Eigen::VectorXd& s, double n) {
  if (spec.family() != Family::kMultinomial) return s;
  Eigen::VectorXd out(spec.categories());
  out.head(spec.categories() - 1) = s;
  out(spec.categories() - 1) = n - s.sum();
  return out;
}

// Full conditional of the free-coordinate statistic for the multinomial:
// prior N(n mu, n Sigma) combined with y_j ~ N(s_j, sigma2_j) for j < k and
// the extra linear observation y_k ~ N(n - 1's, sigma2_k), folded into an
// effective Gaussian observation and passed through NormProduct.
GaussianParams condition_multinomial(const Eigen::VectorXd& prior_mean,
                                     const Eigen::MatrixXd& prior_cov,
                                     const Eigen::VectorXd& y,
                                     const Eigen::VectorXd& sigma2, double n) {
  const Eigen::Index d = prior_mean.size();
  Eigen::MatrixXd obs_prec = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd obs_info = Eigen::VectorXd::Zero(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    obs_prec(j, j) += 1.0 / sigma2(j);
    obs_info(j) += y(j) / sigma2(j);
  }
  const double inv_k = 1.0 / sigma2(d);
  obs_prec += inv_k * Eigen::MatrixXd::Ones(d, d);
  obs_info += inv_k * (n - y(d)) * Eigen::VectorXd::Ones(d);

  const Eigen::MatrixXd obs_cov = spd_inverse(obs_prec, "observation precision");
  return norm_product(prior_mean, prior_cov, obs_cov * obs_info, obs_cov);
}

void check_compatible(const NoisyRelease& release, const HyperParams& prior) {
  if (!(release.spec() == prior.spec()))
    throw CompatibilityError(
        "release and prior describe different model families");
  if (release.y.size() != release.spec().release_dim())
    throw ConfigError("release vector has the wrong dimension");
}

}  // namespace

GaussianParams norm_product(const Eigen::VectorXd& mu1,
                            const Eigen::MatrixXd& sigma1,
                            const Eigen::VectorXd& mu2,
                            const Eigen::MatrixXd& sigma2) {
  const Eigen::MatrixXd p1 = spd_inverse(sigma1, "Sigma1");
  const Eigen::MatrixXd p2 = spd_inverse(sigma2, "Sigma2");
  Eigen::MatrixXd cov = spd_inverse(p1 + p2, "Sigma1^-1 + Sigma2^-1");
  cov = 0.5 * (cov + cov.transpose()).eval();
  return GaussianParams{cov * (p1 * mu1 + p2 * mu2), cov};
}

Eigen::VectorXd update_sigma2(const Eigen::VectorXd& y,
                              const Eigen::VectorXd& s_center, double delta,
                              double epsilon, RngHandle& rng) {
  if (!(delta > 0.0) || !(epsilon > 0.0))
    throw DomainError("update_sigma2: delta and epsilon must be positive");
  if (y.size() != s_center.size())
    throw DomainError("update_sigma2: dimension mismatch");
  Eigen::VectorXd sigma2(y.size());
  const double shape = epsilon * epsilon / (delta * delta);
  for (Eigen::Index j = 0; j < y.size(); ++j) {
    const double z = std::max(std::abs(y(j) - s_center(j)), kResidualFloor);
    const double t = rng.inverse_gaussian(epsilon / (delta * z), shape);
    sigma2(j) = 1.0 / t;
  }
  return sigma2;
}

Chain gibbs_bounded(const NoisyRelease& release, const HyperParams& prior,
                    const GibbsOptions& opts, RngHandle& rng) {
  check_compatible(release, prior);
  const FamilySpec spec = release.spec();
  const double n = static_cast<double>(release.n);
  const double delta = release.delta_s;
  const double eps = release.epsilon;
  const Eigen::VectorXd& y = release.y;
  const bool multi = spec.family() == Family::kMultinomial;

  Eigen::VectorXd theta = opts.fixed_theta ? *opts.fixed_theta
                                           : sample_posterior_param(prior, rng);
  Eigen::VectorXd s = clamp_stats(spec, free_coords(spec, y), n);
  Eigen::VectorXd sigma2 = Eigen::VectorXd::Constant(
      y.size(), 2.0 * delta * delta / (eps * eps));

  Chain chain;
  chain.iters = opts.iters;
  chain.burnin = opts.burnin;
  chain.samples.reserve(static_cast<std::size_t>(
      std::max<long>(0, opts.iters - opts.burnin)));

  for (long it = 0; it < opts.iters; ++it) {
    if (!opts.fixed_theta) {
      const HyperParams post = conjugate_update(prior, s, n);
      theta = sample_posterior_param(post, rng);
    }

    const Moments mo = moments(spec, theta);
    const GaussianParams cond =
        multi ? condition_multinomial(n * mo.mu, n * mo.sigma, y, sigma2, n)
              : norm_product(n * mo.mu, n * mo.sigma, free_coords(spec, y),
                             sigma2.asDiagonal());

    bool accepted = false;
    for (long attempt = 0; attempt < opts.rejection_cap; ++attempt) {
      Eigen::VectorXd proposal = rng.mvnormal(cond.mean, cond.cov);
      if (valid_stats(spec, proposal, n)) {
        s = proposal;
        accepted = true;
        break;
      }
      ++chain.s_rejections;
    }
    if (!accepted) ++chain.s_cap_hits;

    sigma2 = update_sigma2(y, predicted_release(spec, s, n), delta, eps, rng);

    if (it >= opts.burnin) chain.samples.push_back(theta);
    if (opts.keep_trace)
      chain.trace.push_back(TraceRow{it, it < opts.burnin, theta, s, sigma2});
  }
  return chain;
}

Chain gibbs_truncated(const NoisyRelease& release, const HyperParams& prior,
                      const GibbsOptions& opts, RngHandle& rng) {
  check_compatible(release, prior);
  const FamilySpec spec = release.spec();
  if (!spec.univariate())
    throw UnsupportedOperation(
        "gibbs_truncated: requires a univariate family");
  if (!release.bounds)
    throw ConfigError("gibbs_truncated: release carries no truncation bounds");

  const double n = static_cast<double>(release.n);
  const double delta = release.delta_s;
  const double eps = release.epsilon;
  const Eigen::VectorXd& y = release.y;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const Interval iv_lower{-kInf, release.bounds->lo};
  const Interval iv_center{release.bounds->lo, release.bounds->hi};
  const Interval iv_upper{release.bounds->hi, kInf};

  // (m, V) with the zero-contribution shortcut for degenerate intervals.
  const auto clt_or_zero = [&](const Eigen::VectorXd& th, const Interval& iv) {
    RsCltParams p;
    p.q = interval_mass(spec, th, iv);
    if (p.q < kDegenerateMass) {
      p.m = Eigen::VectorXd::Zero(1);
      p.V = Eigen::MatrixXd::Zero(1, 1);
      return p;
    }
    return rs_clt(spec, th, iv, n);
  };

  Eigen::VectorXd theta = opts.fixed_theta ? *opts.fixed_theta
                                           : sample_posterior_param(prior, rng);
  Eigen::VectorXd s = clamp_stats(spec, y, n);
  Eigen::VectorXd s_center = clamp_stats(spec, y, n);
  Eigen::VectorXd sigma2 = Eigen::VectorXd::Constant(
      y.size(), 2.0 * delta * delta / (eps * eps));

  Chain chain;
  chain.iters = opts.iters;
  chain.burnin = opts.burnin;
  chain.samples.reserve(static_cast<std::size_t>(
      std::max<long>(0, opts.iters - opts.burnin)));

  for (long it = 0; it < opts.iters; ++it) {
    const RsCltParams lower = clt_or_zero(theta, iv_lower);
    RsCltParams center = clt_or_zero(theta, iv_center);
    const RsCltParams upper = clt_or_zero(theta, iv_upper);

    Eigen::VectorXd center_mean = center.m;
    Eigen::MatrixXd center_cov = center.V;
    if (center.q >= kDegenerateMass) {
      const GaussianParams cond =
          norm_product(center.m, center.V, y, sigma2.asDiagonal());
      center_mean = cond.mean;
      center_cov = cond.cov;
    }

    const Eigen::VectorXd mean_s = lower.m + center_mean + upper.m;
    const Eigen::MatrixXd cov_s = lower.V + center_cov + upper.V;
    bool accepted = false;
    for (long attempt = 0; attempt < opts.rejection_cap; ++attempt) {
      Eigen::VectorXd proposal = rng.mvnormal(mean_s, cov_s);
      if (valid_stats(spec, proposal, n)) {
        s = proposal;
        accepted = true;
        break;
      }
      ++chain.s_rejections;
    }
    if (!accepted) ++chain.s_cap_hits;

    if (!opts.fixed_theta) {
      const HyperParams post = conjugate_update(prior, s, n);
      theta = sample_posterior_param(post, rng);
    }

    // Fresh center draw at the new theta, used only for the sigma2 update.
    center = clt_or_zero(theta, iv_center);
    if (center.q < kDegenerateMass) {
      s_center = Eigen::VectorXd::Zero(1);
    } else {
      bool c_accepted = false;
      for (long attempt = 0; attempt < opts.rejection_cap; ++attempt) {
        Eigen::VectorXd proposal = rng.mvnormal(center.m, center.V);
        if (proposal(0) >= 0.0) {  // relaxed center validity (N is latent)
          s_center = proposal;
          c_accepted = true;
          break;
        }
        ++chain.sc_rejections;
      }
      if (!c_accepted) ++chain.sc_cap_hits;
    }

    sigma2 = update_sigma2(y, s_center, delta, eps, rng);

    if (it >= opts.burnin) chain.samples.push_back(theta);
    if (opts.keep_trace)
      chain.trace.push_back(TraceRow{it, it < opts.burnin, theta, s, sigma2});
  }
  return chain;
}

HyperParams naive_posterior(const NoisyRelease& release,
                            const HyperParams& prior) {
  check_compatible(release, prior);
  const FamilySpec spec = release.spec();
  const double n = static_cast<double>(release.n);
  switch (spec.family()) {
    case Family::kBernoulli:
    case Family::kExponential:
      return conjugate_update(prior, clamp_stats(spec, release.y, n), n);
    case Family::kMultinomial: {
      // All k noisy counts enter the Dirichlet update directly; negative
      // counts are zeroed without rescaling the others.
      Eigen::VectorXd counts = release.y.cwiseMax(0.0);
      return HyperParams::dirichlet(prior.dirichlet_alphas() + counts);
    }
  }
  throw UnsupportedOperation("naive_posterior: unknown family");
}

}  // namespace privexp
