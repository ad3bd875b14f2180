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

#ifndef PRIVEXP_DUAL_HPP_
#define PRIVEXP_DUAL_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <vector>

#include "privexp/errors.hpp"

namespace privexp {

// Forward-mode second-order differentiation over small natural-parameter
// vectors. A Dual2 carries a value together with its gradient and Hessian
// with respect to a fixed d-dimensional input; arithmetic propagates both
// orders exactly (to rounding error). The dimension is bounded by kMaxDim
// so storage stays on the stack.
//
// Hessians are symmetric by construction: every rule below only ever adds
// symmetric terms (input Hessians and symmetrized outer products).
class Dual2 {
 public:
  static constexpr int kMaxDim = 8;

  using Grad = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
  using Hess =
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

  Dual2() : val_(0.0), grad_(Grad::Zero(1)), hess_(Hess::Zero(1, 1)) {}

  // Constant with respect to a d-dimensional input.
  static Dual2 constant(double value, int dim) {
    check_dim(dim);
    Dual2 d;
    d.val_ = value;
    d.grad_ = Grad::Zero(dim);
    d.hess_ = Hess::Zero(dim, dim);
    return d;
  }

  // Input coordinate `coord` of a d-dimensional input: unit gradient seed.
  static Dual2 variable(double value, int dim, int coord) {
    Dual2 d = constant(value, dim);
    d.grad_(coord) = 1.0;
    return d;
  }

  double value() const { return val_; }
  const Grad& grad() const { return grad_; }
  const Hess& hess() const { return hess_; }
  int dim() const { return static_cast<int>(grad_.size()); }

  Dual2 operator-() const {
    Dual2 r(*this);
    r.val_ = -r.val_;
    r.grad_ = -r.grad_;
    r.hess_ = -r.hess_;
    return r;
  }

  friend Dual2 operator+(const Dual2& a, const Dual2& b) {
    Dual2 r(a);
    r.val_ += b.val_;
    r.grad_ += b.grad_;
    r.hess_ += b.hess_;
    return r;
  }
  friend Dual2 operator-(const Dual2& a, const Dual2& b) {
    Dual2 r(a);
    r.val_ -= b.val_;
    r.grad_ -= b.grad_;
    r.hess_ -= b.hess_;
    return r;
  }
  friend Dual2 operator*(const Dual2& a, const Dual2& b) {
    Dual2 r = constant(0.0, a.dim());
    r.val_ = a.val_ * b.val_;
    r.grad_ = a.val_ * b.grad_ + b.val_ * a.grad_;
    r.hess_ = a.val_ * b.hess_ + b.val_ * a.hess_ +
              a.grad_ * b.grad_.transpose() + b.grad_ * a.grad_.transpose();
    return r;
  }
  friend Dual2 operator/(const Dual2& a, const Dual2& b) {
    return a * inverse(b);
  }

  friend Dual2 operator+(const Dual2& a, double s) {
    Dual2 r(a);
    r.val_ += s;
    return r;
  }
  friend Dual2 operator+(double s, const Dual2& a) { return a + s; }
  friend Dual2 operator-(const Dual2& a, double s) { return a + (-s); }
  friend Dual2 operator-(double s, const Dual2& a) { return (-a) + s; }
  friend Dual2 operator*(const Dual2& a, double s) {
    Dual2 r(a);
    r.val_ *= s;
    r.grad_ *= s;
    r.hess_ *= s;
    return r;
  }
  friend Dual2 operator*(double s, const Dual2& a) { return a * s; }
  friend Dual2 operator/(const Dual2& a, double s) { return a * (1.0 / s); }
  friend Dual2 operator/(double s, const Dual2& a) { return inverse(a) * s; }

  friend Dual2 inverse(const Dual2& a) {
    if (a.val_ == 0.0) throw DomainError("Dual2: division by zero value");
    const double iv = 1.0 / a.val_;
    Dual2 r = constant(iv, a.dim());
    r.grad_ = -iv * iv * a.grad_;
    r.hess_ = -iv * iv * a.hess_ +
              2.0 * iv * iv * iv * a.grad_ * a.grad_.transpose();
    return r;
  }

  friend Dual2 exp(const Dual2& a) {
    const double e = std::exp(a.val_);
    Dual2 r = constant(e, a.dim());
    r.grad_ = e * a.grad_;
    r.hess_ = e * (a.hess_ + a.grad_ * a.grad_.transpose());
    return r;
  }

  // exp(a) - 1 with a numerically stable value for small a.
  friend Dual2 expm1(const Dual2& a) {
    const double e = std::exp(a.val_);
    Dual2 r = constant(std::expm1(a.val_), a.dim());
    r.grad_ = e * a.grad_;
    r.hess_ = e * (a.hess_ + a.grad_ * a.grad_.transpose());
    return r;
  }

  friend Dual2 log(const Dual2& a) {
    if (!(a.val_ > 0.0)) throw DomainError("Dual2: log of nonpositive value");
    const double iv = 1.0 / a.val_;
    Dual2 r = constant(std::log(a.val_), a.dim());
    r.grad_ = iv * a.grad_;
    r.hess_ = iv * a.hess_ - iv * iv * a.grad_ * a.grad_.transpose();
    return r;
  }

  friend Dual2 pow(const Dual2& a, double p) {
    if (!(a.val_ > 0.0)) throw DomainError("Dual2: pow of nonpositive base");
    const double v = std::pow(a.val_, p);
    const double d1 = p * std::pow(a.val_, p - 1.0);
    const double d2 = p * (p - 1.0) * std::pow(a.val_, p - 2.0);
    Dual2 r = constant(v, a.dim());
    r.grad_ = d1 * a.grad_;
    r.hess_ = d1 * a.hess_ + d2 * a.grad_ * a.grad_.transpose();
    return r;
  }

  friend Dual2 sqrt(const Dual2& a) { return pow(a, 0.5); }

 private:
  static void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim)
      throw DomainError("Dual2: dimension must be in [1, 8]");
  }

  double val_;
  Grad grad_;
  Hess hess_;
};

// Value, gradient and Hessian of a scalar function at a point.
struct ValueGradHess {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

// Seeds a point eta0 as a vector of Dual2 inputs: coordinate j carries
// value eta0[j], gradient e_j and zero Hessian.
std::vector<Dual2> lift(const Eigen::VectorXd& eta0);

// Evaluates f on lifted inputs and returns exact value/gradient/Hessian.
// f must be composed of the Dual2-overloaded primitives above.
ValueGradHess grad_hess(const std::function<Dual2(const std::vector<Dual2>&)>& f,
                        const Eigen::VectorXd& eta0);

// Central-difference oracle for the same quantities; used to cross-check
// grad_hess in tests. Step h is the caller's responsibility (1e-4 is the
// documented default with ~1e-5 relative accuracy on O(1) derivatives).
ValueGradHess fd_oracle(const std::function<double(const Eigen::VectorXd&)>& f,
                        const Eigen::VectorXd& eta0, double h);

}  // namespace privexp

#endif  // PRIVEXP_DUAL_HPP_
