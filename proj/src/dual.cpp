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

#include "privexp/dual.hpp"

namespace privexp {

std::vector<Dual2> lift(const Eigen::VectorXd& eta0) {
  const int d = static_cast<int>(eta0.size());
  std::vector<Dual2> out;
  out.reserve(d);
  for (int j = 0; j < d; ++j) out.push_back(Dual2::variable(eta0(j), d, j));
  return out;
}

ValueGradHess grad_hess(const std::function<Dual2(const std::vector<Dual2>&)>& f,
                        const Eigen::VectorXd& eta0) {
  const Dual2 y = f(lift(eta0));
  ValueGradHess r;
  r.value = y.value();
  r.grad = y.grad();
  r.hess = y.hess();
  return r;
}

ValueGradHess fd_oracle(const std::function<double(const Eigen::VectorXd&)>& f,
                        const Eigen::VectorXd& eta0, double h) {
  if (!(h > 0.0)) throw DomainError("fd_oracle: step must be positive");
  const int d = static_cast<int>(eta0.size());
  ValueGradHess r;
  r.value = f(eta0);
  r.grad = Eigen::VectorXd::Zero(d);
  r.hess = Eigen::MatrixXd::Zero(d, d);

  Eigen::VectorXd x = eta0;
  for (int j = 0; j < d; ++j) {
    x = eta0;
    x(j) = eta0(j) + h;
    const double fp = f(x);
    x(j) = eta0(j) - h;
    const double fm = f(x);
    r.grad(j) = (fp - fm) / (2.0 * h);
    r.hess(j, j) = (fp - 2.0 * r.value + fm) / (h * h);
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      x = eta0;
      x(j) += h;
      x(k) += h;
      const double fpp = f(x);
      x(k) = eta0(k) - h;
      const double fpm = f(x);
      x(j) = eta0(j) - h;
      x(k) = eta0(k) + h;
      const double fmp = f(x);
      x(k) = eta0(k) - h;
      const double fmm = f(x);
      const double v = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
      r.hess(j, k) = v;
      r.hess(k, j) = v;
    }
  }
  return r;
}

}  // namespace privexp
