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

#ifndef PRIVEXP_NATURAL_FORM_HPP_
#define PRIVEXP_NATURAL_FORM_HPP_

// Natural-parameterization primitives shared between plain doubles and
// Dual2, so the same expressions serve evaluation and differentiation.
// Each family registers its log-partition A(eta) and its interval mass
// Pr(x in (v, w]) = F(w; eta) - F(v; eta) here; the mass uses per-family
// closed forms (expm1-based for the exponential) instead of naive CDF
// differences to avoid cancellation when truncation intervals sit in a tail.

#include <cmath>
#include <limits>
#include <vector>

#include "privexp/dual.hpp"
#include "privexp/errors.hpp"
#include "privexp/expfam.hpp"

namespace privexp {
namespace natural {

inline double value_of(double x) { return x; }
inline double value_of(const Dual2& x) { return x.value(); }

inline double constant_like(double /*proto*/, double v) { return v; }
inline Dual2 constant_like(const Dual2& proto, double v) {
  return Dual2::constant(v, proto.dim());
}

// log(1 + e^x), branch chosen on the value so neither side overflows.
template <typename T>
T softplus(const T& x) {
  using std::exp;
  using std::log;
  if (value_of(x) > 0.0) return x + log(1.0 + exp(-x));
  return log(1.0 + exp(x));
}

// 1 / (1 + e^-x).
template <typename T>
T sigmoid(const T& x) {
  using std::exp;
  if (value_of(x) > 0.0) return 1.0 / (1.0 + exp(-x));
  T e = exp(x);
  return e / (1.0 + e);
}

// A(eta) per family. Throws DomainError outside the natural domain
// (exponential: eta < 0).
template <typename T>
T log_partition(const FamilySpec& spec, const std::vector<T>& eta) {
  using std::exp;
  using std::log;
  switch (spec.family()) {
    case Family::kBernoulli:
      return softplus(eta[0]);
    case Family::kMultinomial: {
      // log(1 + sum_j e^{eta_j}) with the implicit zero for category k.
      double m = 0.0;
      for (const T& e : eta) m = std::max(m, value_of(e));
      T acc = constant_like(eta[0], std::exp(-m));
      for (const T& e : eta) acc = acc + exp(e - m);
      return m + log(acc);
    }
    case Family::kExponential:
      if (!(value_of(eta[0]) < 0.0))
        throw DomainError("log_partition: exponential requires eta < 0");
      return -log(-eta[0]);
  }
  throw UnsupportedOperation("log_partition: unknown family");
}

// Pr(x in (v, w]) as a function of eta, for the univariate families.
// Infinite endpoints are allowed; the interval is intersected with the
// support implicitly. For the (discrete) bernoulli this is the standard
// right-continuous CDF difference.
template <typename T>
T interval_mass_nat(const FamilySpec& spec, double v, double w,
                    const std::vector<T>& eta) {
  using std::exp;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  switch (spec.family()) {
    case Family::kBernoulli: {
      const bool has0 = v < 0.0 && w >= 0.0;
      const bool has1 = v < 1.0 && w >= 1.0;
      if (has0 && has1) return constant_like(eta[0], 1.0);
      if (has0) return sigmoid(-eta[0]);
      if (has1) return sigmoid(eta[0]);
      return constant_like(eta[0], 0.0);
    }
    case Family::kExponential: {
      if (!(value_of(eta[0]) < 0.0))
        throw DomainError("interval_mass: exponential requires eta < 0");
      const double lo = std::max(v, 0.0);
      if (w <= lo) return constant_like(eta[0], 0.0);
      // F(x) = 1 - e^{eta x} on x >= 0, so the mass is
      // e^{eta lo} - e^{eta w} = -e^{eta lo} expm1(eta (w - lo)).
      if (w == kInf) return exp(eta[0] * lo);
      return -(exp(eta[0] * lo) * expm1(eta[0] * (w - lo)));
    }
    case Family::kMultinomial:
      throw UnsupportedOperation(
          "interval_mass: not defined for the multinomial family");
  }
  throw UnsupportedOperation("interval_mass: unknown family");
}

}  // namespace natural
}  // namespace privexp

#endif  // PRIVEXP_NATURAL_FORM_HPP_
