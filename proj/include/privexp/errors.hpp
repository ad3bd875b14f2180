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

#ifndef PRIVEXP_ERRORS_HPP_
#define PRIVEXP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace privexp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A data value lies outside the support of the declared family.
class SupportViolation : public Error {
 public:
  using Error::Error;
};

// A parameter lies outside its admissible domain (boundary theta, rate <= 0,
// natural parameter outside the natural domain, log of a nonpositive dual).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested operation is not defined for this family.
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

// The family has unbounded sufficient statistics; the caller must supply
// truncation bounds before a Laplace release is possible.
class MustTruncate : public Error {
 public:
  using Error::Error;
};

// Sufficient statistics would induce a nonpositive posterior parameter.
class InvalidStats : public Error {
 public:
  using Error::Error;
};

// A truncation interval carries (numerically) zero probability mass.
class DegenerateInterval : public Error {
 public:
  using Error::Error;
};

// Malformed configuration or input file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Inputs that do not belong together (e.g. release and prior families differ).
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace privexp

#endif  // PRIVEXP_ERRORS_HPP_
