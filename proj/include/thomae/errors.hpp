// Copyright 2026 The thomae Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef THOMAE_ERRORS_HPP
#define THOMAE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thomae {

/// Raised when an argument violates an operation's precondition
/// (zero denominator, empty interval, theta <= 0, tau < 2, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a certified real is too wide for the requested decision to
/// hold uniformly over its interval. Retrying with more digits may succeed.
class InsufficientPrecision : public std::runtime_error {
 public:
  explicit InsufficientPrecision(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace thomae

#endif  // THOMAE_ERRORS_HPP
