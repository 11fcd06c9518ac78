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

#ifndef THOMAE_CONTFRAC_HPP
#define THOMAE_CONTFRAC_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "thomae/certified_real.hpp"
#include "thomae/rational.hpp"

namespace thomae {

/// Partial quotients of x in (0, 1), x = 1/(a_1 + 1/(a_2 + ...)).
struct ContinuedFraction {
  std::vector<Integer> digits;
  /// The input was an exact rational and the expansion terminated.
  bool exhausted = false;
  /// Digits proven correct for every real of the input interval.
  std::size_t certified_count = 0;
};

struct Convergent {
  Integer p;
  Integer q;
  std::size_t index = 0;  ///< j, starting at 1

  Rational value() const { return reduce(p, q); }
};

/// tau_j with |x - p_j/q_j| = q_j^(-tau_j), enclosed.
struct TauTerm {
  std::size_t index = 0;
  Integer q;
  Rational dist_lo;  ///< inf |x - p_j/q_j| over the input interval
  Rational dist_hi;
  double tau_lo = 0;
  double tau_hi = 0;
  double tau = 0;  ///< midpoint of the enclosure
};

struct IrrationalityEstimate {
  std::vector<TauTerm> terms;          ///< certified terms only, by index
  std::vector<std::size_t> skipped;    ///< indices too close to x.rad to certify
  double tau_hat = 0;                  ///< max tau_j over indices >= tail_start
  std::size_t tail_start = 0;
};

/// Certified expansion of x mod 1. Stops at max_terms, when the interval
/// straddles a digit boundary, or when an exact rational runs out (the
/// canonical form then ends in a digit >= 2). Throws InsufficientPrecision if
/// not even the first digit is determined.
ContinuedFraction expand(const CertifiedReal& x, std::size_t max_terms);

/// Convergents of the first certified digits, via p_j = a_j p_{j-1} + p_{j-2}
/// and q_j = a_j q_{j-1} + q_{j-2} seeded with p_0/q_0 = 0/1, p_{-1}/q_{-1} = 1/0.
std::vector<Convergent> convergents(const ContinuedFraction& cf);
std::vector<Convergent> convergents(std::span<const Integer> digits);

/// tau_j for every convergent with q_j >= 2 whose distance to x exceeds
/// 10 x.rad; tau_hat is the max over the last \p tail_fraction of those terms.
/// Throws InsufficientPrecision when no term is certifiable.
IrrationalityEstimate tau_sequence(const CertifiedReal& x, std::span<const Convergent> convs,
                                   double tail_fraction = 0.5);

/// Whether |x - p/q| < 1/(sqrt(5) q^2), decided exactly as 5 d^2 q^4 < 1.
/// Throws InsufficientPrecision when the interval admits both answers.
bool hurwitz_check(const CertifiedReal& x, const Convergent& c);

}  // namespace thomae

#endif  // THOMAE_CONTFRAC_HPP
