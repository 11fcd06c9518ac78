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

#ifndef THOMAE_THOMAE_HPP
#define THOMAE_THOMAE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "thomae/certified_real.hpp"
#include "thomae/rational.hpp"
#include "thomae/real.hpp"

namespace thomae {

/// The exponent theta > 0 of f_theta(p/q) = q^-theta. Kept exact so that
/// comparisons of spike heights against rationals are decidable.
class ThomaeParams {
 public:
  explicit ThomaeParams(Rational theta);
  const Rational& theta() const { return theta_; }

 private:
  Rational theta_;
};

/// The value q^-theta, stored symbolically.
class SpikeHeight {
 public:
  SpikeHeight(Integer q, Rational theta);

  const Integer& q() const { return q_; }
  const Rational& theta() const { return theta_; }

  /// Exact value when theta is an integer.
  std::optional<Rational> exact() const;
  Bounds bounds() const { return pow_neg_bounds(q_, theta_); }
  double approx() const;
  /// Exact fraction for integer theta, otherwise a 17-digit decimal.
  std::string str() const;

  /// Exact three-way comparison of q^-theta with a rational.
  std::strong_ordering compare(const Rational& r) const;

  /// Heights order inversely to denominators.
  friend std::strong_ordering operator<=>(const SpikeHeight& a, const SpikeHeight& b) {
    const int c = b.q_.compare(a.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend bool operator==(const SpikeHeight& a, const SpikeHeight& b) { return a.q_ == b.q_; }

 private:
  Integer q_;
  Rational theta_;
};

/// f_theta at a rational: q^-theta, which is 1 at every integer.
SpikeHeight eval(const Rational& x, const ThomaeParams& params);

struct Supremum {
  Rational argmax;
  SpikeHeight value;
};

/// sup of f_theta over [lo, hi], attained at the rational of least denominator.
Supremum sup_on_interval(const Rational& lo, const Rational& hi, const ThomaeParams& params);

struct DarbouxSum {
  std::uint64_t n = 0;
  /// cell-supremum denominator -> number of cells attaining it
  std::map<Integer, std::uint64_t> cell_denominators;
  std::optional<Rational> exact;  ///< present when theta is an integer
  Bounds value;
};

/// Upper Darboux sum of f_theta over the uniform partition of [0, 1] into n
/// closed cells.
DarbouxSum upper_darboux(std::uint64_t n, const ThomaeParams& params);

struct ContinuityWitness {
  CertifiedReal x;
  Rational epsilon;
  Integer n;        ///< least n with n^-theta < epsilon
  Rational delta;   ///< no rational of denominator <= n within delta of any point of x
};

/// Continuity witness at an irrational: for every j <= n the two multiples
/// m_j/j and (m_j+1)/j around x are kept at least delta away.
ContinuityWitness continuity_delta(const CertifiedReal& x, const Rational& epsilon,
                                   const ThomaeParams& params);

struct DifferenceQuotient {
  SpikeHeight numerator;  ///< f_theta(y); f_theta(x) = 0 at the irrational x
  Rational dist_lo;
  Rational dist_hi;
  Bounds value;

  /// f(y)/|x-y| > bound for every point of x's interval.
  bool exceeds(const Rational& bound) const;
  bool at_least(const Rational& bound) const;
};

DifferenceQuotient difference_quotient(const CertifiedReal& x, const Rational& y,
                                       const ThomaeParams& params);

enum class Differentiability { NotDifferentiable, Differentiable, Boundary };

std::string_view to_string(Differentiability d);

/// Differentiability of f_theta at an irrational with exponent tau >= 2.
Differentiability classify_differentiability(const Rational& theta, const Rational& tau);

}  // namespace thomae

#endif  // THOMAE_THOMAE_HPP
