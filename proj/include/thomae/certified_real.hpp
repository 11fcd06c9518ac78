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

#ifndef THOMAE_CERTIFIED_REAL_HPP
#define THOMAE_CERTIFIED_REAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "thomae/rational.hpp"

namespace thomae {

/// A real number known only to lie in [mid - rad, mid + rad].
///
/// This is the only way irrational inputs enter the library. Operations that
/// consume a CertifiedReal either return a result valid for every point of the
/// interval or throw InsufficientPrecision.
class CertifiedReal {
 public:
  CertifiedReal() = default;
  CertifiedReal(Rational mid, Rational rad);
  /// Zero-radius enclosure of a rational.
  static CertifiedReal exact(Rational value) { return {std::move(value), Rational(0)}; }

  const Rational& mid() const { return mid_; }
  const Rational& rad() const { return rad_; }
  Rational lo() const { return mid_ - rad_; }
  Rational hi() const { return mid_ + rad_; }
  bool is_exact() const { return rad_.sign() == 0; }
  bool contains(const Rational& r) const { return lo() <= r && r <= hi(); }

  CertifiedReal shifted(const Rational& by) const { return {mid_ + by, rad_}; }
  /// Fractional part. Throws InsufficientPrecision when the interval
  /// straddles an integer.
  CertifiedReal mod_one() const;

  /// inf and sup of |y - r| over y in the interval (inf is 0 when r is inside).
  Rational min_distance(const Rational& r) const;
  Rational max_distance(const Rational& r) const;

  /// Midpoint as a decimal string with \p digits fractional digits (truncated).
  std::string decimal(unsigned digits) const;

 private:
  Rational mid_;
  Rational rad_;
};

enum class Constant { Sqrt2Minus1, GoldenConjugate, EFrac, PiFrac };

/// "sqrt2m1", "golden_conj", "e_frac", "pi_frac". Throws DomainError otherwise.
Constant parse_constant(std::string_view name);
std::string_view constant_name(Constant c);

/// Enclosure with rad <= 10^-digits of sqrt(2)-1, (sqrt(5)-1)/2, e-2 or pi-3.
/// All four values lie in (0, 1).
CertifiedReal make_constant(Constant c, unsigned digits);

/// An irrational built digit by digit so that its irrationality exponent is
/// the prescribed target.
struct SynthesizedIrrational {
  Rational target_tau;
  std::vector<Integer> digits;  ///< partial quotients a_1 .. a_n
  CertifiedReal value;          ///< every real whose expansion continues the digit rule
};

/// Partial quotients a_1 = 1, a_{j+1} = max(1, ceil(q_j^(t-2))), with q_j the
/// convergent denominators. The ceiling is an exact integer root, so the
/// digits are fully deterministic. Throws DomainError for t < 2 or n_terms < 2.
SynthesizedIrrational synthesize_prescribed_tau(const Rational& t, std::size_t n_terms);

}  // namespace thomae

#endif  // THOMAE_CERTIFIED_REAL_HPP
