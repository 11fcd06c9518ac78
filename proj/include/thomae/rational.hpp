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

#ifndef THOMAE_RATIONAL_HPP
#define THOMAE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace thomae {

using Integer = boost::multiprecision::mpz_int;

/// Exact fraction p/q kept in canonical form: q >= 1 and gcd(|p|, q) = 1.
/// Integers are the q = 1 case.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by design of the number tower
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  explicit Rational(boost::multiprecision::mpq_rational value)
      : value_(std::move(value)) {}

  Integer num() const { return boost::multiprecision::numerator(value_); }
  Integer den() const { return boost::multiprecision::denominator(value_); }
  const boost::multiprecision::mpq_rational& mpq() const { return value_; }

  bool is_integer() const { return den() == 1; }
  int sign() const { return value_.sign(); }

  Integer floor() const;
  Integer ceil() const;
  Rational abs() const { return Rational(boost::multiprecision::abs(value_)); }
  Rational reciprocal() const;
  /// this^e for a non-negative integer exponent.
  Rational pow(unsigned e) const;

  double to_double() const { return value_.convert_to<double>(); }
  /// "p/q", or "p" when q = 1.
  std::string str() const;

  /// Exact value of a finite double.
  static Rational from_double(double value);
  /// Accepts "p/q", integers and decimal literals ("0.25", "-3", "1e-8").
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.value_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  boost::multiprecision::mpq_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// p/q in canonical form. Throws DomainError when q = 0.
Rational reduce(const Integer& p, const Integer& q);

/// (a.p + b.p) / (a.q + b.q) on the canonical representatives.
Rational mediant(const Rational& a, const Rational& b);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Neighbours of a point among the fractions of denominator <= qmax.
struct FareyBracket {
  Rational below;  ///< largest member <= target
  Rational above;  ///< smallest member >= target
};

/// Bracket of \p target in the Farey sequence of order \p qmax (extended to
/// all of R). When target itself has denominator <= qmax both members equal it.
/// Found by a batched Stern-Brocot descent, O(log) big-number steps.
FareyBracket farey_bracket(const Rational& target, const Integer& qmax);

/// Successor of \p r (whose denominator must be <= qmax) in the Farey
/// sequence of order qmax.
Rational farey_successor(const Rational& r, const Integer& qmax);
/// Predecessor, same contract.
Rational farey_predecessor(const Rational& r, const Integer& qmax);

/// All reduced rationals in [lo, hi] with denominator <= qmax, increasing.
std::vector<Rational> farey_in_interval(const Rational& lo, const Rational& hi,
                                        const Integer& qmax);

/// The rational of least denominator in the closed interval [lo, hi].
/// The minimiser is unique unless the interval holds several integers, in
/// which case ceil(lo) is returned. Throws DomainError unless lo < hi.
Rational min_denominator_in_interval(const Rational& lo, const Rational& hi);

/// Same search without the lo < hi precondition (lo == hi allowed).
Rational simplest_in_closed(const Rational& lo, const Rational& hi);

}  // namespace thomae

#endif  // THOMAE_RATIONAL_HPP
