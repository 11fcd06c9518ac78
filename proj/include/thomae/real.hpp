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

#ifndef THOMAE_REAL_HPP
#define THOMAE_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "thomae/rational.hpp"

namespace thomae {

/// Working floating type for reported (non-decision) quantities. 50 decimal
/// digits; MPFR's exponent range means q^-theta never underflows.
using Real = boost::multiprecision::mpfr_float_50;

enum class Round { Down, Up };

/// A closed enclosure [lo, hi] of some real quantity.
struct Bounds {
  Real lo;
  Real hi;
  Real mid() const { return (lo + hi) / 2; }
  bool contains(const Real& v) const { return lo <= v && v <= hi; }
};

Real to_real(const Rational& r, Round dir);
Real to_real(const Integer& z, Round dir);
/// Natural log of a positive rational, rounded in the requested direction.
Real log(const Rational& r, Round dir);
/// q^-theta for q >= 1, theta > 0, rounded in the requested direction.
Real pow_neg(const Integer& q, const Rational& theta, Round dir);
/// Outward-rounded enclosure of q^-theta.
Bounds pow_neg_bounds(const Integer& q, const Rational& theta);
double to_double(const Real& v, Round dir);
/// Shortest decimal that round-trips through double, e.g. "0.5", "1e-08".
std::string format_double(double v);

}  // namespace thomae

#endif  // THOMAE_REAL_HPP
