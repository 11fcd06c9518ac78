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

#include "thomae/real.hpp"

#include <array>
#include <charconv>

#include "thomae/errors.hpp"

namespace thomae {

namespace {

mpfr_rnd_t mode(Round dir) { return dir == Round::Down ? MPFR_RNDD : MPFR_RNDU; }
Round flip(Round dir) { return dir == Round::Down ? Round::Up : Round::Down; }

}  // namespace

Real to_real(const Rational& r, Round dir) {
  Real out;
  mpfr_set_q(out.backend().data(), r.mpq().backend().data(), mode(dir));
  return out;
}

Real to_real(const Integer& z, Round dir) {
  Real out;
  mpfr_set_z(out.backend().data(), z.backend().data(), mode(dir));
  return out;
}

Real log(const Rational& r, Round dir) {
  if (r.sign() <= 0) throw DomainError("log of a non-positive number");
  // log(num) - log(den) keeps full relative accuracy for huge operands.
  Real ln_num = to_real(r.num(), dir);
  mpfr_log(ln_num.backend().data(), ln_num.backend().data(), mode(dir));
  Real ln_den = to_real(r.den(), flip(dir));
  mpfr_log(ln_den.backend().data(), ln_den.backend().data(), mode(flip(dir)));
  Real out;
  mpfr_sub(out.backend().data(), ln_num.backend().data(), ln_den.backend().data(), mode(dir));
  return out;
}

Real pow_neg(const Integer& q, const Rational& theta, Round dir) {
  if (q < 1) throw DomainError("pow_neg: q must be positive");
  if (theta.sign() <= 0) throw DomainError("pow_neg: theta must be positive");
  // exp(-theta * ln q); a lower result needs an upper exponent magnitude.
  const Round inner = flip(dir);
  Real ln_q = log(Rational(q), inner);
  Real th = to_real(theta, inner);
  Real prod;
  mpfr_mul(prod.backend().data(), ln_q.backend().data(), th.backend().data(), mode(inner));
  mpfr_neg(prod.backend().data(), prod.backend().data(), MPFR_RNDN);
  Real out;
  mpfr_exp(out.backend().data(), prod.backend().data(), mode(dir));
  return out;
}

Bounds pow_neg_bounds(const Integer& q, const Rational& theta) {
  return {pow_neg(q, theta, Round::Down), pow_neg(q, theta, Round::Up)};
}

double to_double(const Real& v, Round dir) { return mpfr_get_d(v.backend().data(), mode(dir)); }

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

}  // namespace thomae
