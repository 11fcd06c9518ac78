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

#include "thomae/certified_real.hpp"

#include "thomae/errors.hpp"

namespace thomae {

namespace mp = boost::multiprecision;

namespace {

Integer ten_pow(unsigned e) { return mp::pow(Integer(10), e); }

/// floor(z^(1/n)) for z >= 0.
Integer iroot(const Integer& z, unsigned long n) {
  Integer out;
  mpz_root(out.backend().data(), z.backend().data(), n);
  return out;
}

/// Fixed-point atan(1/m) * scale, truncated; returns the value and a bound on
/// the absolute error in units of 1/scale.
std::pair<Integer, Integer> atan_inv_fixed(unsigned m, const Integer& scale) {
  const Integer m2 = Integer(m) * m;
  Integer power = scale / m;  // floor(scale / m^(2k+1)), error < 1 per step
  Integer sum = 0;
  unsigned long k = 0;
  for (; power != 0; ++k) {
    const Integer term = power / (2 * k + 1);
    if (k % 2 == 0) sum += term; else sum -= term;
    power /= m2;
  }
  // each term is off by < 3 units; the first omitted term is < 2 units
  return {sum, Integer(3 * k + 3)};
}

}  // namespace

CertifiedReal::CertifiedReal(Rational mid, Rational rad)
    : mid_(std::move(mid)), rad_(std::move(rad)) {
  if (rad_.sign() < 0) throw DomainError("negative radius");
}

CertifiedReal CertifiedReal::mod_one() const {
  const Integer f = lo().floor();
  if (f != hi().floor()) {
    throw InsufficientPrecision("interval straddles an integer; fractional part undetermined");
  }
  return shifted(Rational(Integer(-f)));
}

Rational CertifiedReal::min_distance(const Rational& r) const {
  if (r < lo()) return lo() - r;
  if (r > hi()) return r - hi();
  return Rational(0);
}

Rational CertifiedReal::max_distance(const Rational& r) const {
  return max(hi() - r, r - lo());
}

std::string CertifiedReal::decimal(unsigned digits) const {
  const Rational scaled = mid_.abs() * Rational(ten_pow(digits));
  std::string s = scaled.floor().str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return (mid_.sign() < 0 ? "-" : "") + s;
}

Constant parse_constant(std::string_view name) {
  if (name == "sqrt2m1") return Constant::Sqrt2Minus1;
  if (name == "golden_conj") return Constant::GoldenConjugate;
  if (name == "e_frac") return Constant::EFrac;
  if (name == "pi_frac") return Constant::PiFrac;
  throw DomainError("unknown constant: " + std::string(name));
}

std::string_view constant_name(Constant c) {
  switch (c) {
    case Constant::Sqrt2Minus1: return "sqrt2m1";
    case Constant::GoldenConjugate: return "golden_conj";
    case Constant::EFrac: return "e_frac";
    case Constant::PiFrac: return "pi_frac";
  }
  return "?";
}

CertifiedReal make_constant(Constant c, unsigned digits) {
  if (digits < 2) throw DomainError("make_constant: need at least 2 digits");
  const unsigned guard = digits + 10;
  const Integer scale = ten_pow(guard);
  const Rational inv_scale = Rational(scale).reciprocal();

  switch (c) {
    case Constant::Sqrt2Minus1: {
      // sqrt(2) in [s, s+1] / scale
      const Integer s = mp::sqrt(Integer(2 * scale * scale));
      return {reduce(2 * s + 1 - 2 * scale, 2 * scale), inv_scale / 2};
    }
    case Constant::GoldenConjugate: {
      const Integer s = mp::sqrt(Integer(5 * scale * scale));
      return {reduce(2 * s + 1 - 2 * scale, 4 * scale), inv_scale / 4};
    }
    case Constant::EFrac: {
      // e - 2 = sum_{k>=2} 1/k!
      Integer term = scale;
      Integer sum = 0;
      unsigned long k = 1;
      while (term != 0) {
        ++k;
        term /= k;
        sum += term;
      }
      // each truncated term is low by < 2 units; the tail past the last
      // nonzero term is < 4 units
      const Integer slack = 2 * Integer(k) + 4;
      return {reduce(2 * sum + slack, 2 * scale), Rational(slack) * inv_scale / 2};
    }
    case Constant::PiFrac: {
      // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
      const auto [a5, e5] = atan_inv_fixed(5, scale);
      const auto [a239, e239] = atan_inv_fixed(239, scale);
      const Integer approx = 16 * a5 - 4 * a239 - 3 * scale;
      const Integer err = 16 * e5 + 4 * e239;
      return {Rational(approx) * inv_scale, Rational(err) * inv_scale};
    }
  }
  throw DomainError("unknown constant");
}

SynthesizedIrrational synthesize_prescribed_tau(const Rational& t, std::size_t n_terms) {
  if (t < Rational(2)) throw DomainError("no real number has irrationality exponent below 2");
  if (n_terms < 2) throw DomainError("synthesize_prescribed_tau: need at least 2 terms");

  // a_{j+1} = ceil(q_j^(a/b)) = least m with m^b >= q_j^a
  const Rational e = t - Rational(2);
  const Integer e_num = e.num();
  const auto e_den = e.den().convert_to<unsigned long>();
  const auto next_digit = [&](const Integer& q) -> Integer {
    if (e_num == 0) return Integer(1);
    const Integer qa = mp::pow(q, e_num.convert_to<unsigned>());
    Integer m = iroot(qa, e_den);
    if (mp::pow(m, static_cast<unsigned>(e_den)) != qa) ++m;
    return mp::max(Integer(1), m);
  };

  SynthesizedIrrational out;
  out.target_tau = t;
  Integer p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  Integer p = 0, q = 1;            // p_0, q_0
  Integer a = 1;
  // two digits past n_terms: a trailing 1 at the endpoint would otherwise
  // collapse into the digit before it
  for (std::size_t j = 1; j <= n_terms + 2; ++j) {
    if (j > 1) a = next_digit(q);
    if (j <= n_terms) out.digits.push_back(a);
    Integer pn = a * p + p_prev;
    Integer qn = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
  }
  // Every continuation of [a_1..a_{n+2}] lies between p/q and (p+p')/(q+q').
  const Rational end1 = reduce(p, q);
  const Rational end2 = reduce(p + p_prev, q + q_prev);
  out.value = CertifiedReal((end1 + end2) / Rational(2), (end1 - end2).abs() / Rational(2));
  return out;
}

}  // namespace thomae
