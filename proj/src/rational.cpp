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

#include "thomae/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "thomae/errors.hpp"

namespace thomae {

namespace mp = boost::multiprecision;

namespace {

Integer floor_div(const Integer& n, const Integer& d) {
  Integer out;
  mpz_fdiv_q(out.backend().data(), n.backend().data(), d.backend().data());
  return out;
}

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer out;
  mpz_fdiv_r(out.backend().data(), a.backend().data(), m.backend().data());
  return out;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer out;
  if (mpz_invert(out.backend().data(), a.backend().data(), m.backend().data()) == 0) {
    throw DomainError("no modular inverse; fraction is not reduced");
  }
  return out;
}

// Integer(std::string) would read a leading 0 as octal.
Integer from_decimal(const std::string& digits) {
  Integer out;
  if (mpz_set_str(out.backend().data(), digits.c_str(), 10) != 0) {
    throw DomainError("bad integer literal: " + digits);
  }
  return out;
}

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw DomainError("bad integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw DomainError("bad integer literal: " + std::string(text));
    }
  }
  const Integer value = from_decimal(std::string(text.substr(i)));
  return text[0] == '-' ? Integer(-value) : value;
}

Rational ten_power(long e) {
  const Integer t = mp::pow(Integer(10), static_cast<unsigned>(std::labs(e)));
  return e >= 0 ? Rational(t) : Rational(t).reciprocal();
}

}  // namespace

Integer Rational::floor() const { return floor_div(num(), den()); }

Integer Rational::ceil() const { return -floor_div(-num(), den()); }

Rational Rational::reciprocal() const {
  if (sign() == 0) throw DomainError("reciprocal of zero");
  return Rational(1 / value_);
}

Rational Rational::pow(unsigned e) const {
  return Rational(mp::mpq_rational(mp::pow(num(), e), mp::pow(den(), e)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite double");
  int exp = 0;
  const double mant = std::frexp(value, &exp);
  // 53-bit mantissa as an exact integer
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  Rational r{Integer(scaled)};
  exp -= 53;
  const Rational two_pow{Integer(mp::pow(Integer(2), static_cast<unsigned>(std::abs(exp))))};
  return exp >= 0 ? r * two_pow : r / two_pow;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty number");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return reduce(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  }

  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const Integer ex = parse_integer(text.substr(e + 1));
    if (mp::abs(ex) > 100000) throw DomainError("exponent out of range");
    exponent = ex.convert_to<long>();
    text = text.substr(0, e);
  }
  std::string digits;
  bool negative = false;
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    i = 1;
  }
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else {
      throw DomainError("bad number literal: " + std::string(text));
    }
  }
  if (!seen_digit) throw DomainError("bad number literal: " + std::string(text));
  Rational r = Rational(from_decimal(digits)) * ten_power(exponent);
  return negative ? -r : r;
}

Rational reduce(const Integer& p, const Integer& q) {
  if (q == 0) throw DomainError("zero denominator");
  return Rational(mp::mpq_rational(p, q));
}

Rational mediant(const Rational& a, const Rational& b) {
  return reduce(a.num() + b.num(), a.den() + b.den());
}

FareyBracket farey_bracket(const Rational& target, const Integer& qmax) {
  if (qmax < 1) throw DomainError("qmax must be positive");
  if (target.den() <= qmax) return {target, target};

  const Integer P = target.num();
  const Integer Q = target.den();
  Integer lp = target.floor();
  Integer lq = 1;
  Integer rp = lp + 1;
  Integer rq = 1;
  for (;;) {
    bool moved = false;
    // Both gaps stay positive: left < target < right throughout.
    const Integer a = P * lq - lp * Q;
    const Integer b = rp * Q - P * rq;
    Integer k = mp::min(Integer((a - 1) / b), Integer((qmax - lq) / rq));
    if (k >= 1) {
      lp += k * rp;
      lq += k * rq;
      moved = true;
    }
    const Integer a2 = P * lq - lp * Q;
    k = mp::min(Integer((b - 1) / a2), Integer((qmax - rq) / lq));
    if (k >= 1) {
      rp += k * lp;
      rq += k * lq;
      moved = true;
    }
    if (!moved) break;
  }
  return {reduce(lp, lq), reduce(rp, rq)};
}

Rational farey_successor(const Rational& r, const Integer& qmax) {
  const Integer a = r.num();
  const Integer b = r.den();
  if (b > qmax) throw DomainError("fraction not in the Farey sequence of this order");
  const Integer d0 = b == 1 ? Integer(0) : mod_positive(-mod_inverse(mod_positive(a, b), b), b);
  const Integer d = d0 + b * floor_div(qmax - d0, b);
  return reduce((a * d + 1) / b, d);
}

Rational farey_predecessor(const Rational& r, const Integer& qmax) {
  const Integer a = r.num();
  const Integer b = r.den();
  if (b > qmax) throw DomainError("fraction not in the Farey sequence of this order");
  const Integer d0 = b == 1 ? Integer(0) : mod_inverse(mod_positive(a, b), b);
  const Integer d = d0 + b * floor_div(qmax - d0, b);
  return reduce((a * d - 1) / b, d);
}

std::vector<Rational> farey_in_interval(const Rational& lo, const Rational& hi,
                                        const Integer& qmax) {
  if (hi < lo) throw DomainError("farey_in_interval: lo > hi");
  if (qmax < 1) throw DomainError("qmax must be positive");
  std::vector<Rational> out;
  Rational cur = farey_bracket(lo, qmax).above;
  if (hi < cur) return out;
  const Rational before = farey_predecessor(cur, qmax);
  Integer pp = before.num(), pq = before.den();
  Integer cp = cur.num(), cq = cur.den();
  while (cur <= hi) {
    out.push_back(cur);
    // next term of the sequence from two consecutive ones
    const Integer k = (qmax + pq) / cq;
    Integer np = k * cp - pp;
    Integer nq = k * cq - pq;
    pp = std::move(cp);
    pq = std::move(cq);
    cp = std::move(np);
    cq = std::move(nq);
    cur = Rational(mp::mpq_rational(cp, cq));
  }
  return out;
}

Rational simplest_in_closed(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw DomainError("empty interval");
  std::vector<Integer> prefix;
  Rational a = lo;
  Rational b = hi;
  Rational found;
  for (;;) {
    const Integer c = a.ceil();
    if (Rational(c) <= b) {
      found = Rational(c);
      break;
    }
    const Integer f = a.floor();
    Rational na = (b - Rational(f)).reciprocal();
    Rational nb = (a - Rational(f)).reciprocal();
    a = std::move(na);
    b = std::move(nb);
    prefix.push_back(f);
  }
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    found = Rational(*it) + found.reciprocal();
  }
  return found;
}

Rational min_denominator_in_interval(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("min_denominator_in_interval: need lo < hi");
  return simplest_in_closed(lo, hi);
}

}  // namespace thomae
