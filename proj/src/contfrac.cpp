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

#include "thomae/contfrac.hpp"

#include <algorithm>
#include <cmath>

#include "thomae/errors.hpp"
#include "thomae/real.hpp"

namespace thomae {

namespace {

/// -log(d) / log(q) rounded in \p dir; d in (0, 1), q >= 2.
double tau_bound(const Rational& d, const Integer& q, Round dir) {
  const Round other = dir == Round::Down ? Round::Up : Round::Down;
  Real neg_log_d = log(d, other);
  mpfr_neg(neg_log_d.backend().data(), neg_log_d.backend().data(), MPFR_RNDN);
  const Real log_q = log(Rational(q), other);
  Real out;
  mpfr_div(out.backend().data(), neg_log_d.backend().data(), log_q.backend().data(),
           dir == Round::Down ? MPFR_RNDD : MPFR_RNDU);
  return to_double(out, dir);
}

}  // namespace

ContinuedFraction expand(const CertifiedReal& x, std::size_t max_terms) {
  if (max_terms < 1) throw DomainError("expand: max_terms must be >= 1");
  const CertifiedReal frac = x.mod_one();
  if (frac.is_exact() && frac.mid().sign() == 0) {
    throw DomainError("expand: an integer has no partial quotients");
  }
  ContinuedFraction cf;
  Rational lo = frac.lo();
  Rational hi = frac.hi();
  while (cf.digits.size() < max_terms) {
    if (lo.sign() <= 0) {
      // an exact zero remainder ends a rational expansion
      if (hi.sign() == 0 && !cf.digits.empty()) cf.exhausted = true;
      break;
    }
    // reciprocal reverses the order
    Rational rlo = hi.reciprocal();
    Rational rhi = lo.reciprocal();
    const Integer a = rlo.floor();
    if (rhi.floor() != a) break;
    const Rational shift{Integer(a)};
    lo = rlo - shift;
    hi = rhi - shift;
    cf.digits.push_back(a);
  }
  if (cf.digits.empty()) {
    throw InsufficientPrecision("expand: no partial quotient is certifiable");
  }
  if (!cf.exhausted && lo.sign() == 0 && hi.sign() == 0) cf.exhausted = true;
  cf.certified_count = cf.digits.size();
  return cf;
}

std::vector<Convergent> convergents(std::span<const Integer> digits) {
  std::vector<Convergent> out;
  out.reserve(digits.size());
  Integer p_prev = 1, q_prev = 0;
  Integer p = 0, q = 1;
  std::size_t j = 0;
  for (const Integer& a : digits) {
    if (a < 1) throw DomainError("partial quotients must be >= 1");
    Integer pn = a * p + p_prev;
    Integer qn = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
    out.push_back({p, q, ++j});
  }
  return out;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
  if (cf.certified_count < 1) throw DomainError("convergents: no certified digits");
  return convergents(std::span<const Integer>(cf.digits.data(), cf.certified_count));
}

IrrationalityEstimate tau_sequence(const CertifiedReal& x, std::span<const Convergent> convs,
                                   double tail_fraction) {
  if (!(tail_fraction > 0 && tail_fraction <= 1)) {
    throw DomainError("tau_sequence: tail_fraction must be in (0, 1]");
  }
  const CertifiedReal frac = x.mod_one();
  const Rational ten_rad = frac.rad() * Rational(10);
  IrrationalityEstimate est;
  for (const Convergent& c : convs) {
    if (c.q < 2) continue;
    const Rational r = c.value();
    TauTerm term;
    term.index = c.index;
    term.q = c.q;
    term.dist_lo = frac.min_distance(r);
    term.dist_hi = frac.max_distance(r);
    if (term.dist_lo.sign() <= 0 || term.dist_lo < ten_rad) {
      est.skipped.push_back(c.index);
      continue;
    }
    term.tau_lo = tau_bound(term.dist_hi, c.q, Round::Down);
    term.tau_hi = tau_bound(term.dist_lo, c.q, Round::Up);
    term.tau = 0.5 * (term.tau_lo + term.tau_hi);
    est.terms.push_back(std::move(term));
  }
  if (est.terms.empty()) throw InsufficientPrecision("tau_sequence: no certifiable term");

  const std::size_t m = est.terms.size();
  auto first = static_cast<std::size_t>(std::floor(static_cast<double>(m) * (1.0 - tail_fraction)));
  first = std::min(first, m - 1);
  est.tail_start = est.terms[first].index;
  est.tau_hat = std::max_element(est.terms.begin() + static_cast<std::ptrdiff_t>(first),
                                 est.terms.end(),
                                 [](const TauTerm& a, const TauTerm& b) { return a.tau < b.tau; })
                    ->tau;
  return est;
}

bool hurwitz_check(const CertifiedReal& x, const Convergent& c) {
  const CertifiedReal frac = x.mod_one();
  const Rational r = c.value();
  const Rational q4 = Rational(c.q).pow(4);
  const Rational five(5);
  const Rational d_hi = frac.max_distance(r);
  if (five * d_hi * d_hi * q4 < Rational(1)) return true;
  const Rational d_lo = frac.min_distance(r);
  if (five * d_lo * d_lo * q4 >= Rational(1)) return false;
  throw InsufficientPrecision("hurwitz_check: interval straddles the Hurwitz bound");
}

}  // namespace thomae
