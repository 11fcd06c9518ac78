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

#include "thomae/thomae.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "thomae/errors.hpp"

namespace thomae {

namespace mp = boost::multiprecision;

namespace {

/// Simplest fraction in [ln/ld, hn/hd] for small positive operands. Same
/// recursion as simplest_in_closed.
std::pair<std::int64_t, std::int64_t> simplest_small(std::int64_t ln, std::int64_t ld,
                                                     std::int64_t hn, std::int64_t hd) {
  std::vector<std::int64_t> prefix;
  std::int64_t p = 0;
  std::int64_t q = 1;
  for (;;) {
    const std::int64_t c = (ln + ld - 1) / ld;
    if (c * hd <= hn) {
      p = c;
      break;
    }
    const std::int64_t f = ln / ld;
    const std::int64_t nln = hd, nld = hn - f * hd;
    const std::int64_t nhn = ld, nhd = ln - f * ld;
    ln = nln; ld = nld; hn = nhn; hd = nhd;
    prefix.push_back(f);
  }
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    const std::int64_t np = *it * p + q;
    q = p;
    p = np;
  }
  return {p, q};
}

Rational tree_sum(std::vector<Rational>& terms, std::size_t begin, std::size_t end) {
  if (begin == end) return Rational(0);
  if (end - begin == 1) return terms[begin];
  const std::size_t mid = begin + (end - begin) / 2;
  return tree_sum(terms, begin, mid) + tree_sum(terms, mid, end);
}

}  // namespace

ThomaeParams::ThomaeParams(Rational theta) : theta_(std::move(theta)) {
  if (theta_.sign() <= 0) {
    throw DomainError("theta must be positive; f_theta is not locally bounded otherwise");
  }
}

SpikeHeight::SpikeHeight(Integer q, Rational theta) : q_(std::move(q)), theta_(std::move(theta)) {
  if (q_ < 1) throw DomainError("spike denominator must be >= 1");
  if (theta_.sign() <= 0) throw DomainError("theta must be positive");
}

std::optional<Rational> SpikeHeight::exact() const {
  if (!theta_.is_integer()) return std::nullopt;
  return Rational(q_).pow(theta_.num().convert_to<unsigned>()).reciprocal();
}

double SpikeHeight::approx() const {
  if (auto e = exact()) return e->to_double();
  return bounds().mid().convert_to<double>();
}

std::string SpikeHeight::str() const {
  if (auto e = exact()) return e->str();
  return format_double(approx());
}

std::strong_ordering SpikeHeight::compare(const Rational& r) const {
  if (r.sign() <= 0) return std::strong_ordering::greater;
  // q^(-a/b) <=> r  iff  1 <=> r^b q^a
  const auto a = theta_.num().convert_to<unsigned>();
  const auto b = theta_.den().convert_to<unsigned>();
  const Rational lhs = r.pow(b) * Rational(Integer(mp::pow(q_, a)));
  return Rational(1) <=> lhs;
}

SpikeHeight eval(const Rational& x, const ThomaeParams& params) {
  return {x.den(), params.theta()};
}

Supremum sup_on_interval(const Rational& lo, const Rational& hi, const ThomaeParams& params) {
  Rational arg = min_denominator_in_interval(lo, hi);
  SpikeHeight value = eval(arg, params);
  return {std::move(arg), std::move(value)};
}

DarbouxSum upper_darboux(std::uint64_t n, const ThomaeParams& params) {
  if (n < 1) throw DomainError("upper_darboux: n must be >= 1");
  DarbouxSum out;
  out.n = n;
  if (n <= (std::uint64_t{1} << 31)) {
    const auto nn = static_cast<std::int64_t>(n);
    for (std::int64_t k = 0; k < nn; ++k) {
      const auto [p, q] = simplest_small(k, nn, k + 1, nn);
      (void)p;
      ++out.cell_denominators[Integer(q)];
    }
  } else {
    const Rational width = Rational(Integer(n)).reciprocal();
    for (std::uint64_t k = 0; k < n; ++k) {
      const Rational lo = Rational(Integer(k)) * width;
      ++out.cell_denominators[min_denominator_in_interval(lo, lo + width).den()];
    }
  }

  const Rational cell = Rational(Integer(n)).reciprocal();
  if (params.theta().is_integer()) {
    std::vector<Rational> terms;
    terms.reserve(out.cell_denominators.size());
    for (const auto& [q, count] : out.cell_denominators) {
      terms.push_back(*SpikeHeight(q, params.theta()).exact() * Rational(Integer(count)));
    }
    out.exact = tree_sum(terms, 0, terms.size()) * cell;
    out.value = {to_real(*out.exact, Round::Down), to_real(*out.exact, Round::Up)};
  } else {
    Real lo = 0;
    Real hi = 0;
    for (const auto& [q, count] : out.cell_denominators) {
      const Bounds b = pow_neg_bounds(q, params.theta());
      lo += b.lo * count;
      hi += b.hi * count;
    }
    // round-to-nearest accumulation: widen by a relative ulp budget
    const Real slack = hi * Real(1e-45);
    out.value = {(lo - slack) / n, (hi + slack) / n};
  }
  return out;
}

ContinuityWitness continuity_delta(const CertifiedReal& x, const Rational& epsilon,
                                   const ThomaeParams& params) {
  if (epsilon.sign() <= 0) throw DomainError("continuity_delta: epsilon must be positive");
  const auto below = [&](const Integer& n) {
    return SpikeHeight(n, params.theta()).compare(epsilon) == std::strong_ordering::less;
  };

  // least n with n^-theta < epsilon, seeded by a float estimate
  const double guess = std::pow(epsilon.to_double(), -1.0 / params.theta().to_double());
  if (!(guess < 1e8)) throw DomainError("continuity_delta: epsilon too small for a direct search");
  Integer n = mp::max(Integer(1), Integer(static_cast<std::int64_t>(guess)));
  while (n > 1 && below(n - 1)) --n;
  while (!below(n)) ++n;

  const Rational lo = x.lo();
  const Rational hi = x.hi();
  std::optional<Rational> delta;
  for (Integer j = 1; j <= n; ++j) {
    const Rational jr(j);
    const Integer m = (lo * jr).floor();
    if ((hi * jr).floor() != m || Rational(m) == lo * jr) {
      throw InsufficientPrecision("continuity_delta: a fraction of denominator " + j.str() +
                                  " lies inside the input interval");
    }
    const Rational left = reduce(m, j);
    const Rational right = reduce(m + 1, j);
    Rational dj = min(lo - left, right - hi);
    if (!delta || dj < *delta) delta = std::move(dj);
  }
  if (delta->sign() <= 0) throw InsufficientPrecision("continuity_delta: delta <= 0");
  return {x, epsilon, std::move(n), std::move(*delta)};
}

bool DifferenceQuotient::exceeds(const Rational& bound) const {
  return numerator.compare(bound * dist_hi) == std::strong_ordering::greater;
}

bool DifferenceQuotient::at_least(const Rational& bound) const {
  return numerator.compare(bound * dist_hi) != std::strong_ordering::less;
}

DifferenceQuotient difference_quotient(const CertifiedReal& x, const Rational& y,
                                       const ThomaeParams& params) {
  if (x.is_exact()) {
    throw DomainError("difference_quotient: x must be an irrational enclosure, not an exact rational");
  }
  Rational d_lo = x.min_distance(y);
  if (d_lo.sign() <= 0) {
    throw InsufficientPrecision("difference_quotient: y is inside the input interval");
  }
  Rational d_hi = x.max_distance(y);
  SpikeHeight f = eval(y, params);
  const Bounds fb = f.bounds();
  Real lo;
  Real hi;
  const Real dh = to_real(d_hi, Round::Up);
  const Real dl = to_real(d_lo, Round::Down);
  mpfr_div(lo.backend().data(), fb.lo.backend().data(), dh.backend().data(), MPFR_RNDD);
  mpfr_div(hi.backend().data(), fb.hi.backend().data(), dl.backend().data(), MPFR_RNDU);
  return {std::move(f), std::move(d_lo), std::move(d_hi), {lo, hi}};
}

std::string_view to_string(Differentiability d) {
  switch (d) {
    case Differentiability::NotDifferentiable: return "not_differentiable";
    case Differentiability::Differentiable: return "differentiable";
    case Differentiability::Boundary: return "boundary";
  }
  return "?";
}

Differentiability classify_differentiability(const Rational& theta, const Rational& tau) {
  if (theta.sign() <= 0) throw DomainError("theta must be positive");
  if (tau < Rational(2)) throw DomainError("irrationality exponents are >= 2");
  if (theta <= Rational(2)) return Differentiability::NotDifferentiable;
  if (tau < theta) return Differentiability::Differentiable;
  if (tau > theta) return Differentiability::NotDifferentiable;
  return Differentiability::Boundary;
}

}  // namespace thomae
