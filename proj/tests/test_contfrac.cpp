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

#include <cmath>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "thomae/contfrac.hpp"
#include "thomae/errors.hpp"

using namespace thomae;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return reduce(Integer(p), Integer(q)); }

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

std::vector<CertifiedReal> test_inputs() {
  std::vector<CertifiedReal> xs;
  for (auto c : {Constant::Sqrt2Minus1, Constant::GoldenConjugate, Constant::EFrac, Constant::PiFrac}) {
    xs.push_back(make_constant(c, 100));
  }
  std::mt19937_64 rng(20261017);
  for (int i = 0; i < 8; ++i) xs.push_back(oracle::random_certified(rng));
  return xs;
}

}  // namespace

TEST_CASE("expand examples") {
  const auto cf = expand(CertifiedReal::exact(R(3, 8)), 20);
  CHECK(cf.digits == ints({2, 1, 2}));
  CHECK(cf.exhausted);
  CHECK(cf.certified_count == 3);
  CHECK(oracle::nested_fraction(cf.digits) == R(3, 8));

  const auto s = expand(make_constant(Constant::Sqrt2Minus1, 50), 500);
  CHECK(s.digits.size() > 50);
  CHECK_FALSE(s.exhausted);
  for (const auto& a : s.digits) CHECK(a == 2);

  const auto g = expand(make_constant(Constant::GoldenConjugate, 50), 500);
  CHECK(g.digits.size() > 50);
  for (const auto& a : g.digits) CHECK(a == 1);

  // e - 2 = [1, 2, 1, 1, 4, 1, 1, 6, ...]
  const auto e = expand(make_constant(Constant::EFrac, 50), 12);
  CHECK(e.digits == ints({1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1}));
  // pi - 3 = [7, 15, 1, 292, ...]
  const auto p = expand(make_constant(Constant::PiFrac, 50), 4);
  CHECK(p.digits == ints({7, 15, 1, 292}));
}

TEST_CASE("expand canonical rational forms and errors") {
  CHECK(expand(CertifiedReal::exact(R(1, 2)), 10).digits == ints({2}));
  CHECK(expand(CertifiedReal::exact(R(13, 10)), 10).digits == ints({3, 3}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Rational x = oracle::random_fraction(rng, 1000, 5000);
    const Rational f = x - Rational(x.floor());
    if (f.sign() == 0) continue;
    const auto cf = expand(CertifiedReal::exact(x), 100);
    REQUIRE(cf.exhausted);
    CHECK(oracle::nested_fraction(cf.digits) == f);
    if (cf.digits.size() > 1) CHECK(cf.digits.back() >= 2);
  }
  CHECK_THROWS_AS(expand(CertifiedReal::exact(R(3)), 5), DomainError);
  CHECK_THROWS_AS(expand(CertifiedReal(R(1, 2), R(1, 10)), 5), InsufficientPrecision);
  CHECK_THROWS_AS(expand(CertifiedReal::exact(R(1, 3)), 0), DomainError);
  // an interval of width 1e-6 certifies only a handful of digits
  const auto short_cf = expand(CertifiedReal(R(1, 3) + R(1, 7919), R(1, 1000000)), 100);
  CHECK(short_cf.certified_count < 100);
  CHECK_FALSE(short_cf.exhausted);
}

TEST_CASE("convergents examples") {
  auto values = [](const std::vector<Integer>& d) {
    std::vector<Rational> out;
    for (const auto& c : convergents(d)) out.push_back(c.value());
    return out;
  };
  CHECK(values(ints({2, 2, 2})) == std::vector<Rational>{R(1, 2), R(2, 5), R(5, 12)});
  CHECK(values(ints({1, 1, 1, 1})) == std::vector<Rational>{R(1), R(1, 2), R(2, 3), R(3, 5)});
  CHECK(values(ints({2, 1, 2})).back() == R(3, 8));
  const auto cs = convergents(ints({2, 1, 2}));
  CHECK(cs[0].index == 1);
  CHECK(cs[2].index == 3);
}

TEST_CASE("convergents round-trip and structure") {
  for (const auto& x : test_inputs()) {
    const auto cf = expand(x, 60);
    const auto cs = convergents(cf);
    REQUIRE(cs.size() == cf.digits.size());
    for (std::size_t j = 0; j < cs.size(); ++j) {
      const std::vector<Integer> prefix(cf.digits.begin(), cf.digits.begin() + static_cast<std::ptrdiff_t>(j + 1));
      CHECK(cs[j].value() == oracle::nested_fraction(prefix));
      CHECK(boost::multiprecision::gcd(cs[j].p, cs[j].q) == 1);
      if (j >= 2) CHECK(cs[j].q > cs[j - 1].q);
    }
  }
}

TEST_CASE("alternation and squeeze") {
  for (const auto& x : test_inputs()) {
    const auto cs = convergents(expand(x, 60));
    for (std::size_t j = 0; j + 1 < cs.size(); ++j) {
      const Rational dj = cs[j].value() - x.mid();
      const Rational dn = cs[j + 1].value() - x.mid();
      CHECK(dj.sign() * dn.sign() < 0);
      const Rational bound = Rational(Integer(cs[j].q * cs[j + 1].q)).reciprocal();
      CHECK(dj.abs() < bound);
      CHECK(bound <= Rational(Integer(cs[j].q * cs[j].q)).reciprocal());
    }
  }
}

TEST_CASE("best approximation against brute-force Farey windows") {
  int checked = 0, rivals = 0;
  for (const auto& x : test_inputs()) {
    for (const auto& c : convergents(expand(x, 60))) {
      if (c.q > 500) break;
      const Rational d = (c.value() - x.mid()).abs();
      const Rational w = Rational(c.q).reciprocal();
      for (const auto& r : oracle::farey(x.mid() - w, x.mid() + w, c.q.convert_to<std::int64_t>())) {
        CHECK((r - x.mid()).abs() >= d);
        rivals += r != c.value();
      }
      ++checked;
    }
  }
  CHECK(checked >= 40);
  CHECK(rivals > 100);
}

TEST_CASE("tau_sequence examples") {
  for (auto c : {Constant::GoldenConjugate, Constant::Sqrt2Minus1}) {
    const auto x = make_constant(c, 200);
    const auto est = tau_sequence(x, convergents(expand(x, 200)));
    CHECK(est.tau_hat >= 1.95);
    CHECK(est.tau_hat <= 2.05);
    CHECK(est.skipped.empty());
  }
  // 30 golden convergents: the tail max is tau_16 = -log|x - 987/1597| / log 1597
  const auto g = make_constant(Constant::GoldenConjugate, 100);
  const auto est30 = tau_sequence(g, convergents(expand(g, 30)));
  const double d16 = std::fabs((std::sqrt(5.0) - 1) / 2 - 987.0 / 1597.0);
  CHECK(est30.tail_start == 16);
  CHECK(est30.tau_hat == doctest::Approx(-std::log(d16) / std::log(1597.0)).epsilon(1e-9));
  CHECK(est30.tau_hat > 2.05);

  const auto s = synthesize_prescribed_tau(R(3), 12);
  const auto est = tau_sequence(s.value, convergents(expand(s.value, 12)));
  CHECK(std::fabs(est.tau_hat - 3.0) <= 0.3);
}

TEST_CASE("tau_j lower bound and enclosure on all test constants") {
  for (const auto& x : test_inputs()) {
    const auto est = tau_sequence(x, convergents(expand(x, 60)));
    REQUIRE_FALSE(est.terms.empty());
    double tail_max = 0;
    for (const auto& t : est.terms) {
      CHECK(t.tau >= 1.0);
      CHECK(t.tau_lo <= t.tau);
      CHECK(t.tau <= t.tau_hi);
      CHECK(t.q >= 2);
      if (t.index > 2) CHECK(t.tau > 1.9);
      if (t.index >= est.tail_start) tail_max = std::max(tail_max, t.tau);
    }
    CHECK(est.tau_hat == tail_max);
  }
}

TEST_CASE("tau_sequence skips uncertifiable terms") {
  const CertifiedReal fine = make_constant(Constant::GoldenConjugate, 40);
  const CertifiedReal coarse(fine.mid(), R(1, 1000000000000));
  const auto cs = convergents(expand(fine, 60));
  const auto est = tau_sequence(coarse, cs);
  CHECK_FALSE(est.skipped.empty());
  for (const auto& t : est.terms) CHECK(t.dist_lo > coarse.rad() * Rational(10));
  CHECK_THROWS_AS(tau_sequence(coarse, std::span<const Convergent>(cs).subspan(40)), InsufficientPrecision);
}

TEST_CASE("hurwitz_check examples") {
  const auto g = make_constant(Constant::GoldenConjugate, 50);
  CHECK_FALSE(hurwitz_check(g, Convergent{1, 2, 2}));
  CHECK(hurwitz_check(g, Convergent{2, 3, 3}));
  const auto r = CertifiedReal::exact(R(3, 8));
  CHECK(hurwitz_check(r, convergents(expand(r, 10)).back()));
}

TEST_CASE("one of any three consecutive convergents passes hurwitz_check") {
  for (const auto& x : test_inputs()) {
    const auto cs = convergents(expand(x, 60));
    for (std::size_t j = 0; j + 2 < cs.size(); ++j) {
      CHECK((hurwitz_check(x, cs[j]) || hurwitz_check(x, cs[j + 1]) || hurwitz_check(x, cs[j + 2])));
    }
  }
}
