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

// One line per acceptance criterion; exit status is the number of failures.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thomae/contfrac.hpp"
#include "thomae/regularity.hpp"
#include "thomae/thomae.hpp"

using namespace thomae;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return reduce(Integer(p), Integer(q)); }

constexpr unsigned kDigits = 200;
constexpr std::size_t kMaxTerms = 200;
constexpr std::size_t kMinConvergents = 30;
constexpr double kTauTwoTol = 0.05;
constexpr double kTauRelTol = 0.10;
constexpr std::size_t kSynthTerms = 12;
constexpr int kHurwitzMinPasses = 10;
constexpr std::int64_t kBestApproxQmax = 500;
constexpr double kConvergentTol = 0.05;
constexpr double kOscillationTol = 0.10;
constexpr double kConstantCMax = 10;
constexpr double kInflation = 0.1;
constexpr double kDivergence = 1e3;
constexpr double kSpectrumStep = 0.01;
constexpr unsigned kDarbouxMaxK = 16;
constexpr double kDarbouxTarget = 0.05;
constexpr double kBoydX = 1e-8;
constexpr std::size_t kBoydGrid = 200;
constexpr double kBoydTol = 0.05;
constexpr int kRandomCount = 1000;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Outcome farey_oracle() {
  for (std::int64_t Q = 1; Q <= 30; ++Q) {
    std::int64_t expected = 1;
    for (std::int64_t q = 1; q <= Q; ++q) expected += oracle::euler_phi(q);
    const auto got = farey_in_interval(R(0), R(1), Integer(Q)).size();
    if (static_cast<std::int64_t>(got) != expected) {
      return {false, "|F_" + std::to_string(Q) + "| = " + std::to_string(got)};
    }
  }
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> qd(2, 1000);
  int checked = 0, agree = 0;
  while (checked < kRandomCount) {
    const std::int64_t q1 = qd(rng), q2 = qd(rng);
    Rational a = R(std::uniform_int_distribution<std::int64_t>(1, q1 - 1)(rng), q1);
    Rational b = R(std::uniform_int_distribution<std::int64_t>(1, q2 - 1)(rng), q2);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    const Rational want = oracle::min_denominator(a, b);
    if (want.den() > 200) continue;
    ++checked;
    agree += min_denominator_in_interval(a, b) == want;
  }
  return {agree == checked, "cardinality ok for Q<=30; " + std::to_string(agree) + "/" +
                                std::to_string(checked) + " windows agree"};
}

Outcome best_approximation() {
  int convs = 0, rivals = 0;
  for (auto c : {Constant::GoldenConjugate, Constant::Sqrt2Minus1, Constant::EFrac}) {
    const auto x = make_constant(c, kDigits);
    for (const auto& cv : convergents(expand(x, kMaxTerms))) {
      if (cv.q > kBestApproxQmax) break;
      const Rational best = cv.value();
      const Rational d = x.max_distance(best);
      const Rational w = Rational(cv.q).reciprocal();
      for (const auto& r : farey_in_interval(x.lo() - w, x.hi() + w, cv.q)) {
        if (r == best) continue;
        ++rivals;
        if (x.min_distance(r) <= d) {
          return {false, std::string(constant_name(c)) + ": " + r.str() + " beats " + best.str()};
        }
      }
      ++convs;
    }
  }
  return {convs > 0, std::to_string(convs) + " convergents, " + std::to_string(rivals) +
                         " rivals, all beaten"};
}

Outcome tau_estimates() {
  bool ok = true;
  std::string detail;
  for (auto c : {Constant::GoldenConjugate, Constant::Sqrt2Minus1}) {
    const auto x = make_constant(c, kDigits);
    const auto cf = expand(x, kMaxTerms);
    const auto est = tau_sequence(x, convergents(cf));
    ok = ok && cf.certified_count >= kMinConvergents && std::fabs(est.tau_hat - 2) <= kTauTwoTol;
    detail += std::string(constant_name(c)) + " " + fmt(est.tau_hat) + " (" + std::to_string(cf.certified_count) +
              " convergents); ";
  }
  for (int t : {3, 4}) {
    const auto s = synthesize_prescribed_tau(R(t), kSynthTerms);
    const auto est = tau_sequence(s.value, convergents(expand(s.value, kSynthTerms)));
    ok = ok && std::fabs(est.tau_hat - t) <= kTauRelTol * t;
    detail += "synth " + std::to_string(t) + " " + fmt(est.tau_hat) + "; ";
  }
  return {ok, detail};
}

Outcome hurwitz_density() {
  const auto x = make_constant(Constant::GoldenConjugate, kDigits);
  auto cs = convergents(expand(x, kMinConvergents));
  std::vector<bool> pass;
  for (const auto& c : cs) pass.push_back(hurwitz_check(x, c));
  int count = 0;
  bool windows = true;
  for (std::size_t j = 0; j < pass.size(); ++j) {
    count += pass[j];
    if (j + 2 < pass.size()) windows = windows && (pass[j] || pass[j + 1] || pass[j + 2]);
  }
  return {cs.size() == kMinConvergents && count >= kHurwitzMinPasses && windows,
          std::to_string(count) + "/" + std::to_string(cs.size()) + " pass, windows " +
              (windows ? "ok" : "broken")};
}

Outcome continuity_witness() {
  std::mt19937_64 rng(2);
  int witnesses = 0;
  for (int i = 0; i < 20; ++i) {
    const auto x = oracle::random_certified(rng, 100);
    for (const auto& eps : {R(3, 10), R(1, 10), R(1, 100)}) {
      const auto w = continuity_delta(x, eps, ThomaeParams(R(1)));
      const Rational lo = x.lo() - w.delta;
      const Rational hi = x.hi() + w.delta;
      for (const auto& r : oracle::farey(lo, hi, w.n.convert_to<std::int64_t>())) {
        if (r != lo && r != hi) return {false, r.str() + " inside a witness window"};
      }
      ++witnesses;
    }
  }
  return {true, std::to_string(witnesses) + " witnesses, no rational of denominator <= n inside"};
}

Outcome non_differentiability() {
  const auto x = make_constant(Constant::GoldenConjugate, kDigits);
  const auto cs = convergents(expand(x, kMaxTerms));
  bool ok = true;
  std::string detail;
  for (const auto& t : {R(1, 2), R(1)}) {
    std::size_t first = 0;
    for (const auto& c : cs) {
      if (difference_quotient(x, c.value(), ThomaeParams(t)).exceeds(R(1000))) {
        first = c.index;
        break;
      }
    }
    ok = ok && first > 0;
    detail += "theta " + t.str() + " exceeds 1e3 at j=" + std::to_string(first) + "; ";
  }
  bool floor_ok = true;
  for (const auto& c : cs) floor_ok = floor_ok && difference_quotient(x, c.value(), ThomaeParams(R(2))).at_least(R(1));
  detail += std::string("theta 2 ") + (floor_ok ? ">= 1 on all " : "drops below 1 among ") +
            std::to_string(cs.size());
  return {ok && floor_ok, detail};
}

Outcome holder_proposition() {
  const auto g = make_constant(Constant::GoldenConjugate, kDigits);
  bool ok = true;
  std::string detail;
  for (const auto& t : {R(1, 2), R(1), R(2)}) {
    const ThomaeParams p(t);
    const double th = t.to_double();
    const auto conv = holder_estimate_convergents(g, p, kMaxTerms);
    const auto osc = holder_estimate_oscillation(g, p, dyadic_scales());
    const double lower = max_log_spike_ratio(conv.spikes, th, *conv.est_convergent + kInflation);
    ok = ok && std::fabs(*conv.est_convergent - th / 2) <= kConvergentTol &&
         std::fabs(*osc.est_oscillation - th / 2) <= kOscillationTol &&
         conv.constant_C <= kConstantCMax && lower > std::log(kDivergence);
    detail += "theta " + t.str() + ": conv " + fmt(*conv.est_convergent) + " osc " +
              fmt(*osc.est_oscillation) + " C " + fmt(conv.constant_C) + " log10 inflated " +
              fmt(lower / std::log(10.0)) + "; ";
  }
  for (int tt : {3, 4}) {
    const auto s = synthesize_prescribed_tau(R(tt), kSynthTerms);
    const auto conv = holder_estimate_convergents(s.value, ThomaeParams(R(1)), kSynthTerms);
    ok = ok && std::fabs(*conv.est_convergent - 1.0 / tt) <= kConvergentTol;
    detail += "synth " + std::to_string(tt) + ": " + fmt(*conv.est_convergent) + "; ";
  }
  return {ok, detail};
}

Outcome spectrum_formula() {
  for (const auto& t : {R(1, 2), R(1), R(2)}) {
    const ThomaeParams p(t);
    const double th = t.to_double();
    const auto at0 = spectrum(0, p);
    const auto top = spectrum(th / 2, p);
    const auto past = spectrum(th / 2 + kSpectrumStep, p);
    if (!(at0.dim && *at0.dim == 0 && top.dim && *top.dim == 1 && past.is_neg_infinity())) {
      return {false, "theta " + t.str()};
    }
  }
  return {true, "0, 1, -inf at theta 1/2, 1, 2"};
}

Outcome darboux_decay() {
  const ThomaeParams p(R(1));
  Rational prev = *upper_darboux(1, p).exact;
  bool monotone = true;
  unsigned below = 0;
  for (unsigned k = 1; k <= kDarbouxMaxK; ++k) {
    const Rational cur = *upper_darboux(std::uint64_t{1} << k, p).exact;
    monotone = monotone && cur <= prev;
    if (below == 0 && cur < Rational::from_double(kDarbouxTarget)) below = k;
    prev = cur;
  }
  return {monotone && below > 0, std::string(monotone ? "non-increasing" : "not monotone") +
                                     ", first below 0.05 at 2^" + std::to_string(below) +
                                     ", 2^16 gives " + fmt(prev.to_double())};
}

Outcome boyd_indices_check() {
  const std::vector<double> xs{1e-2, 1e-4, 1e-6, kBoydX};
  bool ok = true;
  std::string detail;
  for (const auto& [theta, gamma] : {std::pair{1, 1.0}, std::pair{1, 2.0}, std::pair{2, 1.0}}) {
    const auto ix = boyd_indices(BoydFunction(R(theta), gamma), xs, kBoydGrid);
    ok = ok && std::fabs(ix.s_lower - theta) <= kBoydTol && std::fabs(ix.s_upper - theta) <= kBoydTol;
    detail += "(" + std::to_string(theta) + "," + fmt(gamma) + "): [" + fmt(ix.s_lower) + ", " +
              fmt(ix.s_upper) + "]; ";
  }
  for (const auto& t : {R(1), R(3, 2), R(2)}) {
    const auto ix = boyd_indices(BoydFunction(t, 0), xs, kBoydGrid);
    ok = ok && ix.s_lower == t.to_double() && ix.s_upper == t.to_double();
  }
  return {ok, detail + "pure powers exact"};
}

Outcome periodicity() {
  std::mt19937_64 rng(3);
  for (int i = 0; i < kRandomCount; ++i) {
    const Rational x = oracle::random_fraction(rng, 100000, 1000000);
    for (const auto& t : {R(1, 2), R(1), R(2)}) {
      const ThomaeParams p(t);
      const auto a = eval(x, p), b = eval(x + R(1), p);
      if (a != b || a.exact() != b.exact()) return {false, x.str()};
    }
  }
  return {true, std::to_string(kRandomCount) + " fractions at theta 1/2, 1, 2"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"farey-oracle-agreement", farey_oracle},
      {"best-approximation", best_approximation},
      {"tau-estimates", tau_estimates},
      {"hurwitz-density", hurwitz_density},
      {"continuity-witness", continuity_witness},
      {"non-differentiability", non_differentiability},
      {"holder-exponent", holder_proposition},
      {"spectrum-formula", spectrum_formula},
      {"darboux-decay", darboux_decay},
      {"boyd-indices", boyd_indices_check},
      {"periodicity", periodicity},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %-24s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
