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

#include "thomae/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "thomae/errors.hpp"

namespace thomae {

namespace {

double ln(const Rational& r) { return log(r, Round::Down).convert_to<double>(); }

}  // namespace

double holder_theoretical(const ThomaeParams& params, const PointKind& kind) {
  if (std::holds_alternative<RationalPoint>(kind)) return 0.0;
  const double tau = std::get<IrrationalPoint>(kind).tau;
  if (!(tau >= 2)) throw DomainError("irrationality exponents are >= 2");
  return params.theta().to_double() / tau;
}

SlopeFit fit_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw DomainError("fit_slope: need at least two paired samples");
  }
  const auto n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) throw DomainError("fit_slope: abscissae are all equal");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    rss += r * r;
  }
  fit.rms_residual = std::sqrt(rss / n);
  fit.scales = xs.size();
  return fit;
}

double log_spike_ratio(const SpikeSample& s, double theta, double alpha) {
  return -theta * s.log_q - alpha * s.log_dist;
}

double max_log_spike_ratio(std::span<const SpikeSample> spikes, double theta, double alpha) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& s : spikes) best = std::max(best, log_spike_ratio(s, theta, alpha));
  return best;
}

double max_log_oscillation_ratio(std::span<const OscillationSample> samples, double alpha) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& s : samples) best = std::max(best, s.log_omega - alpha * s.log_radius);
  return best;
}

HolderReport holder_estimate_convergents(const CertifiedReal& x, const ThomaeParams& params,
                                         std::size_t max_terms, std::optional<double> known_tau,
                                         double tail_fraction) {
  const ContinuedFraction cf = expand(x, max_terms);
  const std::vector<Convergent> convs = convergents(cf);
  IrrationalityEstimate tau = tau_sequence(x, convs, tail_fraction);

  HolderReport report;
  report.theta = params.theta();
  const double theta = params.theta().to_double();
  if (known_tau) report.theoretical = holder_theoretical(params, IrrationalPoint{*known_tau});
  report.est_convergent = theta / tau.tau_hat;
  for (const TauTerm& t : tau.terms) {
    const Rational mid_dist = (t.dist_lo + t.dist_hi) / Rational(2);
    report.spikes.push_back({t.index, ln(Rational(t.q)), ln(mid_dist)});
  }
  report.constant_C = std::exp(max_log_spike_ratio(report.spikes, theta, *report.est_convergent));
  report.tau = std::move(tau);
  return report;
}

std::vector<Rational> dyadic_scales(unsigned first, unsigned last) {
  if (first > last) throw DomainError("dyadic_scales: first > last");
  std::vector<Rational> out;
  for (unsigned k = first; k <= last; ++k) {
    out.push_back(Rational(Integer(boost::multiprecision::pow(Integer(2), k))).reciprocal());
  }
  return out;
}

HolderReport holder_estimate_oscillation(const CertifiedReal& x, const ThomaeParams& params,
                                         std::span<const Rational> scales,
                                         std::optional<double> known_tau) {
  if (scales.size() < 2) throw DomainError("holder_estimate_oscillation: need >= 2 scales");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (scales[i].sign() <= 0 || (i > 0 && !(scales[i] < scales[i - 1]))) {
      throw DomainError("holder_estimate_oscillation: scales must be positive and decreasing");
    }
  }
  const double theta = params.theta().to_double();
  const Rational lo = x.lo();
  const Rational hi = x.hi();

  HolderReport report;
  report.theta = params.theta();
  if (known_tau) report.theoretical = holder_theoretical(params, IrrationalPoint{*known_tau});
  std::vector<double> log_r;
  std::vector<double> log_w;
  for (const Rational& r : scales) {
    if (r <= x.rad()) {
      throw InsufficientPrecision("holder_estimate_oscillation: scale below the input radius");
    }
    // every point of x's interval sees a window between these two
    Rational outer = simplest_in_closed(lo - r, hi + r);
    if (!x.is_exact() && simplest_in_closed(hi - r, lo + r).den() != outer.den()) {
      throw InsufficientPrecision("holder_estimate_oscillation: sup depends on the point of the interval");
    }
    OscillationSample s;
    s.radius = r;
    s.log_radius = ln(r);
    s.log_omega = -theta * ln(Rational(outer.den()));
    s.argmax = std::move(outer);
    log_r.push_back(s.log_radius);
    log_w.push_back(s.log_omega);
    report.oscillation.push_back(std::move(s));
  }
  report.fit = fit_slope(log_r, log_w);
  report.est_oscillation = report.fit->slope;
  double liminf = std::numeric_limits<double>::infinity();
  for (std::size_t i = report.oscillation.size() / 2; i < report.oscillation.size(); ++i) {
    const auto& s = report.oscillation[i];
    liminf = std::min(liminf, s.log_omega / s.log_radius);
  }
  report.liminf_oscillation = liminf;
  report.constant_C = std::exp(max_log_oscillation_ratio(report.oscillation, report.fit->slope));
  return report;
}

SpectrumPoint spectrum(double h, const ThomaeParams& params) {
  if (!(h >= 0)) throw DomainError("spectrum: h must be >= 0");
  const Rational hr = Rational::from_double(h);
  SpectrumPoint out;
  out.h = h;
  if (hr <= params.theta() / Rational(2)) {
    out.dim = (Rational(2) * hr / params.theta()).to_double();
  }
  return out;
}

BoydFunction::BoydFunction(Rational theta_, double gamma_)
    : theta(std::move(theta_)), gamma(gamma_) {
  if (theta.sign() <= 0) throw DomainError("Boyd function: theta must be positive");
  if (!(gamma >= 0)) throw DomainError("Boyd function: gamma must be >= 0");
}

double BoydFunction::log_value(double ln_x) const {
  return theta.to_double() * ln_x + gamma * std::log1p(std::fabs(ln_x));
}

double BoydFunction::operator()(double x) const {
  if (!(x > 0 && x <= 1)) throw DomainError("Boyd function is defined on (0, 1]");
  return std::exp(log_value(std::log(x)));
}

Real eval_generalized(const Rational& x, const BoydFunction& phi) {
  const Real ln_q = log(Rational(x.den()), Round::Down);
  const Real th = to_real(phi.theta, Round::Down);
  return boost::multiprecision::exp(-th * ln_q + Real(phi.gamma) * boost::multiprecision::log1p(ln_q));
}

BoydBounds boyd_bounds(const BoydFunction& phi, double x, std::size_t grid, std::size_t decades) {
  if (!(x > 0 && x < 1)) throw DomainError("boyd_bounds: x must lie in (0, 1)");
  if (grid < 10) throw DomainError("boyd_bounds: need at least 10 grid points per decade");
  if (decades < 1) throw DomainError("boyd_bounds: need at least one decade");
  const double lx = -std::log(x);
  const double step = std::log(10.0) / static_cast<double>(grid);
  // For x, s <= 1, |ln xs| = |ln x| + |ln s|, so the ratio splits into
  // x^theta times a pure log correction.
  BoydBounds out;
  out.x = x;
  out.correction_min = std::numeric_limits<double>::infinity();
  out.correction_max = -std::numeric_limits<double>::infinity();
  const std::size_t count = grid * decades + 1;
  for (std::size_t k = 0; k < count; ++k) {
    const double ls = step * static_cast<double>(k);
    const double c = std::log1p(lx + ls) - std::log1p(ls);
    out.correction_min = std::min(out.correction_min, c);
    out.correction_max = std::max(out.correction_max, c);
  }
  out.samples = count;
  const double theta_ln_x = -phi.theta.to_double() * lx;
  out.lower = std::exp(theta_ln_x + phi.gamma * out.correction_min);
  out.upper = std::exp(theta_ln_x + phi.gamma * out.correction_max);
  return out;
}

BoydIndices boyd_indices(const BoydFunction& phi, std::span<const double> x_small,
                         std::size_t grid, std::size_t decades) {
  if (x_small.empty()) throw DomainError("boyd_indices: need at least one x");
  for (std::size_t i = 0; i < x_small.size(); ++i) {
    if (!(x_small[i] > 0 && x_small[i] < 1) || (i > 0 && !(x_small[i] < x_small[i - 1]))) {
      throw DomainError("boyd_indices: x values must be decreasing in (0, 1)");
    }
  }
  const double theta = phi.theta.to_double();
  BoydIndices out;
  for (const double x : x_small) {
    const BoydBounds b = boyd_bounds(phi, x, grid, decades);
    const double ln_x = std::log(x);
    // dividing by ln x < 0 reverses the order of the two bounds
    out.trend.push_back({x, theta + phi.gamma * b.correction_max / ln_x,
                         theta + phi.gamma * b.correction_min / ln_x});
  }
  out.s_lower = out.trend.back().s_lower;
  out.s_upper = out.trend.back().s_upper;
  return out;
}

}  // namespace thomae
