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

#ifndef THOMAE_REGULARITY_HPP
#define THOMAE_REGULARITY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "thomae/contfrac.hpp"
#include "thomae/thomae.hpp"

namespace thomae {

struct RationalPoint {};
struct IrrationalPoint {
  double tau = 2;
};
using PointKind = std::variant<RationalPoint, IrrationalPoint>;

/// Pointwise Hoelder exponent of f_theta: 0 at rationals, theta/tau at an
/// irrational of exponent tau. Throws DomainError for tau < 2.
double holder_theoretical(const ThomaeParams& params, const PointKind& kind);

/// Ordinary least-squares line through (x_i, y_i).
struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  double rms_residual = 0;
  std::size_t scales = 0;
};

SlopeFit fit_slope(std::span<const double> xs, std::span<const double> ys);

/// One convergent spike: f(p_j/q_j) = q_j^-theta at distance dist from x.
struct SpikeSample {
  std::size_t index = 0;
  double log_q = 0;
  double log_dist = 0;  ///< log of the midpoint of the distance enclosure
};

/// Oscillation of f_theta on [x - r, x + r]: its sup, attained at argmax.
struct OscillationSample {
  Rational radius;
  Rational argmax;
  double log_radius = 0;
  double log_omega = 0;
};

/// Empirical and theoretical regularity at one point. The approximating
/// polynomial of the Hoelder condition is taken to be zero throughout.
struct HolderReport {
  Rational theta;
  std::optional<double> theoretical;
  std::optional<double> est_convergent;
  std::optional<double> est_oscillation;
  std::optional<SlopeFit> fit;
  /// min of log w(r) / log r over the finer half of the scales
  std::optional<double> liminf_oscillation;
  /// max ratio f(x+h)/|h|^alpha over the sampled h, alpha the estimate
  double constant_C = 0;

  std::optional<IrrationalityEstimate> tau;
  std::vector<SpikeSample> spikes;
  std::vector<OscillationSample> oscillation;
};

/// log of q^-theta / dist^alpha for one spike.
double log_spike_ratio(const SpikeSample& s, double theta, double alpha);
/// max over spikes of q^-theta / dist^alpha, in log form.
double max_log_spike_ratio(std::span<const SpikeSample> spikes, double theta, double alpha);
/// max over samples of omega(r) / r^alpha, in log form.
double max_log_oscillation_ratio(std::span<const OscillationSample> samples, double alpha);

/// theta / tau_hat from the convergents of x, plus the spike table.
HolderReport holder_estimate_convergents(const CertifiedReal& x, const ThomaeParams& params,
                                         std::size_t max_terms,
                                         std::optional<double> known_tau = std::nullopt,
                                         double tail_fraction = 0.5);

/// Radii 2^-first .. 2^-last.
std::vector<Rational> dyadic_scales(unsigned first = 5, unsigned last = 40);

/// Least-squares slope of log sup_{|h|<=r} f(x+h) against log r over the given
/// decreasing radii. Each sup is exact; a scale whose minimiser depends on
/// where x sits inside its interval raises InsufficientPrecision.
HolderReport holder_estimate_oscillation(const CertifiedReal& x, const ThomaeParams& params,
                                         std::span<const Rational> scales,
                                         std::optional<double> known_tau = std::nullopt);

/// A point of the Hoelder spectrum h -> dim{x : H(x) = h}.
struct SpectrumPoint {
  double h = 0;
  std::optional<double> dim;  ///< empty encodes -infinity (empty level set)
  bool is_neg_infinity() const { return !dim.has_value(); }
};

/// 2h/theta on [0, theta/2], -infinity beyond.
SpectrumPoint spectrum(double h, const ThomaeParams& params);

/// phi(x) = x^theta (|ln x| + 1)^gamma on (0, 1].
struct BoydFunction {
  Rational theta{1};
  double gamma = 0;

  BoydFunction() = default;
  BoydFunction(Rational theta, double gamma);
  double log_value(double ln_x) const;
  double operator()(double x) const;
};

/// phi(1/q) at p/q; integers give phi(1) = 1.
Real eval_generalized(const Rational& x, const BoydFunction& phi);

/// Grid estimates of inf and sup over s in (0, 1] of phi(xs)/phi(s).
struct BoydBounds {
  double x = 0;
  double lower = 0;
  double upper = 0;
  /// log ratio = theta ln x + gamma * correction; extremes of the correction
  double correction_min = 0;
  double correction_max = 0;
  std::size_t samples = 0;
  bool sampled = true;  ///< grid extrema, not certified bounds
};

/// s runs over 10^(-k/grid), k = 0 .. grid * decades.
BoydBounds boyd_bounds(const BoydFunction& phi, double x, std::size_t grid,
                       std::size_t decades = 300);

struct BoydIndexPoint {
  double x = 0;
  double s_lower = 0;
  double s_upper = 0;
};

struct BoydIndices {
  double s_lower = 0;  ///< log(sup ratio) / log x at the smallest x
  double s_upper = 0;  ///< log(inf ratio) / log x at the smallest x
  std::vector<BoydIndexPoint> trend;
  bool sampled = true;
};

BoydIndices boyd_indices(const BoydFunction& phi, std::span<const double> x_small,
                         std::size_t grid = 200, std::size_t decades = 300);

}  // namespace thomae

#endif  // THOMAE_REGULARITY_HPP
