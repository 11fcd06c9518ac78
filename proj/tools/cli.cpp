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

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thomae/certified_real.hpp"
#include "thomae/contfrac.hpp"
#include "thomae/errors.hpp"
#include "thomae/rational.hpp"
#include "thomae/regularity.hpp"
#include "thomae/thomae.hpp"

namespace thomae::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string theta = "1";
  std::string gamma = "1";
  unsigned precision_digits = 100;
  std::size_t max_terms = 40;
  std::string qmax = "1000";
  std::string scales = "5:40";
  std::string format = "csv";
  std::string output;

  // real input selection
  std::string constant;
  std::string x;
  std::string radius = "0";
  std::string synth_tau;
  std::size_t synth_terms = 12;

  // per-command arguments
  std::string value;
  std::string lo;
  std::string hi;
  std::string epsilon = "0.1";
  std::string tau;
  std::vector<double> h;
  std::uint64_t n = 1;
  unsigned refine = 0;
  double boyd_x = 0.5;
  std::vector<double> x_small;
  std::size_t grid = 200;
  std::size_t decades = 300;
  double tail = 0.5;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  if (std::isnan(v)) return "nan";
  return format_double(v);
}

json jnum(double v) {
  if (std::isfinite(v)) return v;
  return num(v);
}

class Csv {
 public:
  explicit Csv(std::ostream& os) : os_(os) {}
  Csv& row(std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) os_ << ',';
      os_ << c;
      first = false;
    }
    os_ << '\n';
    return *this;
  }

 private:
  std::ostream& os_;
};

ThomaeParams theta_of(const RunConfig& cfg) { return ThomaeParams(Rational::parse(cfg.theta)); }

Integer qmax_of(const RunConfig& cfg) {
  const Rational q = Rational::parse(cfg.qmax);
  if (!q.is_integer() || q.sign() <= 0) throw DomainError("--qmax must be a positive integer");
  return q.num();
}

std::vector<Rational> scales_of(const RunConfig& cfg) {
  const auto colon = cfg.scales.find(':');
  if (colon == std::string::npos) throw DomainError("--scales must look like FIRST:LAST");
  const int first = std::stoi(cfg.scales.substr(0, colon));
  const int last = std::stoi(cfg.scales.substr(colon + 1));
  if (first < 0 || last <= first) throw DomainError("--scales needs 0 <= FIRST < LAST");
  return dyadic_scales(static_cast<unsigned>(first), static_cast<unsigned>(last));
}

CertifiedReal input_of(const RunConfig& cfg) {
  const int chosen = !cfg.constant.empty() + !cfg.x.empty() + !cfg.synth_tau.empty();
  if (chosen != 1) throw DomainError("choose exactly one of --constant, --x, --synth-tau");
  if (!cfg.constant.empty()) return make_constant(parse_constant(cfg.constant), cfg.precision_digits);
  if (!cfg.x.empty()) return {Rational::parse(cfg.x), Rational::parse(cfg.radius)};
  return synthesize_prescribed_tau(Rational::parse(cfg.synth_tau), cfg.synth_terms).value;
}

void add_format(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--output,-o", cfg.output, "Write data to this file instead of stdout");
}

void add_theta(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--theta", cfg.theta, "Exponent theta > 0 (decimal or p/q)")->capture_default_str();
}

void add_input(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--constant", cfg.constant, "sqrt2m1 | golden_conj | e_frac | pi_frac");
  sub->add_option("--x", cfg.x, "Rational midpoint (p/q or decimal)");
  sub->add_option("--radius", cfg.radius, "Error radius for --x")->capture_default_str();
  sub->add_option("--synth-tau", cfg.synth_tau, "Synthesize an irrational with this exponent");
  sub->add_option("--synth-terms", cfg.synth_terms, "Digits for --synth-tau")->capture_default_str();
  sub->add_option("--digits", cfg.precision_digits, "Decimal digits for --constant")->capture_default_str();
}

json tau_json(const IrrationalityEstimate& est) {
  json terms = json::array();
  for (const auto& t : est.terms) {
    terms.push_back({{"index", t.index}, {"q", t.q.str()}, {"tau", t.tau},
                     {"tau_lo", t.tau_lo}, {"tau_hi", t.tau_hi}});
  }
  return {{"tau_hat", est.tau_hat}, {"tail_start", est.tail_start},
          {"skipped", est.skipped}, {"tau_seq", terms}};
}

json fit_json(const SlopeFit& f) {
  return {{"slope", f.slope}, {"intercept", f.intercept},
          {"rms_residual", f.rms_residual}, {"scales", f.scales}};
}

json report_json(const HolderReport& r) {
  json j;
  j["theta"] = r.theta.str();
  j["theoretical"] = r.theoretical ? json(*r.theoretical) : json(nullptr);
  j["est_convergent"] = r.est_convergent ? json(*r.est_convergent) : json(nullptr);
  j["est_oscillation"] = r.est_oscillation ? json(*r.est_oscillation) : json(nullptr);
  j["fit"] = r.fit ? fit_json(*r.fit) : json(nullptr);
  j["liminf_oscillation"] = r.liminf_oscillation ? json(*r.liminf_oscillation) : json(nullptr);
  j["constant_C"] = jnum(r.constant_C);
  if (r.tau) j["tau"] = tau_json(*r.tau);
  if (!r.oscillation.empty()) {
    json rows = json::array();
    for (const auto& s : r.oscillation) {
      rows.push_back({{"radius", s.radius.str()}, {"argmax", s.argmax.str()},
                      {"log_radius", s.log_radius}, {"log_omega", s.log_omega}});
    }
    j["oscillation"] = rows;
  }
  return j;
}

// ---- commands ---------------------------------------------------------------

void cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const Rational x = Rational::parse(cfg.value);
  const SpikeHeight f = eval(x, theta_of(cfg));
  if (cfg.format == "json") {
    out << json{{"x", x.str()}, {"theta", cfg.theta}, {"value", f.str()}, {"approx", f.approx()}}.dump()
        << '\n';
  } else {
    out << f.str() << '\n';
  }
}

void cmd_sample(const RunConfig& cfg, std::ostream& out) {
  const ThomaeParams params = theta_of(cfg);
  const auto pts = farey_in_interval(Rational(0), Rational(1), qmax_of(cfg));
  json rows = json::array();
  Csv csv(out);
  if (cfg.format == "csv") csv.row({"x", "f"});
  for (const Rational& r : pts) {
    if (r.is_integer()) continue;  // open interval (0, 1)
    const double f = eval(r, params).approx();
    if (cfg.format == "csv") {
      csv.row({num(r.to_double()), num(f)});
    } else {
      rows.push_back({{"p", r.num().str()}, {"q", r.den().str()}, {"x", r.to_double()}, {"f", f}});
    }
  }
  if (cfg.format == "json") out << json{{"theta", cfg.theta}, {"points", rows}}.dump(2) << '\n';
}

void cmd_figure_data(const RunConfig& cfg, std::ostream& out) {
  const BoydFunction phi(Rational::parse(cfg.theta), Rational::parse(cfg.gamma).to_double());
  const auto pts = farey_in_interval(Rational(0), Rational(1), qmax_of(cfg));
  json rows = json::array();
  Csv csv(out);
  if (cfg.format == "csv") csv.row({"x", "f"});
  for (const Rational& r : pts) {
    if (r.is_integer()) continue;
    const double f = eval_generalized(r, phi).convert_to<double>();
    if (cfg.format == "csv") {
      csv.row({num(r.to_double()), num(f)});
    } else {
      rows.push_back({{"p", r.num().str()}, {"q", r.den().str()}, {"x", r.to_double()}, {"f", f}});
    }
  }
  if (cfg.format == "json") {
    out << json{{"phi", {{"theta", cfg.theta}, {"gamma", phi.gamma}}}, {"points", rows}}.dump(2) << '\n';
  }
}

void cmd_farey(const RunConfig& cfg, std::ostream& out) {
  const auto pts = farey_in_interval(Rational::parse(cfg.lo), Rational::parse(cfg.hi), qmax_of(cfg));
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& r : pts) rows.push_back(r.str());
    out << json{{"count", pts.size()}, {"fractions", rows}}.dump() << '\n';
    return;
  }
  Csv csv(out);
  csv.row({"p", "q"});
  for (const auto& r : pts) csv.row({r.num().str(), r.den().str()});
}

void cmd_sup(const RunConfig& cfg, std::ostream& out) {
  const Supremum s = sup_on_interval(Rational::parse(cfg.lo), Rational::parse(cfg.hi), theta_of(cfg));
  if (cfg.format == "json") {
    out << json{{"argmax", s.argmax.str()}, {"value", s.value.str()}, {"approx", s.value.approx()}}.dump()
        << '\n';
    return;
  }
  Csv(out).row({"argmax", "value"}).row({s.argmax.str(), s.value.str()});
}

void cmd_cf(const RunConfig& cfg, std::ostream& out) {
  const ContinuedFraction cf = expand(input_of(cfg), cfg.max_terms);
  const auto convs = convergents(cf);
  if (cfg.format == "json") {
    json digits = json::array();
    for (const auto& a : cf.digits) digits.push_back(a.str());
    json cs = json::array();
    for (const auto& c : convs) cs.push_back({{"index", c.index}, {"p", c.p.str()}, {"q", c.q.str()}});
    out << json{{"digits", digits}, {"exhausted", cf.exhausted},
                {"certified_count", cf.certified_count}, {"convergents", cs}}.dump(2)
        << '\n';
    return;
  }
  Csv csv(out);
  csv.row({"index", "a", "p", "q"});
  for (std::size_t i = 0; i < convs.size(); ++i) {
    csv.row({std::to_string(convs[i].index), cf.digits[i].str(), convs[i].p.str(), convs[i].q.str()});
  }
}

void cmd_tau(const RunConfig& cfg, std::ostream& out) {
  const CertifiedReal x = input_of(cfg);
  const auto convs = convergents(expand(x, cfg.max_terms));
  const IrrationalityEstimate est = tau_sequence(x, convs, cfg.tail);
  if (cfg.format == "json") {
    out << tau_json(est).dump(2) << '\n';
    return;
  }
  Csv csv(out);
  csv.row({"index", "tau", "tau_lo", "tau_hi", "in_tail", "tau_hat"});
  for (const auto& t : est.terms) {
    csv.row({std::to_string(t.index), num(t.tau), num(t.tau_lo), num(t.tau_hi),
             t.index >= est.tail_start ? "1" : "0", num(est.tau_hat)});
  }
}

void cmd_hurwitz(const RunConfig& cfg, std::ostream& out) {
  const CertifiedReal x = input_of(cfg);
  const auto convs = convergents(expand(x, cfg.max_terms));
  json rows = json::array();
  Csv csv(out);
  if (cfg.format == "csv") csv.row({"index", "p", "q", "hurwitz"});
  for (const auto& c : convs) {
    const bool pass = hurwitz_check(x, c);
    if (cfg.format == "csv") {
      csv.row({std::to_string(c.index), c.p.str(), c.q.str(), pass ? "1" : "0"});
    } else {
      rows.push_back({{"index", c.index}, {"p", c.p.str()}, {"q", c.q.str()}, {"hurwitz", pass}});
    }
  }
  if (cfg.format == "json") out << rows.dump(2) << '\n';
}

void cmd_continuity(const RunConfig& cfg, std::ostream& out) {
  const ContinuityWitness w = continuity_delta(input_of(cfg), Rational::parse(cfg.epsilon), theta_of(cfg));
  const double delta = w.delta.to_double();
  if (cfg.format == "json") {
    out << json{{"epsilon", w.epsilon.str()}, {"n", w.n.str()}, {"delta", delta}}.dump() << '\n';
    return;
  }
  Csv(out).row({"epsilon", "n", "delta"}).row({w.epsilon.str(), w.n.str(), num(delta)});
}

void cmd_diffquot(const RunConfig& cfg, std::ostream& out) {
  const CertifiedReal x = input_of(cfg);
  const ThomaeParams params = theta_of(cfg);
  const auto convs = convergents(expand(x, cfg.max_terms));
  json rows = json::array();
  Csv csv(out);
  if (cfg.format == "csv") csv.row({"index", "q", "quotient_lo", "quotient_hi", "exceeds_q_pow_2_minus_theta"});
  for (const auto& c : convs) {
    const Rational y = c.value();
    if (x.min_distance(y).sign() <= 0) break;
    const DifferenceQuotient dq = difference_quotient(x, y, params);
    // q^(2-theta) < f(y)/d  iff  d < q^-2
    const bool beats = dq.dist_hi < Rational(c.q).pow(2).reciprocal();
    const std::string lo = dq.value.lo.str(17, std::ios_base::scientific);
    const std::string hi = dq.value.hi.str(17, std::ios_base::scientific);
    if (cfg.format == "csv") {
      csv.row({std::to_string(c.index), c.q.str(), lo, hi, beats ? "1" : "0"});
    } else {
      rows.push_back({{"index", c.index}, {"q", c.q.str()}, {"quotient_lo", lo},
                      {"quotient_hi", hi}, {"exceeds_q_pow_2_minus_theta", beats}});
    }
  }
  if (cfg.format == "json") out << rows.dump(2) << '\n';
}

void cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const Differentiability d = classify_differentiability(Rational::parse(cfg.theta), Rational::parse(cfg.tau));
  if (cfg.format == "json") {
    out << json{{"theta", cfg.theta}, {"tau", cfg.tau}, {"class", to_string(d)}}.dump() << '\n';
    return;
  }
  out << to_string(d) << '\n';
}

void cmd_holder(const RunConfig& cfg, std::ostream& out) {
  const CertifiedReal x = input_of(cfg);
  const ThomaeParams params = theta_of(cfg);
  std::optional<double> known;
  if (!cfg.tau.empty()) known = Rational::parse(cfg.tau).to_double();
  const auto scales = scales_of(cfg);

  std::optional<HolderReport> conv;
  if (!x.is_exact()) conv = holder_estimate_convergents(x, params, cfg.max_terms, known, cfg.tail);
  const HolderReport osc = holder_estimate_oscillation(x, params, scales, known);
  std::optional<double> theoretical = known ? std::optional<double>(holder_theoretical(params, IrrationalPoint{*known}))
                                            : std::nullopt;
  if (x.is_exact()) theoretical = holder_theoretical(params, RationalPoint{});

  if (cfg.format == "json") {
    out << json{{"theta", params.theta().str()},
                {"theoretical", theoretical ? json(*theoretical) : json(nullptr)},
                {"convergent", conv ? report_json(*conv) : json(nullptr)},
                {"oscillation", report_json(osc)}}
               .dump(2)
        << '\n';
    return;
  }
  Csv csv(out);
  csv.row({"field", "value"});
  csv.row({"theta", params.theta().str()});
  csv.row({"theoretical", theoretical ? num(*theoretical) : ""});
  csv.row({"est_convergent", conv ? num(*conv->est_convergent) : ""});
  csv.row({"tau_hat", conv ? num(conv->tau->tau_hat) : ""});
  csv.row({"constant_C_convergent", conv ? num(conv->constant_C) : ""});
  csv.row({"est_oscillation", num(*osc.est_oscillation)});
  csv.row({"liminf_oscillation", num(*osc.liminf_oscillation)});
  csv.row({"fit_rms_residual", num(osc.fit->rms_residual)});
  csv.row({"fit_scales", std::to_string(osc.fit->scales)});
  csv.row({"constant_C_oscillation", num(osc.constant_C)});
}

void cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const ThomaeParams params = theta_of(cfg);
  if (cfg.h.empty()) throw DomainError("spectrum: give at least one --h");
  json rows = json::array();
  Csv csv(out);
  if (cfg.format == "csv") csv.row({"h", "dim"});
  for (const double h : cfg.h) {
    const SpectrumPoint p = spectrum(h, params);
    if (cfg.format == "csv") {
      csv.row({num(h), p.dim ? num(*p.dim) : "-inf"});
    } else {
      rows.push_back({{"h", h}, {"dim", p.dim ? json(*p.dim) : json("-inf")}});
    }
  }
  if (cfg.format == "json") out << rows.dump() << '\n';
}

void cmd_boyd(const RunConfig& cfg, std::ostream& out) {
  const BoydFunction phi(Rational::parse(cfg.theta), Rational::parse(cfg.gamma).to_double());
  if (!cfg.x_small.empty()) {
    const BoydIndices idx = boyd_indices(phi, cfg.x_small, cfg.grid, cfg.decades);
    if (cfg.format == "json") {
      json trend = json::array();
      for (const auto& t : idx.trend) trend.push_back({{"x", t.x}, {"s_lower", t.s_lower}, {"s_upper", t.s_upper}});
      out << json{{"s_lower", idx.s_lower}, {"s_upper", idx.s_upper}, {"sampled", idx.sampled},
                  {"trend", trend}}.dump(2)
          << '\n';
      return;
    }
    Csv csv(out);
    csv.row({"x", "s_lower", "s_upper"});
    for (const auto& t : idx.trend) csv.row({num(t.x), num(t.s_lower), num(t.s_upper)});
    return;
  }
  const BoydBounds b = boyd_bounds(phi, cfg.boyd_x, cfg.grid, cfg.decades);
  if (cfg.format == "json") {
    out << json{{"x", b.x}, {"lower", b.lower}, {"upper", b.upper}, {"samples", b.samples},
                {"sampled", b.sampled}}.dump()
        << '\n';
    return;
  }
  Csv(out).row({"x", "lower", "upper", "sampled"}).row({num(b.x), num(b.lower), num(b.upper), "1"});
}

void cmd_darboux(const RunConfig& cfg, std::ostream& out) {
  const ThomaeParams params = theta_of(cfg);
  std::vector<std::uint64_t> ns;
  if (cfg.refine > 0) {
    if (cfg.refine > 40) throw DomainError("--refine is limited to 40");
    for (unsigned k = 0; k <= cfg.refine; ++k) ns.push_back(std::uint64_t{1} << k);
  } else {
    ns.push_back(cfg.n);
  }
  json rows = json::array();
  Csv csv(out);
  if (cfg.format == "csv") csv.row({"n", "value", "exact"});
  for (const auto n : ns) {
    const DarbouxSum d = upper_darboux(n, params);
    const double v = d.exact ? d.exact->to_double() : d.value.mid().convert_to<double>();
    if (cfg.format == "csv") {
      csv.row({std::to_string(n), num(v), d.exact ? d.exact->str() : ""});
    } else {
      rows.push_back({{"n", n}, {"value", v}, {"exact", d.exact ? json(d.exact->str()) : json(nullptr)},
                      {"value_lo", d.value.lo.convert_to<double>()},
                      {"value_hi", d.value.hi.convert_to<double>()}});
    }
  }
  if (cfg.format == "json") out << rows.dump(2) << '\n';
}

void cmd_synth(const RunConfig& cfg, std::ostream& out) {
  const SynthesizedIrrational s = synthesize_prescribed_tau(Rational::parse(cfg.tau), cfg.synth_terms);
  if (cfg.format == "json") {
    json digits = json::array();
    for (const auto& a : s.digits) digits.push_back(a.str());
    out << json{{"target_tau", s.target_tau.str()}, {"digits", digits},
                {"mid", s.value.decimal(50)},
                {"rad_log10", log(s.value.rad(), Round::Up).convert_to<double>() / std::log(10.0)}}
               .dump(2)
        << '\n';
    return;
  }
  Csv csv(out);
  csv.row({"index", "a"});
  for (std::size_t i = 0; i < s.digits.size(); ++i) csv.row({std::to_string(i + 1), s.digits[i].str()});
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Thomae function toolkit: exact evaluation, continued fractions, regularity"};
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, std::function<void(const RunConfig&, std::ostream&)>>> commands;
  const auto add = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_format(sub, cfg);
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto* s_eval = add("eval", "f_theta at a rational p/q", cmd_eval);
  s_eval->add_option("x", cfg.value, "Rational argument")->required();
  add_theta(s_eval, cfg);

  auto* s_sample = add("sample", "f_theta at every Farey fraction of (0,1) with q <= qmax", cmd_sample);
  add_theta(s_sample, cfg);
  s_sample->add_option("--qmax", cfg.qmax)->capture_default_str();

  auto* s_fig = add("figure-data", "f_phi, phi(x) = x^theta (|ln x|+1)^gamma, on Farey fractions of (0,1)",
                    cmd_figure_data);
  add_theta(s_fig, cfg);
  s_fig->add_option("--gamma", cfg.gamma)->capture_default_str();
  s_fig->add_option("--qmax", cfg.qmax)->capture_default_str();

  auto* s_farey = add("farey", "Reduced fractions in [lo, hi] with q <= qmax", cmd_farey);
  s_farey->add_option("--lo", cfg.lo)->required();
  s_farey->add_option("--hi", cfg.hi)->required();
  s_farey->add_option("--qmax", cfg.qmax)->capture_default_str();

  auto* s_sup = add("sup", "Supremum of f_theta on [lo, hi]", cmd_sup);
  s_sup->add_option("--lo", cfg.lo)->required();
  s_sup->add_option("--hi", cfg.hi)->required();
  add_theta(s_sup, cfg);

  auto* s_cf = add("cf", "Certified continued fraction and convergents", cmd_cf);
  add_input(s_cf, cfg);
  s_cf->add_option("--max-terms", cfg.max_terms)->capture_default_str();

  auto* s_tau = add("tau", "tau_j sequence and tail estimate of the irrationality exponent", cmd_tau);
  add_input(s_tau, cfg);
  s_tau->add_option("--max-terms", cfg.max_terms)->capture_default_str();
  s_tau->add_option("--tail", cfg.tail, "Fraction of terms forming the tail")->capture_default_str();

  auto* s_hur = add("hurwitz", "Hurwitz test |x - p/q| < 1/(sqrt5 q^2) per convergent", cmd_hurwitz);
  add_input(s_hur, cfg);
  s_hur->add_option("--max-terms", cfg.max_terms)->capture_default_str();

  auto* s_cont = add("continuity", "Continuity witness (n, delta) for a given epsilon", cmd_continuity);
  add_input(s_cont, cfg);
  add_theta(s_cont, cfg);
  s_cont->add_option("--epsilon", cfg.epsilon)->capture_default_str();

  auto* s_dq = add("diffquot", "Difference quotients along the convergents", cmd_diffquot);
  add_input(s_dq, cfg);
  add_theta(s_dq, cfg);
  s_dq->add_option("--max-terms", cfg.max_terms)->capture_default_str();

  auto* s_cls = add("classify", "Differentiability class from theta and tau", cmd_classify);
  add_theta(s_cls, cfg);
  s_cls->add_option("--tau", cfg.tau)->required();

  auto* s_hold = add("holder", "Theoretical and empirical pointwise Hoelder exponents", cmd_holder);
  add_input(s_hold, cfg);
  add_theta(s_hold, cfg);
  s_hold->add_option("--max-terms", cfg.max_terms)->capture_default_str();
  s_hold->add_option("--scales", cfg.scales, "Dyadic exponents FIRST:LAST")->capture_default_str();
  s_hold->add_option("--tau", cfg.tau, "Known irrationality exponent");
  s_hold->add_option("--tail", cfg.tail)->capture_default_str();

  auto* s_spec = add("spectrum", "Hoelder spectrum 2h/theta on [0, theta/2]", cmd_spectrum);
  add_theta(s_spec, cfg);
  s_spec->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  s_spec->add_option("--h", cfg.h, "Hoelder exponent abscissae")->required();

  auto* s_boyd = add("boyd", "Boyd ratio bounds, or indices with --x-small", cmd_boyd);
  add_theta(s_boyd, cfg);
  s_boyd->add_option("--gamma", cfg.gamma)->capture_default_str();
  s_boyd->add_option("--x", cfg.boyd_x)->capture_default_str();
  s_boyd->add_option("--x-small", cfg.x_small, "Decreasing x values for index estimates");
  s_boyd->add_option("--grid", cfg.grid, "Grid points per decade")->capture_default_str();
  s_boyd->add_option("--decades", cfg.decades)->capture_default_str();

  auto* s_dar = add("darboux", "Exact upper Darboux sum on n uniform cells", cmd_darboux);
  add_theta(s_dar, cfg);
  s_dar->add_option("--n", cfg.n)->capture_default_str();
  s_dar->add_option("--refine", cfg.refine, "Emit n = 2^0 .. 2^K instead of a single n");

  auto* s_syn = add("synth", "Digits of an irrational with prescribed exponent", cmd_synth);
  s_syn->add_option("--tau", cfg.tau)->required();
  s_syn->add_option("--terms", cfg.synth_terms)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (const auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      if (cfg.output.empty()) {
        fn(cfg, out);
      } else {
        std::ostringstream buffer;
        fn(cfg, buffer);
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) throw UsageError("cannot open output file " + cfg.output);
        file << buffer.str();
      }
    } catch (const InsufficientPrecision& e) {
      err << "insufficient precision: " << e.what() << '\n';
      return kExitPrecision;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::invalid_argument& e) {
      err << "error: bad argument: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitOk;
  }
  return kExitUsage;
}

}  // namespace thomae::cli
