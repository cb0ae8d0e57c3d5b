//
// Copyright 2026 The qdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "qdp/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "qdp/classical.hpp"

namespace qdp {

namespace {

constexpr double kParamTol = 1e-12;
// Divergence values at or below this are treated as exactly zero (identical
// states up to eigensolver noise), so the bound degenerates to +inf.
constexpr double kDegenerateTol = 1e-13;

BoundEntry make_entry(std::string name, BoundSide side, double raw,
                      bool assumptions_met, bool uc = false,
                      std::string note = {}) {
  BoundEntry e;
  e.name = std::move(name);
  e.side = side;
  e.raw = std::isfinite(raw) ? std::max(raw, 0.0) : raw;
  if (std::isfinite(e.raw)) e.ceiling = bound_ceiling(e.raw);
  e.assumptions_met = assumptions_met;
  e.up_to_universal_constant = uc;
  e.note = std::move(note);
  return e;
}

double golden_section_min(const std::function<double(double)>& g, double lo,
                          double hi, double tol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = g(x2);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

const BoundEntry* BoundsCertificate::find(const std::string& name) const {
  for (const BoundEntry& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

long long bound_ceiling(double raw) {
  const double nudged = raw - std::max(1e-12, 1e-9 * std::abs(raw));
  return static_cast<long long>(std::ceil(std::max(nudged, 0.0)));
}

double bayes_error(const DensityMatrix& rho, const DensityMatrix& sigma,
                   double p) {
  if (!(p > 0.0 && p < 1.0))
    throw Error(ErrorKind::kRangeViolation, "bayes_error: p must be in (0,1)");
  const double gamma = (1.0 - p) / p;
  const double e_gamma = hockey_stick(rho, sigma, gamma).value;
  const double pe = p - p * e_gamma;
  return std::clamp(pe, 0.0, std::min(p, 1.0 - p));
}

BoundsCertificate fidelity_sc_bounds(const DensityMatrix& rho,
                                     const DensityMatrix& sigma, double p,
                                     double delta,
                                     const QuadratureConfig& cfg) {
  BoundsCertificate cert;
  cert.p = p;
  cert.delta = delta;
  const double f = fidelity(rho, sigma).value;
  const double minus_log_f = -std::log(f);
  const double h_half = integral_hellinger(rho, sigma, 0.5, cfg).hellinger.value;

  const bool regime = delta <= p && p <= 0.5 && delta > 0.0;
  const bool separated = f < 1.0 - kDegenerateTol;
  const double lower_num = 0.5 * std::log(p * (1.0 - p) / (delta * (1.0 - delta)));
  const double upper_num = std::log((1.0 - p) / delta);

  cert.entries.push_back(make_entry(
      "fidelity-lower", BoundSide::kLower,
      separated ? lower_num / minus_log_f : kInf, regime && separated, false,
      separated ? "" : "degenerate: F = 1"));
  cert.entries.push_back(make_entry(
      "hellinger-lower", BoundSide::kLower,
      h_half > kDegenerateTol ? lower_num / h_half : kInf,
      regime && separated && h_half <= 1.0, false,
      h_half <= 1.0 ? "" : "H_1/2 > 1"));
  cert.entries.push_back(make_entry(
      "fidelity-upper", BoundSide::kUpper,
      separated ? upper_num / minus_log_f : kInf, regime && separated, false,
      separated ? "" : "degenerate: F = 1"));
  return cert;
}

BoundsCertificate prior_sc_bounds(const DensityMatrix& rho,
                                  const DensityMatrix& sigma, double p,
                                  std::optional<double> delta,
                                  const QuadratureConfig& cfg) {
  if (!(p > 0.0 && p < 1.0))
    throw Error(ErrorKind::kRangeViolation, "prior_sc_bounds: p in (0,1)");
  const double d = delta.value_or(p / 4.0);
  BoundsCertificate cert;
  cert.p = p;
  cert.delta = d;

  const double lambda = std::log(2.0) / (2.0 * std::log(1.0 / p));
  const double js = jensen_shannon(rho, sigma, p).value;
  const double h_int =
      lambda > 0.0 && lambda < 1.0
          ? integral_hellinger(rho, sigma, 1.0 - lambda, cfg).hellinger.value
          : 0.0;
  const double h_petz = lambda > 0.0 && lambda < 1.0
                            ? petz_quantities(rho, sigma, 1.0 - lambda).h_bar
                            : 0.0;

  const bool half_prior = p <= 0.5;
  const bool delta_quarter = std::abs(d - p / 4.0) <= kParamTol;
  const bool delta_below_quarter = d <= p / 4.0 + kParamTol;
  const bool degenerate = js <= kDegenerateTol;

  cert.entries.push_back(make_entry(
      "js-prior-lower", BoundSide::kLower,
      js > kDegenerateTol ? (3.0 / 16.0) * p * std::log(1.0 / p) / js : kInf,
      half_prior && delta_below_quarter, false, degenerate ? "degenerate" : ""));
  cert.entries.push_back(make_entry(
      "hellinger-prior-lower", BoundSide::kLower,
      h_int > kDegenerateTol
          ? (3.0 * std::sqrt(2.0) / 16.0) * std::log(2.0) / (lambda * h_int)
          : kInf,
      half_prior && delta_below_quarter, false, degenerate ? "degenerate" : ""));
  const double gamma_fano = 1.0 - d / p;
  cert.entries.push_back(make_entry(
      "fano-js-lower", BoundSide::kLower,
      js > kDegenerateTol
          ? (p * gamma_fano * std::log((1.0 - p) / p) +
             p * p * gamma_fano * gamma_fano) /
                js
          : kInf,
      half_prior && gamma_fano > 0.0 && gamma_fano < 1.0, false,
      degenerate ? "degenerate" : ""));
  cert.entries.push_back(make_entry(
      "petz-prior-upper", BoundSide::kUpper,
      h_petz > kDegenerateTol ? 2.0 / (lambda * h_petz) : kInf,
      half_prior && delta_quarter, false, degenerate ? "degenerate" : ""));
  cert.entries.push_back(make_entry(
      "petz-upper-general", BoundSide::kUpper,
      h_petz > kDegenerateTol
          ? std::log(std::pow(p, 1.0 - lambda) * std::pow(1.0 - p, lambda) /
                     d) /
                (lambda * h_petz)
          : kInf,
      lambda > 0.0 && lambda < 1.0 && d > 0.0 && d < 1.0, false,
      degenerate ? "degenerate" : ""));

  // optimized Petz upper: inf_s log(p^s (1-p)^{1-s} / delta) / (-log Q_s)
  const auto objective = [&](double s) {
    const double q = petz_quantities(rho, sigma, s).q_bar;
    if (!(q > 0.0) || q >= 1.0 - kDegenerateTol) return kInf;
    return std::log(std::pow(p, s) * std::pow(1.0 - p, 1.0 - s) / d) /
           (-std::log(q));
  };
  const double opt = golden_section_min(objective, 0.01, 0.99, 1e-6);
  cert.entries.push_back(make_entry("petz-opt-upper", BoundSide::kUpper, opt,
                                    d > 0.0 && d < 1.0, false,
                                    degenerate ? "degenerate" : ""));
  return cert;
}

double js_hellinger_constant(double alpha, double lambda) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(lambda > 0.0 && lambda < 1.0))
    throw Error(ErrorKind::kRangeViolation,
                "js_hellinger_constant: open-interval parameters required");
  return alpha *
         std::pow(lambda * (1.0 - alpha) / ((1.0 - lambda) * alpha), lambda);
}

double js_hellinger_sqrt2_lambda(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error(ErrorKind::kRangeViolation, "alpha must be in (0,1)");
  return std::log(2.0) / (2.0 * std::log(1.0 / alpha));
}

double js_hellinger_sqrt2_constant(double alpha) {
  return alpha * std::sqrt(2.0);
}

double js_hellinger_improvement_factor() { return 32.0 * std::sqrt(2.0); }

namespace formulas {

namespace {
double privacy_amp(double eps) {  // ((e^eps + 1)/(e^eps - 1))^2
  const double e = std::exp(eps);
  const double a = (e + 1.0) / (e - 1.0);
  return a * a;
}
}  // namespace

double achievability_upper_half(double eps, double e1, double delta) {
  if (eps <= 0.0 || e1 <= 0.0) return kInf;
  return privacy_amp(eps) * 2.0 * std::log(1.0 / (2.0 * delta)) / (e1 * e1);
}

double achievability_upper_general(double eps, double e1, double delta) {
  if (eps <= 0.0 || e1 <= 0.0) return kInf;
  return privacy_amp(eps) * 2.0 * std::log(1.0 / delta) / (e1 * e1);
}

double interpolation_upper(double eps, double e1, double p, double delta) {
  if (eps <= 0.0 || e1 <= 0.0) return kInf;
  const double lambda = std::log(2.0) / (2.0 * std::log(1.0 / p));
  if (!(lambda > 0.0 && lambda < 1.0)) return kInf;
  const double beta = std::min(lambda, 1.0 - lambda);
  const double contracted = 1.0 / privacy_amp(eps) * e1 * e1;
  const double denom = lambda * (1.0 - std::pow(1.0 - contracted, beta));
  if (denom <= 0.0) return kInf;
  return beta *
         std::log(std::pow(p, 1.0 - lambda) * std::pow(1.0 - p, lambda) /
                  delta) /
         denom;
}

double converse1_hellinger_lower(double eps, double h_half) {
  if (eps <= 0.0 || h_half <= 0.0) return kInf;
  const double e = std::exp(eps);
  return (e + 1.0) * std::log(2.5) / (2.0 * (e - 1.0) * h_half);
}

double converse2_chi2_lower(double eps, double e1, double delta) {
  if (eps <= 0.0 || e1 <= 0.0) return kInf;
  const double e = std::exp(eps);
  const double denom = std::exp(-eps) * (e - 1.0) * (e - 1.0) * e1 * e1;
  return (1.0 - 2.0 * delta) * (1.0 - 2.0 * delta) / denom;
}

double ldp_js_lower(double eps, double js, double p) {
  if (eps <= 0.0 || js <= 0.0) return kInf;
  const double e = std::exp(eps);
  return (3.0 / 16.0) * (e + 1.0) / (e - 1.0) * p * std::log(1.0 / p) / js;
}

double ldp_e1_lower(double eps, double e1, double p, double delta) {
  if (eps <= 0.0 || e1 <= 0.0) return kInf;
  const double e = std::exp(eps);
  const double frac = 1.0 - delta / p;
  return frac * frac / (std::exp(-eps) * (e - 1.0) * e1 * e1);
}

}  // namespace formulas

BoundsCertificate ldp_sc_bounds(const DensityMatrix& rho,
                                const DensityMatrix& sigma, double p,
                                double delta, double eps,
                                const QuadratureConfig& cfg) {
  if (!(p > 0.0 && p < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw Error(ErrorKind::kRangeViolation,
                "ldp_sc_bounds: p, delta must be in (0,1)");
  if (eps < 0.0)
    throw Error(ErrorKind::kRangeViolation, "ldp_sc_bounds: eps must be >= 0");
  BoundsCertificate cert;
  cert.p = p;
  cert.delta = delta;
  cert.epsilon = eps;
  cert.degenerate_privacy = eps <= kParamTol;

  const double e1 = trace_distance(rho, sigma);
  const double h_half = integral_hellinger(rho, sigma, 0.5, cfg).hellinger.value;
  const double js = jensen_shannon(rho, sigma, p).value;

  const bool half = std::abs(p - 0.5) <= kParamTol;
  const bool dp_anchor = half && std::abs(delta - 0.1) <= kParamTol;
  const bool sane = !cert.degenerate_privacy && e1 > 0.0;

  cert.entries.push_back(make_entry(
      "achv-upper-half", BoundSide::kUpper,
      formulas::achievability_upper_half(eps, e1, delta),
      half && delta < 0.5 && sane, false));
  cert.entries.push_back(make_entry(
      "achv-upper-general", BoundSide::kUpper,
      formulas::achievability_upper_general(eps, e1, delta), sane, false));
  cert.entries.push_back(make_entry(
      "interpolation-upper", BoundSide::kUpper,
      formulas::interpolation_upper(eps, e1, p, delta), sane, false));
  cert.entries.push_back(make_entry(
      "private-hellinger-lower", BoundSide::kLower,
      formulas::converse1_hellinger_lower(eps, h_half), dp_anchor && sane,
      false, dp_anchor ? "" : "stated for (p, delta) = (1/2, 0.1)"));
  cert.entries.push_back(make_entry(
      "private-chi2-lower", BoundSide::kLower,
      formulas::converse2_chi2_lower(eps, e1, delta),
      half && delta < 0.5 && sane, false));
  cert.entries.push_back(make_entry(
      "private-js-lower", BoundSide::kLower, formulas::ldp_js_lower(eps, js, p),
      delta <= p / 4.0 + kParamTol && sane, false));
  cert.entries.push_back(make_entry(
      "private-e1-lower", BoundSide::kLower,
      formulas::ldp_e1_lower(eps, e1, p, delta), delta < p && sane, false));
  return cert;
}

ConversionBracket pf_to_bayes(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0))
    throw Error(ErrorKind::kRangeViolation,
                "pf_to_bayes: alpha, beta must be in (0,1)");
  ConversionBracket out;
  out.p = beta / (alpha + beta);
  out.delta_for_lower = 2.0 * alpha * beta / (alpha + beta);
  out.delta_for_upper = alpha * beta / (alpha + beta);
  out.ranges_ok = true;
  out.equivalence_up_to_constant =
      alpha <= 0.125 && beta <= 0.125 && beta <= alpha;
  return out;
}

PfBracket bayes_to_pf(double p, double delta) {
  if (!(p > 0.0 && p < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw Error(ErrorKind::kRangeViolation,
                "bayes_to_pf: p, delta must be in (0,1)");
  PfBracket out;
  out.alpha_lower = delta / p;
  out.beta_lower = delta / (1.0 - p);
  out.alpha_upper = delta / (2.0 * p);
  out.beta_upper = delta / (2.0 * (1.0 - p));
  out.ranges_ok = out.alpha_lower < 1.0 && out.beta_lower < 1.0;
  out.equivalence_up_to_constant = p <= 0.5 && delta <= p / 4.0;
  return out;
}

MajorityBoost majority_boost(double alpha, double alpha_target) {
  if (!(alpha > 0.0 && alpha <= 0.25))
    throw Error(ErrorKind::kRangeViolation,
                "majority_boost: alpha must be in (0, 1/4]");
  if (!(alpha_target > 0.0 && alpha_target <= alpha))
    throw Error(ErrorKind::kRangeViolation,
                "majority_boost: alpha_target must be in (0, alpha]");
  MajorityBoost out;
  const double raw = 32.0 * std::log(1.0 / alpha_target) / std::log(1.0 / alpha);
  out.r_bound = bound_ceiling(raw);
  out.r_odd = out.r_bound % 2 == 1 ? out.r_bound : out.r_bound + 1;
  out.exact_error[1] = alpha;
  const long long threshold = (out.r_odd + 1) / 2;
  const double err = classical::binomial_tail_geq(out.r_odd, alpha, threshold);
  out.exact_error[out.r_odd] = err;
  out.bound_holds = err <= alpha_target;
  return out;
}

BoundsCertificate asymmetric_ldp_bounds(const DensityMatrix& rho,
                                        const DensityMatrix& sigma,
                                        double alpha, double beta, double eps) {
  if (!(alpha > 0.0 && alpha <= 0.125) || !(beta > 0.0 && beta <= 0.125))
    throw Error(ErrorKind::kRangeViolation,
                "asymmetric_ldp_bounds: alpha, beta must be in (0, 1/8]");
  BoundsCertificate cert;
  cert.p = beta / (alpha + beta);
  cert.delta = alpha * beta / (alpha + beta);
  cert.epsilon = eps;
  cert.degenerate_privacy = eps <= kParamTol;
  const double e1 = trace_distance(rho, sigma);
  const double e = std::exp(eps);
  const bool sane = !cert.degenerate_privacy && e1 > 0.0;
  const double lower =
      sane ? (1.0 - alpha) * (1.0 - alpha) /
                 (std::exp(-eps) * (e - 1.0) * e1 * e1)
           : kInf;
  const double upper =
      sane ? (e + 1.0) * (e + 1.0) / ((e - 1.0) * (e - 1.0)) *
                 std::log((alpha + beta) / (alpha * beta)) / (e1 * e1)
           : kInf;
  cert.entries.push_back(make_entry("asym-e1-lower-uc", BoundSide::kLower,
                                    lower, sane, true));
  cert.entries.push_back(make_entry("asym-e1-upper-uc", BoundSide::kUpper,
                                    upper, sane, true));
  return cert;
}

}  // namespace qdp
