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

#include "qdp/divergences.hpp"

#include <cmath>
#include <map>
#include <string>

namespace qdp {

namespace {

constexpr double kChiKernelTieTol = 1e-12;
// Hard ceiling for the log-gamma integration variable; exp(t) overflows
// shortly above this.
constexpr double kLogGammaCap = 600.0;

void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw Error(ErrorKind::kDimensionMismatch, "states have different dims");
}

DivergenceValue infinite(Method method) {
  return DivergenceValue{kInf, 0.0, method};
}

// Memoized E_gamma evaluator for one direction of a fixed pair.
class HockeyStickCurve {
 public:
  HockeyStickCurve(const Matrix& a, const Matrix& b) : a_(a), b_(b) {}

  double operator()(double gamma) const {
    auto it = cache_.find(gamma);
    if (it != cache_.end()) return it->second;
    Matrix diff = a_;
    Matrix scaled = b_;
    scaled *= cplx(gamma);
    diff -= scaled;
    const double value = positive_part_trace(diff);
    cache_.emplace(gamma, value);
    return value;
  }

 private:
  const Matrix& a_;
  const Matrix& b_;
  mutable std::map<double, double> cache_;
};

// Eigenvalues of sigma^{-1/2} rho sigma^{-1/2} on sigma's support. Their log
// is where tr(rho - gamma sigma)_+ kinks, and the largest gives D_inf.
struct GeneralizedSpectrum {
  std::vector<double> eigenvalues;
  double dmax = 0.0;  // +inf on support violation
};

GeneralizedSpectrum generalized_spectrum(const DensityMatrix& rho,
                                         const DensityMatrix& sigma) {
  GeneralizedSpectrum out;
  const SupportInfo sigma_support = support_info(sigma.matrix());
  const bool contained =
      support_leak(rho.matrix(), sigma_support) <= kSupportLeakTol;
  Matrix inv_sqrt = matrix_function(
      sigma.matrix(), [](double x) { return 1.0 / std::sqrt(x); }, true);
  const Matrix m = matmul(matmul(inv_sqrt, rho.matrix()), inv_sqrt);
  out.eigenvalues = eigvalsh(m.symmetrized());
  const double lmax = out.eigenvalues.empty() ? 0.0 : out.eigenvalues.front();
  if (!contained)
    out.dmax = kInf;
  else if (lmax <= 0.0)
    out.dmax = -kInf;
  else
    out.dmax = std::log(lmax);
  return out;
}

// log-gamma positions of the integrand kinks inside (0, t_end)
std::vector<double> kink_breakpoints(const GeneralizedSpectrum& spec) {
  std::vector<double> t;
  for (double lambda : spec.eigenvalues)
    if (lambda > 1.0) t.push_back(std::log(lambda));
  return t;
}

double dmax_raw(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return generalized_spectrum(rho, sigma).dmax;
}

double relative_entropy_raw(const Matrix& rho, const Matrix& sigma) {
  const SupportInfo sigma_support = support_info(sigma);
  if (support_leak(rho, sigma_support) > kSupportLeakTol) return kInf;
  const SupportInfo rho_support = support_info(rho);
  double tr_rho_log_rho = 0.0;
  for (std::size_t i = 0; i < rho_support.rank; ++i) {
    const double r = rho_support.eig.eigenvalues[i];
    tr_rho_log_rho += r * std::log(r);
  }
  double tr_rho_log_sigma = 0.0;
  const std::size_t n = rho.rows();
  for (std::size_t k = 0; k < sigma_support.rank; ++k) {
    const double s = sigma_support.eig.eigenvalues[k];
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx row = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        row += rho(i, j) * sigma_support.eig.eigenvectors(j, k);
      acc += std::conj(sigma_support.eig.eigenvectors(i, k)) * row;
    }
    tr_rho_log_sigma += acc.real() * std::log(s);
  }
  return tr_rho_log_rho - tr_rho_log_sigma;
}

struct TailPiece {
  double value = 0.0;
  double error = 0.0;
  bool diverged = false;
};

// Integrates g(t) on [0, t_end] where t_end = D_inf may be infinite. For the
// infinite case `tail_bound(T)` must bound the remaining mass beyond T; the
// cutoff is pushed out until that bound drops under abs_tol and the bound is
// charged to the error estimate.
TailPiece integrate_log_gamma(const std::function<double(double)>& g,
                              double t_end, const QuadratureConfig& cfg,
                              const std::function<double(double)>& tail_bound,
                              const std::vector<double>& breakpoints) {
  TailPiece piece;
  if (t_end <= 0.0) return piece;
  if (std::isfinite(t_end)) {
    const QuadratureResult r = integrate(g, 0.0, t_end, cfg, breakpoints);
    if (!r.converged)
      throw Error(ErrorKind::kQuadratureFailure,
                  "integral did not meet tolerance within max_subdivisions");
    piece.value = r.value;
    piece.error = r.abs_error;
    return piece;
  }
  double t_cut = 32.0;
  while (t_cut < kLogGammaCap && tail_bound(t_cut) > 0.5 * cfg.abs_tol)
    t_cut *= 2.0;
  t_cut = std::min(t_cut, kLogGammaCap);
  const QuadratureResult r = integrate(g, 0.0, t_cut, cfg, breakpoints);
  if (!r.converged)
    throw Error(ErrorKind::kQuadratureFailure,
                "integral did not meet tolerance within max_subdivisions");
  piece.value = r.value;
  piece.error = r.abs_error + tail_bound(t_cut);
  return piece;
}

}  // namespace

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

DivergenceValue hockey_stick(const DensityMatrix& rho, const DensityMatrix& sigma,
                             double gamma) {
  require_same_dim(rho, sigma);
  if (gamma < 0.0)
    throw Error(ErrorKind::kRangeViolation, "hockey_stick: gamma must be >= 0");
  Matrix diff = rho.matrix();
  Matrix scaled = sigma.matrix();
  scaled *= cplx(gamma);
  diff -= scaled;
  return DivergenceValue{positive_part_trace(diff), 0.0, Method::kClosedForm};
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return hockey_stick(rho, sigma, 1.0).value;
}

DivergenceValue fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const Matrix sqrt_rho = matrix_function(
      rho.matrix(), [](double x) { return std::sqrt(x); }, true);
  const Matrix inner = matmul(matmul(sqrt_rho, sigma.matrix()), sqrt_rho);
  double f = 0.0;
  for (double v : eigvalsh(inner.symmetrized()))
    if (v > 0.0) f += std::sqrt(v);
  f = std::min(f, 1.0);
  return DivergenceValue{f, 0.0, Method::kClosedForm};
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return std::sqrt(std::max(0.0, 1.0 - fidelity(rho, sigma).value));
}

DivergenceValue max_relative_entropy(const DensityMatrix& rho,
                                     const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  return DivergenceValue{dmax_raw(rho, sigma), 0.0, Method::kClosedForm};
}

PetzQuantities petz_quantities(const DensityMatrix& rho,
                               const DensityMatrix& sigma, double alpha) {
  require_same_dim(rho, sigma);
  const bool in_range =
      (alpha > 0.0 && alpha < 1.0) || (alpha > 1.0 && alpha <= 2.0);
  if (!in_range)
    throw Error(ErrorKind::kAlphaOutOfRange,
                "petz_quantities: alpha must lie in (0,1) u (1,2]");
  if (alpha > 1.0) {
    const SupportInfo sigma_support = support_info(sigma.matrix());
    if (support_leak(rho.matrix(), sigma_support) > kSupportLeakTol)
      return PetzQuantities{kInf, kInf, kInf};
  }
  const Matrix rho_a = matrix_function(
      rho.matrix(), [alpha](double x) { return std::pow(x, alpha); }, true);
  const Matrix sigma_b = matrix_function(
      sigma.matrix(), [alpha](double x) { return std::pow(x, 1.0 - alpha); },
      true);
  const double q = matmul(rho_a, sigma_b).trace().real();
  PetzQuantities out;
  out.q_bar = std::max(q, 0.0);
  out.d_bar = out.q_bar > 0.0 ? std::log(out.q_bar) / (alpha - 1.0) : kInf;
  out.h_bar = (out.q_bar - 1.0) / (alpha - 1.0);
  return out;
}

DivergenceValue sandwiched_renyi(const DensityMatrix& rho,
                                 const DensityMatrix& sigma, double alpha) {
  require_same_dim(rho, sigma);
  const bool in_range = (alpha >= 0.5 && alpha < 1.0) || alpha > 1.0;
  if (!in_range)
    throw Error(ErrorKind::kAlphaOutOfRange,
                "sandwiched_renyi: alpha must lie in [1/2,1) u (1,inf)");
  if (alpha > 1.0) {
    const SupportInfo sigma_support = support_info(sigma.matrix());
    if (support_leak(rho.matrix(), sigma_support) > kSupportLeakTol)
      return infinite(Method::kClosedForm);
  }
  const double z = (1.0 - alpha) / (2.0 * alpha);
  const Matrix sigma_z = matrix_function(
      sigma.matrix(), [z](double x) { return std::pow(x, z); }, true);
  const Matrix inner = matmul(matmul(sigma_z, rho.matrix()), sigma_z);
  double s = 0.0;
  for (double v : eigvalsh(inner.symmetrized()))
    if (v > 0.0) s += std::pow(v, alpha);
  const double value = s > 0.0 ? std::log(s) / (alpha - 1.0) : kInf;
  return DivergenceValue{std::isinf(value) ? kInf : std::max(value, 0.0), 0.0,
                         Method::kClosedForm};
}

HellingerRenyi integral_hellinger(const DensityMatrix& rho,
                                  const DensityMatrix& sigma, double alpha,
                                  const QuadratureConfig& cfg) {
  require_same_dim(rho, sigma);
  if (!(alpha > 0.0) || alpha == 1.0)
    throw Error(ErrorKind::kAlphaOutOfRange,
                "integral_hellinger: alpha must lie in (0,1) u (1,inf)");
  const GeneralizedSpectrum spec_rs = generalized_spectrum(rho, sigma);
  const GeneralizedSpectrum spec_sr = generalized_spectrum(sigma, rho);
  const double dmax_rs = spec_rs.dmax;
  const double dmax_sr = spec_sr.dmax;
  HellingerRenyi out;
  out.hellinger.method = Method::kQuadrature;
  out.renyi.method = Method::kQuadrature;

  if (alpha > 1.0 && std::isinf(dmax_rs)) {
    out.hellinger.value = kInf;
    out.renyi.value = kInf;
    return out;
  }

  const HockeyStickCurve e_rs(rho.matrix(), sigma.matrix());
  const HockeyStickCurve e_sr(sigma.matrix(), rho.matrix());

  // first integrand, gamma = e^t: gamma^{alpha-1} E_gamma(rho||sigma)
  const auto g1 = [&](double t) {
    return std::exp((alpha - 1.0) * t) * e_rs(std::exp(t));
  };
  // second integrand: gamma^{-alpha} E_gamma(sigma||rho)
  const auto g2 = [&](double t) {
    return std::exp(-alpha * t) * e_sr(std::exp(t));
  };
  // alpha < 1 tails, using monotonicity of E_gamma in gamma
  const auto tail1 = [&](double T) {
    return e_rs(std::exp(T)) * std::exp((alpha - 1.0) * T) / (1.0 - alpha);
  };
  const auto tail2 = [&](double T) {
    return e_sr(std::exp(T)) * std::exp(-alpha * T) / alpha;
  };

  const TailPiece p1 =
      integrate_log_gamma(g1, dmax_rs, cfg, tail1, kink_breakpoints(spec_rs));
  const TailPiece p2 =
      integrate_log_gamma(g2, dmax_sr, cfg, tail2, kink_breakpoints(spec_sr));

  const double h = alpha * (p1.value + p2.value);
  const double h_err = alpha * (p1.error + p2.error);
  out.hellinger.value = std::max(h, 0.0);
  out.hellinger.abs_error_estimate = h_err;

  const double base = 1.0 + (alpha - 1.0) * out.hellinger.value;
  if (base <= 0.0) {
    out.renyi.value = kInf;
  } else {
    out.renyi.value = std::max(std::log(base) / (alpha - 1.0), 0.0);
    out.renyi.abs_error_estimate = h_err / base;
  }
  return out;
}

DivergenceValue f_divergence_integral(const std::function<double(double)>& fpp,
                                      const DensityMatrix& rho,
                                      const DensityMatrix& sigma,
                                      const QuadratureConfig& cfg) {
  require_same_dim(rho, sigma);
  const GeneralizedSpectrum spec_rs = generalized_spectrum(rho, sigma);
  const GeneralizedSpectrum spec_sr = generalized_spectrum(sigma, rho);
  const double dmax_rs = spec_rs.dmax;
  const double dmax_sr = spec_sr.dmax;
  const HockeyStickCurve e_rs(rho.matrix(), sigma.matrix());
  const HockeyStickCurve e_sr(sigma.matrix(), rho.matrix());

  // gamma = e^t with the Jacobian folded in
  const std::function<double(double)> g1 = [&](double t) {
    const double gamma = std::exp(t);
    return fpp(gamma) * e_rs(gamma) * gamma;
  };
  const std::function<double(double)> g2 = [&](double t) {
    const double gamma = std::exp(t);
    return std::exp(-2.0 * t) * fpp(1.0 / gamma) * e_sr(gamma);
  };

  DivergenceValue out;
  out.method = Method::kQuadrature;
  double total = 0.0;
  double err = 0.0;
  for (int side = 0; side < 2; ++side) {
    const double t_end = side == 0 ? dmax_rs : dmax_sr;
    const auto& g = side == 0 ? g1 : g2;
    const std::vector<double> kinks =
        kink_breakpoints(side == 0 ? spec_rs : spec_sr);
    if (t_end <= 0.0) continue;
    if (std::isfinite(t_end)) {
      const QuadratureResult r = integrate(g, 0.0, t_end, cfg, kinks);
      if (!r.converged)
        throw Error(ErrorKind::kQuadratureFailure,
                    "f-divergence integral did not converge");
      total += r.value;
      err += r.abs_error;
      continue;
    }
    // No closed-form tail for a generic f''; extend in doubling segments and
    // declare +inf when the segment masses stop shrinking.
    double t0 = 0.0, t1 = 32.0;
    double prev_segment = kInf;
    bool done = false;
    while (t1 <= kLogGammaCap) {
      const QuadratureResult r = integrate(g, t0, t1, cfg, kinks);
      if (!r.converged)
        throw Error(ErrorKind::kQuadratureFailure,
                    "f-divergence integral did not converge");
      total += r.value;
      err += r.abs_error;
      if (std::abs(r.value) < cfg.abs_tol) {
        done = true;
        break;
      }
      if (t0 > 0.0 && std::abs(r.value) >= prev_segment)
        return infinite(Method::kQuadrature);
      prev_segment = std::abs(r.value);
      t0 = t1;
      t1 *= 2.0;
    }
    if (!done) err += prev_segment;
  }
  out.value = std::max(total, 0.0);
  out.abs_error_estimate = err;
  return out;
}

DivergenceValue chi_squared(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const SupportInfo sigma_support = support_info(sigma.matrix());
  if (support_leak(rho.matrix(), sigma_support) > kSupportLeakTol)
    return infinite(Method::kClosedForm);
  const std::size_t n = rho.dim();
  Matrix delta = rho.matrix();
  delta -= sigma.matrix();
  // Delta in sigma's eigenbasis, restricted to the support block.
  const Matrix& u = sigma_support.eig.eigenvectors;
  const std::size_t r = sigma_support.rank;
  Matrix tilde(r, r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      cplx acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        cplx row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += delta(i, j) * u(j, b);
        acc += std::conj(u(i, a)) * row;
      }
      tilde(a, b) = acc;
    }
  }
  double total = 0.0;
  for (std::size_t a = 0; a < r; ++a) {
    const double pa = sigma_support.eig.eigenvalues[a];
    for (std::size_t b = 0; b < r; ++b) {
      const double pb = sigma_support.eig.eigenvalues[b];
      const double kernel = std::abs(pa - pb) < kChiKernelTieTol
                                ? 1.0 / pa
                                : (std::log(pa) - std::log(pb)) / (pa - pb);
      total += std::norm(tilde(a, b)) * kernel;
    }
  }
  return DivergenceValue{std::max(total, 0.0), 0.0, Method::kClosedForm};
}

DivergenceValue relative_entropy(const DensityMatrix& rho,
                                 const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const double value = relative_entropy_raw(rho.matrix(), sigma.matrix());
  return DivergenceValue{std::isinf(value) ? kInf : std::max(value, 0.0), 0.0,
                         Method::kClosedForm};
}

DivergenceValue jensen_shannon(const DensityMatrix& rho,
                               const DensityMatrix& sigma, double p) {
  require_same_dim(rho, sigma);
  if (!(p > 0.0 && p < 1.0))
    throw Error(ErrorKind::kRangeViolation, "jensen_shannon: p must be in (0,1)");
  Matrix mix = rho.matrix();
  mix *= cplx(p);
  Matrix other = sigma.matrix();
  other *= cplx(1.0 - p);
  mix += other;
  const double d1 = relative_entropy_raw(rho.matrix(), mix);
  const double d2 = relative_entropy_raw(sigma.matrix(), mix);
  double value = p * d1 + (1.0 - p) * d2;
  // supports are contained in the mixture's by construction
  if (!std::isfinite(value)) value = binary_entropy(p);
  return DivergenceValue{std::max(value, 0.0), 0.0, Method::kClosedForm};
}

}  // namespace qdp
