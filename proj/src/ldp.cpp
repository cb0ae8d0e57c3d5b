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

#include "qdp/ldp.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qdp/classical.hpp"
#include "qdp/parallel.hpp"

namespace qdp {

namespace {

constexpr double kCompletenessTol = 1e-9;
constexpr double kPovmPsdTol = 1e-10;

double max_abs_diag_deviation_from_identity(const Matrix& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const cplx expect = i == j ? cplx(1.0) : cplx(0.0);
      r = std::max(r, std::abs(m(i, j) - expect));
    }
  return r;
}

DensityMatrix distribution_as_state(const std::vector<double>& p) {
  return DensityMatrix(Matrix::diag(p));
}

}  // namespace

Channel Channel::kraus(std::vector<Matrix> ops) {
  if (ops.empty())
    throw Error(ErrorKind::kValidationError, "channel needs at least one op");
  const std::size_t in = ops.front().cols();
  const std::size_t out = ops.front().rows();
  Matrix completeness(in, in);
  for (const Matrix& k : ops) {
    if (k.cols() != in || k.rows() != out)
      throw Error(ErrorKind::kValidationError, "Kraus ops have mixed shapes");
    completeness += matmul(k.adjoint(), k);
  }
  const double resid = max_abs_diag_deviation_from_identity(completeness);
  if (!(resid <= kCompletenessTol))
    throw Error(ErrorKind::kValidationError,
                "Kraus completeness residual " + std::to_string(resid));
  Channel ch;
  ch.kind_ = ChannelKind::kKraus;
  ch.ops_ = std::move(ops);
  ch.in_dim_ = in;
  ch.out_dim_ = out;
  return ch;
}

Channel Channel::measurement(std::vector<Matrix> povm) {
  if (povm.empty())
    throw Error(ErrorKind::kValidationError, "POVM needs at least one element");
  const std::size_t in = povm.front().rows();
  Matrix completeness(in, in);
  for (const Matrix& m : povm) {
    if (!m.square() || m.rows() != in)
      throw Error(ErrorKind::kValidationError, "POVM elements have mixed dims");
    if (m.hermiticity_residual() > kHermTol)
      throw Error(ErrorKind::kValidationError, "POVM element not Hermitian");
    const std::vector<double> evals = eigvalsh(m);
    if (!evals.empty() && evals.back() < -kPovmPsdTol)
      throw Error(ErrorKind::kValidationError,
                  "POVM element has eigenvalue " + std::to_string(evals.back()));
    completeness += m;
  }
  const double resid = max_abs_diag_deviation_from_identity(completeness);
  if (!(resid <= kCompletenessTol))
    throw Error(ErrorKind::kValidationError,
                "POVM completeness residual " + std::to_string(resid));
  Channel ch;
  ch.kind_ = ChannelKind::kMeasurement;
  ch.ops_ = std::move(povm);
  ch.in_dim_ = in;
  ch.out_dim_ = ch.ops_.size();
  return ch;
}

DensityMatrix Channel::apply_state(const DensityMatrix& rho) const {
  if (kind_ != ChannelKind::kKraus)
    throw Error(ErrorKind::kValidationError,
                "apply_state requires a Kraus channel");
  if (rho.dim() != in_dim_)
    throw Error(ErrorKind::kDimensionMismatch, "channel/state dims differ");
  Matrix out(out_dim_, out_dim_);
  for (const Matrix& k : ops_) out += conjugate_with(k, rho.matrix());
  return DensityMatrix(out.symmetrized());
}

std::vector<double> Channel::apply_measurement(const DensityMatrix& rho) const {
  if (kind_ != ChannelKind::kMeasurement)
    throw Error(ErrorKind::kValidationError,
                "apply_measurement requires a measurement channel");
  if (rho.dim() != in_dim_)
    throw Error(ErrorKind::kDimensionMismatch, "channel/state dims differ");
  std::vector<double> probs(ops_.size());
  for (std::size_t x = 0; x < ops_.size(); ++x) {
    probs[x] = std::max(matmul(ops_[x], rho.matrix()).trace().real(), 0.0);
  }
  // kill rounding drift so the outcomes form an exact distribution
  double total = 0.0;
  for (double v : probs) total += v;
  if (total > 0.0)
    for (double& v : probs) v /= total;
  return probs;
}

ChannelOutput apply_channel(const Channel& ch, const DensityMatrix& rho) {
  ChannelOutput out;
  if (ch.kind() == ChannelKind::kKraus)
    out.state = ch.apply_state(rho);
  else
    out.distribution = ch.apply_measurement(rho);
  return out;
}

LdpReport verify_ldp(const Channel& ch, double eps, long samples,
                     std::uint64_t seed) {
  if (eps < 0.0)
    throw Error(ErrorKind::kRangeViolation, "verify_ldp: eps must be >= 0");
  LdpReport report;
  report.epsilon_tested = eps;
  const double e_eps = std::exp(eps);
  if (ch.kind() == ChannelKind::kMeasurement) {
    report.method = LdpMethod::kExactPovm;
    report.samples = 0;
    double margin = kInf;
    for (const Matrix& m : ch.ops()) {
      const std::vector<double> evals = eigvalsh(m);
      const double lmax = evals.front();
      const double lmin = evals.back();
      margin = std::min(margin, e_eps * lmin - lmax);
    }
    report.margin = margin;
    return report;
  }
  report.method = LdpMethod::kSampledPure;
  report.samples = samples;
  if (samples < 1)
    throw Error(ErrorKind::kRangeViolation, "verify_ldp: samples must be >= 1");
  std::vector<double> worst(samples, 0.0);
  par::parallel_for(static_cast<std::size_t>(samples), [&](std::size_t t) {
    const OrthonormalPair pair =
        random_orthonormal_pair(ch.in_dim(), seed + 0x9e3779b9ull * (t + 1));
    const DensityMatrix psi = pure_state(pair.first);
    const DensityMatrix phi = pure_state(pair.second);
    const DensityMatrix a = ch.apply_state(psi);
    const DensityMatrix b = ch.apply_state(phi);
    const double fwd = hockey_stick(a, b, e_eps).value;
    const double bwd = hockey_stick(b, a, e_eps).value;
    worst[t] = std::max(fwd, bwd);
  });
  double max_violation = 0.0;
  for (double v : worst) max_violation = std::max(max_violation, v);
  report.margin = -max_violation;
  return report;
}

BinaryMechanism binary_mechanism(const DensityMatrix& rho,
                                 const DensityMatrix& sigma, double eps) {
  if (rho.dim() != sigma.dim())
    throw Error(ErrorKind::kDimensionMismatch, "states have different dims");
  if (eps < 0.0)
    throw Error(ErrorKind::kRangeViolation, "binary_mechanism: eps >= 0");
  Matrix diff = rho.matrix();
  diff -= sigma.matrix();
  const EigenDecomposition eig = eigh(diff);
  const std::size_t d = rho.dim();
  Matrix pi_plus(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    if (eig.eigenvalues[k] < -kMechanismTieTol) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        pi_plus(i, j) +=
            eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
  }
  Matrix pi_minus = Matrix::identity(d);
  pi_minus -= pi_plus;

  const double kappa = std::exp(eps) / (1.0 + std::exp(eps));
  Matrix m0 = pi_plus;
  m0 *= cplx(kappa);
  Matrix m0b = pi_minus;
  m0b *= cplx(1.0 - kappa);
  m0 += m0b;
  Matrix m1 = Matrix::identity(d);
  m1 -= m0;

  BinaryMechanism mech;
  mech.kappa = kappa;
  mech.channel = Channel::measurement({m0.symmetrized(), m1.symmetrized()});
  const std::vector<double> p = mech.channel.apply_measurement(rho);
  const std::vector<double> q = mech.channel.apply_measurement(sigma);
  mech.out_p = {p[0], p[1]};
  mech.out_q = {q[0], q[1]};
  return mech;
}

double output_trace_distance(const Channel& ch, const DensityMatrix& rho,
                             const DensityMatrix& sigma) {
  if (ch.kind() == ChannelKind::kMeasurement)
    return classical::total_variation(ch.apply_measurement(rho),
                                      ch.apply_measurement(sigma));
  return trace_distance(ch.apply_state(rho), ch.apply_state(sigma));
}

double output_chi_squared(const Channel& ch, const DensityMatrix& rho,
                          const DensityMatrix& sigma) {
  if (ch.kind() == ChannelKind::kMeasurement)
    return classical::chi_squared(ch.apply_measurement(rho),
                                  ch.apply_measurement(sigma));
  return chi_squared(ch.apply_state(rho), ch.apply_state(sigma)).value;
}

double trace_contraction_estimate(const Channel& ch, long trials,
                                  std::uint64_t seed) {
  if (trials < 1)
    throw Error(ErrorKind::kRangeViolation,
                "trace_contraction_estimate: trials >= 1");
  std::vector<double> values(trials, 0.0);
  par::parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
    const OrthonormalPair pair =
        random_orthonormal_pair(ch.in_dim(), seed + 0x9e3779b9ull * (t + 1));
    values[t] = output_trace_distance(ch, pure_state(pair.first),
                                      pure_state(pair.second));
  });
  double best = 0.0;
  for (double v : values) best = std::max(best, v);
  return best;
}

LdpExtremes ldp_extremes(double eps, const std::function<double(double)>* f) {
  if (eps < 0.0)
    throw Error(ErrorKind::kRangeViolation, "ldp_extremes: eps must be >= 0");
  LdpExtremes out;
  const double e = std::exp(eps);
  const double em = std::exp(-eps);
  if (eps > 0.0) {
    out.sup_output_e1 = em * (e - 1.0) * (e - 1.0) / (e - em);
    out.eta_tr_cap = (e - 1.0) / (e + 1.0);
    out.chi2_cap = em * (e - 1.0) * (e - 1.0);
    out.upsilon = out.eta_tr_cap * out.eta_tr_cap;
    if (f != nullptr)
      out.reverse_pinsker_df =
          ((*f)(e) + e * (*f)(em)) / (e - 1.0) * out.sup_output_e1;
  } else if (f != nullptr) {
    out.reverse_pinsker_df = 0.0;
  }
  return out;
}

Chi2CheckResult chi2_data_processing_check(const Channel& ch,
                                           const DensityMatrix& rho,
                                           const DensityMatrix& sigma,
                                           long pure_pair_trials,
                                           std::uint64_t seed,
                                           std::optional<double> eps) {
  Chi2CheckResult result;
  result.lhs = output_chi_squared(ch, rho, sigma);
  const double e1 = trace_distance(rho, sigma);

  double sampled_max = 0.0;
  if (pure_pair_trials > 0) {
    std::vector<double> values(pure_pair_trials, 0.0);
    par::parallel_for(static_cast<std::size_t>(pure_pair_trials),
                      [&](std::size_t t) {
                        const OrthonormalPair pair = random_orthonormal_pair(
                            ch.in_dim(), seed + 0x9e3779b9ull * (t + 1));
                        values[t] = output_chi_squared(
                            ch, pure_state(pair.first), pure_state(pair.second));
                      });
    for (double v : values) sampled_max = std::max(sampled_max, v);
  }
  result.rhs_sampled = 2.0 * e1 * e1 * sampled_max;

  if (eps.has_value()) {
    const LdpReport report = verify_ldp(ch, *eps, std::max(pure_pair_trials, 1L),
                                        seed ^ 0xb5297a4d3f2c9e1bull);
    result.verified_ldp = report.passes();
    if (result.verified_ldp) {
      result.rhs_analytic = 2.0 * e1 * e1 * ldp_extremes(*eps).chi2_cap;
      result.holds = result.lhs <= *result.rhs_analytic + 1e-7;
    }
  }
  return result;
}

Channel make_private_measurement(std::size_t dim, std::size_t outcomes,
                                 double eps, std::uint64_t seed) {
  if (outcomes < 2)
    throw Error(ErrorKind::kRangeViolation, "need at least two outcomes");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Matrix> raw(outcomes);
  Matrix total(dim, dim);
  for (Matrix& m : raw) {
    Matrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) g(i, j) = cplx(normal(rng), normal(rng));
    m = matmul(g, g.adjoint());
    total += m;
  }
  // Normalize to a POVM, then mix each element toward (tr/d) * I just enough
  // to push every eigenvalue ratio to e^eps.
  const EigenDecomposition te = eigh(total);
  Matrix inv_sqrt(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < dim; ++k)
        acc += te.eigenvectors(i, k) / std::sqrt(te.eigenvalues[k]) *
               std::conj(te.eigenvectors(j, k));
      inv_sqrt(i, j) = acc;
    }
  // A common mixing weight keeps the completeness sum at the identity; the
  // eigenvalue ratio of every element is decreasing in w, so the largest
  // per-element requirement serves all of them.
  const double e_eps = std::exp(eps);
  std::vector<Matrix> normalized(outcomes);
  double w = 0.0;
  for (std::size_t x = 0; x < outcomes; ++x) {
    normalized[x] = conjugate_with(inv_sqrt, raw[x]).symmetrized();
    const std::vector<double> evals = eigvalsh(normalized[x]);
    const double lmax = evals.front();
    const double uniform =
        normalized[x].trace().real() / static_cast<double>(dim);
    const double denom = lmax + (e_eps - 1.0) * uniform;
    if (lmax > 0.0 && denom > 0.0)
      w = std::max(w, std::min(1.0, lmax / denom + 1e-9));
  }
  std::vector<Matrix> povm(outcomes);
  for (std::size_t x = 0; x < outcomes; ++x) {
    const double uniform =
        normalized[x].trace().real() / static_cast<double>(dim);
    Matrix mixed = Matrix::identity(dim);
    mixed *= cplx(w * uniform);
    Matrix keep = normalized[x];
    keep *= cplx(1.0 - w);
    mixed += keep;
    povm[x] = mixed.symmetrized();
  }
  return Channel::measurement(std::move(povm));
}

}  // namespace qdp
