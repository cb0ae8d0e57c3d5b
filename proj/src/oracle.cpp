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

#include "qdp/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "qdp/classical.hpp"

namespace qdp {

namespace {

constexpr long long kLinearScanLimit = 4096;

long long max_tensor_copies(std::size_t dim, long long n_max) {
  if (dim <= 1) return n_max;
  long long n = 0;
  double total = 1.0;
  while (n < n_max) {
    total *= static_cast<double>(dim);
    if (total > static_cast<double>(kOracleDimCap)) break;
    ++n;
  }
  return n;
}

void check_prior_delta(double p, double delta) {
  if (!(p > 0.0 && p < 1.0))
    throw Error(ErrorKind::kRangeViolation, "prior must be in (0,1)");
  if (!(delta > 0.0))
    throw Error(ErrorKind::kRangeViolation, "delta must be positive");
}

// Joint eigenvalues of a commuting pair: diagonalize rho, then diagonalize
// sigma inside each degenerate eigenspace of rho.
std::vector<std::pair<double, double>> joint_eigenvalues(const Matrix& rho,
                                                         const Matrix& sigma) {
  const EigenDecomposition er = eigh(rho);
  const std::size_t d = rho.rows();
  std::vector<std::pair<double, double>> joint;
  joint.reserve(d);
  std::size_t start = 0;
  while (start < d) {
    std::size_t end = start + 1;
    while (end < d &&
           std::abs(er.eigenvalues[end] - er.eigenvalues[start]) <= 1e-12)
      ++end;
    const std::size_t block = end - start;
    // sigma compressed into this eigenspace
    Matrix sub(block, block);
    for (std::size_t a = 0; a < block; ++a)
      for (std::size_t b = 0; b < block; ++b) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
          cplx row = 0.0;
          for (std::size_t j = 0; j < d; ++j)
            row += sigma(i, j) * er.eigenvectors(j, start + b);
          acc += std::conj(er.eigenvectors(i, start + a)) * row;
        }
        sub(a, b) = acc;
      }
    for (double mu : eigvalsh(sub.symmetrized()))
      joint.emplace_back(er.eigenvalues[start], mu);
    start = end;
  }
  return joint;
}

bool states_commute(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const Matrix ab = matmul(rho.matrix(), sigma.matrix());
  const Matrix ba = matmul(sigma.matrix(), rho.matrix());
  Matrix diff = ab;
  diff -= ba;
  return diff.max_abs() <= 1e-12;
}

// Minimal type-II at level alpha for rho^n vs sigma^n via the threshold test
// {rho^n - t sigma^n > 0} plus randomization on the boundary eigenspace; t is
// located by bisection on the type-I error, which is nondecreasing in t.
double type2_noncommuting(const Matrix& rho_n, const Matrix& sigma_n,
                          double alpha) {
  struct Split {
    double type1;       // 1 - tr(rho P_+) - keeps only the strict part
    double rho_plus;    // tr(rho P_+)
    double rho_zero;    // tr(rho Pi_0)
    double sigma_plus;  // tr(sigma P_+)
    double sigma_zero;  // tr(sigma Pi_0)
  };
  const std::size_t d = rho_n.rows();
  const auto split_at = [&](double t) {
    Matrix m = rho_n;
    Matrix scaled = sigma_n;
    scaled *= cplx(t);
    m -= scaled;
    const EigenDecomposition eig = eigh(m);
    const double scale = std::max(
        {std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()),
         1e-300});
    const double btol = 1e-9 * scale;
    Split s{1.0, 0.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < d; ++k) {
      const double lambda = eig.eigenvalues[k];
      if (lambda <= -btol) continue;
      cplx r_acc = 0.0, s_acc = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        cplx r_row = 0.0, s_row = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
          r_row += rho_n(i, j) * eig.eigenvectors(j, k);
          s_row += sigma_n(i, j) * eig.eigenvectors(j, k);
        }
        r_acc += std::conj(eig.eigenvectors(i, k)) * r_row;
        s_acc += std::conj(eig.eigenvectors(i, k)) * s_row;
      }
      if (lambda >= btol) {
        s.rho_plus += r_acc.real();
        s.sigma_plus += s_acc.real();
      } else {
        s.rho_zero += r_acc.real();
        s.sigma_zero += s_acc.real();
      }
    }
    s.type1 = 1.0 - s.rho_plus;
    return s;
  };
  const auto beta_of = [&](const Split& s) {
    // include just enough of the boundary to spend the type-I budget
    if (s.type1 - s.rho_zero > alpha + 1e-12) return 2.0;  // infeasible
    double frac = 0.0;
    if (s.rho_zero > 1e-15)
      frac = std::clamp((s.type1 - alpha) / s.rho_zero, 0.0, 1.0);
    else if (s.type1 > alpha + 1e-12)
      return 2.0;
    return s.sigma_plus + frac * s.sigma_zero;
  };

  double lo = 0.0, hi = 1.0;
  Split s_hi = split_at(hi);
  int doublings = 0;
  while (s_hi.type1 - s_hi.rho_zero <= alpha && doublings++ < 60) {
    lo = hi;
    hi *= 2.0;
    s_hi = split_at(hi);
  }
  if (doublings >= 60) {
    // sigma is (numerically) singular where rho lives; the largest tested
    // threshold already gives the best test.
    const double b = beta_of(s_hi);
    return b > 1.0 ? beta_of(split_at(lo)) : b;
  }
  for (int iter = 0; iter < 80 && hi - lo > 1e-13 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const Split s = split_at(mid);
    if (s.type1 - s.rho_zero <= alpha)
      lo = mid;
    else
      hi = mid;
  }
  double best = 2.0;
  for (const double t : {lo, hi, 0.5 * (lo + hi)}) {
    const double b = beta_of(split_at(t));
    best = std::min(best, b);
  }
  return best;
}

}  // namespace

double exact_bayes_error_n(const DensityMatrix& rho, const DensityMatrix& sigma,
                           double p, unsigned n) {
  check_prior_delta(p, 1.0);
  if (rho.dim() != sigma.dim())
    throw Error(ErrorKind::kDimensionMismatch, "states have different dims");
  const double gamma = (1.0 - p) / p;
  Matrix diff = tensor_power(rho.matrix(), n);
  Matrix scaled = tensor_power(sigma.matrix(), n);
  scaled *= cplx(gamma);
  diff -= scaled;
  const double e_gamma = positive_part_trace(diff);
  return std::clamp(p - p * e_gamma, 0.0, std::min(p, 1.0 - p));
}

OracleResult quantum_sample_complexity(const DensityMatrix& rho,
                                       const DensityMatrix& sigma, double p,
                                       double delta, long long n_max) {
  check_prior_delta(p, delta);
  OracleResult out;
  out.method = OracleMethod::kTensorEig;
  out.n_cap = std::min(n_max, max_tensor_copies(rho.dim(), n_max));
  for (long long n = 1; n <= out.n_cap; ++n) {
    const double err = exact_bayes_error_n(rho, sigma, p,
                                           static_cast<unsigned>(n));
    out.error_trace[n] = err;
    if (err <= delta) {
      out.n_star = n;
      break;
    }
  }
  return out;
}

OracleResult binary_sample_complexity(const std::vector<double>& p_dist,
                                      const std::vector<double>& q_dist,
                                      double p, double delta, long long n_max) {
  check_prior_delta(p, delta);
  if (p_dist.size() != 2 || q_dist.size() != 2)
    throw Error(ErrorKind::kDimensionMismatch,
                "binary_sample_complexity expects binary distributions");
  if (n_max < 1 || n_max > 1000000)
    throw Error(ErrorKind::kRangeViolation, "n_max must be in [1, 1e6]");
  const double a = p_dist[1];
  const double b = q_dist[1];
  OracleResult out;
  out.method = OracleMethod::kBinomialScan;
  out.n_cap = n_max;

  if (std::abs(a - b) <= 1e-15) {
    const double err = std::min(p, 1.0 - p);
    out.error_trace[1] = err;
    if (err <= delta) out.n_star = 1;
    return out;
  }

  const auto error_at = [&](long long n) {
    const double err = classical::binary_bayes_error(p, a, b, n);
    out.error_trace[n] = err;
    return err;
  };

  const long long linear_to = std::min(n_max, kLinearScanLimit);
  for (long long n = 1; n <= linear_to; ++n) {
    if (error_at(n) <= delta) {
      out.n_star = n;
      return out;
    }
  }
  if (linear_to == n_max) return out;

  // Classical Bayes error is nonincreasing in n, so a doubling search plus
  // bisection finds the least n exactly.
  if (error_at(n_max) > delta) return out;
  long long lo = linear_to;  // error(lo) > delta
  long long hi = std::min(2 * linear_to, n_max);
  while (error_at(hi) > delta) {
    lo = hi;
    hi = std::min(2 * hi, n_max);
  }
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    if (error_at(mid) <= delta)
      hi = mid;
    else
      lo = mid;
  }
  out.n_star = hi;
  return out;
}

OracleResult ldp_witness(const DensityMatrix& rho, const DensityMatrix& sigma,
                         double p, double delta, double eps, long long n_max) {
  const BinaryMechanism mech = binary_mechanism(rho, sigma, eps);
  return binary_sample_complexity({mech.out_p[0], mech.out_p[1]},
                                  {mech.out_q[0], mech.out_q[1]}, p, delta,
                                  n_max);
}

double neyman_pearson_type2(const DensityMatrix& rho, const DensityMatrix& sigma,
                            double alpha, unsigned n) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw Error(ErrorKind::kRangeViolation, "alpha must be in [0,1)");
  if (states_commute(rho, sigma)) {
    const std::vector<std::pair<double, double>> base =
        joint_eigenvalues(rho.matrix(), sigma.matrix());
    double total = 1.0;
    for (unsigned i = 0; i < n; ++i) total *= static_cast<double>(base.size());
    if (total > static_cast<double>(kOracleDimCap))
      throw Error(ErrorKind::kDimCapExceeded,
                  "neyman_pearson_type2: dim^n exceeds cap");
    std::vector<std::pair<double, double>> outcomes = {{1.0, 1.0}};
    for (unsigned i = 0; i < n; ++i) {
      std::vector<std::pair<double, double>> next;
      next.reserve(outcomes.size() * base.size());
      for (const auto& [ra, sb] : outcomes)
        for (const auto& [r, s] : base)
          next.emplace_back(ra * std::max(r, 0.0), sb * std::max(s, 0.0));
      outcomes = std::move(next);
    }
    return classical::np_min_type2(outcomes, alpha);
  }
  const Matrix rho_n = tensor_power(rho.matrix(), n);
  const Matrix sigma_n = tensor_power(sigma.matrix(), n);
  return type2_noncommuting(rho_n, sigma_n, alpha);
}

double neyman_pearson_type2_threshold(const DensityMatrix& rho,
                                      const DensityMatrix& sigma, double alpha,
                                      unsigned n) {
  const Matrix rho_n = tensor_power(rho.matrix(), n);
  const Matrix sigma_n = tensor_power(sigma.matrix(), n);
  return type2_noncommuting(rho_n, sigma_n, alpha);
}

OracleResult neyman_pearson_scan(const DensityMatrix& rho,
                                 const DensityMatrix& sigma, double alpha,
                                 double beta, long long n_max) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0))
    throw Error(ErrorKind::kRangeViolation,
                "neyman_pearson_scan: alpha, beta in (0,1)");
  OracleResult out;
  out.method = OracleMethod::kNeymanPearsonScan;
  out.n_cap = std::min(n_max, max_tensor_copies(rho.dim(), n_max));
  for (long long n = 1; n <= out.n_cap; ++n) {
    const double type2 =
        neyman_pearson_type2(rho, sigma, alpha, static_cast<unsigned>(n));
    out.error_trace[n] = type2;
    if (type2 <= beta) {
      out.n_star = n;
      break;
    }
  }
  return out;
}

}  // namespace qdp
