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

#include "qdp/states.hpp"

#include <cmath>
#include <random>
#include <string>

namespace qdp {

DensityMatrix::DensityMatrix(const Matrix& m) {
  if (!m.square())
    throw Error(ErrorKind::kValidationError, "density matrix must be square");
  if (m.rows() == 0)
    throw Error(ErrorKind::kValidationError, "density matrix must be nonempty");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        throw Error(ErrorKind::kValidationError,
                    "density matrix has non-finite entries");
  const double herm = m.hermiticity_residual();
  if (!(herm <= kHermTol))
    throw Error(ErrorKind::kValidationError,
                "hermiticity residual " + std::to_string(herm));
  const double trace_resid = std::abs(m.trace() - cplx(1.0));
  if (!(trace_resid <= kTraceTol))
    throw Error(ErrorKind::kValidationError,
                "trace residual " + std::to_string(trace_resid));
  matrix_ = m.symmetrized();
  const std::vector<double> evals = eigvalsh(matrix_);
  const double min_eval = evals.empty() ? 0.0 : evals.back();
  if (min_eval < -kPsdTol)
    throw Error(ErrorKind::kValidationError,
                "negative eigenvalue " + std::to_string(min_eval));
}

DensityMatrix DensityMatrix::from_probabilities(const std::vector<double>& probs) {
  return DensityMatrix(Matrix::diag(probs));
}

double positive_part_trace(const Matrix& h) {
  double total = 0.0;
  for (double v : eigvalsh(h))
    if (v > 0.0) total += v;
  return total;
}

Matrix matrix_function(const Matrix& psd, const std::function<double(double)>& f,
                       bool on_support) {
  const EigenDecomposition eig = eigh(psd);
  const std::size_t n = eig.eigenvalues.size();
  const double lmax = n == 0 ? 0.0 : std::max(eig.eigenvalues.front(), 0.0);
  const double threshold = kRankTolFactor * lmax;
  std::vector<double> mapped(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = eig.eigenvalues[i];
    if (on_support) {
      if (lambda > threshold) mapped[i] = f(lambda);
    } else {
      mapped[i] = f(std::max(lambda, 0.0));
      if (!std::isfinite(mapped[i]))
        throw Error(ErrorKind::kSingularInput,
                    "matrix_function: f not finite at eigenvalue " +
                        std::to_string(lambda));
    }
  }
  // U diag(f) U^dagger
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += eig.eigenvectors(i, k) * mapped[k] *
               std::conj(eig.eigenvectors(j, k));
      out(i, j) = acc;
    }
  }
  return out;
}

Matrix tensor_power(const Matrix& m, unsigned n, std::size_t dim_cap) {
  if (n == 0)
    throw Error(ErrorKind::kRangeViolation, "tensor_power: n must be positive");
  double required = 1.0;
  for (unsigned i = 0; i < n; ++i) required *= static_cast<double>(m.rows());
  if (required > static_cast<double>(dim_cap))
    throw Error(ErrorKind::kDimCapExceeded,
                "tensor_power: dimension " + std::to_string(required) +
                    " exceeds cap " + std::to_string(dim_cap));
  Matrix out = m;
  for (unsigned i = 1; i < n; ++i) out = kron(out, m);
  return out;
}

namespace {

std::vector<cplx> gaussian_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v[i] = cplx(re, im);
  }
  return v;
}

}  // namespace

DensityMatrix random_density(std::size_t dim, std::size_t rank,
                             std::uint64_t seed) {
  if (rank == 0 || rank > dim)
    throw Error(ErrorKind::kRangeViolation,
                "random_density: need 1 <= rank <= dim");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  Matrix gg = matmul(g, g.adjoint());
  const double tr = gg.trace().real();
  gg *= cplx(1.0 / tr);
  return DensityMatrix(gg.symmetrized());
}

OrthonormalPair random_orthonormal_pair(std::size_t dim, std::uint64_t seed) {
  if (dim < 2)
    throw Error(ErrorKind::kRangeViolation,
                "random_orthonormal_pair: need dim >= 2");
  std::mt19937_64 rng(seed);
  OrthonormalPair pair;
  pair.first = gaussian_vector(rng, dim);
  pair.second = gaussian_vector(rng, dim);
  double n1 = 0.0;
  for (const cplx& v : pair.first) n1 += std::norm(v);
  n1 = std::sqrt(n1);
  for (cplx& v : pair.first) v /= n1;
  cplx overlap = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    overlap += std::conj(pair.first[i]) * pair.second[i];
  for (std::size_t i = 0; i < dim; ++i) pair.second[i] -= overlap * pair.first[i];
  double n2 = 0.0;
  for (const cplx& v : pair.second) n2 += std::norm(v);
  n2 = std::sqrt(n2);
  for (cplx& v : pair.second) v /= n2;
  return pair;
}

Matrix projector_onto(const std::vector<cplx>& column) {
  Matrix p(column.size(), column.size());
  for (std::size_t i = 0; i < column.size(); ++i)
    for (std::size_t j = 0; j < column.size(); ++j)
      p(i, j) = column[i] * std::conj(column[j]);
  return p;
}

DensityMatrix pure_state(const std::vector<cplx>& column) {
  return DensityMatrix(projector_onto(column));
}

SupportInfo support_info(const Matrix& psd) {
  SupportInfo info;
  info.eig = eigh(psd);
  const double lmax =
      info.eig.eigenvalues.empty() ? 0.0 : std::max(info.eig.eigenvalues[0], 0.0);
  info.rank_threshold = kRankTolFactor * lmax;
  info.rank = 0;
  for (double v : info.eig.eigenvalues)
    if (v > info.rank_threshold) ++info.rank;
  return info;
}

double support_leak(const Matrix& rho, const SupportInfo& info) {
  // tr(rho) - sum over support vectors of <u|rho|u>
  const std::size_t n = rho.rows();
  double on_support = 0.0;
  for (std::size_t k = 0; k < info.rank; ++k) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx row = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        row += rho(i, j) * info.eig.eigenvectors(j, k);
      acc += std::conj(info.eig.eigenvectors(i, k)) * row;
    }
    on_support += acc.real();
  }
  return rho.trace().real() - on_support;
}

}  // namespace qdp
