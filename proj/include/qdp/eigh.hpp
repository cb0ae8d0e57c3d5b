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

#ifndef QDP_EIGH_HPP_
#define QDP_EIGH_HPP_

#include <vector>

#include "qdp/matrix.hpp"

namespace qdp {

// Hermiticity tolerance for all eigensolver entry points (max-entry residual).
inline constexpr double kHermTol = 1e-10;

// Above this dimension the solver switches from cyclic Jacobi to Householder
// tridiagonalization + implicit QL. Jacobi is the reference implementation:
// unconditionally convergent and dependency-free, but its per-sweep cost makes
// it impractical at the tensor-power dimensions (up to 4096).
inline constexpr std::size_t kJacobiMaxDim = 64;

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // sorted descending
  Matrix eigenvectors;              // columns, unitary
};

// Spectral decomposition of a Hermitian matrix. Throws NonHermitian if the
// max-entry residual exceeds kHermTol; the input is symmetrized afterwards so
// rounding drift cannot leak into the spectrum. Deterministic for fixed input.
EigenDecomposition eigh(const Matrix& h);

// Eigenvalues only (descending); skips eigenvector accumulation.
std::vector<double> eigvalsh(const Matrix& h);

// Exposed for cross-validation tests and the benchmark: both paths on any dim.
EigenDecomposition eigh_jacobi(const Matrix& h, bool want_vectors = true);
EigenDecomposition eigh_tridiagonal_ql(const Matrix& h, bool want_vectors = true);

}  // namespace qdp

#endif  // QDP_EIGH_HPP_
