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

#ifndef QDP_STATES_HPP_
#define QDP_STATES_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "qdp/eigh.hpp"
#include "qdp/matrix.hpp"

namespace qdp {

// Validation tolerances for density matrices.
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
// Relative threshold separating support from kernel: eigenvalues below
// kRankTolFactor * lambda_max are treated as zero everywhere.
inline constexpr double kRankTolFactor = 1e-12;
// Largest matrix dimension the tensor-power oracles will materialize.
inline constexpr std::size_t kOracleDimCap = 4096;

// A validated d x d density matrix: Hermitian (within kHermTol), PSD (within
// kPsdTol), unit trace (within kTraceTol). Stored symmetrized.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m);
  // Diagonal state from a probability vector.
  static DensityMatrix from_probabilities(const std::vector<double>& probs);

  std::size_t dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

// Trace of the positive part: sum of max(lambda_i, 0).
double positive_part_trace(const Matrix& h);

// U f(lambda) U^dagger. With on_support, f is applied only to eigenvalues
// above kRankTolFactor * lambda_max and the kernel maps to zero; without it,
// f must be finite on every eigenvalue or SingularInput is thrown.
Matrix matrix_function(const Matrix& psd, const std::function<double(double)>& f,
                       bool on_support);

// Kronecker power; throws DimCapExceeded when dim^n would exceed the cap.
Matrix tensor_power(const Matrix& m, unsigned n,
                    std::size_t dim_cap = kOracleDimCap);

// G G^dagger / tr(G G^dagger) with G a dim x rank matrix of standard complex
// Gaussians from a seeded generator. Same seed, same state.
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

// First two columns of a Haar-random unitary, as an orthonormal pure pair.
struct OrthonormalPair {
  std::vector<cplx> first;
  std::vector<cplx> second;
};
OrthonormalPair random_orthonormal_pair(std::size_t dim, std::uint64_t seed);

Matrix projector_onto(const std::vector<cplx>& column);
DensityMatrix pure_state(const std::vector<cplx>& column);

// Support data of a PSD matrix, shared by the divergences.
struct SupportInfo {
  EigenDecomposition eig;
  std::size_t rank = 0;
  double rank_threshold = 0.0;
};
SupportInfo support_info(const Matrix& psd);

// Weight of `rho` outside the support described by `info` (of another state):
// tr(rho) - tr(rho P_supp). Nonnegative up to rounding.
double support_leak(const Matrix& rho, const SupportInfo& info);

// Leak below which supp(rho) is considered contained in supp(sigma).
inline constexpr double kSupportLeakTol = 1e-10;

}  // namespace qdp

#endif  // QDP_STATES_HPP_
