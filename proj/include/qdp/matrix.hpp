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

#ifndef QDP_MATRIX_HPP_
#define QDP_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdp {

using cplx = std::complex<double>;

enum class ErrorKind {
  kNonHermitian,
  kNoConvergence,
  kSingularInput,
  kDimCapExceeded,
  kDimensionMismatch,
  kAlphaOutOfRange,
  kQuadratureFailure,
  kRangeViolation,
  kParseError,
  kValidationError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

// Dense row-major complex matrix. Square in almost all uses; Kraus operators
// of dimension-changing channels are the one rectangular case.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t d);
  static Matrix diag(const std::vector<double>& entries);
  static Matrix diag_complex(const std::vector<cplx>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  Matrix adjoint() const;
  cplx trace() const;
  double max_abs() const;
  // max_ij |M_ij - conj(M_ji)|, the hermiticity residual used by validation.
  double hermiticity_residual() const;
  // (M + M^dagger)/2
  Matrix symmetrized() const;
  double frobenius_norm() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(cplx scale);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(cplx scale, Matrix m) { return m *= scale; }
  friend Matrix operator*(Matrix m, cplx scale) { return m *= scale; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
// a * b * a^dagger, the conjugation pattern of channel application.
Matrix conjugate_with(const Matrix& a, const Matrix& b);
// Kronecker product; parallelized for large outputs.
Matrix kron(const Matrix& a, const Matrix& b);

void require_same_shape(const Matrix& a, const Matrix& b, const char* where);

}  // namespace qdp

#endif  // QDP_MATRIX_HPP_
