// Copyright 2026 The nmrsep Authors
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

#ifndef NMRSEP_QLINALG_COMPLEX_MATRIX_HPP
#define NMRSEP_QLINALG_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "nmrsep/tolerances.hpp"

namespace nmrsep {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Dimension is 1..tol::kMaxDim.
class ComplexMatrix {
 public:
  /// Zero matrix.
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  /// Returns `m` unchanged after checking ||m - m^dagger||_max <= tol::kEquality.
  /// Throws ValidationError otherwise.
  static ComplexMatrix hermitian(ComplexMatrix m, std::string_view what = "matrix");
  /// Returns `m` unchanged after checking ||m^dagger m - I||_max <= tol::kValidation.
  static ComplexMatrix unitary(ComplexMatrix m, std::string_view what = "matrix");

  std::size_t dim() const noexcept { return dim_; }

  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  std::span<const Complex> data() const noexcept { return entries_; }
  std::span<Complex> data() noexcept { return entries_; }
  std::span<const Complex> row(std::size_t r) const {
    return std::span<const Complex>(entries_).subspan(r * dim_, dim_);
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  /// max_ij |A_ij - B_ij|. Throws InvalidArgument on dimension mismatch.
  double max_abs_diff(const ComplexMatrix& other) const;
  double hermiticity_error() const;
  double unitarity_error() const;
  bool is_hermitian(double tolerance = tol::kEquality) const;
  bool is_unitary(double tolerance = tol::kValidation) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Tr(A * B) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Commutator A*B - B*A.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace nmrsep

#endif  // NMRSEP_QLINALG_COMPLEX_MATRIX_HPP
