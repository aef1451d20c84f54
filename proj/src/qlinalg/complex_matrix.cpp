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

#include "nmrsep/qlinalg/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "nmrsep/errors.hpp"
#include "nmrsep/kernels/kernels.hpp"

namespace nmrsep {
namespace {

std::size_t checked_dim(std::size_t dim) {
  if (dim == 0 || dim > tol::kMaxDim) {
    throw InvalidArgument("matrix dimension " + std::to_string(dim) + " outside 1.." +
                          std::to_string(tol::kMaxDim));
  }
  return dim;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(checked_dim(dim)), entries_(dim * dim, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(checked_dim(dim)), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw InvalidArgument("matrix of dim " + std::to_string(dim_) + " needs " +
                          std::to_string(dim_ * dim_) + " entries, got " +
                          std::to_string(entries_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(checked_dim(rows.size())) {
  entries_.reserve(dim_ * dim_);
  for (const auto& r : rows) {
    if (r.size() != dim_) throw InvalidArgument("matrix literal is not square");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::hermitian(ComplexMatrix m, std::string_view what) {
  const double err = m.hermiticity_error();
  if (!(err <= tol::kEquality)) {
    std::ostringstream os;
    os << what << " is not Hermitian: ||A - A^dagger||_max = " << err;
    throw ValidationError(os.str());
  }
  return m;
}

ComplexMatrix ComplexMatrix::unitary(ComplexMatrix m, std::string_view what) {
  const double err = m.unitarity_error();
  if (!(err <= tol::kValidation)) {
    std::ostringstream os;
    os << what << " is not unitary: ||U^dagger U - I||_max = " << err;
    throw ValidationError(os.str());
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(*this, other, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
  }
  return m;
}

double ComplexMatrix::hermiticity_error() const {
  double m = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return m;
}

double ComplexMatrix::unitarity_error() const {
  return (adjoint() * (*this)).max_abs_diff(identity(dim_));
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
  return hermiticity_error() <= tolerance;
}

bool ComplexMatrix::is_unitary(double tolerance) const { return unitarity_error() <= tolerance; }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  ComplexMatrix out(lhs.dim());
  kernels::gemm(lhs.data(), rhs.data(), out.data(), lhs.dim());
  return out;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "trace_of_product");
  const std::size_t n = a.dim();
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t += a(i, j) * b(j, i);
  }
  return t;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

}  // namespace nmrsep
