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

#ifndef NMRSEP_QLINALG_OPS_HPP
#define NMRSEP_QLINALG_OPS_HPP

#include "nmrsep/qlinalg/bipartition.hpp"
#include "nmrsep/qlinalg/complex_matrix.hpp"

namespace nmrsep {

/// Kronecker product: out((i*dB + k), (j*dB + l)) = A(i,j) * B(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out the side opposite to `keep`. The result is indexed by the kept
/// spins in ascending order. Throws InvalidArgument if rho.dim() != 2^N.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const Bipartition& part, Side keep);

/// Transposes the indices of the right-hand spins only.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const Bipartition& part);

/// sqrt(sum_ij |A_ij - B_ij|^2). Throws InvalidArgument on dimension mismatch.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace nmrsep

#endif  // NMRSEP_QLINALG_OPS_HPP
