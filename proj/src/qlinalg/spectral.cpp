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

#include "nmrsep/qlinalg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "nmrsep/errors.hpp"

namespace nmrsep {
namespace {

constexpr int kMaxSweeps = 64;

struct Rotation {
  double c;
  double s;
  Complex phase;  // e^{-i phi}
};

// Unitary G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] acting on (p, q) that
// diagonalizes the Hermitian block [[app, b], [conj(b), aqq]], b = |b| e^{i phi}.
Rotation jacobi_rotation(double app, double aqq, Complex b) {
  const double mag = std::abs(b);
  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  return {c, t * c, std::conj(b) / mag};
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& input) {
  ComplexMatrix a = ComplexMatrix::hermitian(input, "hermitian_eigenvalues input");
  const std::size_t n = a.dim();

  // Exact Hermitian working copy.
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  for (const Complex& e : a.data()) scale += std::norm(e);
  scale = std::sqrt(scale);

  auto off_norm = [&] {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += std::norm(a(i, j));
    }
    return std::sqrt(off);
  };

  for (int sweep = 0; sweep < kMaxSweeps && scale > 0.0; ++sweep) {
    if (off_norm() <= 1e-17 * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        if (std::abs(b) <= 1e-300) continue;
        const auto [c, s, phase] = jacobi_rotation(a(p, p).real(), a(q, q).real(), b);
        const Complex g_pp = c;
        const Complex g_pq = s;
        const Complex g_qp = -s * phase;
        const Complex g_qq = c * phase;
        // A <- A G (columns p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        // A <- G^dagger A (rows p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> singular_values(std::span<const Complex> entries, std::size_t rows,
                                    std::size_t cols) {
  if (rows == 0 || cols == 0 || entries.size() != rows * cols) {
    throw InvalidArgument("singular_values: buffer size does not match rows*cols");
  }
  // Columns of M, or of M^dagger when M is wide; singular values agree.
  const bool wide = cols > rows;
  const std::size_t len = wide ? cols : rows;
  const std::size_t count = wide ? rows : cols;
  std::vector<std::vector<Complex>> w(count, std::vector<Complex>(len));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Complex e = entries[r * cols + c];
      if (wide) {
        w[r][c] = std::conj(e);
      } else {
        w[c][r] = e;
      }
    }
  }

  auto dotc = [len](const std::vector<Complex>& x, const std::vector<Complex>& y) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < len; ++i) acc += std::conj(x[i]) * y[i];
    return acc;
  };

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < count; ++p) {
      for (std::size_t q = p + 1; q < count; ++q) {
        const double alpha = dotc(w[p], w[p]).real();
        const double beta = dotc(w[q], w[q]).real();
        const Complex gamma = dotc(w[p], w[q]);
        if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta) || std::abs(gamma) <= 1e-300) {
          continue;
        }
        rotated = true;
        const auto [c, s, phase] = jacobi_rotation(alpha, beta, gamma);
        for (std::size_t i = 0; i < len; ++i) {
          const Complex wp = w[p][i];
          const Complex wq = w[q][i];
          w[p][i] = c * wp - s * phase * wq;
          w[q][i] = s * wp + c * phase * wq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(count);
  for (std::size_t i = 0; i < count; ++i) sv[i] = std::sqrt(dotc(w[i], w[i]).real());
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace nmrsep
