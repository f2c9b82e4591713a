// Copyright 2026 The pqrng Authors
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

#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>

#include "pqrng/quantum/density_matrix.hpp"

namespace pqrng {

// Expectation values <sigma_i (x) sigma_j> are stored at index 4*i + j with
// i, j in {I, X, Y, Z}; i acts on photon A.
enum Pauli : int { kI = 0, kX = 1, kY = 2, kZ = 3 };

template <typename Real = double>
using PauliExpectations = std::array<Real, 16>;

template <typename Real>
Matrix2c<Real> pauli(int which) {
  using C = std::complex<Real>;
  Matrix2c<Real> m;
  switch (which) {
    case kI: m << C(1), C(0), C(0), C(1); break;
    case kX: m << C(0), C(1), C(1), C(0); break;
    case kY: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case kZ: m << C(1), C(0), C(0), C(-1); break;
    default: throw std::out_of_range("Pauli index must be 0..3");
  }
  return m;
}

template <typename Real>
Matrix4c<Real> pauli_product(int i, int j) {
  Matrix4c<Real> out;
  const Matrix2c<Real> a = pauli<Real>(i);
  const Matrix2c<Real> b = pauli<Real>(j);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.template block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
  return out;
}

/// Exact Tr[rho (sigma_i (x) sigma_j)] for all 16 pairs.
template <typename Real>
PauliExpectations<Real> pauli_expectations(const BasicDensityMatrix<Real>& rho) {
  PauliExpectations<Real> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out[4 * i + j] = (rho.matrix() * pauli_product<Real>(i, j)).trace().real();
  return out;
}

template <typename Real = double>
struct BasicTomographyResult {
  BasicDensityMatrix<Real> rho;
  /// Total weight of negative eigenvalues removed from the linear inversion
  /// estimate; zero when the estimate was already physical.
  Real clipped_weight = 0;
};

using TomographyResult = BasicTomographyResult<double>;

inline constexpr double kTomographyNormTolerance = 1e-6;

/// Linear inversion rho = (1/4) sum_ij <sigma_i sigma_j> sigma_i (x) sigma_j.
/// Negative eigenvalues of the estimate are clipped at zero and the result is
/// renormalized.
template <typename Real>
BasicTomographyResult<Real> tomo_reconstruct(std::span<const Real, 16> expectations) {
  const Real norm = expectations[0];
  if (std::abs(norm - Real(1)) > Real(kTomographyNormTolerance)) {
    throw std::invalid_argument("<I (x) I> must equal 1");
  }
  for (Real e : expectations) {
    if (!std::isfinite(e) || std::abs(e) > Real(1) + Real(kTomographyNormTolerance)) {
      throw std::invalid_argument("Pauli expectation outside [-1, 1]");
    }
  }
  Matrix4c<Real> m = Matrix4c<Real>::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m += expectations[4 * i + j] * pauli_product<Real>(i, j);
  m /= Real(4) * norm;
  m = (m + m.adjoint().eval()) / Real(2);

  Eigen::SelfAdjointEigenSolver<Matrix4c<Real>> solver(m);
  const auto& vals = solver.eigenvalues();
  Real clipped = 0;
  for (int k = 0; k < 4; ++k) clipped += std::max(Real(0), -vals(k));
  if (clipped > Real(0)) {
    const auto kept = vals.cwiseMax(Real(0));
    m = solver.eigenvectors() * kept.asDiagonal() * solver.eigenvectors().adjoint();
    m = (m + m.adjoint().eval()) / Real(2);
  }
  m /= m.trace();
  return {BasicDensityMatrix<Real>::from_matrix(m), clipped};
}

template <typename Real>
BasicTomographyResult<Real> tomo_reconstruct(const PauliExpectations<Real>& expectations) {
  return tomo_reconstruct<Real>(std::span<const Real, 16>(expectations));
}

}  // namespace pqrng
