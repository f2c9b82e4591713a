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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

namespace pqrng {

template <typename Real>
using Matrix4c = Eigen::Matrix<std::complex<Real>, 4, 4>;
template <typename Real>
using Matrix2c = Eigen::Matrix<std::complex<Real>, 2, 2>;
template <typename Real>
using Vector4c = Eigen::Matrix<std::complex<Real>, 4, 1>;
template <typename Real>
using Vector2c = Eigen::Matrix<std::complex<Real>, 2, 1>;

// Two-photon basis ordering. Row/column k of every 4x4 operator refers to
// basis state k; the first letter is photon A.
enum Basis : int { kHH = 0, kHV = 1, kVH = 2, kVV = 3 };

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename Real>
Real hermiticity_defect(const Matrix4c<Real>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Real>
Real min_eigenvalue(const Matrix4c<Real>& m) {
  // Symmetrize so the solver sees an exactly Hermitian input.
  const Matrix4c<Real> h = (m + m.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<Matrix4c<Real>> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

/// Two-qubit polarization state. Always Hermitian, unit trace and positive
/// semidefinite; the only way to obtain one is through `from_matrix`, which
/// enforces those invariants.
template <typename Real = double>
class BasicDensityMatrix {
 public:
  using Scalar = std::complex<Real>;
  using MatrixType = Matrix4c<Real>;

  static BasicDensityMatrix from_matrix(const MatrixType& m) {
    if (!m.allFinite()) throw InvalidState("density matrix has non-finite entries");
    const Real herm = hermiticity_defect<Real>(m);
    if (herm > Real(kHermitianTolerance)) {
      throw InvalidState("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
    }
    const Scalar tr = m.trace();
    if (std::abs(tr - Scalar(1)) > Real(kTraceTolerance)) {
      throw InvalidState("density matrix trace differs from 1 (trace " +
                         std::to_string(tr.real()) + ")");
    }
    const Real lmin = pqrng::min_eigenvalue<Real>(m);
    if (lmin < -Real(kPsdTolerance)) {
      throw InvalidState("density matrix is not positive semidefinite (min eigenvalue " +
                         std::to_string(lmin) + ")");
    }
    return BasicDensityMatrix(m);
  }

  /// Projector onto a (not necessarily normalized) pure state.
  static BasicDensityMatrix from_ket(const Vector4c<Real>& ket) {
    const Real norm = ket.norm();
    if (!(norm > Real(0))) throw InvalidState("zero state vector");
    const Vector4c<Real> psi = ket / norm;
    MatrixType m = psi * psi.adjoint();
    return from_matrix(hermitize(m));
  }

  const MatrixType& matrix() const { return m_; }
  Scalar operator()(int row, int col) const { return m_(row, col); }
  Real min_eigenvalue() const { return pqrng::min_eigenvalue<Real>(m_); }
  Real purity() const { return (m_ * m_).trace().real(); }

 private:
  explicit BasicDensityMatrix(const MatrixType& m) : m_(m) {}

  static MatrixType hermitize(const MatrixType& m) {
    MatrixType h = (m + m.adjoint()) / Real(2);
    return h / h.trace();
  }

  MatrixType m_;
};

using DensityMatrix = BasicDensityMatrix<double>;

}  // namespace pqrng
