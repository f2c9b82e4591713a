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

#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "pqrng/quantum/density_matrix.hpp"

namespace pqrng {

/// Square root of a Hermitian PSD matrix by eigendecomposition. Eigenvalues
/// below a relative cutoff of 64 ulp of the largest are treated as exactly
/// zero, so the null space of a rank-deficient input stays clean.
template <typename Derived>
auto sqrt_psd(const Eigen::MatrixBase<Derived>& m) {
  using MatrixType = typename Derived::PlainObject;
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const MatrixType h = (m + m.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<MatrixType> solver(h);
  const auto& ev = solver.eigenvalues();
  const Real cutoff = Real(64) * std::numeric_limits<Real>::epsilon() * std::max(Real(0), ev.maxCoeff());
  const auto root = ev.unaryExpr([cutoff](Real x) { return x > cutoff ? std::sqrt(x) : Real(0); }).eval();
  return MatrixType(solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().adjoint());
}

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, evaluated as the
/// squared trace norm of sqrt(rho) sqrt(sigma).
template <typename Real>
Real fidelity(const BasicDensityMatrix<Real>& rho, const BasicDensityMatrix<Real>& sigma) {
  const Matrix4c<Real> product = sqrt_psd(rho.matrix()) * sqrt_psd(sigma.matrix());
  Eigen::JacobiSVD<Matrix4c<Real>> svd(product);
  const Real tr = svd.singularValues().sum();
  return std::min(Real(1), tr * tr);
}

}  // namespace pqrng
