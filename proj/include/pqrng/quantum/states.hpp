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
#include <numbers>
#include <span>
#include <stdexcept>

#include "pqrng/quantum/density_matrix.hpp"

namespace pqrng {

template <typename Real>
Real degrees_to_radians(Real deg) {
  return deg * std::numbers::pi_v<Real> / Real(180);
}

/// (|HH> + e^{i phase}|VV>)/sqrt(2). Phase 0 is the Bell state Phi+.
template <typename Real = double>
BasicDensityMatrix<Real> bell_phi_plus(Real phase_deg = Real(0)) {
  if (!std::isfinite(phase_deg)) throw std::invalid_argument("phase must be finite");
  const Real amp = Real(1) / std::sqrt(Real(2));
  Vector4c<Real> ket = Vector4c<Real>::Zero();
  ket(kHH) = amp;
  ket(kVV) = std::polar(amp, degrees_to_radians(phase_deg));
  return BasicDensityMatrix<Real>::from_ket(ket);
}

template <typename Real = double>
BasicDensityMatrix<Real> maximally_mixed() {
  return BasicDensityMatrix<Real>::from_matrix(Matrix4c<Real>::Identity() / Real(4));
}

/// Isotropic-noise model V * Phi+ + (1 - V) * I/4.
template <typename Real = double>
BasicDensityMatrix<Real> werner(Real visibility) {
  if (!(visibility >= Real(0) && visibility <= Real(1))) {
    throw std::invalid_argument("Werner visibility must lie in [0, 1]");
  }
  const Matrix4c<Real> m = visibility * bell_phi_plus<Real>().matrix() +
                           (Real(1) - visibility) * Matrix4c<Real>::Identity() / Real(4);
  return BasicDensityMatrix<Real>::from_matrix(m);
}

/// Convex combination sum_k w_k rho_k. Weights must be nonnegative; they are
/// normalized to sum to one.
template <typename Real = double>
BasicDensityMatrix<Real> mixture(std::span<const BasicDensityMatrix<Real>> states,
                                 std::span<const Real> weights) {
  if (states.empty() || states.size() != weights.size()) {
    throw std::invalid_argument("mixture needs one weight per state");
  }
  Real total = 0;
  Matrix4c<Real> m = Matrix4c<Real>::Zero();
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (!(weights[k] >= Real(0))) throw std::invalid_argument("mixture weights must be >= 0");
    m += weights[k] * states[k].matrix();
    total += weights[k];
  }
  if (!(total > Real(0))) throw std::invalid_argument("mixture weights sum to zero");
  m /= total;
  m = (m + m.adjoint().eval()) / Real(2);
  return BasicDensityMatrix<Real>::from_matrix(m / m.trace());
}

}  // namespace pqrng
