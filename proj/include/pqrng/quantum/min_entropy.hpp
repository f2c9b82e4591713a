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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string_view>

#include "pqrng/quantum/density_matrix.hpp"

namespace pqrng {

enum class EntropyMethod { kTomography, kChsh };

constexpr std::string_view to_string(EntropyMethod m) {
  return m == EntropyMethod::kTomography ? "tomography" : "chsh";
}

/// Lower bound on the source min-entropy in bits per coincidence event.
/// `total` is per_event times the number of events it was derived from
/// (zero when no event count applies).
template <typename Real = double>
struct BasicMinEntropyBound {
  Real per_event = 0;
  EntropyMethod method = EntropyMethod::kTomography;
  Real total = 0;
};

using MinEntropyBound = BasicMinEntropyBound<double>;

/// The HH/VV block of a two-photon state, renormalized to unit trace, and
/// the magnitude of its off-diagonal element.
template <typename Real = double>
struct BasicSubspaceCoherence {
  Matrix2c<Real> rho_sub;
  Real c = 0;
};

using SubspaceCoherence = BasicSubspaceCoherence<double>;

inline constexpr double kCoherenceClampTolerance = 1e-9;

template <typename Real>
BasicSubspaceCoherence<Real> subspace_restrict(const BasicDensityMatrix<Real>& rho) {
  const Real weight = rho(kHH, kHH).real() + rho(kVV, kVV).real();
  if (!(weight > Real(0))) throw std::invalid_argument("state has no weight in the HH/VV subspace");
  BasicSubspaceCoherence<Real> out;
  out.rho_sub << rho(kHH, kHH), rho(kHH, kVV), rho(kVV, kHH), rho(kVV, kVV);
  out.rho_sub /= weight;
  out.c = std::min(std::abs(out.rho_sub(0, 1)), Real(0.5));
  return out;
}

/// -log2((1 + sqrt(1 - 4 C^2)) / 2) for the subspace coherence magnitude C.
template <typename Real>
BasicMinEntropyBound<Real> min_entropy_tomography(Real c) {
  if (!(c >= Real(0)) || c > Real(0.5) + Real(kCoherenceClampTolerance)) {
    throw std::invalid_argument("coherence magnitude must lie in [0, 0.5]");
  }
  c = std::min(c, Real(0.5));
  const Real h = -std::log2((Real(1) + std::sqrt(std::max(Real(0), Real(1) - 4 * c * c))) / 2);
  return {std::clamp(h, Real(0), Real(1)), EntropyMethod::kTomography, Real(0)};
}

inline constexpr double kTsirelsonTolerance = 1e-9;

/// N [1 - log2(1 + sqrt(2 - S^2/4))] for S >= 2; zero below the classical
/// bound.
template <typename Real>
BasicMinEntropyBound<Real> min_entropy_chsh(Real s, std::uint64_t n_events = 0) {
  const Real tsirelson = Real(2) * std::numbers::sqrt2_v<Real>;
  if (std::isnan(s) || s > tsirelson + Real(kTsirelsonTolerance)) {
    throw std::invalid_argument("CHSH value exceeds the Tsirelson bound");
  }
  if (s <= Real(2)) return {Real(0), EntropyMethod::kChsh, Real(0)};
  const Real radicand = std::max(Real(0), Real(2) - s * s / Real(4));
  const Real per = std::clamp(Real(1) - std::log2(Real(1) + std::sqrt(radicand)), Real(0), Real(1));
  return {per, EntropyMethod::kChsh, per * static_cast<Real>(n_events)};
}

}  // namespace pqrng
