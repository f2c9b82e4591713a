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
#include <array>
#include <cmath>
#include <stdexcept>

#include "pqrng/quantum/density_matrix.hpp"
#include "pqrng/quantum/states.hpp"

namespace pqrng {

/// Wraps an analyzer angle into [0, 180). A linear polarizer at theta and
/// theta + 180 degrees is the same device.
template <typename Real>
Real normalize_angle_deg(Real deg) {
  if (!std::isfinite(deg)) throw std::invalid_argument("analyzer angle must be finite");
  Real r = std::fmod(deg, Real(180));
  if (r < Real(0)) r += Real(180);
  if (r >= Real(180)) r -= Real(180);
  return r;
}

/// Pair of linear-polarization analyzer angles in degrees.
struct MeasurementSetting {
  double theta_a = 0.0;
  double theta_b = 0.0;

  MeasurementSetting() = default;
  MeasurementSetting(double a_deg, double b_deg)
      : theta_a(normalize_angle_deg(a_deg)), theta_b(normalize_angle_deg(b_deg)) {}

  friend bool operator==(const MeasurementSetting&, const MeasurementSetting&) = default;
};

/// The four CHSH settings in the order (A1,B1), (A1,B2), (A2,B1), (A2,B2).
struct ChshSettings {
  std::array<MeasurementSetting, 4> settings;

  /// A1 = 0, A2 = 45, B1 = +22.5, B2 = -22.5 degrees: maximal S for Phi+.
  static ChshSettings canonical() { return from_angles(0.0, 45.0, 22.5, -22.5); }

  static ChshSettings from_angles(double a1, double a2, double b1, double b2) {
    return ChshSettings{{MeasurementSetting(a1, b1), MeasurementSetting(a1, b2),
                         MeasurementSetting(a2, b1), MeasurementSetting(a2, b2)}};
  }

  const MeasurementSetting& operator[](std::size_t i) const { return settings.at(i); }
  friend bool operator==(const ChshSettings&, const ChshSettings&) = default;
};

/// Joint outcome probabilities. '+' is the transmitted port (A or B), '-' the
/// reflected port (A' or B').
template <typename Real = double>
struct BasicJointProbabilities {
  Real p_pp = 0;
  Real p_pm = 0;
  Real p_mp = 0;
  Real p_mm = 0;

  Real sum() const { return p_pp + p_pm + p_mp + p_mm; }
  Real correlation() const { return p_pp + p_mm - p_pm - p_mp; }
};

using JointProbabilities = BasicJointProbabilities<double>;

/// Transmitted-port Jones vector cos(theta)|H> + sin(theta)|V>.
template <typename Real>
Vector2c<Real> linear_analyzer(Real theta_deg) {
  const Real t = degrees_to_radians(theta_deg);
  Vector2c<Real> v;
  v << std::cos(t), std::sin(t);
  return v;
}

/// The state orthogonal to a single-photon analyzer state.
template <typename Real>
Vector2c<Real> orthogonal_complement(const Vector2c<Real>& v) {
  Vector2c<Real> w;
  w << -std::conj(v(1)), std::conj(v(0));
  return w;
}

template <typename Real>
Vector4c<Real> kron(const Vector2c<Real>& a, const Vector2c<Real>& b) {
  Vector4c<Real> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(2 * i + j) = a(i) * b(j);
  return out;
}

template <typename Real>
Real expectation_real(const BasicDensityMatrix<Real>& rho, const Vector4c<Real>& ket) {
  const std::complex<Real> v = ket.dot(rho.matrix() * ket);
  return std::clamp(v.real(), Real(0), Real(1));
}

/// Outcome probabilities for projective analyzers whose transmitted ports
/// are the (normalized) single-photon states `a` and `b`.
template <typename Real>
BasicJointProbabilities<Real> joint_probs(const BasicDensityMatrix<Real>& rho,
                                          const Vector2c<Real>& a, const Vector2c<Real>& b) {
  const Vector2c<Real> a_perp = orthogonal_complement(a);
  const Vector2c<Real> b_perp = orthogonal_complement(b);
  return {expectation_real(rho, kron(a, b)), expectation_real(rho, kron(a, b_perp)),
          expectation_real(rho, kron(a_perp, b)), expectation_real(rho, kron(a_perp, b_perp))};
}

template <typename Real>
BasicJointProbabilities<Real> joint_probs(const BasicDensityMatrix<Real>& rho,
                                          const MeasurementSetting& setting) {
  return joint_probs(rho, linear_analyzer<Real>(Real(setting.theta_a)),
                     linear_analyzer<Real>(Real(setting.theta_b)));
}

template <typename Real>
Real correlation(const BasicDensityMatrix<Real>& rho, const MeasurementSetting& setting) {
  return joint_probs(rho, setting).correlation();
}

/// S = E11 + E12 + E21 - E22.
template <typename Real>
Real chsh_s(const BasicDensityMatrix<Real>& rho,
            const ChshSettings& settings = ChshSettings::canonical()) {
  return correlation(rho, settings[0]) + correlation(rho, settings[1]) +
         correlation(rho, settings[2]) - correlation(rho, settings[3]);
}

}  // namespace pqrng
