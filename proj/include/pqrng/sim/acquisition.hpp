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
#include <cstdint>

#include "pqrng/quantum/density_matrix.hpp"
#include "pqrng/quantum/measurement.hpp"
#include "pqrng/quantum/tomography.hpp"
#include "pqrng/sim/random.hpp"
#include "pqrng/sim/record.hpp"

namespace pqrng {

enum class CountModel {
  kPoisson,   // independent Poisson draw per channel
  kExpected,  // mean counts rounded to integers (infinite-statistics limit)
};

struct AcquisitionOptions {
  CountModel model = CountModel::kPoisson;
  /// Setting blocks are independent streams and may be sampled concurrently;
  /// the record does not depend on this value.
  unsigned threads = 1;
};

/// Mean counts per interval for channels AB, A'B, AB', A'B':
/// pair_rate * eta_a * eta_b * p(a,b) * tau + accidental_rate * tau.
std::array<double, 4> channel_means(const SourceConfig& config, const DensityMatrix& rho,
                                    const MeasurementSetting& setting);

CoincidenceSample sample_interval(const SourceConfig& config, const DensityMatrix& rho,
                                  const MeasurementSetting& setting, Rng& rng,
                                  int setting_index = 0);

/// Takes `samples_per_setting` intervals at each CHSH setting in turn, with
/// block k drawn from stream derive_stream(config.seed, k).
AcquisitionRecord run_chsh_acquisition(const SourceConfig& config, const DensityMatrix& rho,
                                       const ChshSettings& settings,
                                       std::size_t samples_per_setting,
                                       const AcquisitionOptions& options = {});

struct TomographyOptions {
  /// Return exact expectations instead of sampling counts.
  bool exact = false;
};

inline constexpr std::uint64_t kMinTomographyEvents = 100;

/// Simulated two-photon tomography. Each of the nine local Pauli bases
/// {X,Y,Z} x {X,Y,Z} receives n_events_target/9 expected coincidences,
/// split over the four outcomes as Poisson counts. Correlators come from
/// their own basis; single-photon expectations pool the three bases that
/// share the relevant local setting. Y-basis projections assume a circular
/// polarization analyzer on that arm.
PauliExpectations<double> run_tomography_acquisition(const SourceConfig& config,
                                                     const DensityMatrix& rho,
                                                     std::uint64_t n_events_target,
                                                     const TomographyOptions& options = {});

}  // namespace pqrng
