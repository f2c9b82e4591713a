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
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pqrng/quantum/measurement.hpp"

namespace pqrng {

/// Parameters of the simulated photon-pair source and counting schedule.
struct SourceConfig {
  double pair_rate = 0.0;        // generated pairs per second
  double eta_a = 0.0;            // detection efficiency, arm A
  double eta_b = 0.0;            // detection efficiency, arm B
  double accidental_rate = 0.0;  // accidental coincidences per second per channel
  double tau = 0.2;              // counting interval [s]
  double lag = 0.1;              // dead period between intervals [s]
  std::uint64_t seed = 0;

  static constexpr double kDetectedPairRate = 7500.0;
  static constexpr double kEfficiency = 0.30;
  static constexpr std::uint64_t kDefaultSeed = 42;

  /// 30% efficient detectors, 7500 detected pairs/s (about 1500 coincidences
  /// per 0.2 s interval), no accidentals, 0.1 s lag.
  static SourceConfig defaults() {
    SourceConfig c;
    c.eta_a = kEfficiency;
    c.eta_b = kEfficiency;
    c.pair_rate = kDetectedPairRate / (kEfficiency * kEfficiency);
    c.seed = kDefaultSeed;
    return c;
  }

  double detected_pair_rate() const { return pair_rate * eta_a * eta_b; }

  void validate() const {
    if (!(pair_rate >= 0.0) || !std::isfinite(pair_rate)) throw std::invalid_argument("pair_rate must be >= 0");
    if (!(eta_a >= 0.0 && eta_a <= 1.0)) throw std::invalid_argument("eta_a must lie in [0, 1]");
    if (!(eta_b >= 0.0 && eta_b <= 1.0)) throw std::invalid_argument("eta_b must lie in [0, 1]");
    if (!(accidental_rate >= 0.0) || !std::isfinite(accidental_rate)) {
      throw std::invalid_argument("accidental_rate must be >= 0");
    }
    if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("tau must be > 0");
    if (!(lag >= 0.0) || !std::isfinite(lag)) throw std::invalid_argument("lag must be >= 0");
  }

  friend bool operator==(const SourceConfig&, const SourceConfig&) = default;
};

/// Coincidence counts of one counting interval, channels AB, A'B, AB', A'B'.
struct CoincidenceSample {
  std::int64_t n_ab = 0;
  std::int64_t n_apb = 0;
  std::int64_t n_abp = 0;
  std::int64_t n_apbp = 0;
  int setting_index = 0;

  std::int64_t total() const { return n_ab + n_apb + n_abp + n_apbp; }
  friend bool operator==(const CoincidenceSample&, const CoincidenceSample&) = default;
};

/// Samples in acquisition order: every sample of setting 0, then setting 1,
/// and so on. No interleaving.
struct AcquisitionRecord {
  SourceConfig config;
  ChshSettings settings = ChshSettings::canonical();
  std::size_t samples_per_setting = 0;
  std::vector<CoincidenceSample> samples;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double elapsed_seconds() const {
    return static_cast<double>(samples.size()) * (config.tau + config.lag);
  }
  std::int64_t total_events() const {
    std::int64_t n = 0;
    for (const auto& s : samples) n += s.total();
    return n;
  }

  friend bool operator==(const AcquisitionRecord&, const AcquisitionRecord&) = default;
};

}  // namespace pqrng
