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

#include "pqrng/sim/acquisition.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pqrng {

namespace {

std::int64_t draw(Rng& rng, double mean, CountModel model) {
  if (model == CountModel::kExpected) return static_cast<std::int64_t>(std::llround(mean));
  return sample_poisson(rng, mean);
}

CoincidenceSample draw_sample(const std::array<double, 4>& means, Rng& rng, CountModel model,
                              int setting_index) {
  CoincidenceSample s;
  s.n_ab = draw(rng, means[0], model);
  s.n_apb = draw(rng, means[1], model);
  s.n_abp = draw(rng, means[2], model);
  s.n_apbp = draw(rng, means[3], model);
  s.setting_index = setting_index;
  return s;
}

void fill_block(const std::array<double, 4>& means, std::uint64_t seed, int block,
                CountModel model, std::span<CoincidenceSample> out) {
  Rng rng = derive_stream(seed, static_cast<std::uint64_t>(block));
  for (auto& s : out) s = draw_sample(means, rng, model, block);
}

// Analyzer eigenstates (+1 eigenvalue) for the local Pauli bases X, Y, Z.
Vector2c<double> pauli_plus_state(int which) {
  const double r = 1.0 / std::sqrt(2.0);
  Vector2c<double> v;
  switch (which) {
    case kX: v << r, r; break;
    case kY: v << std::complex<double>(r), std::complex<double>(0.0, r); break;
    case kZ: v << 1.0, 0.0; break;
    default: throw std::out_of_range("local basis must be X, Y or Z");
  }
  return v;
}

}  // namespace

std::array<double, 4> channel_means(const SourceConfig& config, const DensityMatrix& rho,
                                    const MeasurementSetting& setting) {
  const JointProbabilities p = joint_probs(rho, setting);
  const double scale = config.detected_pair_rate() * config.tau;
  const double acc = config.accidental_rate * config.tau;
  // Channel order AB, A'B, AB', A'B' maps to (+,+), (-,+), (+,-), (-,-).
  return {scale * p.p_pp + acc, scale * p.p_mp + acc, scale * p.p_pm + acc, scale * p.p_mm + acc};
}

CoincidenceSample sample_interval(const SourceConfig& config, const DensityMatrix& rho,
                                  const MeasurementSetting& setting, Rng& rng,
                                  int setting_index) {
  config.validate();
  return draw_sample(channel_means(config, rho, setting), rng, CountModel::kPoisson,
                     setting_index);
}

AcquisitionRecord run_chsh_acquisition(const SourceConfig& config, const DensityMatrix& rho,
                                       const ChshSettings& settings,
                                       std::size_t samples_per_setting,
                                       const AcquisitionOptions& options) {
  config.validate();
  if (samples_per_setting < 1) throw std::invalid_argument("samples_per_setting must be >= 1");

  AcquisitionRecord record;
  record.config = config;
  record.settings = settings;
  record.samples_per_setting = samples_per_setting;
  record.samples.resize(4 * samples_per_setting);

  std::array<std::array<double, 4>, 4> means;
  for (int k = 0; k < 4; ++k) means[k] = channel_means(config, rho, settings[k]);

  auto block_span = [&](int k) {
    return std::span<CoincidenceSample>(record.samples)
        .subspan(static_cast<std::size_t>(k) * samples_per_setting, samples_per_setting);
  };

  if (options.threads <= 1) {
    for (int k = 0; k < 4; ++k) fill_block(means[k], config.seed, k, options.model, block_span(k));
  } else {
    std::vector<std::jthread> workers;
    for (int k = 0; k < 4; ++k) {
      workers.emplace_back(
          [&, k] { fill_block(means[k], config.seed, k, options.model, block_span(k)); });
    }
  }
  return record;
}

PauliExpectations<double> run_tomography_acquisition(const SourceConfig& config,
                                                     const DensityMatrix& rho,
                                                     std::uint64_t n_events_target,
                                                     const TomographyOptions& options) {
  if (options.exact) return pauli_expectations(rho);
  config.validate();
  if (n_events_target < kMinTomographyEvents) {
    throw std::invalid_argument("tomography needs at least 100 target events");
  }

  const double per_basis = static_cast<double>(n_events_target) / 9.0;
  const double detected = config.detected_pair_rate();
  const double acc_per_outcome =
      detected > 0.0 ? per_basis * config.accidental_rate / detected : 0.0;

  // counts[a][b] = (n++, n+-, n-+, n--) for local bases a, b in {X, Y, Z}.
  std::array<std::array<std::array<std::int64_t, 4>, 3>, 3> counts{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      Rng rng = derive_stream(config.seed, 0x746f6d6fULL + static_cast<std::uint64_t>(3 * a + b));
      const JointProbabilities p = joint_probs(rho, pauli_plus_state(a + 1), pauli_plus_state(b + 1));
      counts[a][b] = {sample_poisson(rng, per_basis * p.p_pp + acc_per_outcome),
                      sample_poisson(rng, per_basis * p.p_pm + acc_per_outcome),
                      sample_poisson(rng, per_basis * p.p_mp + acc_per_outcome),
                      sample_poisson(rng, per_basis * p.p_mm + acc_per_outcome)};
    }
  }

  auto ratio = [](std::int64_t num, std::int64_t den) {
    return den > 0 ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
  };

  PauliExpectations<double> out{};
  out[0] = 1.0;
  for (int a = 0; a < 3; ++a) {
    std::int64_t a_num = 0, a_den = 0, b_num = 0, b_den = 0;
    for (int b = 0; b < 3; ++b) {
      const auto& c = counts[a][b];
      const std::int64_t total = c[0] + c[1] + c[2] + c[3];
      out[4 * (a + 1) + (b + 1)] = ratio(c[0] + c[3] - c[1] - c[2], total);
      a_num += c[0] + c[1] - c[2] - c[3];
      a_den += total;
      const auto& t = counts[b][a];  // photon B measured in basis a
      b_num += t[0] + t[2] - t[1] - t[3];
      b_den += t[0] + t[1] + t[2] + t[3];
    }
    out[4 * (a + 1)] = ratio(a_num, a_den);
    out[a + 1] = ratio(b_num, b_den);
  }
  return out;
}

}  // namespace pqrng
