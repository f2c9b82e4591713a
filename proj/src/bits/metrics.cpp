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

#include "pqrng/bits/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace pqrng {

double bias(const BitSequence& seq) {
  if (seq.empty()) throw std::invalid_argument("bias of an empty sequence");
  const double p0 = static_cast<double>(seq.size() - seq.count_ones()) / static_cast<double>(seq.size());
  return std::fabs(p0 - 0.5);
}

double information_density(const BitSequence& seq) {
  const std::size_t n_bytes = seq.size() / 8;
  if (n_bytes == 0) throw std::invalid_argument("information density needs at least 8 bits");
  std::array<std::size_t, 256> freq{};
  const auto bits = seq.bits();
  for (std::size_t i = 0; i < n_bytes; ++i) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 8; ++b) v = (v << 1) | bits[8 * i + b];
    ++freq[v];
  }
  double h = 0.0;
  for (std::size_t f : freq) {
    if (f == 0) continue;
    const double p = static_cast<double>(f) / static_cast<double>(n_bytes);
    h -= p * std::log2(p);
  }
  return std::clamp(h / 8.0, 0.0, 1.0);
}

ThroughputReport throughput(std::size_t n_samples, double tau, double lag, std::size_t bits_emitted) {
  if (n_samples == 0) throw std::invalid_argument("throughput needs at least one sample");
  if (!(tau > 0.0) || !(lag >= 0.0)) throw std::invalid_argument("tau must be > 0 and lag >= 0");
  ThroughputReport r{n_samples, tau, lag, bits_emitted, 0.0};
  r.rate = static_cast<double>(bits_emitted) / r.total_seconds();
  return r;
}

ThroughputReport throughput(const AcquisitionRecord& record, const BitSequence& seq) {
  const std::size_t n = record.size();
  if (seq.size() != n && seq.size() != 4 * n) {
    throw std::invalid_argument("bit sequence length does not match the record");
  }
  return throughput(n, record.config.tau, record.config.lag, seq.size());
}

}  // namespace pqrng
