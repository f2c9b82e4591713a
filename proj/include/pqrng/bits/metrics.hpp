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

#include <cstdint>

#include "pqrng/bits/bit_sequence.hpp"
#include "pqrng/sim/record.hpp"

namespace pqrng {

/// |p0 - 0.5|.
double bias(const BitSequence& seq);

/// Order-0 Shannon entropy of the byte symbols (MSB-first, trailing partial
/// byte dropped), divided by 8. Needs at least 8 bits.
double information_density(const BitSequence& seq);

struct ThroughputReport {
  std::size_t n_samples = 0;
  double tau = 0.0;
  double lag = 0.0;
  std::size_t bits_emitted = 0;
  double rate = 0.0;  // bits per second

  double total_seconds() const { return static_cast<double>(n_samples) * (tau + lag); }
};

ThroughputReport throughput(std::size_t n_samples, double tau, double lag, std::size_t bits_emitted);

/// The sequence must have been built from the record (one or four bits per
/// sample).
ThroughputReport throughput(const AcquisitionRecord& record, const BitSequence& seq);

}  // namespace pqrng
