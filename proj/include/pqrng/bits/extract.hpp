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

/// Least significant bit of a coincidence count.
std::uint8_t parity_bit(std::int64_t count);

/// One bit per sample: parity of N(AB), in acquisition order.
BitSequence build_x1(const AcquisitionRecord& record);

/// Four bits per sample: parities of N(AB), N(A'B), N(AB'), N(A'B') in that
/// order, samples in acquisition order.
BitSequence build_x2(const AcquisitionRecord& record);

}  // namespace pqrng
