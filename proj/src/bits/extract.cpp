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

#include "pqrng/bits/extract.hpp"

#include <stdexcept>
#include <vector>

namespace pqrng {

std::uint8_t parity_bit(std::int64_t count) {
  if (count < 0) throw std::invalid_argument("count must be nonnegative");
  return static_cast<std::uint8_t>(count & 1);
}

BitSequence build_x1(const AcquisitionRecord& record) {
  if (record.empty()) throw std::invalid_argument("cannot extract bits from an empty record");
  std::vector<std::uint8_t> bits;
  bits.reserve(record.size());
  for (const auto& s : record.samples) bits.push_back(parity_bit(s.n_ab));
  return BitSequence(std::move(bits), "x1", SourceMeta{record.config.seed, "x1"});
}

BitSequence build_x2(const AcquisitionRecord& record) {
  if (record.empty()) throw std::invalid_argument("cannot extract bits from an empty record");
  std::vector<std::uint8_t> bits;
  bits.reserve(4 * record.size());
  for (const auto& s : record.samples) {
    bits.push_back(parity_bit(s.n_ab));
    bits.push_back(parity_bit(s.n_apb));
    bits.push_back(parity_bit(s.n_abp));
    bits.push_back(parity_bit(s.n_apbp));
  }
  return BitSequence(std::move(bits), "x2", SourceMeta{record.config.seed, "x2"});
}

}  // namespace pqrng
