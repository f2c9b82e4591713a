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

#include "pqrng/bits/bit_sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pqrng {

BitSequence::BitSequence(std::vector<std::uint8_t> bits, std::string label, SourceMeta meta)
    : bits_(std::move(bits)), label_(std::move(label)), meta_(std::move(meta)) {
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw std::invalid_argument("bit values must be 0 or 1");
  }
}

BitSequence BitSequence::from_string(std::string_view text, std::string label) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit strings may contain only '0' and '1'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitSequence(std::move(bits), std::move(label));
}

std::size_t BitSequence::count_ones() const {
  return std::accumulate(bits_.begin(), bits_.end(), std::size_t{0});
}

BitSequence BitSequence::slice(std::size_t offset, std::size_t length) const {
  if (offset > bits_.size() || length > bits_.size() - offset) {
    throw std::out_of_range("slice exceeds sequence length");
  }
  auto first = bits_.begin() + static_cast<std::ptrdiff_t>(offset);
  return BitSequence(std::vector<std::uint8_t>(first, first + static_cast<std::ptrdiff_t>(length)),
                     label_, meta_);
}

BitSequence BitSequence::complement() const {
  std::vector<std::uint8_t> flipped(bits_.size());
  std::transform(bits_.begin(), bits_.end(), flipped.begin(),
                 [](std::uint8_t b) { return static_cast<std::uint8_t>(b ^ 1u); });
  return BitSequence(std::move(flipped), label_, meta_);
}

std::string BitSequence::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

}  // namespace pqrng
