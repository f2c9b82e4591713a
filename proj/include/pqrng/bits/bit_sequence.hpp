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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqrng {

struct SourceMeta {
  std::uint64_t seed = 0;
  std::string mode;  // e.g. "x1", "x2", "file"
};

/// Ordered bits, one byte (0 or 1) per bit. Immutable once built.
class BitSequence {
 public:
  BitSequence() = default;
  explicit BitSequence(std::vector<std::uint8_t> bits, std::string label = {},
                       SourceMeta meta = {});

  /// Parses '0'/'1' characters; anything else is rejected.
  static BitSequence from_string(std::string_view text, std::string label = {});

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::string& label() const { return label_; }
  const SourceMeta& meta() const { return meta_; }

  std::size_t count_ones() const;
  BitSequence slice(std::size_t offset, std::size_t length) const;
  BitSequence complement() const;
  std::string to_string() const;

  friend bool operator==(const BitSequence& a, const BitSequence& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
  std::string label_;
  SourceMeta meta_;
};

}  // namespace pqrng
