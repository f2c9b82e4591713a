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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "pqrng/bits/bit_sequence.hpp"

namespace pqrng {

enum class BitFormat { kAscii, kPacked };

/// MSB-first packing; the trailing partial byte is zero padded.
std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> unpack_bits(std::span<const std::uint8_t> bytes, std::size_t n_bits);

/// '0'/'1' per bit followed by a single newline.
void write_ascii(std::ostream& os, const BitSequence& seq);
BitSequence read_ascii(std::istream& is);

/// 8-byte little-endian bit count, then the packed bytes.
void write_packed(std::ostream& os, const BitSequence& seq);
BitSequence read_packed(std::istream& is);

void write_bits_file(const std::filesystem::path& path, const BitSequence& seq, BitFormat format);

/// Reads either format. A file is packed when its header length agrees with
/// the file size; otherwise it must be ASCII.
BitSequence read_bits_file(const std::filesystem::path& path);

}  // namespace pqrng
