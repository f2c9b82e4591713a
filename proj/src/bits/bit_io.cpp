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

#include "pqrng/bits/bit_io.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pqrng {

std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return bytes;
}

std::vector<std::uint8_t> unpack_bits(std::span<const std::uint8_t> bytes, std::size_t n_bits) {
  if (n_bits > 8 * bytes.size()) throw std::invalid_argument("bit count exceeds packed data");
  std::vector<std::uint8_t> bits(n_bits);
  for (std::size_t i = 0; i < n_bits; ++i) bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1u;
  return bits;
}

void write_ascii(std::ostream& os, const BitSequence& seq) { os << seq.to_string() << '\n'; }

BitSequence read_ascii(std::istream& is) {
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  if (!text.empty() && text.back() == '\n') text.pop_back();
  if (!text.empty() && text.back() == '\r') text.pop_back();
  return BitSequence::from_string(text);
}

void write_packed(std::ostream& os, const BitSequence& seq) {
  std::uint64_t n = seq.size();
  char header[8];
  for (int i = 0; i < 8; ++i) header[i] = static_cast<char>((n >> (8 * i)) & 0xffu);
  os.write(header, 8);
  const auto bytes = pack_bits(seq.bits());
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

namespace {

std::uint64_t decode_length(const std::string& data) {
  std::uint64_t n = 0;
  for (int i = 7; i >= 0; --i) n = (n << 8) | static_cast<std::uint8_t>(data[i]);
  return n;
}

bool packed_size_matches(const std::string& data) {
  if (data.size() < 8) return false;
  const std::uint64_t n = decode_length(data);
  return n / 8 + (n % 8 != 0) == data.size() - 8;
}

BitSequence decode_packed(const std::string& data) {
  if (!packed_size_matches(data)) throw std::runtime_error("packed bit file length does not match its header");
  const auto* first = reinterpret_cast<const std::uint8_t*>(data.data()) + 8;
  return BitSequence(unpack_bits({first, data.size() - 8}, decode_length(data)));
}

}  // namespace

BitSequence read_packed(std::istream& is) {
  std::string data((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return decode_packed(data);
}

void write_bits_file(const std::filesystem::path& path, const BitSequence& seq, BitFormat format) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  if (format == BitFormat::kAscii) {
    write_ascii(os, seq);
  } else {
    write_packed(os, seq);
  }
  if (!os) throw std::runtime_error("failed writing " + path.string());
}

BitSequence read_bits_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  if (packed_size_matches(data)) return decode_packed(data);
  if (!data.empty() && data.back() == '\n') data.pop_back();
  if (!data.empty() && data.back() == '\r') data.pop_back();
  return BitSequence::from_string(data);
}

}  // namespace pqrng
