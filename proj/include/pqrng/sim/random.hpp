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
#include <random>

namespace pqrng {

/// 64-bit Mersenne Twister. Its output sequence is fixed by the C++
/// standard, so streams are reproducible across toolchains; every variate
/// below is derived from raw engine output without std distributions.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent generator for stream `index` of a seeded run (one stream per
/// setting block or tomography basis).
Rng derive_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Exact Poisson variate. Multiplication method below mean 10, Hoermann's
/// transformed rejection (PTRS) above. Both are exact samplers, which matters
/// here: the parity of the count is the output bit, and a normal
/// approximation would not reproduce the parity distribution.
std::int64_t sample_poisson(Rng& rng, double mean);

}  // namespace pqrng
