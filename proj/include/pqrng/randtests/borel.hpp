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
#include <utility>
#include <vector>

#include "pqrng/bits/bit_sequence.hpp"

namespace pqrng {

/// Borel normality of a finite string: for every block length
/// 1 <= m <= floor(log2 log2 |x|), the frequency of each m-bit block among
/// the floor(|x|/m) non-overlapping blocks must be within
/// sqrt(log2|x| / |x|) of 2^-m.
struct BorelReport {
  std::vector<std::pair<int, double>> per_m;  // (m, max deviation)
  double bound = 0.0;
  int m_max = 0;
  bool pass = false;
};

inline constexpr int kMaxBorelBlock = 24;

double borel_bound(std::size_t length);
int borel_m_max(std::size_t length);

/// max_j |N_j / floor(|x|/m) - 2^-m| over all 2^m block values; the trailing
/// remainder is discarded. Defined for 1 <= m <= min(|x|, 24).
double borel_statistic(std::span<const std::uint8_t> bits, int m);
double borel_statistic(const BitSequence& seq, int m);

/// Needs |x| >= 4 so that at least m = 1 is admissible.
BorelReport borel_normality(std::span<const std::uint8_t> bits);
BorelReport borel_normality(const BitSequence& seq);

}  // namespace pqrng
