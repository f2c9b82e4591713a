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

#include "pqrng/randtests/borel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pqrng {

double borel_bound(std::size_t length) {
  if (length < 2) throw std::invalid_argument("Borel bound needs |x| >= 2");
  const double n = static_cast<double>(length);
  return std::sqrt(std::log2(n) / n);
}

int borel_m_max(std::size_t length) {
  if (length < 4) return 0;
  return static_cast<int>(std::floor(std::log2(std::log2(static_cast<double>(length)))));
}

double borel_statistic(std::span<const std::uint8_t> bits, int m) {
  if (m < 1 || m > kMaxBorelBlock || static_cast<std::size_t>(m) > bits.size()) {
    throw std::invalid_argument("Borel block length out of range");
  }
  const std::size_t blocks = bits.size() / static_cast<std::size_t>(m);
  std::vector<std::uint64_t> counts(std::size_t{1} << m, 0);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t v = 0;
    for (int i = 0; i < m; ++i) v = (v << 1) | bits[b * m + static_cast<std::size_t>(i)];
    ++counts[v];
  }
  const double expected = std::ldexp(1.0, -m);
  double worst = 0.0;
  for (std::uint64_t c : counts) {
    worst = std::max(worst, std::fabs(static_cast<double>(c) / static_cast<double>(blocks) - expected));
  }
  return worst;
}

double borel_statistic(const BitSequence& seq, int m) { return borel_statistic(seq.bits(), m); }

BorelReport borel_normality(std::span<const std::uint8_t> bits) {
  if (bits.size() < 4) throw std::invalid_argument("Borel normality needs at least 4 bits");
  BorelReport report;
  report.bound = borel_bound(bits.size());
  report.m_max = std::min(borel_m_max(bits.size()), kMaxBorelBlock);
  report.pass = true;
  for (int m = 1; m <= report.m_max; ++m) {
    const double stat = borel_statistic(bits, m);
    report.per_m.emplace_back(m, stat);
    if (stat > report.bound) report.pass = false;
  }
  return report;
}

BorelReport borel_normality(const BitSequence& seq) { return borel_normality(seq.bits()); }

}  // namespace pqrng
