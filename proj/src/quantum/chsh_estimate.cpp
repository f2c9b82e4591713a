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

#include "pqrng/quantum/chsh_estimate.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace pqrng {

namespace {

struct Accumulator {
  std::int64_t same = 0;  // AB + A'B'
  std::int64_t diff = 0;  // AB' + A'B
  std::size_t samples = 0;
  // Welford running moments of per-sample E.
  std::size_t n_e = 0;
  double mean_e = 0.0;
  double m2_e = 0.0;

  void add(const CoincidenceSample& s) {
    same += s.n_ab + s.n_apbp;
    diff += s.n_abp + s.n_apb;
    ++samples;
    const std::int64_t total = s.total();
    if (total == 0) return;
    const double e = static_cast<double>(s.n_ab + s.n_apbp - s.n_abp - s.n_apb) /
                     static_cast<double>(total);
    ++n_e;
    const double delta = e - mean_e;
    mean_e += delta / static_cast<double>(n_e);
    m2_e += delta * (e - mean_e);
  }
};

}  // namespace

ChshResult chsh_from_counts(const AcquisitionRecord& record) {
  std::array<Accumulator, 4> acc;
  for (const auto& s : record.samples) {
    if (s.setting_index < 0 || s.setting_index > 3) {
      throw std::invalid_argument("setting_index out of range: " + std::to_string(s.setting_index));
    }
    acc[s.setting_index].add(s);
  }

  ChshResult out;
  double var = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Accumulator& a = acc[k];
    if (a.samples < 2) {
      throw InsufficientData("setting " + std::to_string(k) + " needs at least two samples");
    }
    const std::int64_t total = a.same + a.diff;
    if (total == 0) throw InsufficientData("setting " + std::to_string(k) + " has zero counts");
    out.per_setting_e[k] = static_cast<double>(a.same - a.diff) / static_cast<double>(total);
    out.n_events += total;
    if (a.n_e >= 2) {
      const double sample_var = a.m2_e / static_cast<double>(a.n_e - 1);
      var += sample_var / static_cast<double>(a.n_e);
    }
  }
  const auto& e = out.per_setting_e;
  out.s_value = e[0] + e[1] + e[2] - e[3];
  out.std_error = std::sqrt(var);
  return out;
}

}  // namespace pqrng
