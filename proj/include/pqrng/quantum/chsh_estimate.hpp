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

#include <array>
#include <cstdint>
#include <stdexcept>

#include "pqrng/sim/record.hpp"

namespace pqrng {

struct ChshResult {
  double s_value = 0.0;
  double std_error = 0.0;
  std::int64_t n_events = 0;
  std::array<double, 4> per_setting_e{};
};

class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Estimates S from recorded counts. Each correlation is taken from the
/// pooled counts of its setting block. The error is the standard error of the
/// mean of per-sample correlation estimates, added in quadrature over the
/// four settings.
///
/// Throws InsufficientData when a setting has fewer than two samples or no
/// coincidences at all.
ChshResult chsh_from_counts(const AcquisitionRecord& record);

}  // namespace pqrng
