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

#include <map>
#include <vector>

#include <json.hpp>

#include "pqrng/randtests/batch.hpp"
#include "pqrng/randtests/borel.hpp"
#include "pqrng/randtests/nist.hpp"

namespace pqrng {

struct BatteryOptions {
  double alpha = 0.01;
  std::size_t n_subsequences = 100;
  /// Used when subsequences at n_subsequences are too short for a test;
  /// fewer subsequences require a looser threshold.
  std::size_t fallback_subsequences = 20;
  double fallback_alpha = 0.05;
  std::vector<TestId> tests{kAllTests.begin(), kAllTests.end()};
  std::map<TestId, TestParams> single_params;
  std::map<TestId, TestParams> batch_params;
};

struct BatteryReport {
  std::vector<TestResult> single;
  std::vector<BatchVerdict> batches;

  /// Every applicable result passes. Advisory tests count only when asked.
  bool pass(bool include_advisory = false) const;
};

/// Full-sequence p-values for each test, then the subsequence batches.
BatteryReport run_nist_battery(const BitSequence& seq, const BatteryOptions& options = {});

nlohmann::json to_json(const TestResult& r);
nlohmann::json to_json(const BatchVerdict& v);
nlohmann::json to_json(const BorelReport& r);
nlohmann::json to_json(const BatteryReport& r);

}  // namespace pqrng
