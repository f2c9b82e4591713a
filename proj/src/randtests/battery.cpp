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

#include "pqrng/randtests/battery.hpp"

#include <algorithm>

namespace pqrng {

namespace {

TestParams lookup(const std::map<TestId, TestParams>& m, TestId id) {
  const auto it = m.find(id);
  return it == m.end() ? TestParams{} : it->second;
}

nlohmann::json params_json(TestId id, const TestParams& p) {
  nlohmann::json j = nlohmann::json::object();
  switch (id) {
    case TestId::kBlockFrequency:
    case TestId::kSerial:
    case TestId::kApproximateEntropy:
      j["m"] = p.block_length;
      break;
    case TestId::kNonOverlappingTemplate:
      j["m"] = p.block_length;
      j["template_index"] = p.template_index;
      break;
    default:
      break;
  }
  return j;
}

}  // namespace

bool BatteryReport::pass(bool include_advisory) const {
  auto counts = [&](TestId id) { return include_advisory || !is_advisory(id); };
  for (const auto& r : single) {
    if (counts(r.test_id) && r.outcome == Outcome::kFail) return false;
  }
  for (const auto& b : batches) {
    if (counts(b.test_id) && b.outcome == Outcome::kFail) return false;
  }
  return true;
}

BatteryReport run_nist_battery(const BitSequence& seq, const BatteryOptions& options) {
  BatteryReport report;
  for (TestId id : options.tests) {
    report.single.push_back(run_statistical_test(seq, id, lookup(options.single_params, id), options.alpha));
  }
  for (TestId id : options.tests) {
    const TestParams params = lookup(options.batch_params, id);
    auto rows = batch_test(seq, id, params, options.n_subsequences, options.alpha);
    const bool none = std::none_of(rows.begin(), rows.end(), [](const auto& v) { return v.applicable(); });
    if (none && options.fallback_subsequences > 0 && options.fallback_subsequences < options.n_subsequences) {
      auto retry = batch_test(seq, id, params, options.fallback_subsequences, options.fallback_alpha);
      if (std::any_of(retry.begin(), retry.end(), [](const auto& v) { return v.applicable(); })) {
        rows = std::move(retry);
      }
    }
    report.batches.insert(report.batches.end(), rows.begin(), rows.end());
  }
  return report;
}

nlohmann::json to_json(const TestResult& r) {
  nlohmann::json j{{"test_id", test_name(r.test_id)},
                   {"params", params_json(r.test_id, r.params)},
                   {"p_values", r.p_values},
                   {"alpha", r.alpha},
                   {"outcome", to_string(r.outcome)},
                   {"pass", r.pass()},
                   {"advisory", is_advisory(r.test_id)}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const BatchVerdict& v) {
  nlohmann::json j{{"test_id", test_name(v.test_id)},
                   {"row", v.row},
                   {"params", params_json(v.test_id, v.params)},
                   {"N", v.n_subsequences},
                   {"subsequence_length", v.subsequence_length},
                   {"alpha", v.alpha},
                   {"passing", v.passing},
                   {"proportion", v.proportion_passing},
                   {"n_min", v.proportion_threshold},
                   {"required_passing", v.required_passing},
                   {"uniformity_P", v.uniformity_p},
                   {"outcome", to_string(v.outcome)},
                   {"pass", v.pass()},
                   {"advisory", is_advisory(v.test_id)}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

nlohmann::json to_json(const BorelReport& r) {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& [m, stat] : r.per_m) per.push_back({{"m", m}, {"max_deviation", stat}});
  return {{"bound", r.bound}, {"m_max", r.m_max}, {"per_m", per}, {"pass", r.pass}};
}

nlohmann::json to_json(const BatteryReport& r) {
  nlohmann::json tests = nlohmann::json::array();
  for (const auto& t : r.single) tests.push_back(to_json(t));
  nlohmann::json batches = nlohmann::json::array();
  for (const auto& b : r.batches) batches.push_back(to_json(b));
  return {{"tests", tests}, {"batches", batches}, {"pass", r.pass()}};
}

}  // namespace pqrng
