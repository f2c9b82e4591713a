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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pqrng/bits/bit_sequence.hpp"

namespace pqrng {

/// The SP 800-22 tests supported here. Linear Complexity and the two Random
/// Excursions tests are deliberately absent.
enum class TestId {
  kFrequency,
  kBlockFrequency,
  kRuns,
  kLongestRun,
  kCumulativeSums,
  kDft,
  kSerial,
  kApproximateEntropy,
  kRank,
  kNonOverlappingTemplate,
  kUniversal,
};

inline constexpr std::array<TestId, 11> kAllTests = {
    TestId::kFrequency,      TestId::kBlockFrequency,     TestId::kRuns,
    TestId::kLongestRun,     TestId::kCumulativeSums,     TestId::kDft,
    TestId::kSerial,         TestId::kApproximateEntropy, TestId::kRank,
    TestId::kNonOverlappingTemplate, TestId::kUniversal};

std::string_view test_name(TestId id);
std::optional<TestId> parse_test_id(std::string_view name);

/// Names of the individual p-values a test reports, e.g. {"serial-1",
/// "serial-2"}.
std::vector<std::string> p_value_names(TestId id);

/// The DFT test has known reliability problems; its verdicts are reported
/// but flagged.
constexpr bool is_advisory(TestId id) { return id == TestId::kDft; }

struct TestParams {
  /// Block length (Block Frequency M, Serial/ApEn m, template length m).
  /// Zero selects the length-dependent default.
  std::size_t block_length = 0;
  /// Index into the aperiodic template list (Template Matching only).
  std::size_t template_index = 0;

  friend bool operator==(const TestParams&, const TestParams&) = default;
};

enum class Outcome { kPass, kFail, kNotApplicable };
std::string_view to_string(Outcome o);

struct TestResult {
  TestId test_id = TestId::kFrequency;
  std::vector<double> p_values;
  TestParams params;  // resolved (defaults filled in)
  double alpha = 0.01;
  Outcome outcome = Outcome::kNotApplicable;
  std::string note;  // reason when not applicable

  bool pass() const { return outcome == Outcome::kPass; }
  bool applicable() const { return outcome != Outcome::kNotApplicable; }
};

/// The sequence is too short (or a parameter is inadmissible) for a test.
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kRankMinLength = 38912;
inline constexpr std::size_t kUniversalMinLength = 387840;
inline constexpr std::size_t kLongestRunMinLength = 128;
inline constexpr std::size_t kTemplateLength = 9;
inline constexpr std::size_t kTemplateBlocks = 8;

/// Fills zero fields of `params` with defaults for a sequence of length n:
/// Block Frequency M = max(20, ceil(n/100)); Serial m = min(16,
/// floor(log2 n) - 2); Approximate Entropy m = min(10, floor(log2 n) - 5);
/// template length 9.
TestParams resolve_params(TestId id, std::size_t n, TestParams params);

/// Smallest admissible length for the test with resolved parameters.
std::size_t minimum_length(TestId id, const TestParams& resolved);

/// Runs one test. Too-short input yields Outcome::kNotApplicable, never a
/// failure. Passing requires every p-value >= alpha.
TestResult run_statistical_test(std::span<const std::uint8_t> bits, TestId id,
                                TestParams params = {}, double alpha = 0.01);
TestResult run_statistical_test(const BitSequence& seq, TestId id, TestParams params = {},
                                double alpha = 0.01);

namespace nist {

// Raw p-value routines. Each throws NotApplicable on inadmissible input.
double frequency(std::span<const std::uint8_t> bits);
double block_frequency(std::span<const std::uint8_t> bits, std::size_t block);
double runs(std::span<const std::uint8_t> bits);
double longest_run(std::span<const std::uint8_t> bits);
std::array<double, 2> cumulative_sums(std::span<const std::uint8_t> bits);
double dft(std::span<const std::uint8_t> bits);
std::array<double, 2> serial(std::span<const std::uint8_t> bits, std::size_t m);
double approximate_entropy(std::span<const std::uint8_t> bits, std::size_t m);
double rank(std::span<const std::uint8_t> bits);
double non_overlapping_template(std::span<const std::uint8_t> bits,
                                std::span<const std::uint8_t> templ,
                                std::size_t blocks = kTemplateBlocks);
double universal(std::span<const std::uint8_t> bits);

/// Aperiodic m-bit templates in increasing numeric order (148 for m = 9).
std::vector<std::vector<std::uint8_t>> aperiodic_templates(std::size_t m);

/// Rank of a 32x32 matrix over GF(2), one row per word.
int gf2_rank(std::array<std::uint32_t, 32> rows);

}  // namespace nist
}  // namespace pqrng
