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

#include <span>
#include <string>
#include <vector>

#include "pqrng/randtests/nist.hpp"

namespace pqrng {

inline constexpr double kUniformityThreshold = 1e-4;

/// Verdict for one p-value row of a test run over N subsequences (Serial and
/// Cumulative Sums produce two rows each).
struct BatchVerdict {
  TestId test_id = TestId::kFrequency;
  std::string row;  // e.g. "serial-1"
  TestParams params;
  std::size_t n_subsequences = 0;
  std::size_t subsequence_length = 0;
  double alpha = 0.01;
  std::size_t passing = 0;
  double proportion_passing = 0.0;
  double proportion_threshold = 0.0;  // n_min
  std::size_t required_passing = 0;   // floor(N * n_min)
  double uniformity_p = 0.0;
  std::vector<double> p_values;
  Outcome outcome = Outcome::kNotApplicable;
  std::string note;

  bool pass() const { return outcome == Outcome::kPass; }
  bool applicable() const { return outcome != Outcome::kNotApplicable; }
};

/// n_min = 1 - alpha - 3 sqrt(alpha (1 - alpha) / N).
double proportion_threshold(double alpha, std::size_t n);

/// Fewest passing subsequences accepted: floor(N * n_min), i.e. 96 of 100
/// at alpha = 0.01 and 16 of 20 at alpha = 0.05.
std::size_t required_passing(double alpha, std::size_t n);

/// Chi-square of the p-values over 10 equal bins, Q(9/2, chi2/2).
double uniformity_p_value(std::span<const double> p_values);

/// Splits the sequence into N equal non-overlapping subsequences (remainder
/// dropped) and runs the test on each. Parameters left at zero are resolved
/// against the subsequence length. Returns one verdict per p-value row; all
/// rows are not-applicable when a subsequence is too short.
std::vector<BatchVerdict> batch_test(std::span<const std::uint8_t> bits, TestId id,
                                     TestParams params, std::size_t n_subsequences,
                                     double alpha);
std::vector<BatchVerdict> batch_test(const BitSequence& seq, TestId id, TestParams params,
                                     std::size_t n_subsequences, double alpha);

}  // namespace pqrng
