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

#include "pqrng/randtests/batch.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "pqrng/randtests/special.hpp"

namespace pqrng {

double proportion_threshold(double alpha, std::size_t n) {
  if (n == 0) throw std::invalid_argument("N must be positive");
  return 1.0 - alpha - 3.0 * std::sqrt(alpha * (1.0 - alpha) / static_cast<double>(n));
}

std::size_t required_passing(double alpha, std::size_t n) {
  const double t = proportion_threshold(alpha, n) * static_cast<double>(n);
  return t <= 0.0 ? 0 : static_cast<std::size_t>(std::floor(t));
}

double uniformity_p_value(std::span<const double> p_values) {
  if (p_values.empty()) throw std::invalid_argument("no p-values");
  std::array<double, 10> bins{};
  for (double p : p_values) {
    const auto bin = std::min<std::size_t>(9, static_cast<std::size_t>(std::max(0.0, p) * 10.0));
    bins[bin] += 1.0;
  }
  const double expected = static_cast<double>(p_values.size()) / 10.0;
  double chi2 = 0.0;
  for (double b : bins) chi2 += (b - expected) * (b - expected) / expected;
  return special::igamc(4.5, chi2 / 2.0);
}

std::vector<BatchVerdict> batch_test(std::span<const std::uint8_t> bits, TestId id,
                                     TestParams params, std::size_t n_subsequences,
                                     double alpha) {
  if (n_subsequences == 0) throw std::invalid_argument("N must be positive");
  if (!(alpha > 0.0 && alpha < 0.5)) throw std::invalid_argument("alpha must lie in (0, 0.5)");

  const std::size_t sub_len = bits.size() / n_subsequences;
  const TestParams resolved = resolve_params(id, sub_len, params);
  const auto names = p_value_names(id);

  std::vector<BatchVerdict> rows(names.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& v = rows[r];
    v.test_id = id;
    v.row = names[r];
    v.params = resolved;
    v.n_subsequences = n_subsequences;
    v.subsequence_length = sub_len;
    v.alpha = alpha;
    v.proportion_threshold = proportion_threshold(alpha, n_subsequences);
    v.required_passing = required_passing(alpha, n_subsequences);
  }

  const std::size_t min_len = minimum_length(id, resolved);
  if (sub_len < min_len) {
    for (auto& v : rows) {
      v.note = "subsequences of " + std::to_string(sub_len) + " bits are shorter than the " +
               std::to_string(min_len) + " bits required";
    }
    return rows;
  }

  for (std::size_t s = 0; s < n_subsequences; ++s) {
    const TestResult t = run_statistical_test(bits.subspan(s * sub_len, sub_len), id, resolved, alpha);
    if (!t.applicable() || t.p_values.size() != rows.size()) {
      for (auto& v : rows) {
        v.p_values.clear();
        v.note = t.note;
      }
      return rows;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r].p_values.push_back(t.p_values[r]);
  }

  for (auto& v : rows) {
    v.passing = static_cast<std::size_t>(
        std::count_if(v.p_values.begin(), v.p_values.end(), [&](double p) { return p >= alpha; }));
    v.proportion_passing = static_cast<double>(v.passing) / static_cast<double>(n_subsequences);
    v.uniformity_p = uniformity_p_value(v.p_values);
    const bool ok = v.passing >= v.required_passing && v.uniformity_p >= kUniformityThreshold;
    v.outcome = ok ? Outcome::kPass : Outcome::kFail;
  }
  return rows;
}

std::vector<BatchVerdict> batch_test(const BitSequence& seq, TestId id, TestParams params,
                                     std::size_t n_subsequences, double alpha) {
  return batch_test(seq.bits(), id, params, n_subsequences, alpha);
}

}  // namespace pqrng
