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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqrng/sim/record.hpp"

namespace pqrng {

inline constexpr const char* kCountsCsvHeader =
    "setting_index,theta_a_deg,theta_b_deg,n_ab,n_apb,n_abp,n_apbp";

/// Malformed counts file; `line()` is 1-based and counts the header.
class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CountsTable {
  std::vector<CoincidenceSample> samples;
  /// Analyzer angles seen for each setting index, if that index occurs.
  std::array<std::optional<MeasurementSetting>, 4> settings;
};

/// One row per sample, LF line endings, decimal integers; angles use the
/// shortest round-trip decimal form.
void write_counts_csv(std::ostream& os, const AcquisitionRecord& record);
CountsTable read_counts_csv(std::istream& is);

/// Rebuilds a record from a parsed table. Settings absent from the table
/// keep their canonical values; samples_per_setting is the size of the
/// first block when all blocks are equally sized, otherwise 0.
AcquisitionRecord to_record(const CountsTable& table, const SourceConfig& config);

nlohmann::json config_to_json(const SourceConfig& config);
SourceConfig config_from_json(const nlohmann::json& j);

std::string format_double(double v);

}  // namespace pqrng
