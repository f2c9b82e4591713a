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

#include "pqrng/sim/counts_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>

namespace pqrng {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_counts_csv(std::ostream& os, const AcquisitionRecord& record) {
  std::string out;
  out.reserve(48 * (record.samples.size() + 1));
  out += kCountsCsvHeader;
  out += '\n';
  std::array<std::string, 4> prefix;
  for (int k = 0; k < 4; ++k) {
    prefix[k] = std::to_string(k) + ',' + format_double(record.settings[k].theta_a) + ',' +
                format_double(record.settings[k].theta_b) + ',';
  }
  for (const auto& s : record.samples) {
    if (s.setting_index < 0 || s.setting_index > 3) throw std::invalid_argument("bad setting_index");
    out += prefix[s.setting_index];
    out += std::to_string(s.n_ab);
    out += ',';
    out += std::to_string(s.n_apb);
    out += ',';
    out += std::to_string(s.n_abp);
    out += ',';
    out += std::to_string(s.n_apbp);
    out += '\n';
  }
  os << out;
}

namespace {

template <typename T>
T parse_field(std::string_view field, std::size_t line, const char* name) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw CsvError(line, std::string("cannot parse ") + name + " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

CountsTable read_counts_csv(std::istream& is) {
  CountsTable table;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen) {
      if (line != kCountsCsvHeader) throw CsvError(line_no, "unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;

    std::array<std::string_view, 7> fields;
    std::string_view rest(line);
    for (std::size_t f = 0; f < fields.size(); ++f) {
      const auto comma = rest.find(',');
      if (f + 1 < fields.size()) {
        if (comma == std::string_view::npos) throw CsvError(line_no, "expected 7 fields");
        fields[f] = rest.substr(0, comma);
        rest.remove_prefix(comma + 1);
      } else {
        if (comma != std::string_view::npos) throw CsvError(line_no, "expected 7 fields");
        fields[f] = rest;
      }
    }

    CoincidenceSample s;
    s.setting_index = parse_field<int>(fields[0], line_no, "setting_index");
    if (s.setting_index < 0 || s.setting_index > 3) throw CsvError(line_no, "setting_index must be 0..3");
    const double ta = parse_field<double>(fields[1], line_no, "theta_a_deg");
    const double tb = parse_field<double>(fields[2], line_no, "theta_b_deg");
    s.n_ab = parse_field<std::int64_t>(fields[3], line_no, "n_ab");
    s.n_apb = parse_field<std::int64_t>(fields[4], line_no, "n_apb");
    s.n_abp = parse_field<std::int64_t>(fields[5], line_no, "n_abp");
    s.n_apbp = parse_field<std::int64_t>(fields[6], line_no, "n_apbp");
    if (s.n_ab < 0 || s.n_apb < 0 || s.n_abp < 0 || s.n_apbp < 0) {
      throw CsvError(line_no, "counts must be nonnegative");
    }
    MeasurementSetting setting;
    try {
      setting = MeasurementSetting(ta, tb);
    } catch (const std::invalid_argument& e) {
      throw CsvError(line_no, e.what());
    }
    auto& slot = table.settings[s.setting_index];
    if (!slot) {
      slot = setting;
    } else if (!(*slot == setting)) {
      throw CsvError(line_no, "angles differ from earlier rows of the same setting");
    }
    table.samples.push_back(s);
  }
  if (!header_seen) throw CsvError(1, "missing header");
  return table;
}

AcquisitionRecord to_record(const CountsTable& table, const SourceConfig& config) {
  AcquisitionRecord record;
  record.config = config;
  record.samples = table.samples;
  for (int k = 0; k < 4; ++k) {
    if (table.settings[k]) record.settings.settings[k] = *table.settings[k];
  }
  std::array<std::size_t, 4> per{};
  for (const auto& s : table.samples) ++per[s.setting_index];
  const bool equal = per[0] == per[1] && per[1] == per[2] && per[2] == per[3];
  record.samples_per_setting = equal ? per[0] : 0;
  return record;
}

nlohmann::json config_to_json(const SourceConfig& c) {
  return nlohmann::json{{"pair_rate", c.pair_rate},
                        {"eta_a", c.eta_a},
                        {"eta_b", c.eta_b},
                        {"accidental_rate", c.accidental_rate},
                        {"tau", c.tau},
                        {"lag", c.lag},
                        {"seed", c.seed}};
}

SourceConfig config_from_json(const nlohmann::json& j) {
  SourceConfig c;
  c.pair_rate = j.at("pair_rate").get<double>();
  c.eta_a = j.at("eta_a").get<double>();
  c.eta_b = j.at("eta_b").get<double>();
  c.accidental_rate = j.at("accidental_rate").get<double>();
  c.tau = j.at("tau").get<double>();
  c.lag = j.at("lag").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.validate();
  return c;
}

}  // namespace pqrng
