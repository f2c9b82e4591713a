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

#include "pqrng/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqrng/bits/bit_io.hpp"
#include "pqrng/bits/extract.hpp"
#include "pqrng/bits/metrics.hpp"
#include "pqrng/cli/state_spec.hpp"
#include "pqrng/quantum/chsh_estimate.hpp"
#include "pqrng/quantum/fidelity.hpp"
#include "pqrng/quantum/min_entropy.hpp"
#include "pqrng/quantum/states.hpp"
#include "pqrng/quantum/tomography.hpp"
#include "pqrng/randtests/battery.hpp"
#include "pqrng/sim/acquisition.hpp"
#include "pqrng/sim/counts_io.hpp"

#ifndef PQRNG_VERSION
#define PQRNG_VERSION "0.0.0"
#endif

namespace pqrng::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

fs::path meta_path_for(const fs::path& csv) {
  fs::path p = csv;
  p.replace_extension(".meta.json");
  return p;
}

fs::path manifest_path_for(const fs::path& output) { return fs::path(output.string() + ".manifest.json"); }

void write_json_file(const fs::path& path, const json& j) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << j.dump(2) << '\n';
  if (!os) throw std::runtime_error("failed writing " + path.string());
}

json read_json_file(const fs::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
  }
}

struct Manifest {
  std::vector<std::string> argv;
  json config = json::object();
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  Clock::time_point started = Clock::now();

  void write_for(const fs::path& output) const {
    const double seconds = std::chrono::duration<double>(Clock::now() - started).count();
    json j{{"tool", "pqrng"},
           {"version", PQRNG_VERSION},
           {"argv", argv},
           {"config", config},
           {"seed", seed},
           {"inputs", inputs},
           {"outputs", outputs},
           {"wall_clock_seconds", seconds}};
    write_json_file(manifest_path_for(output), j);
  }
};

// Emits the JSON document to `path`, or to `out` when no path is given.
void emit_json(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

std::map<TestId, TestParams> parse_m_overrides(const std::vector<std::string>& items) {
  std::map<TestId, TestParams> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected <test>=<m>, got '" + item + "'");
    const auto id = parse_test_id(item.substr(0, eq));
    if (!id) throw UsageError("unknown test '" + item.substr(0, eq) + "'");
    try {
      out[*id].block_length = std::stoul(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("invalid block length in '" + item + "'");
    }
  }
  return out;
}

DensityMatrix state_arg(const std::string& spec) {
  try {
    return parse_state_spec(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string state = "phi-plus";
  std::size_t samples_per_setting = 50000;
  SourceConfig config = SourceConfig::defaults();
  std::vector<double> angles;
  std::string out;
  bool expected = false;
  unsigned threads = 1;
};

int cmd_simulate(const SimulateArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  Manifest manifest;
  manifest.argv = argv;
  a.config.validate();
  const DensityMatrix rho = state_arg(a.state);
  ChshSettings settings = ChshSettings::canonical();
  if (!a.angles.empty()) {
    if (a.angles.size() != 4) throw UsageError("--angles needs four values: a1,a2,b1,b2");
    settings = ChshSettings::from_angles(a.angles[0], a.angles[1], a.angles[2], a.angles[3]);
  }
  AcquisitionOptions opts;
  opts.model = a.expected ? CountModel::kExpected : CountModel::kPoisson;
  opts.threads = a.threads;
  const AcquisitionRecord record = run_chsh_acquisition(a.config, rho, settings, a.samples_per_setting, opts);

  if (a.out.empty()) {
    write_counts_csv(out, record);
    return kExitPass;
  }
  {
    std::ofstream os(a.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + a.out + " for writing");
    write_counts_csv(os, record);
    if (!os) throw std::runtime_error("failed writing " + a.out);
  }
  json meta = config_to_json(a.config);
  meta["state"] = a.state;
  meta["samples_per_setting"] = a.samples_per_setting;
  meta["count_model"] = a.expected ? "expected" : "poisson";
  json angles = json::array();
  for (const auto& s : settings.settings) angles.push_back({s.theta_a, s.theta_b});
  meta["settings_deg"] = angles;
  meta["elapsed_seconds"] = record.elapsed_seconds();
  const fs::path meta_path = meta_path_for(a.out);
  write_json_file(meta_path, meta);

  manifest.config = meta;
  manifest.seed = a.config.seed;
  manifest.outputs = {a.out, meta_path.string()};
  manifest.write_for(a.out);
  return kExitPass;
}

// ----------------------------------------------------------------- genbits

struct GenbitsArgs {
  std::string counts;
  std::string mode = "x2";
  std::string format = "ascii";
  std::string out;
  double tau = 0.2;
  double lag = 0.1;
  bool tau_given = false;
  bool lag_given = false;
};

AcquisitionRecord load_record(const std::string& csv_path, SourceConfig* config_out = nullptr) {
  std::ifstream is(csv_path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + csv_path);
  const CountsTable table = read_counts_csv(is);
  SourceConfig config = SourceConfig::defaults();
  const fs::path meta = meta_path_for(csv_path);
  if (fs::exists(meta)) config = config_from_json(read_json_file(meta));
  if (config_out) *config_out = config;
  return to_record(table, config);
}

int cmd_genbits(const GenbitsArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  Manifest manifest;
  manifest.argv = argv;
  AcquisitionRecord record = load_record(a.counts);
  if (a.tau_given) record.config.tau = a.tau;
  if (a.lag_given) record.config.lag = a.lag;
  if (record.empty()) throw std::runtime_error("counts file has no samples");

  const BitSequence bits = a.mode == "x1" ? build_x1(record) : build_x2(record);
  write_bits_file(a.out, bits, a.format == "packed" ? BitFormat::kPacked : BitFormat::kAscii);

  const ThroughputReport t = throughput(record, bits);
  out << "mode " << a.mode << ": " << t.bits_emitted << " bits from " << t.n_samples << " samples\n"
      << "acquisition time " << fixed(t.total_seconds(), 1) << " s (" << fixed(t.total_seconds() / 60.0, 1)
      << " min), rate " << fixed(t.rate, 2) << " bits/s\n";

  manifest.config = {{"mode", a.mode}, {"format", a.format}, {"tau", record.config.tau}, {"lag", record.config.lag}};
  manifest.seed = record.config.seed;
  manifest.inputs = {a.counts};
  manifest.outputs = {a.out};
  manifest.write_for(a.out);
  return kExitPass;
}

// ----------------------------------------------------------------- certify

struct CertifyArgs {
  std::string counts;
  std::string state;
  std::string pauli;
  std::uint64_t tomography_events = 0;
  std::uint64_t seed = 0;
  std::string out;
};

std::array<double, 16> parse_pauli(const std::string& text) {
  std::array<double, 16> values{};
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 16) throw UsageError("--pauli needs exactly 16 comma-separated values");
    try {
      std::size_t used = 0;
      values[k] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("invalid --pauli value '" + item + "'");
    }
    ++k;
  }
  if (k != 16) throw UsageError("--pauli needs exactly 16 comma-separated values");
  return values;
}

int cmd_certify(const CertifyArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  if (a.counts.empty() && a.state.empty() && a.pauli.empty()) {
    throw UsageError("certify needs --counts, --state or --pauli");
  }
  Manifest manifest;
  manifest.argv = argv;
  manifest.seed = a.seed;
  json report = json::object();

  if (!a.counts.empty()) {
    manifest.inputs.push_back(a.counts);
    const AcquisitionRecord record = load_record(a.counts);
    const ChshResult chsh = chsh_from_counts(record);
    json j{{"S", chsh.s_value},
           {"std_error", chsh.std_error},
           {"n_events", chsh.n_events},
           {"E", chsh.per_setting_e},
           {"violates_classical_bound", chsh.s_value > 2.0}};
    try {
      const MinEntropyBound bound = min_entropy_chsh(chsh.s_value, static_cast<std::uint64_t>(chsh.n_events));
      j["min_entropy_per_event"] = bound.per_event;
      j["min_entropy_total"] = bound.total;
    } catch (const std::invalid_argument& e) {
      j["min_entropy_per_event"] = nullptr;
      j["note"] = e.what();
    }
    report["chsh"] = j;
  }

  std::optional<DensityMatrix> rho;
  double clipped = 0.0;
  std::string source;
  if (!a.pauli.empty()) {
    const auto values = parse_pauli(a.pauli);
    const TomographyResult t = tomo_reconstruct<double>(values);
    rho = t.rho;
    clipped = t.clipped_weight;
    source = "pauli";
  } else if (!a.state.empty()) {
    const DensityMatrix truth = state_arg(a.state);
    if (a.tomography_events > 0) {
      SourceConfig config = SourceConfig::defaults();
      config.seed = a.seed;
      const TomographyResult t = tomo_reconstruct<double>(run_tomography_acquisition(config, truth, a.tomography_events));
      rho = t.rho;
      clipped = t.clipped_weight;
      source = "simulated-tomography";
    } else {
      rho = truth;
      source = "state";
    }
  }
  if (rho) {
    const SubspaceCoherence sub = subspace_restrict(*rho);
    const MinEntropyBound bound = min_entropy_tomography(sub.c);
    report["tomography"] = {{"source", source},
                            {"C", sub.c},
                            {"min_entropy_per_event", bound.per_event},
                            {"fidelity_phi_plus", fidelity(*rho, bell_phi_plus<double>())},
                            {"clipped_weight", clipped},
                            {"density_matrix", state_to_json(*rho)}};
  }

  emit_json(report, a.out, out);
  if (!a.out.empty()) {
    manifest.outputs = {a.out};
    manifest.config = {{"state", a.state}, {"pauli", a.pauli}, {"tomography_events", a.tomography_events}};
    manifest.write_for(a.out);
  }
  return kExitPass;
}

// -------------------------------------------------------------------- test

struct TestArgs {
  std::string bits;
  std::string suite = "all";
  double alpha = 0.01;
  std::size_t subsequences = 100;
  std::size_t fallback_subsequences = 20;
  double fallback_alpha = 0.05;
  std::vector<std::string> m_overrides;
  std::vector<std::string> batch_m_overrides;
  std::vector<std::string> tests;
  std::size_t template_index = 0;
  std::optional<double> min_density;
  std::string out;
};

void print_battery(const BatteryReport& r, std::ostream& os) {
  os << std::left << std::setw(28) << "test" << std::setw(12) << "p-value" << std::setw(14) << "proportion"
     << "P-value\n";
  for (const auto& t : r.single) {
    const auto names = p_value_names(t.test_id);
    for (std::size_t k = 0; k < names.size(); ++k) {
      os << std::setw(28) << names[k]
         << std::setw(12) << (t.applicable() ? fixed(t.p_values[k], 6) : std::string("n/a"));
      const BatchVerdict* match = nullptr;
      for (const auto& b : r.batches) {
        if (b.row == names[k]) match = &b;
      }
      if (match && match->applicable()) {
        os << std::setw(14)
           << (std::to_string(match->passing) + "/" + std::to_string(match->n_subsequences))
           << fixed(match->uniformity_p, 6) << (match->pass() ? "" : "  *");
      } else {
        os << std::setw(14) << "n/a" << "n/a";
      }
      if (t.outcome == Outcome::kFail) os << "  (p < alpha)";
      os << '\n';
    }
  }
}

int cmd_test(const TestArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  static const std::vector<std::string> kSuites = {"borel", "nist", "density", "all"};
  if (std::find(kSuites.begin(), kSuites.end(), a.suite) == kSuites.end()) {
    throw UsageError("unknown suite '" + a.suite + "'");
  }
  Manifest manifest;
  manifest.argv = argv;
  manifest.inputs = {a.bits};
  const BitSequence seq = read_bits_file(a.bits);
  if (seq.empty()) throw std::runtime_error("bit file is empty");

  const bool all = a.suite == "all";
  json report{{"input", a.bits}, {"length", seq.size()}};
  bool pass = true;
  std::ostringstream summary;

  if (all || a.suite == "borel") {
    if (seq.size() < 4) {
      report["borel"] = {{"outcome", "n/a"}, {"note", "needs at least 4 bits"}};
    } else {
      const BorelReport borel = borel_normality(seq);
      report["borel"] = to_json(borel);
      pass = pass && borel.pass;
      summary << "Borel normality: bound " << fixed(borel.bound, 6) << ", m_max " << borel.m_max;
      for (const auto& [m, s] : borel.per_m) summary << ", m=" << m << ": " << fixed(s, 6);
      summary << (borel.pass ? "  pass\n" : "  FAIL\n");
    }
  }

  if (all || a.suite == "density") {
    if (seq.size() < 8) {
      report["density"] = {{"outcome", "n/a"}, {"note", "needs at least 8 bits"}};
    } else {
      const double density = information_density(seq);
      const double b = bias(seq);
      report["density"] = {{"information_density", density}, {"bias", b}};
      summary << "information density " << fixed(density, 6) << ", bias " << b;
      if (a.min_density) {
        const bool ok = density >= *a.min_density;
        report["density"]["min_density"] = *a.min_density;
        report["density"]["pass"] = ok;
        pass = pass && ok;
        summary << (ok ? "  pass" : "  FAIL");
      }
      summary << '\n';
    }
  }

  if (all || a.suite == "nist") {
    BatteryOptions opts;
    opts.alpha = a.alpha;
    opts.n_subsequences = a.subsequences;
    opts.fallback_subsequences = a.fallback_subsequences;
    opts.fallback_alpha = a.fallback_alpha;
    opts.single_params = parse_m_overrides(a.m_overrides);
    opts.batch_params = parse_m_overrides(a.batch_m_overrides);
    opts.single_params[TestId::kNonOverlappingTemplate].template_index = a.template_index;
    opts.batch_params[TestId::kNonOverlappingTemplate].template_index = a.template_index;
    if (!a.tests.empty()) {
      opts.tests.clear();
      for (const auto& name : a.tests) {
        const auto id = parse_test_id(name);
        if (!id) throw UsageError("unknown test '" + name + "'");
        opts.tests.push_back(*id);
      }
    }
    const BatteryReport battery = run_nist_battery(seq, opts);
    report["nist"] = to_json(battery);
    pass = pass && battery.pass();
    print_battery(battery, summary);
  }

  report["pass"] = pass;
  if (a.out.empty()) {
    out << report.dump(2) << '\n';
  } else {
    write_json_file(a.out, report);
    out << summary.str() << (pass ? "all requested criteria pass\n" : "one or more criteria FAIL\n");
    manifest.outputs = {a.out};
    manifest.config = {{"suite", a.suite}, {"alpha", a.alpha}, {"subsequences", a.subsequences}};
    manifest.write_for(a.out);
  }
  return pass ? kExitPass : kExitFail;
}

// ------------------------------------------------------------- reproduce

struct ReproduceArgs {
  std::string out_dir = "reproduction";
  std::string state = "werner:0.8704";
  std::size_t samples_per_setting = 50000;
  std::uint64_t seed = 0;
};

int cmd_reproduce(const ReproduceArgs& a, std::ostream& out, std::ostream& err) {
  fs::create_directories(a.out_dir);
  const fs::path dir(a.out_dir);
  const std::string seed = std::to_string(a.seed);
  const std::string counts = (dir / "counts.csv").string();
  auto step = [&](std::vector<std::string> args) {
    out << "$ pqrng";
    for (const auto& s : args) out << ' ' << s;
    out << '\n';
    return run(args, out, err);
  };

  int rc = step({"simulate", "--state", a.state, "--samples-per-setting", std::to_string(a.samples_per_setting),
                 "--tau", "0.2", "--lag", "0.1", "--seed", seed, "--out", counts});
  if (rc != kExitPass) return rc;
  for (const std::string mode : {"x1", "x2"}) {
    rc = step({"genbits", "--counts", counts, "--mode", mode, "--format", "packed", "--out",
               (dir / (mode + ".bits")).string()});
    if (rc != kExitPass) return rc;
  }
  rc = step({"certify", "--counts", counts, "--out", (dir / "certify.json").string()});
  if (rc != kExitPass) return rc;

  bool pass = true;
  for (const std::string mode : {"x1", "x2"}) {
    std::vector<std::string> args{"test", "--bits", (dir / (mode + ".bits")).string(), "--suite", "all", "--out",
                                  (dir / (mode + ".report.json")).string()};
    if (mode == "x2") {
      args.push_back("--min-density");
      args.push_back("0.999");
    }
    const int t = step(args);
    if (t == kExitUsage) return t;
    pass = pass && t == kExitPass;
  }
  const json cert = read_json_file(dir / "certify.json");
  const double s = cert["chsh"]["S"].get<double>();
  out << "S = " << fixed(s, 4) << " +- " << fixed(cert["chsh"]["std_error"].get<double>(), 4)
      << ", CHSH min-entropy bound " << fixed(cert["chsh"]["min_entropy_per_event"].get<double>(), 4)
      << " bits/event\n";
  pass = pass && s > 2.0;
  out << (pass ? "reproduction: all criteria pass\n" : "reproduction: FAIL\n");
  return pass ? kExitPass : kExitFail;
}

// ------------------------------------------------------------------ replay

int cmd_replay(const std::string& manifest_path, std::ostream& out, std::ostream& err) {
  const json m = read_json_file(manifest_path);
  const auto args = m.at("argv").get<std::vector<std::string>>();
  if (args.empty() || args.front() == "replay") throw UsageError("manifest has no replayable command");
  return run(args, out, err);
}

}  // namespace

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnvVar)) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::char_traits<char>::length(env)) return v;
    } catch (const std::exception&) {
    }
  }
  return SourceConfig::kDefaultSeed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parity-based quantum random bit simulation and certification toolkit", "pqrng"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PQRNG_VERSION);

  const std::uint64_t seed = default_seed();

  SimulateArgs sim;
  sim.config.seed = seed;
  auto* simulate = app.add_subcommand("simulate", "Simulate CHSH coincidence counts");
  simulate->add_option("--state", sim.state, "phi-plus[:phase_deg] | werner:V | mixed | file:<path>");
  simulate->add_option("--samples-per-setting", sim.samples_per_setting)->check(CLI::PositiveNumber);
  simulate->add_option("--tau", sim.config.tau, "Counting interval [s]");
  simulate->add_option("--lag", sim.config.lag, "Dead time between intervals [s]");
  simulate->add_option("--rate", sim.config.pair_rate, "Generated pair rate [1/s]");
  simulate->add_option("--eta-a", sim.config.eta_a);
  simulate->add_option("--eta-b", sim.config.eta_b);
  simulate->add_option("--accidental-rate", sim.config.accidental_rate, "Per channel [1/s]");
  simulate->add_option("--seed", sim.config.seed);
  simulate->add_option("--angles", sim.angles, "a1,a2,b1,b2 in degrees")->delimiter(',');
  simulate->add_flag("--expected", sim.expected, "Write rounded mean counts (infinite-statistics limit)");
  simulate->add_option("--threads", sim.threads);
  simulate->add_option("--out", sim.out, "Counts CSV (stdout when omitted)");

  GenbitsArgs gen;
  auto* genbits = app.add_subcommand("genbits", "Extract parity bits from counts");
  genbits->add_option("--counts", gen.counts)->required();
  genbits->add_option("--mode", gen.mode)->check(CLI::IsMember({"x1", "x2"}));
  genbits->add_option("--format", gen.format)->check(CLI::IsMember({"ascii", "packed"}));
  genbits->add_option("--out", gen.out)->required();
  auto* tau_opt = genbits->add_option("--tau", gen.tau);
  auto* lag_opt = genbits->add_option("--lag", gen.lag);

  CertifyArgs cert;
  cert.seed = seed;
  auto* certify = app.add_subcommand("certify", "CHSH and tomography min-entropy bounds");
  certify->add_option("--counts", cert.counts);
  certify->add_option("--state", cert.state);
  certify->add_option("--pauli", cert.pauli, "16 comma-separated <s_i s_j>, index 4i+j over I,X,Y,Z");
  certify->add_option("--tomography-events", cert.tomography_events);
  certify->add_option("--seed", cert.seed);
  certify->add_option("--out", cert.out);

  TestArgs test;
  auto* test_cmd = app.add_subcommand("test", "Randomness tests on a bit file");
  test_cmd->add_option("--bits", test.bits)->required();
  test_cmd->add_option("--suite", test.suite, "borel | nist | density | all");
  test_cmd->add_option("--alpha", test.alpha);
  test_cmd->add_option("--subsequences", test.subsequences)->check(CLI::PositiveNumber);
  test_cmd->add_option("--fallback-subsequences", test.fallback_subsequences);
  test_cmd->add_option("--fallback-alpha", test.fallback_alpha);
  test_cmd->add_option("--m", test.m_overrides, "<test>=<m> for full-sequence runs");
  test_cmd->add_option("--batch-m", test.batch_m_overrides, "<test>=<m> for subsequence runs");
  test_cmd->add_option("--tests", test.tests, "Subset of tests")->delimiter(',');
  test_cmd->add_option("--template-index", test.template_index);
  test_cmd->add_option("--min-density", test.min_density, "Fail when the information density is lower");
  test_cmd->add_option("--out", test.out);

  ReproduceArgs repro;
  repro.seed = seed;
  auto* reproduce = app.add_subcommand("reproduce-paper", "Full-scale simulate, extract, certify and test");
  reproduce->add_option("--out-dir", repro.out_dir);
  reproduce->add_option("--state", repro.state);
  reproduce->add_option("--samples-per-setting", repro.samples_per_setting)->check(CLI::PositiveNumber);
  reproduce->add_option("--seed", repro.seed);

  std::string manifest;
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("--manifest", manifest)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(sim, args, out);
    if (*genbits) {
      gen.tau_given = tau_opt->count() > 0;
      gen.lag_given = lag_opt->count() > 0;
      return cmd_genbits(gen, args, out);
    }
    if (*certify) return cmd_certify(cert, args, out);
    if (*test_cmd) return cmd_test(test, args, out);
    if (*reproduce) return cmd_reproduce(repro, out, err);
    if (*replay) return cmd_replay(manifest, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidState& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace pqrng::cli
