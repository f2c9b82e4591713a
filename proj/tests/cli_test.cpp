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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "pqrng/bits/bit_io.hpp"
#include "pqrng/bits/extract.hpp"
#include "pqrng/cli/commands.hpp"
#include "pqrng/cli/state_spec.hpp"
#include "pqrng/quantum/states.hpp"
#include "pqrng/randtests/battery.hpp"
#include "pqrng/sim/acquisition.hpp"
#include "pqrng/sim/counts_io.hpp"

namespace pqrng::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pqrng_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SimulateToStdout) {
  const auto r = invoke({"simulate", "--state", "phi-plus", "--samples-per-setting", "1", "--seed", "1"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  std::istringstream is(r.out);
  const auto table = read_counts_csv(is);
  EXPECT_EQ(table.samples.size(), 4u);
}

TEST_F(CliTest, SimulateIsDeterministic) {
  const std::vector<std::string> base{"simulate", "--state", "werner:0.8704", "--samples-per-setting", "300",
                                      "--seed", "7", "--out"};
  auto a = base, b = base;
  a.push_back(path("a.csv"));
  b.push_back(path("b.csv"));
  ASSERT_EQ(invoke(a).code, kExitPass);
  ASSERT_EQ(invoke(b).code, kExitPass);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_TRUE(fs::exists(path("a.meta.json")));
  EXPECT_TRUE(fs::exists(path("a.csv.manifest.json")));
}

TEST_F(CliTest, CliMatchesLibrary) {
  ASSERT_EQ(invoke({"simulate", "--state", "werner:0.8704", "--samples-per-setting", "400", "--seed", "11",
                    "--out", path("c.csv")})
                .code,
            kExitPass);
  SourceConfig config = SourceConfig::defaults();
  config.seed = 11;
  const auto record = run_chsh_acquisition(config, werner(0.8704), ChshSettings::canonical(), 400);
  std::ifstream is(path("c.csv"));
  EXPECT_EQ(read_counts_csv(is).samples, record.samples);

  ASSERT_EQ(invoke({"genbits", "--counts", path("c.csv"), "--mode", "x2", "--format", "packed", "--out",
                    path("x2.bin")})
                .code,
            kExitPass);
  EXPECT_EQ(read_bits_file(path("x2.bin")), build_x2(record));

  const auto t = invoke({"test", "--bits", path("x2.bin"), "--suite", "nist", "--tests", "frequency,runs",
                         "--subsequences", "10"});
  ASSERT_NE(t.code, kExitUsage) << t.err;
  const json report = json::parse(t.out);
  BatteryOptions opts;
  opts.tests = {TestId::kFrequency, TestId::kRuns};
  opts.n_subsequences = 10;
  const auto direct = run_nist_battery(build_x2(record), opts);
  EXPECT_EQ(report["nist"], to_json(direct));
}

TEST_F(CliTest, GenbitsShapesAndThroughput) {
  ASSERT_EQ(invoke({"simulate", "--samples-per-setting", "25", "--out", path("r.csv")}).code, kExitPass);
  const auto g1 = invoke({"genbits", "--counts", path("r.csv"), "--mode", "x1", "--out", path("x1.txt")});
  ASSERT_EQ(g1.code, kExitPass) << g1.err;
  EXPECT_EQ(read_bits_file(path("x1.txt")).size(), 100u);
  const auto g2 = invoke({"genbits", "--counts", path("r.csv"), "--mode", "x2", "--out", path("x2.txt")});
  EXPECT_EQ(read_bits_file(path("x2.txt")).size(), 400u);
  EXPECT_NE(g2.out.find("13.33 bits/s"), std::string::npos) << g2.out;
}

TEST_F(CliTest, GenbitsReportsMalformedLine) {
  std::ofstream(path("bad.csv")) << kCountsCsvHeader << "\n0,0,22.5,1,2,3,4\n0,0,22.5,1,2\n";
  const auto r = invoke({"genbits", "--counts", path("bad.csv"), "--out", path("o.txt")});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, CertifyIdealCounts) {
  ASSERT_EQ(invoke({"simulate", "--state", "phi-plus", "--samples-per-setting", "2", "--rate", "1e15",
                    "--expected", "--out", path("ideal.csv")})
                .code,
            kExitPass);
  const auto r = invoke({"certify", "--counts", path("ideal.csv")});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["chsh"]["S"].get<double>(), 2.0 * std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(j["chsh"]["min_entropy_per_event"].get<double>(), 1.0, 1e-4);
}

TEST_F(CliTest, CertifyTomographyPaths) {
  // Werner coherence is V/(1+V); V = 0.44/0.56 gives C = 0.44.
  const auto r = invoke({"certify", "--state", "werner:" + std::to_string(0.44 / 0.56)});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["tomography"]["C"].get<double>(), 0.44, 1e-6);
  EXPECT_NEAR(j["tomography"]["min_entropy_per_event"].get<double>(), 0.4393, 1e-4);

  const auto p = invoke({"certify", "--pauli", "1,0,0,0,0,1,0,0,0,0,-1,0,0,0,0,1"});
  ASSERT_EQ(p.code, kExitPass) << p.err;
  EXPECT_NEAR(json::parse(p.out)["tomography"]["fidelity_phi_plus"].get<double>(), 1.0, 1e-9);
  EXPECT_EQ(invoke({"certify", "--pauli", "1,0,0"}).code, kExitUsage);
}

TEST_F(CliTest, CertifyMissingSettingBlock) {
  std::ofstream(path("partial.csv")) << kCountsCsvHeader << "\n0,0,22.5,5,1,1,5\n0,0,22.5,5,1,1,5\n";
  EXPECT_EQ(invoke({"certify", "--counts", path("partial.csv")}).code, kExitFail);
}

TEST_F(CliTest, TestSuites) {
  std::string alt;
  for (int i = 0; i < 128; ++i) alt += "01010101";
  std::ofstream(path("alt.txt")) << alt << '\n';
  const auto d = invoke({"test", "--bits", path("alt.txt"), "--suite", "density"});
  ASSERT_EQ(d.code, kExitPass) << d.err;
  EXPECT_DOUBLE_EQ(json::parse(d.out)["density"]["information_density"].get<double>(), 0.0);
  EXPECT_EQ(invoke({"test", "--bits", path("alt.txt"), "--suite", "density", "--min-density", "0.5"}).code,
            kExitFail);

  // Too short for the long tests: reported n/a rather than failing them.
  const auto n = invoke({"test", "--bits", path("alt.txt"), "--suite", "nist", "--tests", "rank,universal"});
  EXPECT_EQ(n.code, kExitPass) << n.out;
  for (const auto& t : json::parse(n.out)["nist"]["tests"]) EXPECT_EQ(t["outcome"], "n/a");

  EXPECT_EQ(invoke({"test", "--bits", path("alt.txt"), "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"test", "--bits", path("alt.txt"), "--m", "bogus=3"}).code, kExitUsage);
}

TEST_F(CliTest, TestBorelBoundReported) {
  ASSERT_EQ(invoke({"simulate", "--state", "werner:0.8704", "--samples-per-setting", "50000", "--out",
                    path("full.csv")})
                .code,
            kExitPass);
  ASSERT_EQ(invoke({"genbits", "--counts", path("full.csv"), "--mode", "x2", "--format", "packed", "--out",
                    path("x2.bin")})
                .code,
            kExitPass);
  const auto r = invoke({"test", "--bits", path("x2.bin"), "--suite", "borel"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["borel"]["bound"].get<double>(), 0.00495, 5e-5);
  EXPECT_EQ(j["length"].get<std::size_t>(), 800000u);
}

TEST_F(CliTest, NistThresholdApplied) {
  std::mt19937_64 rng(3);
  std::string bits;
  for (int i = 0; i < 100000; ++i) bits += (rng() >> 63) ? '1' : '0';
  std::ofstream(path("r.txt")) << bits;
  const auto r = invoke({"test", "--bits", path("r.txt"), "--suite", "nist", "--alpha", "0.01", "--subsequences",
                         "100", "--tests", "frequency"});
  const json j = json::parse(r.out);
  const auto& b = j["nist"]["batches"][0];
  EXPECT_NEAR(b["n_min"].get<double>(), 0.96015, 1e-5);
  EXPECT_EQ(b["required_passing"].get<int>(), 96);
}

TEST_F(CliTest, ReplayReproducesOutput) {
  ASSERT_EQ(invoke({"simulate", "--samples-per-setting", "50", "--seed", "5", "--out", path("s.csv")}).code,
            kExitPass);
  const std::string first = slurp(path("s.csv"));
  fs::remove(path("s.csv"));
  ASSERT_EQ(invoke({"replay", "--manifest", path("s.csv.manifest.json")}).code, kExitPass);
  EXPECT_EQ(slurp(path("s.csv")), first);
}

TEST_F(CliTest, SeedFromEnvironment) {
  ::setenv(kSeedEnvVar, "1234", 1);
  EXPECT_EQ(default_seed(), 1234u);
  const auto a = invoke({"simulate", "--samples-per-setting", "3"});
  ::unsetenv(kSeedEnvVar);
  EXPECT_EQ(default_seed(), 42u);
  const auto b = invoke({"simulate", "--samples-per-setting", "3", "--seed", "1234"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"simulate", "--state", "ghz"}).code, kExitUsage);
  EXPECT_EQ(invoke({"simulate", "--state", "werner:2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"genbits", "--counts", "x.csv"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitPass);
}

TEST(StateSpecTest, Parses) {
  EXPECT_NEAR((parse_state_spec("phi-plus").matrix() - bell_phi_plus<double>().matrix()).norm(), 0, 1e-15);
  EXPECT_NEAR((parse_state_spec("phi-plus:180").matrix() - bell_phi_plus<double>(180).matrix()).norm(), 0,
              1e-15);
  EXPECT_NEAR((parse_state_spec("werner:0.5").matrix() - werner(0.5).matrix()).norm(), 0, 1e-15);
  EXPECT_THROW(parse_state_spec("werner:x"), std::invalid_argument);
}

TEST(StateSpecTest, FileRoundTrip) {
  const auto p = fs::temp_directory_path() / "pqrng_state_roundtrip.json";
  const auto rho = bell_phi_plus<double>(37.0);
  write_state_file(p, rho);
  EXPECT_NEAR((parse_state_spec("file:" + p.string()).matrix() - rho.matrix()).norm(), 0.0, 1e-15);
  fs::remove(p);
}

}  // namespace
}  // namespace pqrng::cli
