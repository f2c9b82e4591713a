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

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "pqrng/bits/bit_sequence.hpp"
#include "pqrng/randtests/batch.hpp"
#include "pqrng/randtests/battery.hpp"
#include "pqrng/randtests/borel.hpp"
#include "pqrng/randtests/nist.hpp"
#include "pqrng/randtests/special.hpp"
#include "pqrng/sim/random.hpp"

namespace pqrng {
namespace {

// SplitMix64 outputs, most significant bit first. tests/oracles/nist_reference.py
// generates the same stream.
std::vector<std::uint8_t> splitmix_bits(std::uint64_t seed, std::size_t n) {
  std::vector<std::uint8_t> out;
  out.reserve(n + 64);
  std::uint64_t state = seed;
  while (out.size() < n) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z ^= z >> 31;
    for (int k = 63; k >= 0; --k) out.push_back(static_cast<std::uint8_t>((z >> k) & 1u));
  }
  out.resize(n);
  return out;
}

std::vector<std::uint8_t> mt_bits(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng() >> 63);
  return out;
}

std::vector<std::uint8_t> bits_of(const std::string& s) {
  std::vector<std::uint8_t> v;
  for (char c : s) v.push_back(c == '1');
  return v;
}

TEST(SpecialTest, Igamc) {
  EXPECT_NEAR(special::igamc(1.0, 2.0), std::exp(-2.0), 1e-15);
  EXPECT_DOUBLE_EQ(special::igamc(4.5, 0.0), 1.0);
  // Q(1/2, x) = erfc(sqrt(x)).
  EXPECT_NEAR(special::igamc(0.5, 1.7), std::erfc(std::sqrt(1.7)), 1e-14);
}

// ----- direct formula oracles for the two short worked examples

TEST(NistOracle, FrequencyShortExample) {
  const auto e = bits_of("1011010101");
  const double s_obs = std::abs(6.0 - 4.0) / std::sqrt(10.0);
  const double oracle = std::erfc(s_obs / std::numbers::sqrt2);
  EXPECT_NEAR(oracle, 0.5271, 1e-4);
  EXPECT_NEAR(nist::frequency(e), oracle, 1e-14);
}

TEST(NistOracle, RunsShortExample) {
  const auto e = bits_of("1001101011");
  const double pi = 0.6, v_obs = 7.0, n = 10.0;
  const double oracle =
      std::erfc(std::abs(v_obs - 2 * n * pi * (1 - pi)) / (2 * std::sqrt(2 * n) * pi * (1 - pi)));
  EXPECT_NEAR(oracle, 0.1472, 1e-4);
  EXPECT_NEAR(nist::runs(e), oracle, 1e-14);
}

TEST(NistTest, FrequencyOfZerosFails) {
  const std::vector<std::uint8_t> zeros(100, 0);
  EXPECT_LT(nist::frequency(zeros), 1e-15);
  const auto r = run_statistical_test(BitSequence(zeros), TestId::kFrequency);
  EXPECT_EQ(r.outcome, Outcome::kFail);
}

TEST(NistTest, RunsPrerequisite) {
  // Frequency prerequisite |pi - 1/2| >= 2/sqrt(n) forces p = 0.
  std::vector<std::uint8_t> e(100, 1);
  for (std::size_t i = 0; i < 20; ++i) e[5 * i] = 0;
  EXPECT_DOUBLE_EQ(nist::runs(e), 0.0);
  EXPECT_GT(nist::runs(bits_of("1111111101")), 0.0);
}

// ----- values frozen from tests/oracles/nist_reference.py

struct Frozen {
  std::size_t n;
  double frequency, block_frequency, runs, longest_run, cusum_f, cusum_b, dft, serial1, serial2,
      apen;
  std::size_t m_bf, m_serial, m_apen;
};

void check_frozen(const Frozen& f) {
  const auto e = splitmix_bits(2024, f.n);
  constexpr double tol = 1e-9;
  EXPECT_NEAR(nist::frequency(e), f.frequency, tol);
  EXPECT_NEAR(nist::block_frequency(e, f.m_bf), f.block_frequency, tol);
  EXPECT_NEAR(nist::runs(e), f.runs, tol);
  EXPECT_NEAR(nist::longest_run(e), f.longest_run, tol);
  const auto cs = nist::cumulative_sums(e);
  EXPECT_NEAR(cs[0], f.cusum_f, tol);
  EXPECT_NEAR(cs[1], f.cusum_b, tol);
  EXPECT_NEAR(nist::dft(e), f.dft, tol);
  const auto s = nist::serial(e, f.m_serial);
  EXPECT_NEAR(s[0], f.serial1, tol);
  EXPECT_NEAR(s[1], f.serial2, tol);
  EXPECT_NEAR(nist::approximate_entropy(e, f.m_apen), f.apen, tol);
}

TEST(NistOracle, ReferenceStreamShort) {
  check_frozen({5000, 0.18372898102393775, 0.7608020546059506, 0.8848965661829018, 0.9170556249376016,
                0.34018209931806026, 0.3581070729304914, 0.7952076118662074, 0.983059393176539,
                0.9028295305894042, 0.6404053233793731, 50, 10, 7});
}

TEST(NistOracle, ReferenceStreamLong) {
  check_frozen({400000, 0.24325864934797048, 0.07448655331827335, 0.07693917439417958,
                0.02696653142900164, 0.31495054410158674, 0.20480301659756128, 0.749567615602637,
                0.35227185982809267, 0.40808310950490534, 0.9252554555504284, 4000, 16, 10});
  const auto e = splitmix_bits(2024, 400000);
  EXPECT_NEAR(nist::rank(e), 0.40258395139658965, 1e-9);
  const auto templates = nist::aperiodic_templates(9);
  EXPECT_NEAR(nist::non_overlapping_template(e, templates[0]), 0.19607343892586473, 1e-9);
  EXPECT_NEAR(nist::universal(e), 0.201601832745695, 1e-9);
}

TEST(NistTest, AperiodicTemplates) {
  const auto t = nist::aperiodic_templates(9);
  EXPECT_EQ(t.size(), 148u);
  EXPECT_EQ(t.front(), bits_of("000000001"));
  EXPECT_EQ(nist::aperiodic_templates(2).size(), 2u);  // 01, 10
}

TEST(NistTest, Gf2Rank) {
  std::array<std::uint32_t, 32> id{};
  for (int i = 0; i < 32; ++i) id[i] = 1u << i;
  EXPECT_EQ(nist::gf2_rank(id), 32);
  id[5] = id[3] ^ id[7];
  EXPECT_EQ(nist::gf2_rank(id), 31);
  EXPECT_EQ(nist::gf2_rank({}), 0);
}

TEST(NistTest, DefaultParameters) {
  EXPECT_EQ(resolve_params(TestId::kBlockFrequency, 200000, {}).block_length, 2000u);
  EXPECT_EQ(resolve_params(TestId::kBlockFrequency, 2000, {}).block_length, 20u);
  EXPECT_EQ(resolve_params(TestId::kSerial, 200000, {}).block_length, 15u);
  EXPECT_EQ(resolve_params(TestId::kApproximateEntropy, 200000, {}).block_length, 10u);
  EXPECT_EQ(resolve_params(TestId::kApproximateEntropy, 8000, {}).block_length, 7u);
  TestParams explicit_m;
  explicit_m.block_length = 5;
  EXPECT_EQ(resolve_params(TestId::kSerial, 200000, explicit_m).block_length, 5u);
}

TEST(NistTest, ShortInputIsNotApplicable) {
  const BitSequence seq(splitmix_bits(1, 2000));
  for (TestId id : {TestId::kRank, TestId::kUniversal, TestId::kDft, TestId::kNonOverlappingTemplate}) {
    const auto r = run_statistical_test(seq, id);
    if (id == TestId::kDft) {
      EXPECT_TRUE(r.applicable());
    } else {
      EXPECT_EQ(r.outcome, Outcome::kNotApplicable) << test_name(id);
      EXPECT_FALSE(r.note.empty());
    }
  }
  EXPECT_EQ(run_statistical_test(BitSequence(splitmix_bits(1, 100)), TestId::kLongestRun).outcome,
            Outcome::kNotApplicable);
}

TEST(NistTest, NamesRoundTrip) {
  for (TestId id : kAllTests) EXPECT_EQ(parse_test_id(test_name(id)), id);
  EXPECT_FALSE(parse_test_id("bogus").has_value());
  EXPECT_EQ(p_value_names(TestId::kSerial).size(), 2u);
  EXPECT_EQ(p_value_names(TestId::kCumulativeSums).size(), 2u);
  EXPECT_EQ(p_value_names(TestId::kRank).size(), 1u);
}

TEST(NistProperty, ComplementInvariance) {
  for (std::uint64_t seed : {3u, 4u, 5u}) {
    const auto e = mt_bits(seed, 20000);
    std::vector<std::uint8_t> c(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) c[i] = 1 - e[i];
    EXPECT_DOUBLE_EQ(nist::frequency(e), nist::frequency(c));
    EXPECT_NEAR(nist::runs(e), nist::runs(c), 1e-12);
    const auto se = nist::serial(e, 8), sc = nist::serial(c, 8);
    EXPECT_NEAR(se[0], sc[0], 1e-12);
    EXPECT_NEAR(se[1], sc[1], 1e-12);
    EXPECT_NEAR(nist::approximate_entropy(e, 6), nist::approximate_entropy(c, 6), 1e-10);
    for (int m = 1; m <= 4; ++m) EXPECT_NEAR(borel_statistic(e, m), borel_statistic(c, m), 1e-15);
  }
}

TEST(NistProperty, PValuesInUnitInterval) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> len(128, 6000);
  for (int trial = 0; trial < 1000; ++trial) {
    // Mix fair, biased and structured inputs.
    const std::size_t n = len(rng);
    std::vector<std::uint8_t> e(n);
    const int kind = trial % 3;
    const double p1 = kind == 1 ? 0.3 : 0.5;
    std::bernoulli_distribution coin(p1);
    for (std::size_t i = 0; i < n; ++i) e[i] = kind == 2 ? static_cast<std::uint8_t>((i / 3) % 2) : coin(rng);
    const BitSequence seq(std::move(e));
    for (TestId id : kAllTests) {
      const auto r = run_statistical_test(seq, id);
      for (double p : r.p_values) {
        ASSERT_FALSE(std::isnan(p)) << test_name(id) << " n=" << n;
        ASSERT_GE(p, 0.0) << test_name(id);
        ASSERT_LE(p, 1.0) << test_name(id);
      }
    }
  }
}

TEST(NistProperty, Calibration) {
  // 200 reference subsequences per test; the failure fraction at alpha = 0.01
  // must stay inside [0, 0.05].
  const std::size_t count = 200;
  for (TestId id : kAllTests) {
    const std::size_t len = id == TestId::kUniversal ? 387840 : id == TestId::kRank ? 38912 : 20000;
    const std::size_t subs = id == TestId::kUniversal ? 40 : count;
    std::size_t fails = 0, total = 0;
    for (std::size_t s = 0; s < subs; ++s) {
      const auto e = mt_bits(10000 + s, len);
      const auto r = run_statistical_test(e, id, {}, 0.01);
      ASSERT_TRUE(r.applicable()) << test_name(id);
      for (double p : r.p_values) {
        ++total;
        fails += p < 0.01;
      }
    }
    EXPECT_LE(static_cast<double>(fails) / static_cast<double>(total), 0.05) << test_name(id);
  }
}

// ----- Borel normality

TEST(BorelTest, Examples) {
  EXPECT_DOUBLE_EQ(borel_statistic(bits_of("0101"), 1), 0.0);
  EXPECT_DOUBLE_EQ(borel_statistic(bits_of("0101"), 2), 0.75);
  EXPECT_DOUBLE_EQ(borel_statistic(std::vector<std::uint8_t>(64, 0), 1), 0.5);
  EXPECT_THROW(borel_statistic(bits_of("0101"), 0), std::invalid_argument);
  EXPECT_THROW(borel_statistic(bits_of("0101"), 5), std::invalid_argument);
}

TEST(BorelTest, Bounds) {
  EXPECT_NEAR(borel_bound(200000), 0.0094, 1e-4);
  EXPECT_NEAR(borel_bound(800000), 0.00495, 5e-5);
  EXPECT_EQ(borel_m_max(200000), 4);
  EXPECT_EQ(borel_m_max(800000), 4);
  EXPECT_NEAR(borel_bound(200000), std::sqrt(std::log2(200000.0) / 200000.0), 1e-15);
}

TEST(BorelTest, BiasedSequenceFails) {
  auto e = mt_bits(1, 100000);
  for (std::size_t i = 0; i < e.size(); i += 10) e[i] = 1;
  EXPECT_FALSE(borel_normality(e).pass);
}

TEST(BorelProperty, ShrinksWithLength) {
  const auto e = mt_bits(77, 1000000);
  const auto r = borel_normality(e);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.m_max, 4);
  for (const auto& [m, stat] : r.per_m) EXPECT_LT(stat, r.bound) << "m=" << m;
  const auto short_r = borel_normality(std::span<const std::uint8_t>(e).first(10000));
  EXPECT_GT(short_r.per_m.front().second, r.per_m.front().second);
}

// ----- batch mode

TEST(BatchTest, Thresholds) {
  EXPECT_NEAR(proportion_threshold(0.01, 100), 0.96015, 1e-5);
  EXPECT_EQ(required_passing(0.01, 100), 96u);
  EXPECT_NEAR(proportion_threshold(0.05, 20), 0.80379, 1e-5);
  EXPECT_EQ(required_passing(0.05, 20), 16u);
}

TEST(BatchTest, UniformityAllInOneBin) {
  const std::vector<double> p(100, 0.995);
  EXPECT_NEAR(uniformity_p_value(p), special::igamc(4.5, 450.0), 1e-300);
  EXPECT_LT(uniformity_p_value(p), 1e-80);
  std::vector<double> flat;
  for (int i = 0; i < 100; ++i) flat.push_back((i + 0.5) / 100.0);
  EXPECT_NEAR(uniformity_p_value(flat), 1.0, 1e-12);
}

TEST(BatchTest, ProportionAndUniformityAreIndependent) {
  // Alternating bits are perfectly balanced, so every Frequency p-value is 1.
  std::vector<std::uint8_t> alt(100 * 1000);
  for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = i % 2;
  const auto rows = batch_test(alt, TestId::kFrequency, {}, 100, 0.01);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].passing, 100u);
  EXPECT_LT(rows[0].uniformity_p, 1e-4);
  EXPECT_EQ(rows[0].outcome, Outcome::kFail);
}

TEST(BatchTest, ReferenceStreamPasses) {
  const auto e = mt_bits(5, 800000);
  for (TestId id : {TestId::kFrequency, TestId::kRuns, TestId::kSerial, TestId::kCumulativeSums}) {
    for (const auto& v : batch_test(e, id, {}, 100, 0.01)) {
      EXPECT_TRUE(v.pass()) << v.row << " " << v.passing << " " << v.uniformity_p;
      EXPECT_EQ(v.subsequence_length, 8000u);
    }
  }
}

TEST(BatchTest, RejectsBadArguments) {
  const auto e = mt_bits(5, 1000);
  EXPECT_THROW(batch_test(e, TestId::kFrequency, {}, 0, 0.01), std::invalid_argument);
  EXPECT_THROW(batch_test(e, TestId::kFrequency, {}, 10, 0.7), std::invalid_argument);
}

TEST(BatteryTest, FallbackToFewerSubsequences) {
  // 2e5 bits: rank needs 38912 per subsequence, which neither N = 100 nor
  // N = 20 provides; template needs 4160, which only N = 20 provides.
  const BitSequence seq(mt_bits(8, 200000));
  const auto report = run_nist_battery(seq);
  bool saw_template = false, saw_rank = false;
  for (const auto& b : report.batches) {
    if (b.test_id == TestId::kNonOverlappingTemplate) {
      saw_template = true;
      EXPECT_EQ(b.n_subsequences, 20u);
      EXPECT_DOUBLE_EQ(b.alpha, 0.05);
      EXPECT_TRUE(b.applicable());
    }
    if (b.test_id == TestId::kRank) {
      saw_rank = true;
      EXPECT_FALSE(b.applicable());
    }
  }
  EXPECT_TRUE(saw_template);
  EXPECT_TRUE(saw_rank);
  const auto json = to_json(report);
  EXPECT_TRUE(json.contains("tests"));
  EXPECT_EQ(json["batches"].size(), report.batches.size());
}

}  // namespace
}  // namespace pqrng
