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

#include "pqrng/randtests/nist.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numeric>

#include <unsupported/Eigen/FFT>

#include "pqrng/randtests/special.hpp"

namespace pqrng {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

std::size_t floor_log2(std::size_t n) { return n == 0 ? 0 : std::bit_width(n) - 1; }

std::size_t ones(std::span<const std::uint8_t> bits) {
  return std::accumulate(bits.begin(), bits.end(), std::size_t{0});
}

void require_length(std::span<const std::uint8_t> bits, std::size_t min, const char* test) {
  if (bits.size() < min) {
    throw NotApplicable(std::string(test) + " needs at least " + std::to_string(min) +
                        " bits, got " + std::to_string(bits.size()));
  }
}

// Overlapping m-bit pattern counts with wraparound (the sequence is
// extended by its first m-1 bits).
std::vector<std::uint64_t> cyclic_pattern_counts(std::span<const std::uint8_t> bits, std::size_t m) {
  std::vector<std::uint64_t> counts(std::size_t{1} << m, 0);
  if (m == 0) {
    counts[0] = bits.size();
    return counts;
  }
  const std::size_t n = bits.size();
  const std::size_t mask = (std::size_t{1} << m) - 1;
  std::size_t v = 0;
  for (std::size_t i = 0; i < m - 1; ++i) v = (v << 1) | bits[i % n];
  for (std::size_t i = 0; i < n; ++i) {
    v = ((v << 1) | bits[(i + m - 1) % n]) & mask;
    ++counts[v];
  }
  return counts;
}

double psi_squared(std::span<const std::uint8_t> bits, std::size_t m) {
  if (m == 0) return 0.0;
  const auto counts = cyclic_pattern_counts(bits, m);
  const double n = static_cast<double>(bits.size());
  double sum = 0.0;
  for (std::uint64_t c : counts) sum += static_cast<double>(c) * static_cast<double>(c);
  return std::ldexp(sum, static_cast<int>(m)) / n - n;
}

double phi(std::span<const std::uint8_t> bits, std::size_t m) {
  if (m == 0) return 0.0;
  const auto counts = cyclic_pattern_counts(bits, m);
  const double n = static_cast<double>(bits.size());
  double sum = 0.0;
  for (std::uint64_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    sum += p * std::log(p);
  }
  return sum;
}

double clamp_p(double p) {
  if (std::isnan(p)) return 0.0;
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

std::string_view test_name(TestId id) {
  switch (id) {
    case TestId::kFrequency: return "frequency";
    case TestId::kBlockFrequency: return "block-frequency";
    case TestId::kRuns: return "runs";
    case TestId::kLongestRun: return "longest-run";
    case TestId::kCumulativeSums: return "cumulative-sums";
    case TestId::kDft: return "dft";
    case TestId::kSerial: return "serial";
    case TestId::kApproximateEntropy: return "approximate-entropy";
    case TestId::kRank: return "rank";
    case TestId::kNonOverlappingTemplate: return "template";
    case TestId::kUniversal: return "universal";
  }
  return "unknown";
}

std::optional<TestId> parse_test_id(std::string_view name) {
  for (TestId id : kAllTests) {
    if (test_name(id) == name) return id;
  }
  return std::nullopt;
}

std::vector<std::string> p_value_names(TestId id) {
  switch (id) {
    case TestId::kCumulativeSums: return {"cumulative-sums-forward", "cumulative-sums-backward"};
    case TestId::kSerial: return {"serial-1", "serial-2"};
    default: return {std::string(test_name(id))};
  }
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kNotApplicable: return "n/a";
  }
  return "unknown";
}

TestParams resolve_params(TestId id, std::size_t n, TestParams params) {
  if (params.block_length != 0) return params;
  const auto lg = static_cast<std::ptrdiff_t>(floor_log2(n));
  switch (id) {
    case TestId::kBlockFrequency:
      params.block_length = std::max<std::size_t>(20, (n + 99) / 100);
      break;
    case TestId::kSerial:
      params.block_length = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(lg - 2, 2, 16));
      break;
    case TestId::kApproximateEntropy:
      params.block_length = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(lg - 5, 1, 10));
      break;
    case TestId::kNonOverlappingTemplate:
      params.block_length = kTemplateLength;
      break;
    default:
      break;
  }
  return params;
}

std::size_t minimum_length(TestId id, const TestParams& p) {
  switch (id) {
    case TestId::kFrequency: return 1;
    case TestId::kBlockFrequency: return std::max<std::size_t>(p.block_length, 1);
    case TestId::kRuns: return 2;
    case TestId::kLongestRun: return kLongestRunMinLength;
    case TestId::kCumulativeSums: return 1;
    case TestId::kDft: return 1000;
    case TestId::kSerial: return std::size_t{1} << (p.block_length + 2);
    case TestId::kApproximateEntropy: return std::size_t{1} << (p.block_length + 5);
    case TestId::kRank: return kRankMinLength;
    case TestId::kNonOverlappingTemplate:
      // Expected matches per block, (M - m + 1) / 2^m, must be at least one.
      return kTemplateBlocks * ((std::size_t{1} << p.block_length) + p.block_length - 1);
    case TestId::kUniversal: return kUniversalMinLength;
  }
  return 0;
}

TestResult run_statistical_test(std::span<const std::uint8_t> bits, TestId id, TestParams params,
                                double alpha) {
  TestResult r;
  r.test_id = id;
  r.alpha = alpha;
  r.params = resolve_params(id, bits.size(), params);
  try {
    if (bits.size() < minimum_length(id, r.params)) {
      throw NotApplicable(std::string(test_name(id)) + " needs at least " +
                          std::to_string(minimum_length(id, r.params)) + " bits");
    }
    switch (id) {
      case TestId::kFrequency: r.p_values = {nist::frequency(bits)}; break;
      case TestId::kBlockFrequency:
        r.p_values = {nist::block_frequency(bits, r.params.block_length)};
        break;
      case TestId::kRuns: r.p_values = {nist::runs(bits)}; break;
      case TestId::kLongestRun: r.p_values = {nist::longest_run(bits)}; break;
      case TestId::kCumulativeSums: {
        const auto p = nist::cumulative_sums(bits);
        r.p_values = {p[0], p[1]};
        break;
      }
      case TestId::kDft: r.p_values = {nist::dft(bits)}; break;
      case TestId::kSerial: {
        const auto p = nist::serial(bits, r.params.block_length);
        r.p_values = {p[0], p[1]};
        break;
      }
      case TestId::kApproximateEntropy:
        r.p_values = {nist::approximate_entropy(bits, r.params.block_length)};
        break;
      case TestId::kRank: r.p_values = {nist::rank(bits)}; break;
      case TestId::kNonOverlappingTemplate: {
        const auto templates = nist::aperiodic_templates(r.params.block_length);
        if (r.params.template_index >= templates.size()) {
          throw std::invalid_argument("template index out of range");
        }
        r.p_values = {nist::non_overlapping_template(bits, templates[r.params.template_index])};
        break;
      }
      case TestId::kUniversal: r.p_values = {nist::universal(bits)}; break;
    }
  } catch (const NotApplicable& e) {
    r.p_values.clear();
    r.outcome = Outcome::kNotApplicable;
    r.note = e.what();
    return r;
  }
  const bool ok = std::all_of(r.p_values.begin(), r.p_values.end(), [&](double p) { return p >= alpha; });
  r.outcome = ok ? Outcome::kPass : Outcome::kFail;
  return r;
}

TestResult run_statistical_test(const BitSequence& seq, TestId id, TestParams params, double alpha) {
  return run_statistical_test(seq.bits(), id, params, alpha);
}

namespace nist {

double frequency(std::span<const std::uint8_t> bits) {
  require_length(bits, 1, "frequency");
  const double n = static_cast<double>(bits.size());
  const double s = 2.0 * static_cast<double>(ones(bits)) - n;
  const double s_obs = std::fabs(s) / std::sqrt(n);
  return clamp_p(special::erfc(s_obs / kSqrt2));
}

double block_frequency(std::span<const std::uint8_t> bits, std::size_t block) {
  if (block == 0) throw NotApplicable("block frequency needs M >= 1");
  const std::size_t n_blocks = bits.size() / block;
  if (n_blocks == 0) throw NotApplicable("block frequency needs at least one full block");
  double chi2 = 0.0;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    const double pi = static_cast<double>(ones(bits.subspan(b * block, block))) / static_cast<double>(block);
    chi2 += (pi - 0.5) * (pi - 0.5);
  }
  chi2 *= 4.0 * static_cast<double>(block);
  return clamp_p(special::igamc(static_cast<double>(n_blocks) / 2.0, chi2 / 2.0));
}

double runs(std::span<const std::uint8_t> bits) {
  require_length(bits, 2, "runs");
  const double n = static_cast<double>(bits.size());
  const double pi = static_cast<double>(ones(bits)) / n;
  // Frequency prerequisite: a grossly biased sequence gets p = 0.
  if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(n)) return 0.0;
  std::size_t v = 1;
  for (std::size_t k = 1; k < bits.size(); ++k) v += bits[k] != bits[k - 1];
  const double num = std::fabs(static_cast<double>(v) - 2.0 * n * pi * (1.0 - pi));
  const double den = 2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi);
  return clamp_p(special::erfc(num / den));
}

double longest_run(std::span<const std::uint8_t> bits) {
  require_length(bits, kLongestRunMinLength, "longest run");
  const std::size_t n = bits.size();
  std::size_t block;
  std::size_t v_min;
  std::vector<double> pi;
  if (n < 6272) {
    block = 8;
    v_min = 1;
    pi = {0.21484375, 0.3671875, 0.23046875, 0.1875};
  } else if (n < 750000) {
    block = 128;
    v_min = 4;
    pi = {0.1174035788, 0.242955959, 0.249363483, 0.17517706, 0.102701071, 0.112398847};
  } else {
    block = 10000;
    v_min = 10;
    pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
  }
  const std::size_t k_classes = pi.size();
  const std::size_t n_blocks = n / block;
  std::vector<double> nu(k_classes, 0.0);
  for (std::size_t b = 0; b < n_blocks; ++b) {
    std::size_t run = 0, longest = 0;
    for (std::size_t i = 0; i < block; ++i) {
      if (bits[b * block + i]) {
        longest = std::max(longest, ++run);
      } else {
        run = 0;
      }
    }
    const std::size_t cls = std::clamp(longest, v_min, v_min + k_classes - 1) - v_min;
    nu[cls] += 1.0;
  }
  double chi2 = 0.0;
  const double nb = static_cast<double>(n_blocks);
  for (std::size_t i = 0; i < k_classes; ++i) {
    chi2 += (nu[i] - nb * pi[i]) * (nu[i] - nb * pi[i]) / (nb * pi[i]);
  }
  return clamp_p(special::igamc(static_cast<double>(k_classes - 1) / 2.0, chi2 / 2.0));
}

namespace {

double cusum_p(std::int64_t n, std::int64_t z) {
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double zd = static_cast<double>(z);
  // Summation bounds use truncating integer division, as the reference code.
  double sum1 = 0.0;
  for (std::int64_t k = (-n / z + 1) / 4; k <= (n / z - 1) / 4; ++k) {
    sum1 += special::normal_cdf(static_cast<double>(4 * k + 1) * zd / sqrt_n) -
            special::normal_cdf(static_cast<double>(4 * k - 1) * zd / sqrt_n);
  }
  double sum2 = 0.0;
  for (std::int64_t k = (-n / z - 3) / 4; k <= (n / z - 1) / 4; ++k) {
    sum2 += special::normal_cdf(static_cast<double>(4 * k + 3) * zd / sqrt_n) -
            special::normal_cdf(static_cast<double>(4 * k + 1) * zd / sqrt_n);
  }
  return clamp_p(1.0 - sum1 + sum2);
}

}  // namespace

std::array<double, 2> cumulative_sums(std::span<const std::uint8_t> bits) {
  require_length(bits, 1, "cumulative sums");
  const auto n = static_cast<std::int64_t>(bits.size());
  std::int64_t s = 0, fwd = 0;
  for (std::uint8_t b : bits) {
    s += b ? 1 : -1;
    fwd = std::max(fwd, s < 0 ? -s : s);
  }
  std::int64_t r = 0, bwd = 0;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    r += *it ? 1 : -1;
    bwd = std::max(bwd, r < 0 ? -r : r);
  }
  return {cusum_p(n, fwd), cusum_p(n, bwd)};
}

double dft(std::span<const std::uint8_t> bits) {
  require_length(bits, 2, "dft");
  const std::size_t n = bits.size();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = bits[i] ? 1.0 : -1.0;
  std::vector<std::complex<double>> spectrum;
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, x);
  const double nd = static_cast<double>(n);
  const double threshold = std::sqrt(std::log(1.0 / 0.05) * nd);
  const double n0 = 0.95 * nd / 2.0;
  std::size_t n1 = 0;
  for (std::size_t k = 0; k < n / 2; ++k) n1 += std::abs(spectrum[k]) < threshold;
  const double d = (static_cast<double>(n1) - n0) / std::sqrt(nd * 0.95 * 0.05 / 4.0);
  return clamp_p(special::erfc(std::fabs(d) / kSqrt2));
}

std::array<double, 2> serial(std::span<const std::uint8_t> bits, std::size_t m) {
  if (m < 2 || m > 24) throw NotApplicable("serial needs 2 <= m <= 24");
  require_length(bits, std::size_t{1} << (m + 2), "serial");
  const double psi_m = psi_squared(bits, m);
  const double psi_m1 = psi_squared(bits, m - 1);
  const double psi_m2 = psi_squared(bits, m - 2);
  const double del1 = psi_m - psi_m1;
  const double del2 = psi_m - 2.0 * psi_m1 + psi_m2;
  return {clamp_p(special::igamc(std::ldexp(1.0, static_cast<int>(m) - 2), del1 / 2.0)),
          clamp_p(special::igamc(std::ldexp(1.0, static_cast<int>(m) - 3), del2 / 2.0))};
}

double approximate_entropy(std::span<const std::uint8_t> bits, std::size_t m) {
  if (m < 1 || m > 20) throw NotApplicable("approximate entropy needs 1 <= m <= 20");
  require_length(bits, std::size_t{1} << (m + 5), "approximate entropy");
  const double n = static_cast<double>(bits.size());
  const double ap_en = phi(bits, m) - phi(bits, m + 1);
  const double chi2 = 2.0 * n * (std::log(2.0) - ap_en);
  return clamp_p(special::igamc(std::ldexp(1.0, static_cast<int>(m) - 1), chi2 / 2.0));
}

int gf2_rank(std::array<std::uint32_t, 32> rows) {
  int rank = 0;
  for (int col = 31; col >= 0 && rank < 32; --col) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    int pivot = -1;
    for (int r = rank; r < 32; ++r) {
      if (rows[r] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < 32; ++r) {
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Probability that a random 32x32 GF(2) matrix has rank r.
double rank_probability(int r) {
  constexpr int m = 32, q = 32;
  double product = 1.0;
  for (int i = 0; i < r; ++i) {
    product *= (1.0 - std::ldexp(1.0, i - q)) * (1.0 - std::ldexp(1.0, i - m)) /
               (1.0 - std::ldexp(1.0, i - r));
  }
  return std::ldexp(product, r * (q + m - r) - m * q);
}

}  // namespace

double rank(std::span<const std::uint8_t> bits) {
  require_length(bits, kRankMinLength, "rank");
  const std::size_t n_matrices = bits.size() / 1024;
  const double p32 = rank_probability(32);
  const double p31 = rank_probability(31);
  const double p30 = 1.0 - p32 - p31;
  double f32 = 0.0, f31 = 0.0;
  for (std::size_t k = 0; k < n_matrices; ++k) {
    std::array<std::uint32_t, 32> rows{};
    for (std::size_t i = 0; i < 32; ++i) {
      std::uint32_t row = 0;
      for (std::size_t j = 0; j < 32; ++j) row = (row << 1) | bits[k * 1024 + i * 32 + j];
      rows[i] = row;
    }
    const int r = gf2_rank(rows);
    if (r == 32) f32 += 1.0;
    else if (r == 31) f31 += 1.0;
  }
  const double nm = static_cast<double>(n_matrices);
  const double f30 = nm - f32 - f31;
  const double chi2 = (f32 - p32 * nm) * (f32 - p32 * nm) / (p32 * nm) +
                      (f31 - p31 * nm) * (f31 - p31 * nm) / (p31 * nm) +
                      (f30 - p30 * nm) * (f30 - p30 * nm) / (p30 * nm);
  return clamp_p(std::exp(-chi2 / 2.0));
}

std::vector<std::vector<std::uint8_t>> aperiodic_templates(std::size_t m) {
  if (m < 2 || m > 16) throw std::invalid_argument("template length must be 2..16");
  std::vector<std::vector<std::uint8_t>> out;
  for (std::size_t v = 0; v < (std::size_t{1} << m); ++v) {
    std::vector<std::uint8_t> t(m);
    for (std::size_t i = 0; i < m; ++i) t[i] = (v >> (m - 1 - i)) & 1u;
    bool aperiodic = true;
    for (std::size_t shift = 1; shift < m && aperiodic; ++shift) {
      if (std::equal(t.begin(), t.end() - static_cast<std::ptrdiff_t>(shift),
                     t.begin() + static_cast<std::ptrdiff_t>(shift))) {
        aperiodic = false;
      }
    }
    if (aperiodic) out.push_back(std::move(t));
  }
  return out;
}

double non_overlapping_template(std::span<const std::uint8_t> bits,
                                std::span<const std::uint8_t> templ, std::size_t blocks) {
  const std::size_t m = templ.size();
  if (m < 2 || m > 16 || blocks == 0) throw NotApplicable("template length must be 2..16");
  const std::size_t block = bits.size() / blocks;
  if (block < m) throw NotApplicable("template test blocks shorter than the template");
  const double mu = static_cast<double>(block - m + 1) / std::ldexp(1.0, static_cast<int>(m));
  const double sigma2 = static_cast<double>(block) *
                        (1.0 / std::ldexp(1.0, static_cast<int>(m)) -
                         static_cast<double>(2 * m - 1) / std::ldexp(1.0, static_cast<int>(2 * m)));
  double chi2 = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto sub = bits.subspan(b * block, block);
    std::size_t w = 0;
    std::size_t i = 0;
    while (i + m <= block) {
      if (std::equal(templ.begin(), templ.end(), sub.begin() + static_cast<std::ptrdiff_t>(i))) {
        ++w;
        i += m;
      } else {
        ++i;
      }
    }
    chi2 += (static_cast<double>(w) - mu) * (static_cast<double>(w) - mu) / sigma2;
  }
  return clamp_p(special::igamc(static_cast<double>(blocks) / 2.0, chi2 / 2.0));
}

namespace {

struct UniversalRow {
  std::size_t min_n;
  int l;
  double expected;
  double variance;
};

constexpr std::array<UniversalRow, 11> kUniversalTable = {{
    {387840, 6, 5.2177052, 2.954},
    {904960, 7, 6.1962507, 3.125},
    {2068480, 8, 7.1836656, 3.238},
    {4654080, 9, 8.1764248, 3.311},
    {10342400, 10, 9.1723243, 3.356},
    {22753280, 11, 10.170032, 3.384},
    {49643520, 12, 11.168765, 3.401},
    {107560960, 13, 12.168070, 3.410},
    {231669760, 14, 13.167693, 3.416},
    {496435200, 15, 14.167488, 3.419},
    {1059061760, 16, 15.167379, 3.421},
}};

}  // namespace

double universal(std::span<const std::uint8_t> bits) {
  require_length(bits, kUniversalMinLength, "universal");
  const std::size_t n = bits.size();
  const UniversalRow* row = &kUniversalTable[0];
  for (const auto& r : kUniversalTable) {
    if (n >= r.min_n) row = &r;
  }
  const auto l = static_cast<std::size_t>(row->l);
  const std::size_t q = 10 * (std::size_t{1} << l);
  const std::size_t k = n / l - q;

  auto block_value = [&](std::size_t i) {  // 1-based block index
    std::size_t v = 0;
    for (std::size_t j = 0; j < l; ++j) v = (v << 1) | bits[(i - 1) * l + j];
    return v;
  };

  std::vector<std::size_t> last(std::size_t{1} << l, 0);
  for (std::size_t i = 1; i <= q; ++i) last[block_value(i)] = i;
  double sum = 0.0;
  for (std::size_t i = q + 1; i <= q + k; ++i) {
    const std::size_t v = block_value(i);
    sum += std::log2(static_cast<double>(i - last[v]));
    last[v] = i;
  }
  const double fn = sum / static_cast<double>(k);
  const double ld = static_cast<double>(l);
  const double c = 0.7 - 0.8 / ld + (4.0 + 32.0 / ld) * std::pow(static_cast<double>(k), -3.0 / ld) / 15.0;
  const double sigma = c * std::sqrt(row->variance / static_cast<double>(k));
  return clamp_p(special::erfc(std::fabs(fn - row->expected) / (kSqrt2 * sigma)));
}

}  // namespace nist
}  // namespace pqrng
