// Copyright 2026 The emojilab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "emojilab/error.hpp"
#include "emojilab/stats/stats.hpp"

using namespace emojilab;
using namespace emojilab::stats;

namespace {

double mean_of(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

}  // namespace

TEST(Quantile, Type7) {
  const std::vector<double> x = {1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(quantile_sorted(x, 0.0), 1);
  EXPECT_DOUBLE_EQ(quantile_sorted(x, 1.0), 4);
  EXPECT_DOUBLE_EQ(quantile_sorted(x, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(quantile_sorted(x, 0.25), 1.75);
}

TEST(Bootstrap, MeanIntervalContainsTruth) {
  const std::vector<double> data = {1, 2, 3};
  const auto est = bootstrap(mean_of, data, {.master_seed = 3});
  EXPECT_DOUBLE_EQ(est.point, 2.0);
  EXPECT_LE(est.lo, 2.0);
  EXPECT_GE(est.hi, 2.0);
  EXPECT_EQ(est.replicates.count, 1000u);
}

TEST(Bootstrap, SingleReplicateIsDegenerate) {
  const std::vector<double> data = {1, 5, 9, 11};
  const auto est = bootstrap(mean_of, data, {.n_replicates = 1, .master_seed = 8});
  EXPECT_EQ(est.lo, est.hi);
}

TEST(Bootstrap, DeterministicAcrossThreadCounts) {
  std::vector<double> data(50);
  std::iota(data.begin(), data.end(), 0.0);
  const auto a = bootstrap(mean_of, data, {.master_seed = 11, .threads = 1});
  const auto b = bootstrap(mean_of, data, {.master_seed = 11, .threads = 4});
  EXPECT_EQ(a.lo, b.lo);
  EXPECT_EQ(a.hi, b.hi);
  EXPECT_EQ(a.replicates.mean, b.replicates.mean);
}

TEST(Bootstrap, WiderLevelContainsNarrower) {
  std::vector<double> data(40);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = (i * 37 % 11) * 0.5;
  const auto a = bootstrap(mean_of, data, {.level = 0.95, .master_seed = 2});
  const auto b = bootstrap(mean_of, data, {.level = 0.99, .master_seed = 2});
  EXPECT_LE(b.lo, a.lo);
  EXPECT_GE(b.hi, a.hi);
}

TEST(Resampler, StratifiedKeepsComposition) {
  const std::vector<int> strata = {0, 0, 0, 1, 1, 0, 1};
  const std::vector<std::string> names = {"neg", "pos"};
  const auto r = Resampler::stratified(strata, names);
  Rng rng(1);
  std::vector<std::size_t> idx;
  for (int t = 0; t < 50; ++t) {
    r.draw(rng, idx);
    int pos = 0;
    for (auto i : idx) pos += strata[i];
    EXPECT_EQ(idx.size(), strata.size());
    EXPECT_EQ(pos, 3);
  }
}

TEST(Resampler, EmptyStratumIsNamed) {
  const std::vector<int> strata = {0, 0};
  const std::vector<std::string> names = {"neg", "pos"};
  try {
    Resampler::stratified(strata, names);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("pos"), std::string::npos);
  }
}

TEST(Resampler, MonthBlocksStayWholeAndOrdered) {
  const std::vector<std::int64_t> months = {5, 5, 5, 6, 6, 7, 7, 7, 7};
  const auto r = Resampler::blocks(months);
  Rng rng(4);
  std::vector<std::size_t> idx;
  for (int t = 0; t < 100; ++t) {
    r.draw(rng, idx);
    std::size_t i = 0;
    while (i < idx.size()) {
      const auto m = months[idx[i]];
      std::size_t j = i;
      while (j < idx.size() && months[idx[j]] == m && (j == i || idx[j] == idx[j - 1] + 1)) ++j;
      const auto block_len = static_cast<std::size_t>(std::count(months.begin(), months.end(), m));
      ASSERT_EQ(j - i, block_len) << "month " << m << " split";
      i = j;
    }
  }
}

TEST(Permutation, AddOneBoundAndRange) {
  const double p = permutation_test(
      100.0, [](std::uint64_t seed) { return Rng(seed).uniform(); }, 999,
      Tail::kGreater, 1);
  EXPECT_DOUBLE_EQ(p, 1.0 / 1000);
  const double q = permutation_test(
      -5.0, [](std::uint64_t seed) { return Rng(seed).uniform(); }, 9,
      Tail::kGreater, 1);
  EXPECT_DOUBLE_EQ(q, 1.0);
  EXPECT_THROW(permutation_test(0.0, [](std::uint64_t) { return 0.0; }, 0,
                                Tail::kGreater, 1),
               InputError);
}

TEST(Permutation, TwoSidedUsesMagnitudes) {
  const std::vector<double> nulls = {-3, 1, 2, -0.5};
  EXPECT_DOUBLE_EQ(permutation_p_value(2.5, nulls, Tail::kTwoSided), 2.0 / 5);
  EXPECT_DOUBLE_EQ(permutation_p_value(2.5, nulls, Tail::kGreater), 1.0 / 5);
}

TEST(Ks, DetectsNonUniformity) {
  std::vector<double> uniform, skewed;
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const double u = rng.uniform();
    uniform.push_back(u);
    skewed.push_back(u * u);
  }
  EXPECT_GT(ks_uniform(uniform).p_value, 0.01);
  EXPECT_LT(ks_uniform(skewed).p_value, 1e-6);
}

TEST(Ks, TailKnownValues) {
  // Kolmogorov distribution: P(K > 1.358) ~ 0.05, P(K > 1.628) ~ 0.01.
  EXPECT_NEAR(kolmogorov_tail(1.3581), 0.05, 5e-4);
  EXPECT_NEAR(kolmogorov_tail(1.6276), 0.01, 5e-4);
}

TEST(Agreement, IdenticalComplementaryPartial) {
  const std::vector<int> a = {1, 0, 1, 1, 0, 0, 1, 0, 1, 1};
  std::vector<int> c(a.size()), partial = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = 1 - a[i];
  partial[0] = 1 - partial[0];
  partial[1] = 1 - partial[1];
  const auto m = agreement_matrix({{"a", a}, {"a2", a}, {"c", c}, {"p", partial}},
                                  {"a", "a2", "c", "p"});
  EXPECT_DOUBLE_EQ(m.agreement[0][1], 1.0);
  EXPECT_DOUBLE_EQ(m.agreement[0][2], 0.0);
  EXPECT_DOUBLE_EQ(m.agreement[0][3], 0.8);
  EXPECT_EQ(m.names.back(), "majority");
}

TEST(Agreement, MajorityTiesGoPositive) {
  const auto m = agreement_matrix({{"x", {1, 0, 0}}, {"y", {0, 1, 0}}});
  EXPECT_EQ(m.majority, (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(m.majority_ties, 2u);
  EXPECT_THROW(agreement_matrix({{"x", {1}}, {"y", {0, 1}}}), InputError);
}
