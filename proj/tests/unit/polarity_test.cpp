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
#include <string>
#include <vector>

#include "../oracles/reference.hpp"
#include "emojilab/error.hpp"
#include "emojilab/polarity/polarity.hpp"

using namespace emojilab;

namespace {

std::vector<Post> labeled(const std::string& emoji, int pos, int neg,
                          const std::string& prefix = "p") {
  std::vector<Post> out;
  for (int i = 0; i < pos + neg; ++i) {
    Post p;
    p.id = prefix + emoji + std::to_string(i);
    p.label = i < pos ? Label::kPositive : Label::kNegative;
    p.emojis = {emoji};
    out.push_back(std::move(p));
  }
  return out;
}

PolarityRecord record(std::string e, std::uint64_t pos, std::uint64_t neg) {
  return {std::move(e), pos, neg, jeffreys_theta(pos, neg), false};
}

}  // namespace

TEST(PolarityTable, JeffreysSmoothing) {
  auto posts = labeled("🚀", 30, 70);
  const auto more = labeled("🐻", 1, 0);
  posts.insert(posts.end(), more.begin(), more.end());
  const auto table = polarity_table(posts);
  ASSERT_EQ(table.size(), 2u);
  // Code point order: U+1F43B before U+1F680.
  EXPECT_EQ(table[0].emoji, "🐻");
  EXPECT_DOUBLE_EQ(table[0].theta, 0.75);
  EXPECT_NEAR(table[1].theta, 30.5 / 101.0, 1e-15);
  EXPECT_NEAR(table[1].theta, 0.30198, 1e-5);
}

TEST(PolarityTable, CountsPostOncePerEmojiAndSkipsUnlabeled) {
  Post p;
  p.id = "1";
  p.label = Label::kPositive;
  p.emojis = {"🔥", "🔥", "🚀"};
  Post q = p;
  q.id = "2";
  q.label = Label::kUnlabeled;
  const std::vector<Post> posts = {p, q};
  const auto table = polarity_table(posts);
  ASSERT_EQ(table.size(), 2u);
  EXPECT_EQ(table[0].pos, 1u);
  EXPECT_EQ(table[0].total(), 1u);
}

TEST(ComparisonSet, SupportThresholds) {
  const std::vector<PolarityRecord> a = {record("a", 29, 271), record("b", 30, 270),
                                         record("c", 150, 150)};
  const std::vector<PolarityRecord> b = {record("a", 150, 150), record("b", 150, 150),
                                         record("c", 200, 100)};
  const auto set = select_comparison_set(a, b, Regime::kPlatformAsset, false);
  EXPECT_EQ(set.emojis, (std::vector<std::string>{"b", "c"}));

  const std::vector<PolarityRecord> la = {record("x", 12, 108)};
  const std::vector<PolarityRecord> lb = {record("x", 60, 60)};
  EXPECT_EQ(select_comparison_set(la, lb, Regime::kLanguage, false).emojis.size(), 1u);
  EXPECT_THROW(select_comparison_set(a, lb, Regime::kLanguage, false), InputError);
}

TEST(ComparisonSet, ExtremeTailsJoinWithoutSupport) {
  std::vector<PolarityRecord> a, b;
  for (int i = 0; i < 20; ++i) {
    const std::string e = "e" + std::to_string(100 + i);
    a.push_back(record(e, 150, 150 + static_cast<std::uint64_t>(i)));
    b.push_back(record(e, 150, 150 + static_cast<std::uint64_t>(i)));
  }
  a.push_back(record("top", 10, 0));
  b.push_back(record("top", 9, 0));
  SupportThresholds thr;
  thr.tail = 2;
  const auto set = select_comparison_set(a, b, thr);
  auto it = std::find(set.emojis.begin(), set.emojis.end(), "top");
  ASSERT_NE(it, set.emojis.end());
  const auto i = static_cast<std::size_t>(it - set.emojis.begin());
  EXPECT_TRUE(set.in_tail[i]);
  EXPECT_FALSE(set.meets_threshold[i]);
  EXPECT_EQ(set.emojis.size(), 21u);

  thr.tail = 0;
  EXPECT_EQ(select_comparison_set(a, b, thr).emojis.size(), 20u);
}

TEST(HarmonicWeights, Formula) {
  const std::vector<double> na = {1000, 5}, nb = {10, 5};
  const auto w = harmonic_weights(na, nb);
  const double h0 = 2 * 1000.0 * 10 / 1010;
  EXPECT_NEAR(h0, 19.80198, 1e-5);
  EXPECT_NEAR(w[0], h0 / (h0 + 5), 1e-15);
  EXPECT_NEAR(w[0] + w[1], 1.0, 1e-15);
  const std::vector<double> one = {7};
  EXPECT_DOUBLE_EQ(harmonic_weights(one, one)[0], 1.0);
}

TEST(WeightedSpearman, FixedPoints) {
  const std::vector<double> x = {0.1, 0.4, 0.3, 0.9}, w = {0.1, 0.2, 0.3, 0.4};
  const std::vector<double> rev = {0.9, 0.6, 0.7, 0.1};
  const std::vector<double> eq(4, 0.25);
  EXPECT_NEAR(weighted_spearman(x, x, w), 1.0, 1e-15);
  EXPECT_NEAR(weighted_spearman(x, rev, eq), -1.0, 1e-15);
  const std::vector<double> flat(4, 0.5);
  EXPECT_THROW(weighted_spearman(x, flat, w), NumericalError);
  const std::vector<double> two = {1, 2};
  EXPECT_THROW(weighted_spearman(two, two, two), InputError);
}

TEST(WeightedSpearman, MatchesBruteForceOracle) {
  Rng rng(99);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 3 + rng.below(8);
    std::vector<double> x(n), y(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(rng.below(5));  // frequent ties
      y[i] = rng.uniform();
      w[i] = t % 2 ? 1.0 : rng.uniform() + 0.01;
    }
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) continue;
    EXPECT_NEAR(weighted_spearman(x, y, w), reference::weighted_rank_correlation(x, y, w),
                1e-10);
  }
}

TEST(Maud, Variants) {
  const std::vector<double> a = {0.5, 0.7}, b = {0.4, 0.4}, w = {1, 1};
  EXPECT_NEAR(maud(a, b), 0.2, 1e-15);
  EXPECT_NEAR(maud(a, b, w), 0.2, 1e-15);
  const std::vector<double> w2 = {3, 1};
  EXPECT_NEAR(maud(a, b, w2), 0.75 * 0.1 + 0.25 * 0.3, 1e-15);
  EXPECT_EQ(maud(a, a), 0.0);
}

TEST(Flip, DecisiveSeparationIsFlip) {
  const auto f = flip_test("🚀", 900, 100, 100, 900, {.n_boot = 1000, .seed = 3});
  EXPECT_TRUE(f.flip);
  EXPECT_GT(f.ci_lo, 0);
}

TEST(Flip, CloseSmallSamplesAreNotFlips) {
  // theta near 0.52 vs 0.48 with 30 posts each.
  const auto f = flip_test("🔥", 16, 14, 14, 16, {.n_boot = 1000, .seed = 4});
  EXPECT_FALSE(f.flip);
  EXPECT_LT(f.ci_lo, 0);
  EXPECT_GT(f.ci_hi, 0);
}

TEST(Flip, SameSideIsNotFlip) {
  const auto f = flip_test("💎", 700, 300, 700, 300, {.n_boot = 200, .seed = 5});
  EXPECT_FALSE(f.flip);
  EXPECT_FALSE(f.point_sign_differs);
}

TEST(Flip, SwappingCorporaNegatesDeltaOnly) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const FlipOptions o{.n_boot = 300, .seed = seed};
    const auto ab = flip_test("x", 55, 45, 40, 60, o);
    const auto ba = flip_test("x", 40, 60, 55, 45, o);
    EXPECT_EQ(ab.flip, ba.flip);
    EXPECT_DOUBLE_EQ(ab.delta, -ba.delta);
    EXPECT_NEAR(ab.ci_lo, -ba.ci_hi, 1e-15);
  }
}

TEST(Flip, RejectsTooFewReplicates) {
  EXPECT_THROW(flip_test("x", 1, 1, 1, 1, {.n_boot = 50}), InputError);
}

TEST(Flip, WeightedRateZeroWithoutFlips) {
  const std::vector<PolarityRecord> a = {record("a", 60, 40), record("b", 30, 70)};
  const std::vector<PolarityRecord> b = {record("a", 62, 38), record("b", 33, 67)};
  const std::vector<double> w = {0.9, 0.1};
  const auto s = flip_analysis(a, b, {"a", "b"}, {.n_boot = 200, .seed = 1}, w);
  EXPECT_TRUE(s.flipped().empty());
  EXPECT_EQ(s.flip_rate_w, 0.0);
}

TEST(Comparison, PlantedFlipRecovered) {
  std::vector<Post> a, b;
  const std::vector<std::string> stable = {"🚀", "🔥", "💎", "📈"};
  for (std::size_t i = 0; i < stable.size(); ++i) {
    const int pos = 300 + 100 * static_cast<int>(i);
    auto pa = labeled(stable[i], pos, 1000 - pos, "a");
    auto pb = labeled(stable[i], pos + 20, 980 - pos, "b");
    a.insert(a.end(), pa.begin(), pa.end());
    b.insert(b.end(), pb.begin(), pb.end());
  }
  auto fa = labeled("🐻", 900, 100, "a"), fb = labeled("🐻", 100, 900, "b");
  a.insert(a.end(), fa.begin(), fa.end());
  b.insert(b.end(), fb.begin(), fb.end());

  PolarityOptions opts;
  opts.flip.n_boot = 500;
  opts.n_bootstrap = 200;
  opts.n_perm = 99;
  opts.seed = 8;
  opts.threads = 2;
  const auto cmp = compare_polarity(std::span<const Post>(a), std::span<const Post>(b), opts);
  EXPECT_EQ(cmp.flips.flipped(), std::vector<std::string>{"🐻"});
  EXPECT_NEAR(cmp.all.flip_rate, 0.2, 1e-15);
  ASSERT_TRUE(cmp.all.rho_w.has_value());
  ASSERT_TRUE(cmp.all.maud_w_ci.has_value());
  EXPECT_LE(cmp.all.maud_w_ci->lo, cmp.all.maud_w_ci->hi);
  ASSERT_TRUE(cmp.all.maud_w_perm_p.has_value());
  EXPECT_LE(*cmp.all.maud_w_perm_p, 0.01);
  EXPECT_NEAR(std::accumulate(cmp.weights.begin(), cmp.weights.end(), 0.0), 1.0, 1e-12);

  // Swapping corpora leaves the global metrics and flip decisions unchanged.
  const auto rev = compare_polarity(std::span<const Post>(b), std::span<const Post>(a), opts);
  EXPECT_DOUBLE_EQ(*rev.all.rho_w, *cmp.all.rho_w);
  EXPECT_DOUBLE_EQ(rev.all.maud_w, cmp.all.maud_w);
  EXPECT_EQ(rev.flips.flipped(), cmp.flips.flipped());
}

TEST(Comparison, ReassignmentKeepsPoolTotals) {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t n_a = 1 + rng.below(50), n_b = 1 + rng.below(50);
    const std::uint64_t pool_pos = rng.below(n_a + n_b + 1);
    const auto k = detail::reassign(pool_pos, n_a + n_b, n_a, rng);
    EXPECT_LE(k, std::min(pool_pos, n_a));
    EXPECT_LE(pool_pos - k, n_b);
  }
}

TEST(Comparison, ThresholdSubsetIntervalsUseTheirOwnRows) {
  // The first three emojis in code point order are rare and share one theta
  // in A, so any resample drawn only from them has constant ranks. The
  // support-qualified emojis come later and vary.
  std::vector<PolarityRecord> a = {record("😀", 5, 5), record("😁", 5, 5), record("😂", 5, 5),
                                   record("🚀", 300, 100), record("🚁", 200, 200),
                                   record("🚂", 100, 300), record("🚃", 260, 140)};
  std::vector<PolarityRecord> b = {record("😀", 9, 1), record("😁", 1, 9), record("😂", 5, 5),
                                   record("🚀", 310, 90), record("🚁", 180, 220),
                                   record("🚂", 120, 280), record("🚃", 240, 160)};
  PolarityOptions opts;
  opts.thresholds = SupportThresholds{300, 30, 30, 100};
  opts.n_bootstrap = 200;
  opts.flip.n_boot = 200;
  opts.flip.level = 0.9;
  opts.seed = 4;
  const auto c = compare_polarity(a, b, opts);
  ASSERT_EQ(c.threshold_only.n_emojis, 4u);
  EXPECT_EQ(c.all.n_emojis, 7u);
  ASSERT_TRUE(c.threshold_only.rho_w_ci);
  EXPECT_DOUBLE_EQ(*c.threshold_only.rho_w, 1.0);
  EXPECT_DOUBLE_EQ(c.threshold_only.rho_w_ci->lo, 1.0);
  EXPECT_EQ(c.threshold_only.rho_w_ci->replicates.count, 200u);
  ASSERT_TRUE(c.all.maud_w_ci);
  EXPECT_LE(c.all.maud_w_ci->lo, c.all.maud_w);
  EXPECT_GE(c.all.maud_w_ci->hi, c.all.maud_w);
}
