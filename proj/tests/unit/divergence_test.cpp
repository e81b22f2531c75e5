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

#include <string>
#include <vector>

#include "../oracles/reference.hpp"
#include "emojilab/divergence/divergence.hpp"
#include "emojilab/error.hpp"
#include "emojilab/ingest/jsonl.hpp"
#include "test_support.hpp"

using namespace emojilab;
using V = std::vector<double>;
using S = std::vector<std::string>;

namespace {

Post with_emojis(std::vector<std::string> emojis) {
  Post p;
  p.id = "x";
  p.emojis = std::move(emojis);
  return p;
}

}  // namespace

TEST(Distribution, CountsAndTopK) {
  const std::vector<Post> posts = {with_emojis({"🚀", "🚀"}),
                                   with_emojis({"🚀", "🔥"}), with_emojis({})};
  const auto d = build_distribution(posts, 2);
  EXPECT_EQ(d.vocab, (S{"🚀", "🔥"}));
  EXPECT_DOUBLE_EQ(d.probs[0], 0.75);
  EXPECT_DOUBLE_EQ(d.probs[1], 0.25);
  const auto d1 = build_distribution(posts, 1);
  EXPECT_EQ(d1.vocab, S{"🚀"});
  EXPECT_DOUBLE_EQ(d1.probs[0], 1.0);
}

TEST(Distribution, TiesBrokenByCodePoint) {
  // 💎 is U+1F48E and 🔥 is U+1F525.
  const std::vector<Post> posts = {with_emojis({"🚀", "🚀", "🔥", "💎"})};
  const auto d = build_distribution(posts, 2);
  EXPECT_EQ(d.vocab, (S{"🚀", "💎"}));
}

TEST(Distribution, EmptyCorpusIsAnError) {
  const std::vector<Post> posts = {with_emojis({})};
  EXPECT_THROW(build_distribution(posts, 5), InputError);
  EXPECT_THROW(build_distribution(std::vector<Post>{with_emojis({"🚀"})}, 0),
               InputError);
}

TEST(Union, DisjointAndIdentical) {
  const auto a = build_distribution(std::vector<Post>{with_emojis({"🚀"})}, 5);
  const auto b = build_distribution(std::vector<Post>{with_emojis({"🔥"})}, 5);
  const auto u = align_on_union(a, b);
  EXPECT_EQ(u.vocab.size(), 2u);
  EXPECT_EQ(u.p, (V{1, 0}));
  EXPECT_EQ(u.q, (V{0, 1}));
  const auto same = align_on_union(a, a);
  EXPECT_EQ(same.p, same.q);
}

TEST(Union, UsesCountsBeyondTheTopK) {
  // b ranks 🔥 outside its top 1, but its count still enters the union.
  const auto a = build_distribution(
      std::vector<Post>{with_emojis({"🔥", "🔥", "🚀"})}, 1);
  const auto b = build_distribution(
      std::vector<Post>{with_emojis({"🚀", "🚀", "🚀", "🔥"})}, 1);
  const auto u = align_on_union(a, b);
  ASSERT_EQ(u.vocab, (S{"🔥", "🚀"}));
  EXPECT_DOUBLE_EQ(u.p[0], 2.0 / 3);
  EXPECT_DOUBLE_EQ(u.q[0], 0.25);
}

TEST(Metrics, FixedPoints) {
  const V p = {0.5, 0.5}, q = {1, 0};
  EXPECT_DOUBLE_EQ(jsd(p, p), 0);
  EXPECT_DOUBLE_EQ(jsd(V{1, 0}, V{0, 1}), 1);
  EXPECT_NEAR(jsd(p, q), 0.5579, 5e-5);
  EXPECT_NEAR(jsd(p, q), reference::jsd(p, q), 1e-12);
  EXPECT_DOUBLE_EQ(total_variation(p, q), 0.5);
  EXPECT_DOUBLE_EQ(total_variation(V{1, 0}, V{0, 1}), 1);
  EXPECT_NEAR(bhattacharyya(p, q), 0.7071, 5e-5);
  EXPECT_DOUBLE_EQ(bhattacharyya(V{1, 0}, V{0, 1}), 0);
  EXPECT_DOUBLE_EQ(bhattacharyya(p, p), 1);
}

TEST(Metrics, LengthMismatch) {
  EXPECT_THROW(jsd(V{1}, V{0.5, 0.5}), InputError);
  EXPECT_THROW(total_variation(V{1}, V{0.5, 0.5}), InputError);
  EXPECT_THROW(bhattacharyya(V{1}, V{0.5, 0.5}), InputError);
}

TEST(Metrics, MovingMassEpsilon) {
  for (double eps : {1e-6, 0.01, 0.25, 0.5}) {
    EXPECT_NEAR(total_variation(V{1, 0}, V{1 - eps, eps}), eps, 1e-15);
  }
}

TEST(Metrics, MatchFrozenScipyFixture) {
  const auto fixture = fixtures::load_json("divergence_oracle.json");
  for (const auto& c : fixture["cases"]) {
    const auto p = c["p"].get<V>(), q = c["q"].get<V>();
    EXPECT_NEAR(jsd(p, q), c["jsd"].get<double>(), 1e-9);
    EXPECT_NEAR(total_variation(p, q), c["tv"].get<double>(), 1e-12);
    EXPECT_NEAR(bhattacharyya(p, q), c["bc"].get<double>(), 1e-12);
    const auto a = c["rank_a"].get<S>(), b = c["rank_b"].get<S>();
    const double pers = c["persistence"].get<double>();
    EXPECT_NEAR(rbo(a, b, pers), c["rbo_ext"].get<double>(), 1e-12);
    EXPECT_NEAR(rbo(a, b, pers, RboVariant::kTruncated),
                c["rbo_trunc"].get<double>(), 1e-12);
  }
}

TEST(Rbo, FixedPoints) {
  const S abc = {"a", "b", "c"};
  EXPECT_NEAR(rbo(abc, abc), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(rbo(abc, S{"x", "y", "z"}), 0.0);
  EXPECT_NEAR(rbo(abc, S{"b", "a", "c"}, 0.9), 0.9, 1e-12);
  for (double p : {0.1, 0.5, 0.99}) EXPECT_NEAR(rbo(abc, abc, p), 1.0, 1e-14);
}

TEST(Rbo, DuplicatesAndBadPersistence) {
  EXPECT_THROW(rbo(S{"a", "a"}, S{"a", "b"}), InputError);
  EXPECT_THROW(rbo(S{"a"}, S{"a"}, 1.0), InputError);
}

TEST(Rbo, UnequalLengthsUseTheCommonPrefix) {
  EXPECT_DOUBLE_EQ(rbo(S{"a", "b", "c"}, S{"a", "b"}), rbo(S{"a", "b"}, S{"a", "b"}));
}

TEST(Descriptive, UniformAndSkewed) {
  std::vector<Post> uniform;
  for (const char* e : {"🚀", "🔥", "💎", "🌙"}) uniform.push_back(with_emojis({e}));
  auto s = descriptive_stats(uniform);
  EXPECT_NEAR(*s.effective_n, 4.0, 1e-12);
  EXPECT_DOUBLE_EQ(s.prevalence, 1.0);
  EXPECT_DOUBLE_EQ(*s.intensity, 1.0);
  EXPECT_DOUBLE_EQ(*s.top20_share, 1.0);

  std::vector<Post> skewed = {with_emojis({"🚀", "🚀", "🔥", "💎"}), with_emojis({})};
  s = descriptive_stats(skewed);
  EXPECT_NEAR(*s.effective_n, 1 / (0.25 + 0.0625 + 0.0625), 1e-12);
  EXPECT_NEAR(*s.effective_n, 2.667, 1e-3);
  EXPECT_DOUBLE_EQ(s.prevalence, 0.5);
  EXPECT_DOUBLE_EQ(*s.intensity, 4.0);
  EXPECT_EQ(s.vocab_size, 3u);
}

TEST(Descriptive, ZeroEmojiCorpus) {
  const auto s = descriptive_stats(std::vector<Post>{with_emojis({})});
  EXPECT_EQ(s.prevalence, 0);
  EXPECT_FALSE(s.intensity);
  EXPECT_FALSE(s.effective_n);
  EXPECT_FALSE(s.top20_share);
}

TEST(DivergenceInference, IntervalsCoverPointAndPermutationSeparates) {
  std::vector<Post> a, b;
  for (int i = 0; i < 200; ++i) {
    a.push_back(with_emojis({i % 4 == 0 ? "🔥" : "🚀"}));
    b.push_back(with_emojis({i % 4 == 0 ? "🚀" : "💎"}));
  }
  DivergenceInferenceOptions opts;
  opts.plan.n_replicates = 300;
  opts.plan.master_seed = 5;
  opts.n_perm = 199;
  const auto inf = divergence_inference(a, b, opts);
  for (const auto* e : {&inf.jsd, &inf.tv, &inf.bc, &inf.rbo}) {
    EXPECT_LE(e->lo, e->hi);
    EXPECT_EQ(e->replicates.count, 300u);
  }
  EXPECT_GT(inf.jsd.point, 0.3);
  EXPECT_NEAR(*inf.jsd_p, 1.0 / 200, 1e-12);
  EXPECT_NEAR(*inf.tv_p, 1.0 / 200, 1e-12);

  // Same source on both sides: the permutation null is not rejected.
  std::vector<Post> c(a.begin(), a.begin() + 100), d(a.begin() + 100, a.end());
  const auto same = divergence_inference(c, d, opts);
  EXPECT_GT(*same.jsd_p, 0.05);

  opts.plan.threads = 4;
  const auto again = divergence_inference(a, b, opts);
  EXPECT_EQ(again.jsd.lo, inf.jsd.lo);
  EXPECT_EQ(again.rbo.hi, inf.rbo.hi);
  EXPECT_EQ(*again.bc_p, *inf.bc_p);
}

TEST(Descriptive, IntervalsUseMonthBlocksWhenTimestamped) {
  std::vector<Post> posts;
  for (int i = 0; i < 120; ++i) {
    const auto ts = *parse_rfc3339("2024-01-01T00:00:00Z") + std::chrono::hours(24 * i);
    posts.push_back(make_post("p" + std::to_string(i), i % 3 == 0 ? "hi 🚀🚀" : "hi",
                              Label::kPositive, "en", ts, "c"));
  }
  stats::ResamplePlan plan;
  plan.n_replicates = 200;
  plan.master_seed = 3;
  const auto iv = descriptive_intervals(posts, plan);
  EXPECT_EQ(iv.unit, stats::ResampleUnit::kMonthBlock);
  EXPECT_NEAR(iv.prevalence.point, 1.0 / 3, 1e-12);
  EXPECT_LE(iv.prevalence.lo, iv.prevalence.point);
  EXPECT_GE(iv.prevalence.hi, iv.prevalence.point);
  ASSERT_TRUE(iv.intensity);
  // Every emoji post carries two emojis, so intensity never varies.
  EXPECT_DOUBLE_EQ(iv.intensity->lo, 2.0);
  EXPECT_DOUBLE_EQ(iv.intensity->hi, 2.0);

  posts[5].timestamp.reset();
  EXPECT_EQ(descriptive_intervals(posts, plan).unit, stats::ResampleUnit::kPost);
}
