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

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "emojilab/emoji/emoji.hpp"
#include "emojilab/error.hpp"
#include "emojilab/ingest/dedup.hpp"
#include "emojilab/ingest/jsonl.hpp"
#include "emojilab/ingest/normalize.hpp"
#include "emojilab/ingest/split.hpp"
#include "emojilab/rng.hpp"
#include "emojilab/unicode/utf8.hpp"

using namespace emojilab;

namespace {

Post labeled(std::string id, std::string text, Label label,
             std::optional<Timestamp> ts = std::nullopt) {
  return make_post(std::move(id), std::move(text), label, "en", ts, "c");
}

std::vector<Post> class_mix(std::size_t n_pos, std::size_t n_neg) {
  std::vector<Post> posts;
  for (std::size_t i = 0; i < n_pos; ++i) {
    posts.push_back(labeled("p" + std::to_string(i), "up", Label::kPositive));
  }
  for (std::size_t i = 0; i < n_neg; ++i) {
    posts.push_back(labeled("n" + std::to_string(i), "down", Label::kNegative));
  }
  return posts;
}

}  // namespace

TEST(NormalizeText, ReplacesUrlsMentionsHashtags) {
  EXPECT_EQ(normalize_text("Buy $BTC NOW! http://x.co @joe #moon 🚀"),
            "buy $btc now! <url> <user> <hashtag> 🚀");
  EXPECT_EQ(normalize_text(""), "");
  EXPECT_EQ(normalize_text("see https://a.b/c?d=1, ok"), "see <url>, ok");
  EXPECT_EQ(normalize_text("mail me@example.com"), "mail me@example.com");
  EXPECT_EQ(normalize_text("www.site.io rocks"), "<url> rocks");
}

TEST(NormalizeText, FullwidthIsLoweredNotFolded) {
  EXPECT_EQ(normalize_text("ＢＴＣ　🚀"), "ｂｔｃ 🚀");
}

TEST(NormalizeText, KeepsEmojiVariantsVerbatim) {
  EXPECT_EQ(normalize_text("  Nice  👍🏽\n\t❤️ "), "nice 👍🏽 ❤️");
}

TEST(NormalizeText, IdempotentOnRandomStrings) {
  const std::vector<std::string> pieces = {
      "a", "B", " ", "\t", "@", "#", "http://", "www.", ".", ",", "x",
      "🚀", "👍🏽", "‍", "️", "1", "⃣", "🇺", "Ü", "İ", "　", "$", "<url>",
      "é", "\n", ":", "/", "_"};
  Rng rng(7);
  for (int trial = 0; trial < 20000; ++trial) {
    std::string s;
    const auto len = rng.below(10);
    for (std::uint64_t i = 0; i < len; ++i) s += pieces[rng.below(pieces.size())];
    const std::string once = normalize_text(s);
    ASSERT_EQ(normalize_text(once), once) << "input: " << s;
    ASSERT_EQ(emoji::extract_emoji_strings(once), emoji::extract_emoji_strings(s))
        << "input: " << s;
  }
}

TEST(ParsePosts, SchemaRoundTrip) {
  std::istringstream in(R"({"id":"1","text":"BTC 🚀","label":"pos","lang":"en"})"
                        "\n");
  const auto result = parse_posts(in, {.strict = true, .default_corpus = "st"});
  ASSERT_EQ(result.posts.size(), 1u);
  const Post& p = result.posts[0];
  EXPECT_EQ(p.id, "1");
  EXPECT_EQ(p.label, Label::kPositive);
  EXPECT_EQ(p.text, "btc 🚀");
  EXPECT_EQ(p.corpus, "st");
  EXPECT_EQ(p.emojis, std::vector<std::string>{"🚀"});
}

TEST(ParsePosts, MissingTextNamesTheLine) {
  std::istringstream in("{\"id\":\"1\",\"text\":\"a\"}\n{\"id\":\"2\"}\n");
  try {
    parse_posts(in);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("text"), std::string::npos);
  }
}

TEST(ParsePosts, LenientModeCollectsWarnings) {
  std::istringstream in(
      "{\"id\":\"1\",\"text\":\"a\",\"label\":\"pos\"}\n"
      "{\"id\":\"2\",\"text\":\"b\",\"label\":null}\n"
      "not json\n"
      "{\"id\":\"3\",\"text\":\"c\",\"label\":\"neg\"}\n");
  const auto result = parse_posts(in, {.strict = false, .default_corpus = ""});
  EXPECT_EQ(result.posts.size(), 3u);
  ASSERT_EQ(result.warnings.size(), 1u);
  EXPECT_EQ(result.warnings[0].line, 3u);
  EXPECT_EQ(result.posts[1].label, Label::kUnlabeled);
}

TEST(ParsePosts, DuplicateIdListsBothLines) {
  std::istringstream in(
      "{\"id\":\"7\",\"text\":\"a\"}\n\n{\"id\":\"7\",\"text\":\"b\"}\n");
  try {
    parse_posts(in);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("line 1"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  }
}

TEST(ParsePosts, SameIdInDifferentCorporaIsFine) {
  std::istringstream in(
      "{\"id\":\"7\",\"text\":\"a\",\"corpus\":\"x\"}\n"
      "{\"id\":\"7\",\"text\":\"b\",\"corpus\":\"y\"}\n");
  EXPECT_EQ(parse_posts(in).posts.size(), 2u);
}

TEST(ParsePosts, SerializeThenReparseIsIdentity) {
  std::vector<Post> posts = {
      make_post("a", "Hello @bob 🚀 http://x.y", Label::kPositive, "en",
                parse_rfc3339("2021-03-04T05:06:07Z"), "st"),
      make_post("b", "Ünïcode ❤️ #tag", Label::kNegative, "de",
                parse_rfc3339("2022-12-31T23:59:59.250+02:00"), "st"),
      make_post("c", "plain", Label::kUnlabeled, "und", std::nullopt, "st"),
  };
  std::ostringstream out;
  write_posts(out, posts, "train");
  std::istringstream in(out.str());
  EXPECT_EQ(parse_posts(in).posts, posts);
}

TEST(Rfc3339, ParsesOffsetsAndRejectsGarbage) {
  const auto a = parse_rfc3339("2021-03-04T05:06:07+01:00");
  const auto b = parse_rfc3339("2021-03-04T04:06:07Z");
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
  EXPECT_EQ(format_rfc3339(*b), "2021-03-04T04:06:07Z");
  EXPECT_FALSE(parse_rfc3339("2021-13-04T04:06:07Z"));
  EXPECT_FALSE(parse_rfc3339("yesterday"));
}

TEST(Dedup, ExactDuplicateKeepsEarliest) {
  std::vector<Post> posts = {
      labeled("b", "Same text", Label::kPositive, parse_rfc3339("2021-02-01T00:00:00Z")),
      labeled("a", "same   TEXT", Label::kPositive, parse_rfc3339("2021-01-01T00:00:00Z")),
  };
  DedupStats stats;
  const auto kept = dedup(posts, 3, &stats);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].id, "a");
  EXPECT_EQ(stats.exact_removed, 1u);
}

TEST(Dedup, NearDuplicateTrailingToken) {
  std::string base;
  for (int i = 0; i < 120; ++i) base += "w" + std::to_string(i) + " ";
  const std::string a = normalize_text(base);
  const std::string b = normalize_text(base + "extra");
  const int d = hamming_distance(simhash64(a), simhash64(b));
  ASSERT_LE(d, 3) << "fixture should be a near duplicate";
  std::vector<Post> posts = {labeled("1", base, Label::kPositive),
                             labeled("2", base + "extra", Label::kPositive)};
  DedupStats stats;
  const auto kept = dedup(posts, 3, &stats);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].id, "1");
  EXPECT_EQ(stats.near_removed, 1u);
}

TEST(Dedup, UnrelatedTextsSurviveAndRerunIsIdentity) {
  std::vector<Post> posts = {
      labeled("1", "bitcoin to the moon 🚀", Label::kPositive),
      labeled("2", "selling everything, market is dead", Label::kNegative),
      labeled("3", "earnings call tomorrow looks strong", Label::kPositive),
  };
  const auto once = dedup(posts);
  EXPECT_EQ(once.size(), 3u);
  EXPECT_EQ(dedup(once), once);
}

TEST(Split, BalancesBeforeSplitting) {
  const auto posts = class_mix(200, 100);
  const auto s = make_split(posts, {120, 20, 20}, 42);
  auto check = [](const std::vector<Post>& part, std::size_t n) {
    ASSERT_EQ(part.size(), n);
    std::size_t pos = 0;
    for (const auto& p : part) pos += p.label == Label::kPositive;
    EXPECT_EQ(pos, n / 2);
  };
  check(s.train, 120);
  check(s.validation, 20);
  check(s.test_in, 20);
  std::set<std::string> ids;
  for (const auto* part : {&s.train, &s.validation, &s.test_in}) {
    for (const auto& p : *part) EXPECT_TRUE(ids.insert(p.id).second) << p.id;
  }
}

TEST(Split, DeterministicUnderSeed) {
  const auto posts = class_mix(200, 100);
  const auto a = make_split(posts, {120, 20, 20}, 9);
  const auto b = make_split(posts, {120, 20, 20}, 9);
  const auto c = make_split(posts, {120, 20, 20}, 10);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test_in, b.test_in);
  EXPECT_NE(a.train, c.train);
}

TEST(Split, InsufficientMinorityClass) {
  const auto posts = class_mix(10, 2);
  try {
    make_split(posts, {30, 10, 10}, 1);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("25"), std::string::npos) << e.what();
  }
}

TEST(Split, OddSizesFavourPositive) {
  const auto posts = class_mix(50, 50);
  const auto s = make_split(posts, {11, 3, 5}, 3);
  std::size_t pos = 0;
  for (const auto& p : s.train) pos += p.label == Label::kPositive;
  EXPECT_EQ(pos, 6u);
}

TEST(Split, QuarterStratifiedWhenTimestamped) {
  std::vector<Post> posts;
  for (int i = 0; i < 400; ++i) {
    const int month = 1 + (i % 12);
    char ts[32];
    std::snprintf(ts, sizeof ts, "2021-%02d-15T00:00:00Z", month);
    posts.push_back(labeled(std::to_string(i), "t", i % 2 ? Label::kPositive
                                                         : Label::kNegative,
                            parse_rfc3339(ts)));
  }
  const auto s = make_split(posts, {100, 20, 20}, 5);
  EXPECT_TRUE(s.quarter_stratified);
  std::map<std::int64_t, int> per_quarter;
  for (const auto& p : s.train) ++per_quarter[quarter_key(*p.timestamp)];
  ASSERT_EQ(per_quarter.size(), 4u);
  for (const auto& [q, n] : per_quarter) {
    EXPECT_NEAR(n, 25, 2) << "quarter " << q;
  }
}
