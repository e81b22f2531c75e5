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

#include "emojilab/emoji/emoji.hpp"
#include "emojilab/emoji/modality.hpp"
#include "emojilab/error.hpp"
#include "emojilab/ingest/normalize.hpp"
#include "test_support.hpp"

namespace em = emojilab::emoji;
using emojilab::Modality;

TEST(Extract, FixtureBothModes) {
  const auto fixture = emojilab::fixtures::load_json("emoji_fixture.json");
  ASSERT_EQ(fixture["cases"].size(), 60u);
  for (const auto& c : fixture["cases"]) {
    const auto input = c["input"].get<std::string>();
    EXPECT_EQ(em::extract_emoji_strings(input, em::ZwjMode::kSequence),
              c["default"].get<std::vector<std::string>>())
        << c["name"];
    EXPECT_EQ(em::extract_emoji_strings(input, em::ZwjMode::kLiteral),
              c["literal"].get<std::vector<std::string>>())
        << c["name"];
  }
}

TEST(Extract, PositionsStrictlyIncrease) {
  const auto tokens = em::extract_emojis(
      "a 🚀 b 👨‍👩‍👧 c 🇺🇸🇯🇵", em::ZwjMode::kLiteral);
  ASSERT_GE(tokens.size(), 2u);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    EXPECT_LT(tokens[i - 1].position, tokens[i].position);
  }
}

TEST(NormalizeEmoji, StripsModifiersAndSelectors) {
  EXPECT_EQ(em::normalize_emoji("👍🏿"), "👍");
  EXPECT_EQ(em::normalize_emoji("❤️"), "❤");
  EXPECT_EQ(em::normalize_emoji("👨‍👩‍👧"), "👨‍👩‍👧");
  EXPECT_EQ(em::normalize_emoji("👨‍👩‍👧", em::ZwjMode::kLiteral),
            (std::vector<std::string>{"👨", "👩", "👧"}));
}

TEST(NormalizeEmoji, RejectsNonEmoji) {
  EXPECT_THROW(em::normalize_emoji("a"), emojilab::InputError);
  EXPECT_THROW(em::normalize_emoji("1"), emojilab::InputError);
  EXPECT_THROW(em::normalize_emoji("\U0001F3FD"), emojilab::InputError);
}

TEST(NormalizeEmoji, ClusterTestAgreesWithCanonicalForm) {
  // A lone modifier carrying marks, and a keycap split by a joiner.
  for (const char* s : {"\U0001F3FB́́", "*‍⃣"}) {
    EXPECT_FALSE(em::is_emoji_cluster(s)) << s;
  }
  EXPECT_TRUE(em::is_emoji_cluster("#️⃣"));
  EXPECT_EQ(em::normalize_emoji("#️⃣"), "#⃣");
  EXPECT_EQ(em::normalize_emoji("️\U0001F680"), "\U0001F680");
}

TEST(Modality, Projections) {
  const std::string text = "buy now 🚀🔥";
  EXPECT_EQ(em::project_modality(text, Modality::kEmoji), "🚀 🔥");
  EXPECT_EQ(em::project_modality(text, Modality::kText), "buy now");
  EXPECT_EQ(em::project_modality(text, Modality::kTextEmoji), text);
  EXPECT_EQ(em::project_modality("no emoji here", Modality::kEmoji), "");
  EXPECT_EQ(em::project_modality("🚀🚀", Modality::kText), "");
}

TEST(Modality, TextProjectionHasNoEmoji) {
  const std::string text = "moon🚀shot 👍🏽 ok 1️⃣ go";
  const auto t = em::project_modality(text, Modality::kText);
  EXPECT_TRUE(em::extract_emojis(t).empty()) << t;
  EXPECT_EQ(t, "moon shot ok go");
}

TEST(Modality, ParseNames) {
  EXPECT_EQ(emojilab::parse_modality("TE"), Modality::kTextEmoji);
  EXPECT_THROW(emojilab::parse_modality("X"), emojilab::InputError);
}
