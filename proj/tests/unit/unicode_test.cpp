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

#include "emojilab/unicode/grapheme.hpp"
#include "emojilab/unicode/properties.hpp"
#include "emojilab/unicode/utf8.hpp"
#include "test_support.hpp"

namespace u = emojilab::unicode;

TEST(Utf8, RoundTripsAllPlanes) {
  const std::vector<char32_t> cps = {0x41, 0xE9, 0x20AC, 0x1F680, 0x10FFFF};
  const std::string s = u::encode(cps);
  EXPECT_EQ(s.size(), 1u + 2 + 3 + 4 + 4);
  EXPECT_EQ(u::decode(s), cps);
}

TEST(Utf8, InvalidBytesBecomeReplacementOneByteAtATime) {
  const std::string bad = "a\xff\xc3";  // stray byte, truncated sequence
  const auto cps = u::decode(bad);
  ASSERT_EQ(cps.size(), 3u);
  EXPECT_EQ(cps[0], U'a');
  EXPECT_EQ(cps[1], u::kReplacementCharacter);
  EXPECT_EQ(cps[2], u::kReplacementCharacter);
}

TEST(Utf8, RejectsOverlongAndSurrogates) {
  EXPECT_EQ(u::decode_at("\xc0\xaf", 0).cp, u::kReplacementCharacter);
  EXPECT_EQ(u::decode_at("\xed\xa0\x80", 0).cp, u::kReplacementCharacter);
}

TEST(Properties, EmojiFlags) {
  EXPECT_TRUE(u::is_emoji(0x1F680));
  EXPECT_TRUE(u::is_extended_pictographic(0x1F680));
  EXPECT_TRUE(u::is_emoji(U'#'));
  EXPECT_FALSE(u::is_emoji(U'a'));
  EXPECT_TRUE(u::is_skin_tone_modifier(0x1F3FD));
  EXPECT_TRUE(u::is_regional_indicator(0x1F1FA));
  EXPECT_TRUE(u::is_white_space(0x3000));
}

TEST(Properties, Lowercase) {
  EXPECT_EQ(u::to_lower(U'B'), U'b');
  EXPECT_EQ(u::to_lower(0xFF22), char32_t{0xFF42});  // fullwidth B
  EXPECT_EQ(u::to_lower(0x0130), char32_t{0x69});
  EXPECT_EQ(u::to_lower(0x1F680), char32_t{0x1F680});
}

TEST(Grapheme, MatchesFrozenSegmentationOracle) {
  const auto fixture = emojilab::fixtures::load_json("grapheme_oracle.json");
  std::size_t checked = 0;
  for (const auto& c : fixture["cases"]) {
    const auto cps = c["cps"].get<std::vector<char32_t>>();
    const auto expected = c["clusters"].get<std::vector<std::size_t>>();
    const std::string text = u::encode(cps);
    std::vector<std::size_t> got;
    for (const auto& g : u::segment_graphemes(text)) {
      got.push_back(g.codepoints.size());
    }
    ASSERT_EQ(got, expected) << "case " << checked << ": " << c["cps"].dump();
    ++checked;
  }
  EXPECT_EQ(checked, 3000u);
}

TEST(Grapheme, OffsetsTileTheInput) {
  const std::string text = "a\xF0\x9F\x87\xBA\xF0\x9F\x87\xB8 \r\n";
  std::size_t at = 0;
  for (const auto& g : u::segment_graphemes(text)) {
    EXPECT_EQ(g.offset, at);
    at += g.length;
  }
  EXPECT_EQ(at, text.size());
}
