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

#pragma once

#include <algorithm>
#include <cstdint>

#include "emojilab/unicode/unicode_data.hpp"

namespace emojilab::unicode {

using data::ConjunctBreak;
using data::GraphemeBreak;

/// Version of the pinned property tables.
inline constexpr const char* kUnicodeVersion = data::kUnicodeDataVersion;

inline std::uint32_t properties(char32_t cp) noexcept {
  const auto& table = data::kProperties;
  auto it = std::upper_bound(
      table.begin(), table.end(), cp,
      [](char32_t v, const data::PropertyRange& r) { return v < r.lo; });
  if (it == table.begin()) return 0;
  --it;
  return cp <= it->hi ? it->bits : 0;
}

inline GraphemeBreak grapheme_break(char32_t cp) noexcept {
  return static_cast<GraphemeBreak>(properties(cp) & 0xF);
}

inline ConjunctBreak conjunct_break(char32_t cp) noexcept {
  return static_cast<ConjunctBreak>((properties(cp) >> 4) & 0x3);
}

inline bool has_flag(char32_t cp, data::PropertyFlag flag) noexcept {
  return (properties(cp) & flag) != 0;
}

inline bool is_extended_pictographic(char32_t cp) noexcept {
  return has_flag(cp, data::kExtPict);
}
inline bool is_emoji(char32_t cp) noexcept { return has_flag(cp, data::kEmoji); }
inline bool is_emoji_presentation(char32_t cp) noexcept {
  return has_flag(cp, data::kEmojiPresentation);
}
inline bool is_emoji_component(char32_t cp) noexcept {
  return has_flag(cp, data::kEmojiComponent);
}
inline bool is_white_space(char32_t cp) noexcept {
  return has_flag(cp, data::kWhiteSpace);
}
/// Word character: letters, marks, decimal digits, connector punctuation.
inline bool is_word(char32_t cp) noexcept { return has_flag(cp, data::kWord); }

inline constexpr bool is_skin_tone_modifier(char32_t cp) noexcept {
  return cp >= 0x1F3FB && cp <= 0x1F3FF;
}
inline constexpr bool is_variation_selector(char32_t cp) noexcept {
  return cp == 0xFE0E || cp == 0xFE0F;
}
inline constexpr bool is_regional_indicator(char32_t cp) noexcept {
  return cp >= 0x1F1E6 && cp <= 0x1F1FF;
}
inline constexpr bool is_keycap_base(char32_t cp) noexcept {
  return (cp >= U'0' && cp <= U'9') || cp == U'#' || cp == U'*';
}
inline constexpr char32_t kZeroWidthJoiner = 0x200D;
inline constexpr char32_t kCombiningEnclosingKeycap = 0x20E3;

/// Simple (one-to-one) lowercase mapping.
inline char32_t to_lower(char32_t cp) noexcept {
  if (cp < 0x80) return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
  const auto& table = data::kLowercase;
  auto it = std::lower_bound(
      table.begin(), table.end(), cp,
      [](const data::CaseMapping& m, char32_t v) { return m.from < v; });
  return (it != table.end() && it->from == cp) ? it->to : cp;
}

}  // namespace emojilab::unicode
