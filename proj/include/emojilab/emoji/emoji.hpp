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

// Emoji extraction and canonicalisation.
//
// Text is first cut into extended grapheme clusters, so flags, keycaps and
// ZWJ sequences arrive as single units. A cluster is an emoji when its
// leading scalar carries the Emoji property, with two refinements:
//
//   * keycap bases (0-9, '#', '*') count only when followed by U+20E3;
//   * a cluster that is nothing but skin-tone modifiers / variation
//     selectors has an empty canonical form and is not a token.
//
// Canonicalisation removes skin-tone modifiers (U+1F3FB..U+1F3FF) and
// variation selectors (U+FE0E, U+FE0F) wherever they occur. ZWJ handling
// depends on ZwjMode:
//
//   kSequence  ZWJ sequences stay one token ("👨‍👩‍👧" -> "👨‍👩‍👧");
//              dangling or doubled joiners are dropped.
//   kLiteral   joiners are deleted and the sequence splits into its
//              component emojis ("👨‍👩‍👧" -> "👨", "👩", "👧").

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emojilab/error.hpp"
#include "emojilab/unicode/grapheme.hpp"
#include "emojilab/unicode/properties.hpp"
#include "emojilab/unicode/utf8.hpp"

namespace emojilab::emoji {

enum class ZwjMode { kSequence, kLiteral };

inline const char* to_string(ZwjMode mode) {
  return mode == ZwjMode::kSequence ? "default" : "literal";
}

/// Parses "default" / "sequence" / "literal".
inline ZwjMode parse_zwj_mode(std::string_view name) {
  if (name == "default" || name == "sequence") return ZwjMode::kSequence;
  if (name == "literal") return ZwjMode::kLiteral;
  throw InputError("unknown ZWJ mode '" + std::string(name) +
                   "' (expected default or literal)");
}

struct EmojiToken {
  std::string canonical;
  std::vector<char32_t> codepoints;  // of `canonical`
  std::size_t position = 0;          // byte offset in the source text

  friend bool operator==(const EmojiToken&, const EmojiToken&) = default;
};

/// True when the grapheme cluster `cps` is an emoji token. The cluster is
/// judged by its first scalar that is not a skin-tone modifier, variation
/// selector or joiner, since those are stripped by normalization.
inline bool is_emoji_cluster(std::span<const char32_t> cps) noexcept {
  using namespace unicode;
  std::size_t i = 0;
  while (i < cps.size() && (is_skin_tone_modifier(cps[i]) ||
                            is_variation_selector(cps[i]) ||
                            cps[i] == kZeroWidthJoiner)) {
    ++i;
  }
  if (i == cps.size()) return false;
  const char32_t lead = cps[i];
  if (is_keycap_base(lead)) {
    for (char32_t cp : cps.subspan(i + 1)) {
      if (cp == kCombiningEnclosingKeycap) return true;
      if (!is_skin_tone_modifier(cp) && !is_variation_selector(cp)) return false;
    }
    return false;
  }
  return is_emoji(lead);
}

inline bool is_emoji_cluster(std::string_view cluster) {
  const auto cps = unicode::decode(cluster);
  return is_emoji_cluster(cps);
}

namespace detail {

inline bool is_droppable(char32_t cp) noexcept {
  return unicode::is_skin_tone_modifier(cp) ||
         unicode::is_variation_selector(cp);
}

/// Strips modifiers/selectors; collapses runs of ZWJ and trims them at the
/// ends so the joiner only ever sits between two scalars.
inline std::vector<char32_t> canonical_sequence(
    std::span<const char32_t> cps) {
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (is_droppable(cp)) continue;
    if (cp == unicode::kZeroWidthJoiner &&
        (out.empty() || out.back() == unicode::kZeroWidthJoiner)) {
      continue;
    }
    out.push_back(cp);
  }
  while (!out.empty() && out.back() == unicode::kZeroWidthJoiner) {
    out.pop_back();
  }
  return out;
}

struct Piece {
  std::vector<char32_t> cps;
  std::size_t byte_offset;  // relative to the cluster start
};

inline std::size_t utf8_length(char32_t cp) noexcept {
  return cp < 0x80 ? 1 : cp < 0x800 ? 2 : cp < 0x10000 ? 3 : 4;
}

/// Canonical components of one emoji cluster under `mode`.
inline std::vector<Piece> canonical_pieces(std::span<const char32_t> cps,
                                           ZwjMode mode) {
  std::vector<Piece> out;
  if (mode == ZwjMode::kSequence) {
    auto seq = canonical_sequence(cps);
    if (!seq.empty() && is_emoji_cluster(seq)) {
      out.push_back({std::move(seq), 0});
    }
    return out;
  }
  std::size_t offset = 0;
  std::size_t piece_start = 0;
  std::vector<char32_t> current;
  auto flush = [&] {
    auto seq = canonical_sequence(current);
    if (!seq.empty() && is_emoji_cluster(seq)) {
      out.push_back({std::move(seq), piece_start});
    }
    current.clear();
  };
  for (char32_t cp : cps) {
    if (cp == unicode::kZeroWidthJoiner) {
      flush();
      offset += utf8_length(cp);
      piece_start = offset;
      continue;
    }
    current.push_back(cp);
    offset += utf8_length(cp);
  }
  flush();
  return out;
}

}  // namespace detail

/// Canonical form(s) of a single emoji grapheme cluster. Default mode yields
/// exactly one string; literal mode yields one string per ZWJ component.
/// Throws InputError when the cluster is not an emoji.
inline std::vector<std::string> normalize_emoji(std::string_view cluster,
                                                ZwjMode mode) {
  const auto cps = unicode::decode(cluster);
  if (!is_emoji_cluster(cps)) {
    throw InputError("not an emoji cluster: '" + std::string(cluster) + "'");
  }
  std::vector<std::string> out;
  for (const auto& piece : detail::canonical_pieces(cps, mode)) {
    out.push_back(unicode::encode(piece.cps));
  }
  if (out.empty()) {
    throw InputError("emoji cluster has no canonical form: '" +
                     std::string(cluster) + "'");
  }
  return out;
}

/// Default-mode canonical form of one emoji cluster.
inline std::string normalize_emoji(std::string_view cluster) {
  return normalize_emoji(cluster, ZwjMode::kSequence).front();
}

/// All emoji tokens of `text` in textual order.
inline std::vector<EmojiToken> extract_emojis(
    std::string_view text, ZwjMode mode = ZwjMode::kSequence) {
  std::vector<EmojiToken> out;
  for (const auto& g : unicode::segment_graphemes(text)) {
    if (!is_emoji_cluster(g.codepoints)) continue;
    for (auto& piece : detail::canonical_pieces(g.codepoints, mode)) {
      EmojiToken token;
      token.canonical = unicode::encode(piece.cps);
      token.codepoints = std::move(piece.cps);
      token.position = g.offset + piece.byte_offset;
      out.push_back(std::move(token));
    }
  }
  return out;
}

/// Canonical strings only.
inline std::vector<std::string> extract_emoji_strings(
    std::string_view text, ZwjMode mode = ZwjMode::kSequence) {
  std::vector<std::string> out;
  for (auto& t : extract_emojis(text, mode)) {
    out.push_back(std::move(t.canonical));
  }
  return out;
}

}  // namespace emojilab::emoji
