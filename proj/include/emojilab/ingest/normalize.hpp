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

// Text normalization for microblog posts.
//
//   * lowercase (simple one-to-one mapping, no compatibility folding);
//   * URLs ("http://", "https://", "www.") -> "<url>";
//   * @mentions -> "<user>", #hashtags -> "<hashtag>";
//   * runs of Unicode white space -> one ASCII space, trimmed at both ends;
//     combining marks that attach to white space are dropped with it.
//
// Cashtags ("$btc") and punctuation are kept. Emoji clusters are copied
// byte-for-byte and terminate URL / mention / hashtag bodies, so
// normalization never creates or destroys an emoji token. A pattern only
// starts when the previously *emitted* character is not a word character;
// this keeps the function idempotent ("@joe#moon" -> "<user><hashtag>").

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "emojilab/emoji/emoji.hpp"
#include "emojilab/unicode/grapheme.hpp"
#include "emojilab/unicode/properties.hpp"
#include "emojilab/unicode/utf8.hpp"

namespace emojilab {

inline constexpr std::string_view kUrlToken = "<url>";
inline constexpr std::string_view kUserToken = "<user>";
inline constexpr std::string_view kHashtagToken = "<hashtag>";

/// Splits on Unicode white space and re-joins with single ASCII spaces.
inline std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending = false;
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = unicode::decode_at(text, pos);
    if (unicode::is_white_space(d.cp)) {
      pending = true;
    } else {
      if (pending && !out.empty()) out.push_back(' ');
      pending = false;
      out.append(text.substr(pos, d.length));
    }
    pos += d.length;
  }
  return out;
}

namespace detail {

enum class ClusterKind { kEmoji, kSpace, kText };

struct Cluster {
  ClusterKind kind;
  std::string_view bytes;
  std::vector<char32_t> cps;
};

inline std::vector<Cluster> classify_clusters(std::string_view raw) {
  std::vector<Cluster> out;
  for (auto& g : unicode::segment_graphemes(raw)) {
    ClusterKind kind = ClusterKind::kText;
    if (emoji::is_emoji_cluster(g.codepoints)) {
      kind = ClusterKind::kEmoji;
    } else if (unicode::is_white_space(g.codepoints.front())) {
      kind = ClusterKind::kSpace;
    }
    out.push_back({kind, g.view(raw), std::move(g.codepoints)});
  }
  return out;
}

inline bool is_single(const Cluster& c, char32_t cp) {
  return c.kind == ClusterKind::kText && c.cps.size() == 1 &&
         unicode::to_lower(c.cps[0]) == cp;
}

/// A cluster with no base character (a stray mark, joiner or selector).
inline bool is_orphan_mark(const Cluster& c) {
  using unicode::data::GraphemeBreak;
  const auto gcb = unicode::grapheme_break(c.cps.front());
  return c.kind == ClusterKind::kText &&
         (gcb == GraphemeBreak::kGcbExtend || gcb == GraphemeBreak::kGcbZWJ ||
          gcb == GraphemeBreak::kGcbSpacingMark);
}

inline bool is_word_cluster(const Cluster& c) {
  return c.kind == ClusterKind::kText && unicode::is_word(c.cps.front());
}

/// Length in clusters of the URL starting at `i`, or 0.
inline std::size_t match_url(const std::vector<Cluster>& cs, std::size_t i) {
  static constexpr std::u32string_view kPrefixes[] = {U"https://", U"http://",
                                                      U"www."};
  std::size_t prefix = 0;
  for (auto p : kPrefixes) {
    if (i + p.size() > cs.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < p.size() && ok; ++k) {
      ok = is_single(cs[i + k], p[k]);
    }
    if (ok) {
      prefix = p.size();
      break;
    }
  }
  if (prefix == 0) return 0;
  std::size_t end = i + prefix;
  while (end < cs.size() && cs[end].kind == ClusterKind::kText) ++end;
  // Trailing sentence punctuation is not part of the address.
  static constexpr std::u32string_view kTrailing = U".,!?;:)]}'\"";
  while (end > i + prefix && cs[end - 1].cps.size() == 1 &&
         kTrailing.find(cs[end - 1].cps[0]) != std::u32string_view::npos) {
    --end;
  }
  if (end == i + prefix) return 0;
  return end - i;
}

/// Length in clusters of "@name" / "#tag" starting at `i`, or 0.
inline std::size_t match_handle(const std::vector<Cluster>& cs, std::size_t i,
                                char32_t sigil) {
  if (!is_single(cs[i], sigil)) return 0;
  std::size_t end = i + 1;
  while (end < cs.size() && is_word_cluster(cs[end])) ++end;
  return end - i;  // 1 when no name follows
}

}  // namespace detail

/// Normalizes a raw post text (see file comment for the rules).
inline std::string normalize_text(std::string_view raw) {
  using detail::ClusterKind;
  const auto cs = detail::classify_clusters(raw);
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  bool after_word = false;
  auto emit = [&](std::string_view s) {
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.append(s);
  };
  for (std::size_t i = 0; i < cs.size();) {
    const auto& c = cs[i];
    if (c.kind == ClusterKind::kSpace) {
      pending_space = true;
      after_word = false;
      ++i;
      continue;
    }
    if (pending_space && detail::is_orphan_mark(c)) {
      ++i;
      continue;
    }
    if (c.kind == ClusterKind::kEmoji) {
      emit(c.bytes);
      after_word = false;
      ++i;
      continue;
    }
    if (!after_word) {
      if (std::size_t n = detail::match_url(cs, i)) {
        emit(kUrlToken);
        after_word = false;
        i += n;
        continue;
      }
      std::size_t n = detail::match_handle(cs, i, U'@');
      if (n > 1) {
        emit(kUserToken);
        after_word = false;
        i += n;
        continue;
      }
      n = detail::match_handle(cs, i, U'#');
      if (n > 1) {
        emit(kHashtagToken);
        after_word = false;
        i += n;
        continue;
      }
    }
    std::string lowered;
    for (char32_t cp : c.cps) unicode::append_utf8(lowered, unicode::to_lower(cp));
    emit(lowered);
    after_word = unicode::is_word(unicode::to_lower(c.cps.back()));
    ++i;
  }
  return out;
}

}  // namespace emojilab
