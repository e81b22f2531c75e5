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

#include <string>
#include <string_view>

#include "emojilab/emoji/emoji.hpp"
#include "emojilab/error.hpp"
#include "emojilab/ingest/normalize.hpp"
#include "emojilab/ingest/post.hpp"
#include "emojilab/unicode/grapheme.hpp"

namespace emojilab {

/// Input projection: emoji-only, text-only, or both.
enum class Modality { kEmoji, kText, kTextEmoji };

inline const char* to_string(Modality m) {
  switch (m) {
    case Modality::kEmoji:
      return "E";
    case Modality::kText:
      return "T";
    case Modality::kTextEmoji:
      break;
  }
  return "TE";
}

inline Modality parse_modality(std::string_view name) {
  if (name == "E") return Modality::kEmoji;
  if (name == "T") return Modality::kText;
  if (name == "TE") return Modality::kTextEmoji;
  throw InputError("unknown modality '" + std::string(name) +
                   "' (expected E, T or TE)");
}

namespace emoji {

/// Projects normalized text onto one modality:
///   E  -> canonical emoji tokens joined by single spaces;
///   T  -> the text with every emoji cluster removed, white space collapsed;
///   TE -> the text unchanged.
inline std::string project_modality(std::string_view text, Modality modality,
                                    ZwjMode mode = ZwjMode::kSequence) {
  switch (modality) {
    case Modality::kEmoji: {
      std::string out;
      for (const auto& token : extract_emojis(text, mode)) {
        if (!out.empty()) out.push_back(' ');
        out += token.canonical;
      }
      return out;
    }
    case Modality::kText: {
      std::string kept;
      kept.reserve(text.size());
      for (const auto& g : unicode::segment_graphemes(text)) {
        if (is_emoji_cluster(g.codepoints)) {
          kept.push_back(' ');
        } else {
          kept.append(g.view(text));
        }
      }
      return collapse_whitespace(kept);
    }
    case Modality::kTextEmoji:
      break;
  }
  return std::string(text);
}

inline std::string project_modality(const Post& post, Modality modality,
                                    ZwjMode mode = ZwjMode::kSequence) {
  return project_modality(post.text, modality, mode);
}

}  // namespace emoji
}  // namespace emojilab
