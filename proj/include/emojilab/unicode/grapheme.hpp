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

// Extended grapheme cluster segmentation (UAX #29, rules GB1-GB999
// including the GB9c Indic conjunct rule) over UTF-8 input.

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "emojilab/unicode/properties.hpp"
#include "emojilab/unicode/utf8.hpp"

namespace emojilab::unicode {

/// One extended grapheme cluster: byte range within the source text plus
/// its decoded scalar values.
struct Grapheme {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::vector<char32_t> codepoints;

  std::string_view view(std::string_view source) const {
    return source.substr(offset, length);
  }
};

namespace detail {

class BreakState {
 public:
  /// True when a boundary lies between the previously fed code point and
  /// `cp`. Must be called for every code point after the first.
  bool breaks_before(char32_t cp) const noexcept {
    using namespace data;
    const GraphemeBreak cur = grapheme_break(cp);
    if (prev_ == kGcbCR && cur == kGcbLF) return false;              // GB3
    if (prev_ == kGcbControl || prev_ == kGcbCR || prev_ == kGcbLF)  // GB4
      return true;
    if (cur == kGcbControl || cur == kGcbCR || cur == kGcbLF)  // GB5
      return true;
    if (prev_ == kGcbL &&
        (cur == kGcbL || cur == kGcbV || cur == kGcbLV || cur == kGcbLVT))
      return false;  // GB6
    if ((prev_ == kGcbLV || prev_ == kGcbV) && (cur == kGcbV || cur == kGcbT))
      return false;  // GB7
    if ((prev_ == kGcbLVT || prev_ == kGcbT) && cur == kGcbT)
      return false;                                                // GB8
    if (cur == kGcbExtend || cur == kGcbZWJ) return false;         // GB9
    if (cur == kGcbSpacingMark) return false;                      // GB9a
    if (prev_ == kGcbPrepend) return false;                        // GB9b
    if (conjunct_ == Conjunct::kLinked &&
        conjunct_break(cp) == kIncbConsonant)
      return false;  // GB9c
    if (pictographic_ == Pictographic::kAfterZwj &&
        is_extended_pictographic(cp))
      return false;  // GB11
    if (prev_ == kGcbRegionalIndicator && cur == kGcbRegionalIndicator &&
        regional_run_ % 2 == 1)
      return false;  // GB12, GB13
    return true;     // GB999
  }

  void feed(char32_t cp) noexcept {
    using namespace data;
    const GraphemeBreak cur = grapheme_break(cp);

    if (is_extended_pictographic(cp)) {
      pictographic_ = Pictographic::kInSequence;
    } else if (pictographic_ == Pictographic::kInSequence &&
               cur == kGcbExtend) {
      // ExtPict Extend*
    } else if (pictographic_ == Pictographic::kInSequence && cur == kGcbZWJ) {
      pictographic_ = Pictographic::kAfterZwj;
    } else {
      pictographic_ = Pictographic::kNone;
    }

    const ConjunctBreak incb = conjunct_break(cp);
    if (incb == kIncbConsonant) {
      conjunct_ = Conjunct::kConsonant;
    } else if (conjunct_ != Conjunct::kNone && incb == kIncbLinker) {
      conjunct_ = Conjunct::kLinked;
    } else if (conjunct_ != Conjunct::kNone && incb == kIncbExtend) {
      // stays in the same state
    } else {
      conjunct_ = Conjunct::kNone;
    }

    regional_run_ = (cur == kGcbRegionalIndicator) ? regional_run_ + 1 : 0;
    prev_ = cur;
  }

 private:
  enum class Pictographic { kNone, kInSequence, kAfterZwj };
  enum class Conjunct { kNone, kConsonant, kLinked };

  GraphemeBreak prev_ = data::kGcbOther;
  Pictographic pictographic_ = Pictographic::kNone;
  Conjunct conjunct_ = Conjunct::kNone;
  std::size_t regional_run_ = 0;
};

}  // namespace detail

/// Splits `text` into extended grapheme clusters, in order.
inline std::vector<Grapheme> segment_graphemes(std::string_view text) {
  std::vector<Grapheme> out;
  detail::BreakState state;
  for (std::size_t pos = 0; pos < text.size();) {
    const Decoded d = decode_at(text, pos);
    if (out.empty() || state.breaks_before(d.cp)) {
      out.push_back(Grapheme{pos, 0, {}});
    }
    Grapheme& g = out.back();
    g.codepoints.push_back(d.cp);
    g.length = pos + d.length - g.offset;
    state.feed(d.cp);
    pos += d.length;
  }
  return out;
}

}  // namespace emojilab::unicode
