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

// GENERATED by tools/gen_unicode_tables.py -- do not edit.
// regex 2026.7.10, case data from Python unicodedata 13.0.0.

#pragma once

#include <array>
#include <cstdint>

namespace emojilab::unicode::data {

inline constexpr const char* kUnicodeDataVersion = "17.0.0";
inline constexpr const char* kCaseDataVersion = "13.0.0";

// Packed property word: bits 0-3 grapheme break class, bits 4-5 Indic
// conjunct break class, bits 6.. boolean flags.
enum GraphemeBreak : std::uint8_t {
  kGcbOther = 0,
  kGcbCR = 1,
  kGcbLF = 2,
  kGcbControl = 3,
  kGcbExtend = 4,
  kGcbZWJ = 5,
  kGcbRegionalIndicator = 6,
  kGcbPrepend = 7,
  kGcbSpacingMark = 8,
  kGcbL = 9,
  kGcbV = 10,
  kGcbT = 11,
  kGcbLV = 12,
  kGcbLVT = 13,
};

enum ConjunctBreak : std::uint8_t {
  kIncbNone = 0,
  kIncbLinker = 1,
  kIncbConsonant = 2,
  kIncbExtend = 3,
};

enum PropertyFlag : std::uint32_t {
  kExtPict = 1u << 6,
  kEmoji = 1u << 7,
  kEmojiPresentation = 1u << 8,
  kEmojiModifier = 1u << 9,
  kEmojiModifierBase = 1u << 10,
  kEmojiComponent = 1u << 11,
  kWhiteSpace = 1u << 12,
  kWord = 1u << 13,
};

struct PropertyRange {
  char32_t lo;
  char32_t hi;
  std::uint32_t bits;
};

inline constexpr std::array<PropertyRange, 2501> kProperties{{
    {0x0000, 0x0008, 0x3},
    {0x0009, 0x0009, 0x1003},
    {0x000A, 0x000A, 0x1002},
    {0x000B, 0x000C, 0x1003},
    {0x000D, 0x000D, 0x1001},
    {0x000E, 0x001F, 0x3},
    {0x0020, 0x0020, 0x1000},
    {0x0023, 0x0023, 0x880},
    {0x002A, 0x002A, 0x880},
    {0x0030, 0x0039, 0x2880},
    {0x0041, 0x005A, 0x2000},
    {0x005F, 0x005F, 0x2000},
    {0x0061, 0x007A, 0x2000},
    {0x007F, 0x0084, 0x3},
    {0x0085, 0x0085, 0x1003},
    {0x0086, 0x009F, 0x3},
    {0x00A0, 0x00A0, 0x1000},
    {0x00A9, 0x00A9, 0xC0},
    {0x00AA, 0x00AA, 0x2000},
    {0x00AD, 0x00AD, 0x3},
    {0x00AE, 0x00AE, 0xC0},
    {0x00B5, 0x00B5, 0x2000},
    {0x00BA, 0x00BA, 0x2000},
    {0x00C0, 0x00D6, 0x2000},
    {0x00D8, 0x00F6, 0x2000},
    {0x00F8, 0x02C1, 0x2000},
    {0x02C6, 0x02D1, 0x2000},
    {0x02E0, 0x02E4, 0x2000},
    {0x02EC, 0x02EC, 0x2000},
    {0x02EE, 0x02EE, 0x2000},
    {0x0300, 0x036F, 0x2034},
    {0x0370, 0x0374, 0x2000},
    {0x0376, 0x0377, 0x2000},
    {0x037A, 0x037D, 0x2000},
    {0x037F, 0x037F, 0x2000},
    {0x0386, 0x0386, 0x2000},
    {0x0388, 0x038A, 0x2000},
    {0x038C, 0x038C, 0x2000},
    {0x038E, 0x03A1, 0x2000},
    {0x03A3, 0x03F5, 0x2000},
    {0x03F7, 0x0481, 0x2000},
    {0x0483, 0x0489, 0x2034},
    {0x048A, 0x052F, 0x2000},
    {0x0531, 0x0556, 0x2000},
    {0x0559, 0x0559, 0x2000},
    {0x0560, 0x0588, 0x2000},
    {0x0591, 0x05BD, 0x2034},
    {0x05BF, 0x05BF, 0x2034},
    {0x05C1, 0x05C2, 0x2034},
    {0x05C4, 0x05C5, 0x2034},
    {0x05C7, 0x05C7, 0x2034},
    {0x05D0, 0x05EA, 0x2000},
    {0x05EF, 0x05F2, 0x2000},
    {0x0600, 0x0605, 0x7},
    {0x0610, 0x061A, 0x2034},
    {0x061C, 0x061C, 0x3},
    {0x0620, 0x064A, 0x2000},
    {0x064B, 0x065F, 0x2034},
    {0x0660, 0x0669, 0x2000},
    {0x066E, 0x066F, 0x2000},
    {0x0670, 0x0670, 0x2034},
    {0x0671, 0x06D3, 0x2000},
    {0x06D5, 0x06D5, 0x2000},
    {0x06D6, 0x06DC, 0x2034},
    {0x06DD, 0x06DD, 0x7},
    {0x06DF, 0x06E4, 0x2034},
    {0x06E5, 0x06E6, 0x2000},
    {0x06E7, 0x06E8, 0x2034},
    {0x06EA, 0x06ED, 0x2034},
    {0x06EE, 0x06FC, 0x2000},
    {0x06FF, 0x06FF, 0x2000},
    {0x070F, 0x070F, 0x7},
    {0x0710, 0x0710, 0x2000},
    {0x0711, 0x0711, 0x2034},
    {0x0712, 0x072F, 0x2000},
    {0x0730, 0x074A, 0x2034},
    {0x074D, 0x07A5, 0x2000},
    {0x07A6, 0x07B0, 0x2034},
    {0x07B1, 0x07B1, 0x2000},
    {0x07C0, 0x07EA, 0x2000},
    {0x07EB, 0x07F3, 0x2034},
    {0x07F4, 0x07F5, 0x2000},
    {0x07FA, 0x07FA, 0x2000},
    {0x07FD, 0x07FD, 0x2034},
    {0x0800, 0x0815, 0x2000},
    {0x0816, 0x0819, 0x2034},
    {0x081A, 0x081A, 0x2000},
    {0x081B, 0x0823, 0x2034},
    {0x0824, 0x0824, 0x2000},
    {0x0825, 0x0827, 0x2034},
    {0x0828, 0x0828, 0x2000},
    {0x0829, 0x082D, 0x2034},
    {0x0840, 0x0858, 0x2000},
    {0x0859, 0x085B, 0x2034},
    {0x0860, 0x086A, 0x2000},
    {0x0870, 0x0887, 0x2000},
    {0x0889, 0x088F, 0x2000},
    {0x0890, 0x0891, 0x7},
    {0x0897, 0x089F, 0x2034},
    {0x08A0, 0x08C9, 0x2000},
    {0x08CA, 0x08E1, 0x2034},
    {0x08E2, 0x08E2, 0x7},
    {0x08E3, 0x0902, 0x2034},
    {0x0903, 0x0903, 0x2008},
    {0x0904, 0x0914, 0x2000},
    {0x0915, 0x0939, 0x2020},
    {0x093A, 0x093A, 0x2034},
    {0x093B, 0x093B, 0x2008},
    {0x093C, 0x093C, 0x2034},
    {0x093D, 0x093D, 0x2000},
    {0x093E, 0x0940, 0x2008},
    {0x0941, 0x0948, 0x2034},
    {0x0949, 0x094C, 0x2008},
    {0x094D, 0x094D, 0x2014},
    {0x094E, 0x094F, 0x2008},
    {0x0950, 0x0950, 0x2000},
    {0x0951, 0x0957, 0x2034},
    {0x0958, 0x095F, 0x2020},
    {0x0960, 0x0961, 0x2000},
    {0x0962, 0x0963, 0x2034},
    {0x0966, 0x096F, 0x2000},
    {0x0971, 0x0977, 0x2000},
    {0x0978, 0x097F, 0x2020},
    {0x0980, 0x0980, 0x2000},
    {0x0981, 0x0981, 0x2034},
    {0x0982, 0x0983, 0x2008},
    {0x0985, 0x098C, 0x2000},
    {0x098F, 0x0990, 0x2000},
    {0x0993, 0x0994, 0x2000},
    {0x0995, 0x09A8, 0x2020},
    {0x09AA, 0x09B0, 0x2020},
    {0x09B2, 0x09B2, 0x2020},
    {0x09B6, 0x09B9, 0x2020},
    {0x09BC, 0x09BC, 0x2034},
    {0x09BD, 0x09BD, 0x2000},
    {0x09BE, 0x09BE, 0x2034},
    {0x09BF, 0x09C0, 0x2008},
    {0x09C1, 0x09C4, 0x2034},
    {0x09C7, 0x09C8, 0x2008},
    {0x09CB, 0x09CC, 0x2008},
    {0x09CD, 0x09CD, 0x2014},
    {0x09CE, 0x09CE, 0x2000},
    {0x09D7, 0x09D7, 0x2034},
    {0x09DC, 0x09DD, 0x2020},
    {0x09DF, 0x09DF, 0x2020},
    {0x09E0, 0x09E1, 0x2000},
    {0x09E2, 0x09E3, 0x2034},
    {0x09E6, 0x09EF, 0x2000},
    {0x09F0, 0x09F1, 0x2020},
    {0x09FC, 0x09FC, 0x2000},
    {0x09FE, 0x09FE, 0x2034},
    {0x0A01, 0x0A02, 0x2034},
    {0x0A03, 0x0A03, 0x2008},
    {0x0A05, 0x0A0A, 0x2000},
    {0x0A0F, 0x0A10, 0x2000},
    {0x0A13, 0x0A28, 0x2000},
    {0x0A2A, 0x0A30, 0x2000},
    {0x0A32, 0x0A33, 0x2000},
    {0x0A35, 0x0A36, 0x2000},
    {0x0A38, 0x0A39, 0x2000},
    {0x0A3C, 0x0A3C, 0x2034},
    {0x0A3E, 0x0A40, 0x2008},
    {0x0A41, 0x0A42, 0x2034},
    {0x0A47, 0x0A48, 0x2034},
    {0x0A4B, 0x0A4D, 0x2034},
    {0x0A51, 0x0A51, 0x2034},
    {0x0A59, 0x0A5C, 0x2000},
    {0x0A5E, 0x0A5E, 0x2000},
    {0x0A66, 0x0A6F, 0x2000},
    {0x0A70, 0x0A71, 0x2034},
    {0x0A72, 0x0A74, 0x2000},
    {0x0A75, 0x0A75, 0x2034},
    {0x0A81, 0x0A82, 0x2034},
    {0x0A83, 0x0A83, 0x2008},
    {0x0A85, 0x0A8D, 0x2000},
    {0x0A8F, 0x0A91, 0x2000},
    {0x0A93, 0x0A94, 0x2000},
    {0x0A95, 0x0AA8, 0x2020},
    {0x0AAA, 0x0AB0, 0x2020},
    {0x0AB2, 0x0AB3, 0x2020},
    {0x0AB5, 0x0AB9, 0x2020},
    {0x0ABC, 0x0ABC, 0x2034},
    {0x0ABD, 0x0ABD, 0x2000},
    {0x0ABE, 0x0AC0, 0x2008},
    {0x0AC1, 0x0AC5, 0x2034},
    {0x0AC7, 0x0AC8, 0x2034},
    {0x0AC9, 0x0AC9, 0x2008},
    {0x0ACB, 0x0ACC, 0x2008},
    {0x0ACD, 0x0ACD, 0x2014},
    {0x0AD0, 0x0AD0, 0x2000},
    {0x0AE0, 0x0AE1, 0x2000},
    {0x0AE2, 0x0AE3, 0x2034},
    {0x0AE6, 0x0AEF, 0x2000},
    {0x0AF9, 0x0AF9, 0x2020},
    {0x0AFA, 0x0AFF, 0x2034},
    {0x0B01, 0x0B01, 0x2034},
    {0x0B02, 0x0B03, 0x2008},
    {0x0B05, 0x0B0C, 0x2000},
    {0x0B0F, 0x0B10, 0x2000},
    {0x0B13, 0x0B14, 0x2000},
    {0x0B15, 0x0B28, 0x2020},
    {0x0B2A, 0x0B30, 0x2020},
    {0x0B32, 0x0B33, 0x2020},
    {0x0B35, 0x0B39, 0x2020},
    {0x0B3C, 0x0B3C, 0x2034},
    {0x0B3D, 0x0B3D, 0x2000},
    {0x0B3E, 0x0B3F, 0x2034},
    {0x0B40, 0x0B40, 0x2008},
    {0x0B41, 0x0B44, 0x2034},
    {0x0B47, 0x0B48, 0x2008},
    {0x0B4B, 0x0B4C, 0x2008},
    {0x0B4D, 0x0B4D, 0x2014},
    {0x0B55, 0x0B57, 0x2034},
    {0x0B5C, 0x0B5D, 0x2020},
    {0x0B5F, 0x0B5F, 0x2020},
    {0x0B60, 0x0B61, 0x2000},
    {0x0B62, 0x0B63, 0x2034},
    {0x0B66, 0x0B6F, 0x2000},
    {0x0B71, 0x0B71, 0x2020},
    {0x0B82, 0x0B82, 0x2034},
    {0x0B83, 0x0B83, 0x2000},
    {0x0B85, 0x0B8A, 0x2000},
    {0x0B8E, 0x0B90, 0x2000},
    {0x0B92, 0x0B95, 0x2000},
    {0x0B99, 0x0B9A, 0x2000},
    {0x0B9C, 0x0B9C, 0x2000},
    {0x0B9E, 0x0B9F, 0x2000},
    {0x0BA3, 0x0BA4, 0x2000},
    {0x0BA8, 0x0BAA, 0x2000},
    {0x0BAE, 0x0BB9, 0x2000},
    {0x0BBE, 0x0BBE, 0x2034},
    {0x0BBF, 0x0BBF, 0x2008},
    {0x0BC0, 0x0BC0, 0x2034},
    {0x0BC1, 0x0BC2, 0x2008},
    {0x0BC6, 0x0BC8, 0x2008},
    {0x0BCA, 0x0BCC, 0x2008},
    {0x0BCD, 0x0BCD, 0x2034},
    {0x0BD0, 0x0BD0, 0x2000},
    {0x0BD7, 0x0BD7, 0x2034},
    {0x0BE6, 0x0BEF, 0x2000},
    {0x0C00, 0x0C00, 0x2034},
    {0x0C01, 0x0C03, 0x2008},
    {0x0C04, 0x0C04, 0x2034},
    {0x0C05, 0x0C0C, 0x2000},
    {0x0C0E, 0x0C10, 0x2000},
    {0x0C12, 0x0C14, 0x2000},
    {0x0C15, 0x0C28, 0x2020},
    {0x0C2A, 0x0C39, 0x2020},
    {0x0C3C, 0x0C3C, 0x2034},
    {0x0C3D, 0x0C3D, 0x2000},
    {0x0C3E, 0x0C40, 0x2034},
    {0x0C41, 0x0C44, 0x2008},
    {0x0C46, 0x0C48, 0x2034},
    {0x0C4A, 0x0C4C, 0x2034},
    {0x0C4D, 0x0C4D, 0x2014},
    {0x0C55, 0x0C56, 0x2034},
    {0x0C58, 0x0C5A, 0x2020},
    {0x0C5C, 0x0C5D, 0x2000},
    {0x0C60, 0x0C61, 0x2000},
    {0x0C62, 0x0C63, 0x2034},
    {0x0C66, 0x0C6F, 0x2000},
    {0x0C80, 0x0C80, 0x2000},
    {0x0C81, 0x0C81, 0x2034},
    {0x0C82, 0x0C83, 0x2008},
    {0x0C85, 0x0C8C, 0x2000},
    {0x0C8E, 0x0C90, 0x2000},
    {0x0C92, 0x0CA8, 0x2000},
    {0x0CAA, 0x0CB3, 0x2000},
    {0x0CB5, 0x0CB9, 0x2000},
    {0x0CBC, 0x0CBC, 0x2034},
    {0x0CBD, 0x0CBD, 0x2000},
    {0x0CBE, 0x0CBE, 0x2008},
    {0x0CBF, 0x0CC0, 0x2034},
    {0x0CC1, 0x0CC1, 0x2008},
    {0x0CC2, 0x0CC2, 0x2034},
    {0x0CC3, 0x0CC4, 0x2008},
    {0x0CC6, 0x0CC8, 0x2034},
    {0x0CCA, 0x0CCD, 0x2034},
    {0x0CD5, 0x0CD6, 0x2034},
    {0x0CDC, 0x0CDE, 0x2000},
    {0x0CE0, 0x0CE1, 0x2000},
    {0x0CE2, 0x0CE3, 0x2034},
    {0x0CE6, 0x0CEF, 0x2000},
    {0x0CF1, 0x0CF2, 0x2000},
    {0x0CF3, 0x0CF3, 0x2008},
    {0x0D00, 0x0D01, 0x2034},
    {0x0D02, 0x0D03, 0x2008},
    {0x0D04, 0x0D0C, 0x2000},
    {0x0D0E, 0x0D10, 0x2000},
    {0x0D12, 0x0D14, 0x2000},
    {0x0D15, 0x0D3A, 0x2020},
    {0x0D3B, 0x0D3C, 0x2034},
    {0x0D3D, 0x0D3D, 0x2000},
    {0x0D3E, 0x0D3E, 0x2034},
    {0x0D3F, 0x0D40, 0x2008},
    {0x0D41, 0x0D44, 0x2034},
    {0x0D46, 0x0D48, 0x2008},
    {0x0D4A, 0x0D4C, 0x2008},
    {0x0D4D, 0x0D4D, 0x2014},
    {0x0D4E, 0x0D4E, 0x2007},
    {0x0D54, 0x0D56, 0x2000},
    {0x0D57, 0x0D57, 0x2034},
    {0x0D5F, 0x0D61, 0x2000},
    {0x0D62, 0x0D63, 0x2034},
    {0x0D66, 0x0D6F, 0x2000},
    {0x0D7A, 0x0D7F, 0x2000},
    {0x0D81, 0x0D81, 0x2034},
    {0x0D82, 0x0D83, 0x2008},
    {0x0D85, 0x0D96, 0x2000},
    {0x0D9A, 0x0DB1, 0x2000},
    {0x0DB3, 0x0DBB, 0x2000},
    {0x0DBD, 0x0DBD, 0x2000},
    {0x0DC0, 0x0DC6, 0x2000},
    {0x0DCA, 0x0DCA, 0x2034},
    {0x0DCF, 0x0DCF, 0x2034},
    {0x0DD0, 0x0DD1, 0x2008},
    {0x0DD2, 0x0DD4, 0x2034},
    {0x0DD6, 0x0DD6, 0x2034},
    {0x0DD8, 0x0DDE, 0x2008},
    {0x0DDF, 0x0DDF, 0x2034},
    {0x0DE6, 0x0DEF, 0x2000},
    {0x0DF2, 0x0DF3, 0x2008},
    {0x0E01, 0x0E30, 0x2000},
    {0x0E31, 0x0E31, 0x2034},
    {0x0E32, 0x0E32, 0x2000},
    {0x0E33, 0x0E33, 0x2008},
    {0x0E34, 0x0E3A, 0x2034},
    {0x0E40, 0x0E46, 0x2000},
    {0x0E47, 0x0E4E, 0x2034},
    {0x0E50, 0x0E59, 0x2000},
    {0x0E81, 0x0E82, 0x2000},
    {0x0E84, 0x0E84, 0x2000},
    {0x0E86, 0x0E8A, 0x2000},
    {0x0E8C, 0x0EA3, 0x2000},
    {0x0EA5, 0x0EA5, 0x2000},
    {0x0EA7, 0x0EB0, 0x2000},
    {0x0EB1, 0x0EB1, 0x2034},
    {0x0EB2, 0x0EB2, 0x2000},
    {0x0EB3, 0x0EB3, 0x2008},
    {0x0EB4, 0x0EBC, 0x2034},
    {0x0EBD, 0x0EBD, 0x2000},
    {0x0EC0, 0x0EC4, 0x2000},
    {0x0EC6, 0x0EC6, 0x2000},
    {0x0EC8, 0x0ECE, 0x2034},
    {0x0ED0, 0x0ED9, 0x2000},
    {0x0EDC, 0x0EDF, 0x2000},
    {0x0F00, 0x0F00, 0x2000},
    {0x0F18, 0x0F19, 0x2034},
    {0x0F20, 0x0F29, 0x2000},
    {0x0F35, 0x0F35, 0x2034},
    {0x0F37, 0x0F37, 0x2034},
    {0x0F39, 0x0F39, 0x2034},
    {0x0F3E, 0x0F3F, 0x2008},
    {0x0F40, 0x0F47, 0x2000},
    {0x0F49, 0x0F6C, 0x2000},
    {0x0F71, 0x0F7E, 0x2034},
    {0x0F7F, 0x0F7F, 0x2008},
    {0x0F80, 0x0F84, 0x2034},
    {0x0F86, 0x0F87, 0x2034},
    {0x0F88, 0x0F8C, 0x2000},
    {0x0F8D, 0x0F97, 0x2034},
    {0x0F99, 0x0FBC, 0x2034},
    {0x0FC6, 0x0FC6, 0x2034},
    {0x1000, 0x102A, 0x2020},
    {0x102B, 0x102C, 0x2000},
    {0x102D, 0x1030, 0x2034},
    {0x1031, 0x1031, 0x2008},
    {0x1032, 0x1037, 0x2034},
    {0x1038, 0x1038, 0x2000},
    {0x1039, 0x1039, 0x2014},
    {0x103A, 0x103A, 0x2034},
    {0x103B, 0x103C, 0x2008},
    {0x103D, 0x103E, 0x2034},
    {0x103F, 0x103F, 0x2020},
    {0x1040, 0x1049, 0x2000},
    {0x1050, 0x1055, 0x2020},
    {0x1056, 0x1057, 0x2008},
    {0x1058, 0x1059, 0x2034},
    {0x105A, 0x105D, 0x2020},
    {0x105E, 0x1060, 0x2034},
    {0x1061, 0x1061, 0x2020},
    {0x1062, 0x1064, 0x2000},
    {0x1065, 0x1066, 0x2020},
    {0x1067, 0x106D, 0x2000},
    {0x106E, 0x1070, 0x2020},
    {0x1071, 0x1074, 0x2034},
    {0x1075, 0x1081, 0x2020},
    {0x1082, 0x1082, 0x2034},
    {0x1083, 0x1083, 0x2000},
    {0x1084, 0x1084, 0x2008},
    {0x1085, 0x1086, 0x2034},
    {0x1087, 0x108C, 0x2000},
    {0x108D, 0x108D, 0x2034},
    {0x108E, 0x108E, 0x2020},
    {0x108F, 0x109C, 0x2000},
    {0x109D, 0x109D, 0x2034},
    {0x10A0, 0x10C5, 0x2000},
    {0x10C7, 0x10C7, 0x2000},
    {0x10CD, 0x10CD, 0x2000},
    {0x10D0, 0x10FA, 0x2000},
    {0x10FC, 0x10FF, 0x2000},
    {0x1100, 0x115F, 0x2009},
    {0x1160, 0x11A7, 0x200A},
    {0x11A8, 0x11FF, 0x200B},
    {0x1200, 0x1248, 0x2000},
    {0x124A, 0x124D, 0x2000},
    {0x1250, 0x1256, 0x2000},
    {0x1258, 0x1258, 0x2000},
    {0x125A, 0x125D, 0x2000},
    {0x1260, 0x1288, 0x2000},
    {0x128A, 0x128D, 0x2000},
    {0x1290, 0x12B0, 0x2000},
    {0x12B2, 0x12B5, 0x2000},
    {0x12B8, 0x12BE, 0x2000},
    {0x12C0, 0x12C0, 0x2000},
    {0x12C2, 0x12C5, 0x2000},
    {0x12C8, 0x12D6, 0x2000},
    {0x12D8, 0x1310, 0x2000},
    {0x1312, 0x1315, 0x2000},
    {0x1318, 0x135A, 0x2000},
    {0x135D, 0x135F, 0x2034},
    {0x1380, 0x138F, 0x2000},
    {0x13A0, 0x13F5, 0x2000},
    {0x13F8, 0x13FD, 0x2000},
    {0x1401, 0x166C, 0x2000},
    {0x166F, 0x167F, 0x2000},
    {0x1680, 0x1680, 0x1000},
    {0x1681, 0x169A, 0x2000},
    {0x16A0, 0x16EA, 0x2000},
    {0x16EE, 0x16F8, 0x2000},
    {0x1700, 0x1711, 0x2000},
    {0x1712, 0x1715, 0x2034},
    {0x171F, 0x1731, 0x2000},
    {0x1732, 0x1734, 0x2034},
    {0x1740, 0x1751, 0x2000},
    {0x1752, 0x1753, 0x2034},
    {0x1760, 0x176C, 0x2000},
    {0x176E, 0x1770, 0x2000},
    {0x1772, 0x1773, 0x2034},
    {0x1780, 0x17B3, 0x2020},
    {0x17B4, 0x17B5, 0x2034},
    {0x17B6, 0x17B6, 0x2008},
    {0x17B7, 0x17BD, 0x2034},
    {0x17BE, 0x17C5, 0x2008},
    {0x17C6, 0x17C6, 0x2034},
    {0x17C7, 0x17C8, 0x2008},
    {0x17C9, 0x17D1, 0x2034},
    {0x17D2, 0x17D2, 0x2014},
    {0x17D3, 0x17D3, 0x2034},
    {0x17D7, 0x17D7, 0x2000},
    {0x17DC, 0x17DC, 0x2000},
    {0x17DD, 0x17DD, 0x2034},
    {0x17E0, 0x17E9, 0x2000},
    {0x180B, 0x180D, 0x2034},
    {0x180E, 0x180E, 0x3},
    {0x180F, 0x180F, 0x2034},
    {0x1810, 0x1819, 0x2000},
    {0x1820, 0x1878, 0x2000},
    {0x1880, 0x1884, 0x2000},
    {0x1885, 0x1886, 0x2034},
    {0x1887, 0x18A8, 0x2000},
    {0x18A9, 0x18A9, 0x2034},
    {0x18AA, 0x18AA, 0x2000},
    {0x18B0, 0x18F5, 0x2000},
    {0x1900, 0x191E, 0x2000},
    {0x1920, 0x1922, 0x2034},
    {0x1923, 0x1926, 0x2008},
    {0x1927, 0x1928, 0x2034},
    {0x1929, 0x192B, 0x2008},
    {0x1930, 0x1931, 0x2008},
    {0x1932, 0x1932, 0x2034},
    {0x1933, 0x1938, 0x2008},
    {0x1939, 0x193B, 0x2034},
    {0x1946, 0x196D, 0x2000},
    {0x1970, 0x1974, 0x2000},
    {0x1980, 0x19AB, 0x2000},
    {0x19B0, 0x19C9, 0x2000},
    {0x19D0, 0x19D9, 0x2000},
    {0x1A00, 0x1A16, 0x2000},
    {0x1A17, 0x1A18, 0x2034},
    {0x1A19, 0x1A1A, 0x2008},
    {0x1A1B, 0x1A1B, 0x2034},
    {0x1A20, 0x1A54, 0x2020},
    {0x1A55, 0x1A55, 0x2008},
    {0x1A56, 0x1A56, 0x2034},
    {0x1A57, 0x1A57, 0x2008},
    {0x1A58, 0x1A5E, 0x2034},
    {0x1A60, 0x1A60, 0x2014},
    {0x1A61, 0x1A61, 0x2000},
    {0x1A62, 0x1A62, 0x2034},
    {0x1A63, 0x1A64, 0x2000},
    {0x1A65, 0x1A6C, 0x2034},
    {0x1A6D, 0x1A72, 0x2008},
    {0x1A73, 0x1A7C, 0x2034},
    {0x1A7F, 0x1A7F, 0x2034},
    {0x1A80, 0x1A89, 0x2000},
    {0x1A90, 0x1A99, 0x2000},
    {0x1AA7, 0x1AA7, 0x2000},
    {0x1AB0, 0x1ADD, 0x2034},
    {0x1AE0, 0x1AEB, 0x2034},
    {0x1B00, 0x1B03, 0x2034},
    {0x1B04, 0x1B04, 0x2008},
    {0x1B05, 0x1B0A, 0x2000},
    {0x1B0B, 0x1B0C, 0x2020},
    {0x1B0D, 0x1B12, 0x2000},
    {0x1B13, 0x1B33, 0x2020},
    {0x1B34, 0x1B3D, 0x2034},
    {0x1B3E, 0x1B41, 0x2008},
    {0x1B42, 0x1B43, 0x2034},
    {0x1B44, 0x1B44, 0x2014},
    {0x1B45, 0x1B4C, 0x2020},
    {0x1B50, 0x1B59, 0x2000},
    {0x1B6B, 0x1B73, 0x2034},
    {0x1B80, 0x1B81, 0x2034},
    {0x1B82, 0x1B82, 0x2008},
    {0x1B83, 0x1BA0, 0x2020},
    {0x1BA1, 0x1BA1, 0x2008},
    {0x1BA2, 0x1BA5, 0x2034},
    {0x1BA6, 0x1BA7, 0x2008},
    {0x1BA8, 0x1BAA, 0x2034},
    {0x1BAB, 0x1BAB, 0x2014},
    {0x1BAC, 0x1BAD, 0x2034},
    {0x1BAE, 0x1BAF, 0x2020},
    {0x1BB0, 0x1BBA, 0x2000},
    {0x1BBB, 0x1BBD, 0x2020},
    {0x1BBE, 0x1BE5, 0x2000},
    {0x1BE6, 0x1BE6, 0x2034},
    {0x1BE7, 0x1BE7, 0x2008},
    {0x1BE8, 0x1BE9, 0x2034},
    {0x1BEA, 0x1BEC, 0x2008},
    {0x1BED, 0x1BED, 0x2034},
    {0x1BEE, 0x1BEE, 0x2008},
    {0x1BEF, 0x1BF3, 0x2034},
    {0x1C00, 0x1C23, 0x2000},
    {0x1C24, 0x1C2B, 0x2008},
    {0x1C2C, 0x1C33, 0x2034},
    {0x1C34, 0x1C35, 0x2008},
    {0x1C36, 0x1C37, 0x2034},
    {0x1C40, 0x1C49, 0x2000},
    {0x1C4D, 0x1C7D, 0x2000},
    {0x1C80, 0x1C8A, 0x2000},
    {0x1C90, 0x1CBA, 0x2000},
    {0x1CBD, 0x1CBF, 0x2000},
    {0x1CD0, 0x1CD2, 0x2034},
    {0x1CD4, 0x1CE0, 0x2034},
    {0x1CE1, 0x1CE1, 0x2008},
    {0x1CE2, 0x1CE8, 0x2034},
    {0x1CE9, 0x1CEC, 0x2000},
    {0x1CED, 0x1CED, 0x2034},
    {0x1CEE, 0x1CF3, 0x2000},
    {0x1CF4, 0x1CF4, 0x2034},
    {0x1CF5, 0x1CF6, 0x2000},
    {0x1CF7, 0x1CF7, 0x2008},
    {0x1CF8, 0x1CF9, 0x2034},
    {0x1CFA, 0x1CFA, 0x2000},
    {0x1D00, 0x1DBF, 0x2000},
    {0x1DC0, 0x1DFF, 0x2034},
    {0x1E00, 0x1F15, 0x2000},
    {0x1F18, 0x1F1D, 0x2000},
    {0x1F20, 0x1F45, 0x2000},
    {0x1F48, 0x1F4D, 0x2000},
    {0x1F50, 0x1F57, 0x2000},
    {0x1F59, 0x1F59, 0x2000},
    {0x1F5B, 0x1F5B, 0x2000},
    {0x1F5D, 0x1F5D, 0x2000},
    {0x1F5F, 0x1F7D, 0x2000},
    {0x1F80, 0x1FB4, 0x2000},
    {0x1FB6, 0x1FBC, 0x2000},
    {0x1FBE, 0x1FBE, 0x2000},
    {0x1FC2, 0x1FC4, 0x2000},
    {0x1FC6, 0x1FCC, 0x2000},
    {0x1FD0, 0x1FD3, 0x2000},
    {0x1FD6, 0x1FDB, 0x2000},
    {0x1FE0, 0x1FEC, 0x2000},
    {0x1FF2, 0x1FF4, 0x2000},
    {0x1FF6, 0x1FFC, 0x2000},
    {0x2000, 0x200A, 0x1000},
    {0x200B, 0x200B, 0x3},
    {0x200C, 0x200C, 0x2004},
    {0x200D, 0x200D, 0x2835},
    {0x200E, 0x200F, 0x3},
    {0x2028, 0x2029, 0x1003},
    {0x202A, 0x202E, 0x3},
    {0x202F, 0x202F, 0x1000},
    {0x203C, 0x203C, 0xC0},
    {0x203F, 0x2040, 0x2000},
    {0x2049, 0x2049, 0xC0},
    {0x2054, 0x2054, 0x2000},
    {0x205F, 0x205F, 0x1000},
    {0x2060, 0x206F, 0x3},
    {0x2071, 0x2071, 0x2000},
    {0x207F, 0x207F, 0x2000},
    {0x2090, 0x209C, 0x2000},
    {0x20D0, 0x20E2, 0x2034},
    {0x20E3, 0x20E3, 0x2834},
    {0x20E4, 0x20F0, 0x2034},
    {0x2102, 0x2102, 0x2000},
    {0x2107, 0x2107, 0x2000},
    {0x210A, 0x2113, 0x2000},
    {0x2115, 0x2115, 0x2000},
    {0x2119, 0x211D, 0x2000},
    {0x2122, 0x2122, 0xC0},
    {0x2124, 0x2124, 0x2000},
    {0x2126, 0x2126, 0x2000},
    {0x2128, 0x2128, 0x2000},
    {0x212A, 0x212D, 0x2000},
    {0x212F, 0x2138, 0x2000},
    {0x2139, 0x2139, 0x20C0},
    {0x213C, 0x213F, 0x2000},
    {0x2145, 0x2149, 0x2000},
    {0x214E, 0x214E, 0x2000},
    {0x2160, 0x2188, 0x2000},
    {0x2194, 0x2199, 0xC0},
    {0x21A9, 0x21AA, 0xC0},
    {0x231A, 0x231B, 0x1C0},
    {0x2328, 0x2328, 0xC0},
    {0x23CF, 0x23CF, 0xC0},
    {0x23E9, 0x23EC, 0x1C0},
    {0x23ED, 0x23EF, 0xC0},
    {0x23F0, 0x23F0, 0x1C0},
    {0x23F1, 0x23F2, 0xC0},
    {0x23F3, 0x23F3, 0x1C0},
    {0x23F8, 0x23FA, 0xC0},
    {0x24B6, 0x24C1, 0x2000},
    {0x24C2, 0x24C2, 0x20C0},
    {0x24C3, 0x24E9, 0x2000},
    {0x25AA, 0x25AB, 0xC0},
    {0x25B6, 0x25B6, 0xC0},
    {0x25C0, 0x25C0, 0xC0},
    {0x25FB, 0x25FC, 0xC0},
    {0x25FD, 0x25FE, 0x1C0},
    {0x2600, 0x2604, 0xC0},
    {0x260E, 0x260E, 0xC0},
    {0x2611, 0x2611, 0xC0},
    {0x2614, 0x2615, 0x1C0},
    {0x2618, 0x2618, 0xC0},
    {0x261D, 0x261D, 0x4C0},
    {0x2620, 0x2620, 0xC0},
    {0x2622, 0x2623, 0xC0},
    {0x2626, 0x2626, 0xC0},
    {0x262A, 0x262A, 0xC0},
    {0x262E, 0x262F, 0xC0},
    {0x2638, 0x263A, 0xC0},
    {0x2640, 0x2640, 0xC0},
    {0x2642, 0x2642, 0xC0},
    {0x2648, 0x2653, 0x1C0},
    {0x265F, 0x2660, 0xC0},
    {0x2663, 0x2663, 0xC0},
    {0x2665, 0x2666, 0xC0},
    {0x2668, 0x2668, 0xC0},
    {0x267B, 0x267B, 0xC0},
    {0x267E, 0x267E, 0xC0},
    {0x267F, 0x267F, 0x1C0},
    {0x2692, 0x2692, 0xC0},
    {0x2693, 0x2693, 0x1C0},
    {0x2694, 0x2697, 0xC0},
    {0x2699, 0x2699, 0xC0},
    {0x269B, 0x269C, 0xC0},
    {0x26A0, 0x26A0, 0xC0},
    {0x26A1, 0x26A1, 0x1C0},
    {0x26A7, 0x26A7, 0xC0},
    {0x26AA, 0x26AB, 0x1C0},
    {0x26B0, 0x26B1, 0xC0},
    {0x26BD, 0x26BE, 0x1C0},
    {0x26C4, 0x26C5, 0x1C0},
    {0x26C8, 0x26C8, 0xC0},
    {0x26CE, 0x26CE, 0x1C0},
    {0x26CF, 0x26CF, 0xC0},
    {0x26D1, 0x26D1, 0xC0},
    {0x26D3, 0x26D3, 0xC0},
    {0x26D4, 0x26D4, 0x1C0},
    {0x26E9, 0x26E9, 0xC0},
    {0x26EA, 0x26EA, 0x1C0},
    {0x26F0, 0x26F1, 0xC0},
    {0x26F2, 0x26F3, 0x1C0},
    {0x26F4, 0x26F4, 0xC0},
    {0x26F5, 0x26F5, 0x1C0},
    {0x26F7, 0x26F8, 0xC0},
    {0x26F9, 0x26F9, 0x4C0},
    {0x26FA, 0x26FA, 0x1C0},
    {0x26FD, 0x26FD, 0x1C0},
    {0x2702, 0x2702, 0xC0},
    {0x2705, 0x2705, 0x1C0},
    {0x2708, 0x2709, 0xC0},
    {0x270A, 0x270B, 0x5C0},
    {0x270C, 0x270D, 0x4C0},
    {0x270F, 0x270F, 0xC0},
    {0x2712, 0x2712, 0xC0},
    {0x2714, 0x2714, 0xC0},
    {0x2716, 0x2716, 0xC0},
    {0x271D, 0x271D, 0xC0},
    {0x2721, 0x2721, 0xC0},
    {0x2728, 0x2728, 0x1C0},
    {0x2733, 0x2734, 0xC0},
    {0x2744, 0x2744, 0xC0},
    {0x2747, 0x2747, 0xC0},
    {0x274C, 0x274C, 0x1C0},
    {0x274E, 0x274E, 0x1C0},
    {0x2753, 0x2755, 0x1C0},
    {0x2757, 0x2757, 0x1C0},
    {0x2763, 0x2764, 0xC0},
    {0x2795, 0x2797, 0x1C0},
    {0x27A1, 0x27A1, 0xC0},
    {0x27B0, 0x27B0, 0x1C0},
    {0x27BF, 0x27BF, 0x1C0},
    {0x2934, 0x2935, 0xC0},
    {0x2B05, 0x2B07, 0xC0},
    {0x2B1B, 0x2B1C, 0x1C0},
    {0x2B50, 0x2B50, 0x1C0},
    {0x2B55, 0x2B55, 0x1C0},
    {0x2C00, 0x2CE4, 0x2000},
    {0x2CEB, 0x2CEE, 0x2000},
    {0x2CEF, 0x2CF1, 0x2034},
    {0x2CF2, 0x2CF3, 0x2000},
    {0x2D00, 0x2D25, 0x2000},
    {0x2D27, 0x2D27, 0x2000},
    {0x2D2D, 0x2D2D, 0x2000},
    {0x2D30, 0x2D67, 0x2000},
    {0x2D6F, 0x2D6F, 0x2000},
    {0x2D7F, 0x2D7F, 0x2034},
    {0x2D80, 0x2D96, 0x2000},
    {0x2DA0, 0x2DA6, 0x2000},
    {0x2DA8, 0x2DAE, 0x2000},
    {0x2DB0, 0x2DB6, 0x2000},
    {0x2DB8, 0x2DBE, 0x2000},
    {0x2DC0, 0x2DC6, 0x2000},
    {0x2DC8, 0x2DCE, 0x2000},
    {0x2DD0, 0x2DD6, 0x2000},
    {0x2DD8, 0x2DDE, 0x2000},
    {0x2DE0, 0x2DFF, 0x2034},
    {0x2E2F, 0x2E2F, 0x2000},
    {0x3000, 0x3000, 0x1000},
    {0x3005, 0x3007, 0x2000},
    {0x3021, 0x3029, 0x2000},
    {0x302A, 0x302F, 0x2034},
    {0x3030, 0x3030, 0xC0},
    {0x3031, 0x3035, 0x2000},
    {0x3038, 0x303C, 0x2000},
    {0x303D, 0x303D, 0xC0},
    {0x3041, 0x3096, 0x2000},
    {0x3099, 0x309A, 0x2034},
    {0x309D, 0x309F, 0x2000},
    {0x30A1, 0x30FA, 0x2000},
    {0x30FC, 0x30FF, 0x2000},
    {0x3105, 0x312F, 0x2000},
    {0x3131, 0x318E, 0x2000},
    {0x31A0, 0x31BF, 0x2000},
    {0x31F0, 0x31FF, 0x2000},
    {0x3297, 0x3297, 0xC0},
    {0x3299, 0x3299, 0xC0},
    {0x3400, 0x4DBF, 0x2000},
    {0x4E00, 0xA48C, 0x2000},
    {0xA4D0, 0xA4FD, 0x2000},
    {0xA500, 0xA60C, 0x2000},
    {0xA610, 0xA62B, 0x2000},
    {0xA640, 0xA66E, 0x2000},
    {0xA66F, 0xA672, 0x2034},
    {0xA674, 0xA67D, 0x2034},
    {0xA67F, 0xA69D, 0x2000},
    {0xA69E, 0xA69F, 0x2034},
    {0xA6A0, 0xA6EF, 0x2000},
    {0xA6F0, 0xA6F1, 0x2034},
    {0xA717, 0xA71F, 0x2000},
    {0xA722, 0xA788, 0x2000},
    {0xA78B, 0xA7DC, 0x2000},
    {0xA7F1, 0xA801, 0x2000},
    {0xA802, 0xA802, 0x2034},
    {0xA803, 0xA805, 0x2000},
    {0xA806, 0xA806, 0x2034},
    {0xA807, 0xA80A, 0x2000},
    {0xA80B, 0xA80B, 0x2034},
    {0xA80C, 0xA822, 0x2000},
    {0xA823, 0xA824, 0x2008},
    {0xA825, 0xA826, 0x2034},
    {0xA827, 0xA827, 0x2008},
    {0xA82C, 0xA82C, 0x2034},
    {0xA840, 0xA873, 0x2000},
    {0xA880, 0xA881, 0x2008},
    {0xA882, 0xA8B3, 0x2000},
    {0xA8B4, 0xA8C3, 0x2008},
    {0xA8C4, 0xA8C5, 0x2034},
    {0xA8D0, 0xA8D9, 0x2000},
    {0xA8E0, 0xA8F1, 0x2034},
    {0xA8F2, 0xA8F7, 0x2000},
    {0xA8FB, 0xA8FB, 0x2000},
    {0xA8FD, 0xA8FE, 0x2000},
    {0xA8FF, 0xA8FF, 0x2034},
    {0xA900, 0xA925, 0x2000},
    {0xA926, 0xA92D, 0x2034},
    {0xA930, 0xA946, 0x2000},
    {0xA947, 0xA951, 0x2034},
    {0xA952, 0xA952, 0x2008},
    {0xA953, 0xA953, 0x2034},
    {0xA960, 0xA97C, 0x2009},
    {0xA980, 0xA982, 0x2034},
    {0xA983, 0xA983, 0x2008},
    {0xA984, 0xA988, 0x2000},
    {0xA989, 0xA98B, 0x2020},
    {0xA98C, 0xA98E, 0x2000},
    {0xA98F, 0xA9B2, 0x2020},
    {0xA9B3, 0xA9B3, 0x2034},
    {0xA9B4, 0xA9B5, 0x2008},
    {0xA9B6, 0xA9B9, 0x2034},
    {0xA9BA, 0xA9BB, 0x2008},
    {0xA9BC, 0xA9BD, 0x2034},
    {0xA9BE, 0xA9BF, 0x2008},
    {0xA9C0, 0xA9C0, 0x2014},
    {0xA9CF, 0xA9D9, 0x2000},
    {0xA9E0, 0xA9E4, 0x2020},
    {0xA9E5, 0xA9E5, 0x2034},
    {0xA9E6, 0xA9E6, 0x2000},
    {0xA9E7, 0xA9EF, 0x2020},
    {0xA9F0, 0xA9F9, 0x2000},
    {0xA9FA, 0xA9FE, 0x2020},
    {0xAA00, 0xAA28, 0x2000},
    {0xAA29, 0xAA2E, 0x2034},
    {0xAA2F, 0xAA30, 0x2008},
    {0xAA31, 0xAA32, 0x2034},
    {0xAA33, 0xAA34, 0x2008},
    {0xAA35, 0xAA36, 0x2034},
    {0xAA40, 0xAA42, 0x2000},
    {0xAA43, 0xAA43, 0x2034},
    {0xAA44, 0xAA4B, 0x2000},
    {0xAA4C, 0xAA4C, 0x2034},
    {0xAA4D, 0xAA4D, 0x2008},
    {0xAA50, 0xAA59, 0x2000},
    {0xAA60, 0xAA6F, 0x2020},
    {0xAA70, 0xAA70, 0x2000},
    {0xAA71, 0xAA73, 0x2020},
    {0xAA74, 0xAA76, 0x2000},
    {0xAA7A, 0xAA7A, 0x2020},
    {0xAA7B, 0xAA7B, 0x2000},
    {0xAA7C, 0xAA7C, 0x2034},
    {0xAA7D, 0xAA7D, 0x2000},
    {0xAA7E, 0xAA7F, 0x2020},
    {0xAA80, 0xAAAF, 0x2000},
    {0xAAB0, 0xAAB0, 0x2034},
    {0xAAB1, 0xAAB1, 0x2000},
    {0xAAB2, 0xAAB4, 0x2034},
    {0xAAB5, 0xAAB6, 0x2000},
    {0xAAB7, 0xAAB8, 0x2034},
    {0xAAB9, 0xAABD, 0x2000},
    {0xAABE, 0xAABF, 0x2034},
    {0xAAC0, 0xAAC0, 0x2000},
    {0xAAC1, 0xAAC1, 0x2034},
    {0xAAC2, 0xAAC2, 0x2000},
    {0xAADB, 0xAADD, 0x2000},
    {0xAAE0, 0xAAEA, 0x2020},
    {0xAAEB, 0xAAEB, 0x2008},
    {0xAAEC, 0xAAED, 0x2034},
    {0xAAEE, 0xAAEF, 0x2008},
    {0xAAF2, 0xAAF4, 0x2000},
    {0xAAF5, 0xAAF5, 0x2008},
    {0xAAF6, 0xAAF6, 0x2014},
    {0xAB01, 0xAB06, 0x2000},
    {0xAB09, 0xAB0E, 0x2000},
    {0xAB11, 0xAB16, 0x2000},
    {0xAB20, 0xAB26, 0x2000},
    {0xAB28, 0xAB2E, 0x2000},
    {0xAB30, 0xAB5A, 0x2000},
    {0xAB5C, 0xAB69, 0x2000},
    {0xAB70, 0xABBF, 0x2000},
    {0xABC0, 0xABDA, 0x2020},
    {0xABDB, 0xABE2, 0x2000},
    {0xABE3, 0xABE4, 0x2008},
    {0xABE5, 0xABE5, 0x2034},
    {0xABE6, 0xABE7, 0x2008},
    {0xABE8, 0xABE8, 0x2034},
    {0xABE9, 0xABEA, 0x2008},
    {0xABEC, 0xABEC, 0x2008},
    {0xABED, 0xABED, 0x2034},
    {0xABF0, 0xABF9, 0x2000},
    {0xAC00, 0xAC00, 0x200C},
    {0xAC01, 0xAC1B, 0x200D},
    {0xAC1C, 0xAC1C, 0x200C},
    {0xAC1D, 0xAC37, 0x200D},
    {0xAC38, 0xAC38, 0x200C},
    {0xAC39, 0xAC53, 0x200D},
    {0xAC54, 0xAC54, 0x200C},
    {0xAC55, 0xAC6F, 0x200D},
    {0xAC70, 0xAC70, 0x200C},
    {0xAC71, 0xAC8B, 0x200D},
    {0xAC8C, 0xAC8C, 0x200C},
    {0xAC8D, 0xACA7, 0x200D},
    {0xACA8, 0xACA8, 0x200C},
    {0xACA9, 0xACC3, 0x200D},
    {0xACC4, 0xACC4, 0x200C},
    {0xACC5, 0xACDF, 0x200D},
    {0xACE0, 0xACE0, 0x200C},
    {0xACE1, 0xACFB, 0x200D},
    {0xACFC, 0xACFC, 0x200C},
    {0xACFD, 0xAD17, 0x200D},
    {0xAD18, 0xAD18, 0x200C},
    {0xAD19, 0xAD33, 0x200D},
    {0xAD34, 0xAD34, 0x200C},
    {0xAD35, 0xAD4F, 0x200D},
    {0xAD50, 0xAD50, 0x200C},
    {0xAD51, 0xAD6B, 0x200D},
    {0xAD6C, 0xAD6C, 0x200C},
    {0xAD6D, 0xAD87, 0x200D},
    {0xAD88, 0xAD88, 0x200C},
    {0xAD89, 0xADA3, 0x200D},
    {0xADA4, 0xADA4, 0x200C},
    {0xADA5, 0xADBF, 0x200D},
    {0xADC0, 0xADC0, 0x200C},
    {0xADC1, 0xADDB, 0x200D},
    {0xADDC, 0xADDC, 0x200C},
    {0xADDD, 0xADF7, 0x200D},
    {0xADF8, 0xADF8, 0x200C},
    {0xADF9, 0xAE13, 0x200D},
    {0xAE14, 0xAE14, 0x200C},
    {0xAE15, 0xAE2F, 0x200D},
    {0xAE30, 0xAE30, 0x200C},
    {0xAE31, 0xAE4B, 0x200D},
    {0xAE4C, 0xAE4C, 0x200C},
    {0xAE4D, 0xAE67, 0x200D},
    {0xAE68, 0xAE68, 0x200C},
    {0xAE69, 0xAE83, 0x200D},
    {0xAE84, 0xAE84, 0x200C},
    {0xAE85, 0xAE9F, 0x200D},
    {0xAEA0, 0xAEA0, 0x200C},
    {0xAEA1, 0xAEBB, 0x200D},
    {0xAEBC, 0xAEBC, 0x200C},
    {0xAEBD, 0xAED7, 0x200D},
    {0xAED8, 0xAED8, 0x200C},
    {0xAED9, 0xAEF3, 0x200D},
    {0xAEF4, 0xAEF4, 0x200C},
    {0xAEF5, 0xAF0F, 0x200D},
    {0xAF10, 0xAF10, 0x200C},
    {0xAF11, 0xAF2B, 0x200D},
    {0xAF2C, 0xAF2C, 0x200C},
    {0xAF2D, 0xAF47, 0x200D},
    {0xAF48, 0xAF48, 0x200C},
    {0xAF49, 0xAF63, 0x200D},
    {0xAF64, 0xAF64, 0x200C},
    {0xAF65, 0xAF7F, 0x200D},
    {0xAF80, 0xAF80, 0x200C},
    {0xAF81, 0xAF9B, 0x200D},
    {0xAF9C, 0xAF9C, 0x200C},
    {0xAF9D, 0xAFB7, 0x200D},
    {0xAFB8, 0xAFB8, 0x200C},
    {0xAFB9, 0xAFD3, 0x200D},
    {0xAFD4, 0xAFD4, 0x200C},
    {0xAFD5, 0xAFEF, 0x200D},
    {0xAFF0, 0xAFF0, 0x200C},
    {0xAFF1, 0xB00B, 0x200D},
    {0xB00C, 0xB00C, 0x200C},
    {0xB00D, 0xB027, 0x200D},
    {0xB028, 0xB028, 0x200C},
    {0xB029, 0xB043, 0x200D},
    {0xB044, 0xB044, 0x200C},
    {0xB045, 0xB05F, 0x200D},
    {0xB060, 0xB060, 0x200C},
    {0xB061, 0xB07B, 0x200D},
    {0xB07C, 0xB07C, 0x200C},
    {0xB07D, 0xB097, 0x200D},
    {0xB098, 0xB098, 0x200C},
    {0xB099, 0xB0B3, 0x200D},
    {0xB0B4, 0xB0B4, 0x200C},
    {0xB0B5, 0xB0CF, 0x200D},
    {0xB0D0, 0xB0D0, 0x200C},
    {0xB0D1, 0xB0EB, 0x200D},
    {0xB0EC, 0xB0EC, 0x200C},
    {0xB0ED, 0xB107, 0x200D},
    {0xB108, 0xB108, 0x200C},
    {0xB109, 0xB123, 0x200D},
    {0xB124, 0xB124, 0x200C},
    {0xB125, 0xB13F, 0x200D},
    {0xB140, 0xB140, 0x200C},
    {0xB141, 0xB15B, 0x200D},
    {0xB15C, 0xB15C, 0x200C},
    {0xB15D, 0xB177, 0x200D},
    {0xB178, 0xB178, 0x200C},
    {0xB179, 0xB193, 0x200D},
    {0xB194, 0xB194, 0x200C},
    {0xB195, 0xB1AF, 0x200D},
    {0xB1B0, 0xB1B0, 0x200C},
    {0xB1B1, 0xB1CB, 0x200D},
    {0xB1CC, 0xB1CC, 0x200C},
    {0xB1CD, 0xB1E7, 0x200D},
    {0xB1E8, 0xB1E8, 0x200C},
    {0xB1E9, 0xB203, 0x200D},
    {0xB204, 0xB204, 0x200C},
    {0xB205, 0xB21F, 0x200D},
    {0xB220, 0xB220, 0x200C},
    {0xB221, 0xB23B, 0x200D},
    {0xB23C, 0xB23C, 0x200C},
    {0xB23D, 0xB257, 0x200D},
    {0xB258, 0xB258, 0x200C},
    {0xB259, 0xB273, 0x200D},
    {0xB274, 0xB274, 0x200C},
    {0xB275, 0xB28F, 0x200D},
    {0xB290, 0xB290, 0x200C},
    {0xB291, 0xB2AB, 0x200D},
    {0xB2AC, 0xB2AC, 0x200C},
    {0xB2AD, 0xB2C7, 0x200D},
    {0xB2C8, 0xB2C8, 0x200C},
    {0xB2C9, 0xB2E3, 0x200D},
    {0xB2E4, 0xB2E4, 0x200C},
    {0xB2E5, 0xB2FF, 0x200D},
    {0xB300, 0xB300, 0x200C},
    {0xB301, 0xB31B, 0x200D},
    {0xB31C, 0xB31C, 0x200C},
    {0xB31D, 0xB337, 0x200D},
    {0xB338, 0xB338, 0x200C},
    {0xB339, 0xB353, 0x200D},
    {0xB354, 0xB354, 0x200C},
    {0xB355, 0xB36F, 0x200D},
    {0xB370, 0xB370, 0x200C},
    {0xB371, 0xB38B, 0x200D},
    {0xB38C, 0xB38C, 0x200C},
    {0xB38D, 0xB3A7, 0x200D},
    {0xB3A8, 0xB3A8, 0x200C},
    {0xB3A9, 0xB3C3, 0x200D},
    {0xB3C4, 0xB3C4, 0x200C},
    {0xB3C5, 0xB3DF, 0x200D},
    {0xB3E0, 0xB3E0, 0x200C},
    {0xB3E1, 0xB3FB, 0x200D},
    {0xB3FC, 0xB3FC, 0x200C},
    {0xB3FD, 0xB417, 0x200D},
    {0xB418, 0xB418, 0x200C},
    {0xB419, 0xB433, 0x200D},
    {0xB434, 0xB434, 0x200C},
    {0xB435, 0xB44F, 0x200D},
    {0xB450, 0xB450, 0x200C},
    {0xB451, 0xB46B, 0x200D},
    {0xB46C, 0xB46C, 0x200C},
    {0xB46D, 0xB487, 0x200D},
    {0xB488, 0xB488, 0x200C},
    {0xB489, 0xB4A3, 0x200D},
    {0xB4A4, 0xB4A4, 0x200C},
    {0xB4A5, 0xB4BF, 0x200D},
    {0xB4C0, 0xB4C0, 0x200C},
    {0xB4C1, 0xB4DB, 0x200D},
    {0xB4DC, 0xB4DC, 0x200C},
    {0xB4DD, 0xB4F7, 0x200D},
    {0xB4F8, 0xB4F8, 0x200C},
    {0xB4F9, 0xB513, 0x200D},
    {0xB514, 0xB514, 0x200C},
    {0xB515, 0xB52F, 0x200D},
    {0xB530, 0xB530, 0x200C},
    {0xB531, 0xB54B, 0x200D},
    {0xB54C, 0xB54C, 0x200C},
    {0xB54D, 0xB567, 0x200D},
    {0xB568, 0xB568, 0x200C},
    {0xB569, 0xB583, 0x200D},
    {0xB584, 0xB584, 0x200C},
    {0xB585, 0xB59F, 0x200D},
    {0xB5A0, 0xB5A0, 0x200C},
    {0xB5A1, 0xB5BB, 0x200D},
    {0xB5BC, 0xB5BC, 0x200C},
    {0xB5BD, 0xB5D7, 0x200D},
    {0xB5D8, 0xB5D8, 0x200C},
    {0xB5D9, 0xB5F3, 0x200D},
    {0xB5F4, 0xB5F4, 0x200C},
    {0xB5F5, 0xB60F, 0x200D},
    {0xB610, 0xB610, 0x200C},
    {0xB611, 0xB62B, 0x200D},
    {0xB62C, 0xB62C, 0x200C},
    {0xB62D, 0xB647, 0x200D},
    {0xB648, 0xB648, 0x200C},
    {0xB649, 0xB663, 0x200D},
    {0xB664, 0xB664, 0x200C},
    {0xB665, 0xB67F, 0x200D},
    {0xB680, 0xB680, 0x200C},
    {0xB681, 0xB69B, 0x200D},
    {0xB69C, 0xB69C, 0x200C},
    {0xB69D, 0xB6B7, 0x200D},
    {0xB6B8, 0xB6B8, 0x200C},
    {0xB6B9, 0xB6D3, 0x200D},
    {0xB6D4, 0xB6D4, 0x200C},
    {0xB6D5, 0xB6EF, 0x200D},
    {0xB6F0, 0xB6F0, 0x200C},
    {0xB6F1, 0xB70B, 0x200D},
    {0xB70C, 0xB70C, 0x200C},
    {0xB70D, 0xB727, 0x200D},
    {0xB728, 0xB728, 0x200C},
    {0xB729, 0xB743, 0x200D},
    {0xB744, 0xB744, 0x200C},
    {0xB745, 0xB75F, 0x200D},
    {0xB760, 0xB760, 0x200C},
    {0xB761, 0xB77B, 0x200D},
    {0xB77C, 0xB77C, 0x200C},
    {0xB77D, 0xB797, 0x200D},
    {0xB798, 0xB798, 0x200C},
    {0xB799, 0xB7B3, 0x200D},
    {0xB7B4, 0xB7B4, 0x200C},
    {0xB7B5, 0xB7CF, 0x200D},
    {0xB7D0, 0xB7D0, 0x200C},
    {0xB7D1, 0xB7EB, 0x200D},
    {0xB7EC, 0xB7EC, 0x200C},
    {0xB7ED, 0xB807, 0x200D},
    {0xB808, 0xB808, 0x200C},
    {0xB809, 0xB823, 0x200D},
    {0xB824, 0xB824, 0x200C},
    {0xB825, 0xB83F, 0x200D},
    {0xB840, 0xB840, 0x200C},
    {0xB841, 0xB85B, 0x200D},
    {0xB85C, 0xB85C, 0x200C},
    {0xB85D, 0xB877, 0x200D},
    {0xB878, 0xB878, 0x200C},
    {0xB879, 0xB893, 0x200D},
    {0xB894, 0xB894, 0x200C},
    {0xB895, 0xB8AF, 0x200D},
    {0xB8B0, 0xB8B0, 0x200C},
    {0xB8B1, 0xB8CB, 0x200D},
    {0xB8CC, 0xB8CC, 0x200C},
    {0xB8CD, 0xB8E7, 0x200D},
    {0xB8E8, 0xB8E8, 0x200C},
    {0xB8E9, 0xB903, 0x200D},
    {0xB904, 0xB904, 0x200C},
    {0xB905, 0xB91F, 0x200D},
    {0xB920, 0xB920, 0x200C},
    {0xB921, 0xB93B, 0x200D},
    {0xB93C, 0xB93C, 0x200C},
    {0xB93D, 0xB957, 0x200D},
    {0xB958, 0xB958, 0x200C},
    {0xB959, 0xB973, 0x200D},
    {0xB974, 0xB974, 0x200C},
    {0xB975, 0xB98F, 0x200D},
    {0xB990, 0xB990, 0x200C},
    {0xB991, 0xB9AB, 0x200D},
    {0xB9AC, 0xB9AC, 0x200C},
    {0xB9AD, 0xB9C7, 0x200D},
    {0xB9C8, 0xB9C8, 0x200C},
    {0xB9C9, 0xB9E3, 0x200D},
    {0xB9E4, 0xB9E4, 0x200C},
    {0xB9E5, 0xB9FF, 0x200D},
    {0xBA00, 0xBA00, 0x200C},
    {0xBA01, 0xBA1B, 0x200D},
    {0xBA1C, 0xBA1C, 0x200C},
    {0xBA1D, 0xBA37, 0x200D},
    {0xBA38, 0xBA38, 0x200C},
    {0xBA39, 0xBA53, 0x200D},
    {0xBA54, 0xBA54, 0x200C},
    {0xBA55, 0xBA6F, 0x200D},
    {0xBA70, 0xBA70, 0x200C},
    {0xBA71, 0xBA8B, 0x200D},
    {0xBA8C, 0xBA8C, 0x200C},
    {0xBA8D, 0xBAA7, 0x200D},
    {0xBAA8, 0xBAA8, 0x200C},
    {0xBAA9, 0xBAC3, 0x200D},
    {0xBAC4, 0xBAC4, 0x200C},
    {0xBAC5, 0xBADF, 0x200D},
    {0xBAE0, 0xBAE0, 0x200C},
    {0xBAE1, 0xBAFB, 0x200D},
    {0xBAFC, 0xBAFC, 0x200C},
    {0xBAFD, 0xBB17, 0x200D},
    {0xBB18, 0xBB18, 0x200C},
    {0xBB19, 0xBB33, 0x200D},
    {0xBB34, 0xBB34, 0x200C},
    {0xBB35, 0xBB4F, 0x200D},
    {0xBB50, 0xBB50, 0x200C},
    {0xBB51, 0xBB6B, 0x200D},
    {0xBB6C, 0xBB6C, 0x200C},
    {0xBB6D, 0xBB87, 0x200D},
    {0xBB88, 0xBB88, 0x200C},
    {0xBB89, 0xBBA3, 0x200D},
    {0xBBA4, 0xBBA4, 0x200C},
    {0xBBA5, 0xBBBF, 0x200D},
    {0xBBC0, 0xBBC0, 0x200C},
    {0xBBC1, 0xBBDB, 0x200D},
    {0xBBDC, 0xBBDC, 0x200C},
    {0xBBDD, 0xBBF7, 0x200D},
    {0xBBF8, 0xBBF8, 0x200C},
    {0xBBF9, 0xBC13, 0x200D},
    {0xBC14, 0xBC14, 0x200C},
    {0xBC15, 0xBC2F, 0x200D},
    {0xBC30, 0xBC30, 0x200C},
    {0xBC31, 0xBC4B, 0x200D},
    {0xBC4C, 0xBC4C, 0x200C},
    {0xBC4D, 0xBC67, 0x200D},
    {0xBC68, 0xBC68, 0x200C},
    {0xBC69, 0xBC83, 0x200D},
    {0xBC84, 0xBC84, 0x200C},
    {0xBC85, 0xBC9F, 0x200D},
    {0xBCA0, 0xBCA0, 0x200C},
    {0xBCA1, 0xBCBB, 0x200D},
    {0xBCBC, 0xBCBC, 0x200C},
    {0xBCBD, 0xBCD7, 0x200D},
    {0xBCD8, 0xBCD8, 0x200C},
    {0xBCD9, 0xBCF3, 0x200D},
    {0xBCF4, 0xBCF4, 0x200C},
    {0xBCF5, 0xBD0F, 0x200D},
    {0xBD10, 0xBD10, 0x200C},
    {0xBD11, 0xBD2B, 0x200D},
    {0xBD2C, 0xBD2C, 0x200C},
    {0xBD2D, 0xBD47, 0x200D},
    {0xBD48, 0xBD48, 0x200C},
    {0xBD49, 0xBD63, 0x200D},
    {0xBD64, 0xBD64, 0x200C},
    {0xBD65, 0xBD7F, 0x200D},
    {0xBD80, 0xBD80, 0x200C},
    {0xBD81, 0xBD9B, 0x200D},
    {0xBD9C, 0xBD9C, 0x200C},
    {0xBD9D, 0xBDB7, 0x200D},
    {0xBDB8, 0xBDB8, 0x200C},
    {0xBDB9, 0xBDD3, 0x200D},
    {0xBDD4, 0xBDD4, 0x200C},
    {0xBDD5, 0xBDEF, 0x200D},
    {0xBDF0, 0xBDF0, 0x200C},
    {0xBDF1, 0xBE0B, 0x200D},
    {0xBE0C, 0xBE0C, 0x200C},
    {0xBE0D, 0xBE27, 0x200D},
    {0xBE28, 0xBE28, 0x200C},
    {0xBE29, 0xBE43, 0x200D},
    {0xBE44, 0xBE44, 0x200C},
    {0xBE45, 0xBE5F, 0x200D},
    {0xBE60, 0xBE60, 0x200C},
    {0xBE61, 0xBE7B, 0x200D},
    {0xBE7C, 0xBE7C, 0x200C},
    {0xBE7D, 0xBE97, 0x200D},
    {0xBE98, 0xBE98, 0x200C},
    {0xBE99, 0xBEB3, 0x200D},
    {0xBEB4, 0xBEB4, 0x200C},
    {0xBEB5, 0xBECF, 0x200D},
    {0xBED0, 0xBED0, 0x200C},
    {0xBED1, 0xBEEB, 0x200D},
    {0xBEEC, 0xBEEC, 0x200C},
    {0xBEED, 0xBF07, 0x200D},
    {0xBF08, 0xBF08, 0x200C},
    {0xBF09, 0xBF23, 0x200D},
    {0xBF24, 0xBF24, 0x200C},
    {0xBF25, 0xBF3F, 0x200D},
    {0xBF40, 0xBF40, 0x200C},
    {0xBF41, 0xBF5B, 0x200D},
    {0xBF5C, 0xBF5C, 0x200C},
    {0xBF5D, 0xBF77, 0x200D},
    {0xBF78, 0xBF78, 0x200C},
    {0xBF79, 0xBF93, 0x200D},
    {0xBF94, 0xBF94, 0x200C},
    {0xBF95, 0xBFAF, 0x200D},
    {0xBFB0, 0xBFB0, 0x200C},
    {0xBFB1, 0xBFCB, 0x200D},
    {0xBFCC, 0xBFCC, 0x200C},
    {0xBFCD, 0xBFE7, 0x200D},
    {0xBFE8, 0xBFE8, 0x200C},
    {0xBFE9, 0xC003, 0x200D},
    {0xC004, 0xC004, 0x200C},
    {0xC005, 0xC01F, 0x200D},
    {0xC020, 0xC020, 0x200C},
    {0xC021, 0xC03B, 0x200D},
    {0xC03C, 0xC03C, 0x200C},
    {0xC03D, 0xC057, 0x200D},
    {0xC058, 0xC058, 0x200C},
    {0xC059, 0xC073, 0x200D},
    {0xC074, 0xC074, 0x200C},
    {0xC075, 0xC08F, 0x200D},
    {0xC090, 0xC090, 0x200C},
    {0xC091, 0xC0AB, 0x200D},
    {0xC0AC, 0xC0AC, 0x200C},
    {0xC0AD, 0xC0C7, 0x200D},
    {0xC0C8, 0xC0C8, 0x200C},
    {0xC0C9, 0xC0E3, 0x200D},
    {0xC0E4, 0xC0E4, 0x200C},
    {0xC0E5, 0xC0FF, 0x200D},
    {0xC100, 0xC100, 0x200C},
    {0xC101, 0xC11B, 0x200D},
    {0xC11C, 0xC11C, 0x200C},
    {0xC11D, 0xC137, 0x200D},
    {0xC138, 0xC138, 0x200C},
    {0xC139, 0xC153, 0x200D},
    {0xC154, 0xC154, 0x200C},
    {0xC155, 0xC16F, 0x200D},
    {0xC170, 0xC170, 0x200C},
    {0xC171, 0xC18B, 0x200D},
    {0xC18C, 0xC18C, 0x200C},
    {0xC18D, 0xC1A7, 0x200D},
    {0xC1A8, 0xC1A8, 0x200C},
    {0xC1A9, 0xC1C3, 0x200D},
    {0xC1C4, 0xC1C4, 0x200C},
    {0xC1C5, 0xC1DF, 0x200D},
    {0xC1E0, 0xC1E0, 0x200C},
    {0xC1E1, 0xC1FB, 0x200D},
    {0xC1FC, 0xC1FC, 0x200C},
    {0xC1FD, 0xC217, 0x200D},
    {0xC218, 0xC218, 0x200C},
    {0xC219, 0xC233, 0x200D},
    {0xC234, 0xC234, 0x200C},
    {0xC235, 0xC24F, 0x200D},
    {0xC250, 0xC250, 0x200C},
    {0xC251, 0xC26B, 0x200D},
    {0xC26C, 0xC26C, 0x200C},
    {0xC26D, 0xC287, 0x200D},
    {0xC288, 0xC288, 0x200C},
    {0xC289, 0xC2A3, 0x200D},
    {0xC2A4, 0xC2A4, 0x200C},
    {0xC2A5, 0xC2BF, 0x200D},
    {0xC2C0, 0xC2C0, 0x200C},
    {0xC2C1, 0xC2DB, 0x200D},
    {0xC2DC, 0xC2DC, 0x200C},
    {0xC2DD, 0xC2F7, 0x200D},
    {0xC2F8, 0xC2F8, 0x200C},
    {0xC2F9, 0xC313, 0x200D},
    {0xC314, 0xC314, 0x200C},
    {0xC315, 0xC32F, 0x200D},
    {0xC330, 0xC330, 0x200C},
    {0xC331, 0xC34B, 0x200D},
    {0xC34C, 0xC34C, 0x200C},
    {0xC34D, 0xC367, 0x200D},
    {0xC368, 0xC368, 0x200C},
    {0xC369, 0xC383, 0x200D},
    {0xC384, 0xC384, 0x200C},
    {0xC385, 0xC39F, 0x200D},
    {0xC3A0, 0xC3A0, 0x200C},
    {0xC3A1, 0xC3BB, 0x200D},
    {0xC3BC, 0xC3BC, 0x200C},
    {0xC3BD, 0xC3D7, 0x200D},
    {0xC3D8, 0xC3D8, 0x200C},
    {0xC3D9, 0xC3F3, 0x200D},
    {0xC3F4, 0xC3F4, 0x200C},
    {0xC3F5, 0xC40F, 0x200D},
    {0xC410, 0xC410, 0x200C},
    {0xC411, 0xC42B, 0x200D},
    {0xC42C, 0xC42C, 0x200C},
    {0xC42D, 0xC447, 0x200D},
    {0xC448, 0xC448, 0x200C},
    {0xC449, 0xC463, 0x200D},
    {0xC464, 0xC464, 0x200C},
    {0xC465, 0xC47F, 0x200D},
    {0xC480, 0xC480, 0x200C},
    {0xC481, 0xC49B, 0x200D},
    {0xC49C, 0xC49C, 0x200C},
    {0xC49D, 0xC4B7, 0x200D},
    {0xC4B8, 0xC4B8, 0x200C},
    {0xC4B9, 0xC4D3, 0x200D},
    {0xC4D4, 0xC4D4, 0x200C},
    {0xC4D5, 0xC4EF, 0x200D},
    {0xC4F0, 0xC4F0, 0x200C},
    {0xC4F1, 0xC50B, 0x200D},
    {0xC50C, 0xC50C, 0x200C},
    {0xC50D, 0xC527, 0x200D},
    {0xC528, 0xC528, 0x200C},
    {0xC529, 0xC543, 0x200D},
    {0xC544, 0xC544, 0x200C},
    {0xC545, 0xC55F, 0x200D},
    {0xC560, 0xC560, 0x200C},
    {0xC561, 0xC57B, 0x200D},
    {0xC57C, 0xC57C, 0x200C},
    {0xC57D, 0xC597, 0x200D},
    {0xC598, 0xC598, 0x200C},
    {0xC599, 0xC5B3, 0x200D},
    {0xC5B4, 0xC5B4, 0x200C},
    {0xC5B5, 0xC5CF, 0x200D},
    {0xC5D0, 0xC5D0, 0x200C},
    {0xC5D1, 0xC5EB, 0x200D},
    {0xC5EC, 0xC5EC, 0x200C},
    {0xC5ED, 0xC607, 0x200D},
    {0xC608, 0xC608, 0x200C},
    {0xC609, 0xC623, 0x200D},
    {0xC624, 0xC624, 0x200C},
    {0xC625, 0xC63F, 0x200D},
    {0xC640, 0xC640, 0x200C},
    {0xC641, 0xC65B, 0x200D},
    {0xC65C, 0xC65C, 0x200C},
    {0xC65D, 0xC677, 0x200D},
    {0xC678, 0xC678, 0x200C},
    {0xC679, 0xC693, 0x200D},
    {0xC694, 0xC694, 0x200C},
    {0xC695, 0xC6AF, 0x200D},
    {0xC6B0, 0xC6B0, 0x200C},
    {0xC6B1, 0xC6CB, 0x200D},
    {0xC6CC, 0xC6CC, 0x200C},
    {0xC6CD, 0xC6E7, 0x200D},
    {0xC6E8, 0xC6E8, 0x200C},
    {0xC6E9, 0xC703, 0x200D},
    {0xC704, 0xC704, 0x200C},
    {0xC705, 0xC71F, 0x200D},
    {0xC720, 0xC720, 0x200C},
    {0xC721, 0xC73B, 0x200D},
    {0xC73C, 0xC73C, 0x200C},
    {0xC73D, 0xC757, 0x200D},
    {0xC758, 0xC758, 0x200C},
    {0xC759, 0xC773, 0x200D},
    {0xC774, 0xC774, 0x200C},
    {0xC775, 0xC78F, 0x200D},
    {0xC790, 0xC790, 0x200C},
    {0xC791, 0xC7AB, 0x200D},
    {0xC7AC, 0xC7AC, 0x200C},
    {0xC7AD, 0xC7C7, 0x200D},
    {0xC7C8, 0xC7C8, 0x200C},
    {0xC7C9, 0xC7E3, 0x200D},
    {0xC7E4, 0xC7E4, 0x200C},
    {0xC7E5, 0xC7FF, 0x200D},
    {0xC800, 0xC800, 0x200C},
    {0xC801, 0xC81B, 0x200D},
    {0xC81C, 0xC81C, 0x200C},
    {0xC81D, 0xC837, 0x200D},
    {0xC838, 0xC838, 0x200C},
    {0xC839, 0xC853, 0x200D},
    {0xC854, 0xC854, 0x200C},
    {0xC855, 0xC86F, 0x200D},
    {0xC870, 0xC870, 0x200C},
    {0xC871, 0xC88B, 0x200D},
    {0xC88C, 0xC88C, 0x200C},
    {0xC88D, 0xC8A7, 0x200D},
    {0xC8A8, 0xC8A8, 0x200C},
    {0xC8A9, 0xC8C3, 0x200D},
    {0xC8C4, 0xC8C4, 0x200C},
    {0xC8C5, 0xC8DF, 0x200D},
    {0xC8E0, 0xC8E0, 0x200C},
    {0xC8E1, 0xC8FB, 0x200D},
    {0xC8FC, 0xC8FC, 0x200C},
    {0xC8FD, 0xC917, 0x200D},
    {0xC918, 0xC918, 0x200C},
    {0xC919, 0xC933, 0x200D},
    {0xC934, 0xC934, 0x200C},
    {0xC935, 0xC94F, 0x200D},
    {0xC950, 0xC950, 0x200C},
    {0xC951, 0xC96B, 0x200D},
    {0xC96C, 0xC96C, 0x200C},
    {0xC96D, 0xC987, 0x200D},
    {0xC988, 0xC988, 0x200C},
    {0xC989, 0xC9A3, 0x200D},
    {0xC9A4, 0xC9A4, 0x200C},
    {0xC9A5, 0xC9BF, 0x200D},
    {0xC9C0, 0xC9C0, 0x200C},
    {0xC9C1, 0xC9DB, 0x200D},
    {0xC9DC, 0xC9DC, 0x200C},
    {0xC9DD, 0xC9F7, 0x200D},
    {0xC9F8, 0xC9F8, 0x200C},
    {0xC9F9, 0xCA13, 0x200D},
    {0xCA14, 0xCA14, 0x200C},
    {0xCA15, 0xCA2F, 0x200D},
    {0xCA30, 0xCA30, 0x200C},
    {0xCA31, 0xCA4B, 0x200D},
    {0xCA4C, 0xCA4C, 0x200C},
    {0xCA4D, 0xCA67, 0x200D},
    {0xCA68, 0xCA68, 0x200C},
    {0xCA69, 0xCA83, 0x200D},
    {0xCA84, 0xCA84, 0x200C},
    {0xCA85, 0xCA9F, 0x200D},
    {0xCAA0, 0xCAA0, 0x200C},
    {0xCAA1, 0xCABB, 0x200D},
    {0xCABC, 0xCABC, 0x200C},
    {0xCABD, 0xCAD7, 0x200D},
    {0xCAD8, 0xCAD8, 0x200C},
    {0xCAD9, 0xCAF3, 0x200D},
    {0xCAF4, 0xCAF4, 0x200C},
    {0xCAF5, 0xCB0F, 0x200D},
    {0xCB10, 0xCB10, 0x200C},
    {0xCB11, 0xCB2B, 0x200D},
    {0xCB2C, 0xCB2C, 0x200C},
    {0xCB2D, 0xCB47, 0x200D},
    {0xCB48, 0xCB48, 0x200C},
    {0xCB49, 0xCB63, 0x200D},
    {0xCB64, 0xCB64, 0x200C},
    {0xCB65, 0xCB7F, 0x200D},
    {0xCB80, 0xCB80, 0x200C},
    {0xCB81, 0xCB9B, 0x200D},
    {0xCB9C, 0xCB9C, 0x200C},
    {0xCB9D, 0xCBB7, 0x200D},
    {0xCBB8, 0xCBB8, 0x200C},
    {0xCBB9, 0xCBD3, 0x200D},
    {0xCBD4, 0xCBD4, 0x200C},
    {0xCBD5, 0xCBEF, 0x200D},
    {0xCBF0, 0xCBF0, 0x200C},
    {0xCBF1, 0xCC0B, 0x200D},
    {0xCC0C, 0xCC0C, 0x200C},
    {0xCC0D, 0xCC27, 0x200D},
    {0xCC28, 0xCC28, 0x200C},
    {0xCC29, 0xCC43, 0x200D},
    {0xCC44, 0xCC44, 0x200C},
    {0xCC45, 0xCC5F, 0x200D},
    {0xCC60, 0xCC60, 0x200C},
    {0xCC61, 0xCC7B, 0x200D},
    {0xCC7C, 0xCC7C, 0x200C},
    {0xCC7D, 0xCC97, 0x200D},
    {0xCC98, 0xCC98, 0x200C},
    {0xCC99, 0xCCB3, 0x200D},
    {0xCCB4, 0xCCB4, 0x200C},
    {0xCCB5, 0xCCCF, 0x200D},
    {0xCCD0, 0xCCD0, 0x200C},
    {0xCCD1, 0xCCEB, 0x200D},
    {0xCCEC, 0xCCEC, 0x200C},
    {0xCCED, 0xCD07, 0x200D},
    {0xCD08, 0xCD08, 0x200C},
    {0xCD09, 0xCD23, 0x200D},
    {0xCD24, 0xCD24, 0x200C},
    {0xCD25, 0xCD3F, 0x200D},
    {0xCD40, 0xCD40, 0x200C},
    {0xCD41, 0xCD5B, 0x200D},
    {0xCD5C, 0xCD5C, 0x200C},
    {0xCD5D, 0xCD77, 0x200D},
    {0xCD78, 0xCD78, 0x200C},
    {0xCD79, 0xCD93, 0x200D},
    {0xCD94, 0xCD94, 0x200C},
    {0xCD95, 0xCDAF, 0x200D},
    {0xCDB0, 0xCDB0, 0x200C},
    {0xCDB1, 0xCDCB, 0x200D},
    {0xCDCC, 0xCDCC, 0x200C},
    {0xCDCD, 0xCDE7, 0x200D},
    {0xCDE8, 0xCDE8, 0x200C},
    {0xCDE9, 0xCE03, 0x200D},
    {0xCE04, 0xCE04, 0x200C},
    {0xCE05, 0xCE1F, 0x200D},
    {0xCE20, 0xCE20, 0x200C},
    {0xCE21, 0xCE3B, 0x200D},
    {0xCE3C, 0xCE3C, 0x200C},
    {0xCE3D, 0xCE57, 0x200D},
    {0xCE58, 0xCE58, 0x200C},
    {0xCE59, 0xCE73, 0x200D},
    {0xCE74, 0xCE74, 0x200C},
    {0xCE75, 0xCE8F, 0x200D},
    {0xCE90, 0xCE90, 0x200C},
    {0xCE91, 0xCEAB, 0x200D},
    {0xCEAC, 0xCEAC, 0x200C},
    {0xCEAD, 0xCEC7, 0x200D},
    {0xCEC8, 0xCEC8, 0x200C},
    {0xCEC9, 0xCEE3, 0x200D},
    {0xCEE4, 0xCEE4, 0x200C},
    {0xCEE5, 0xCEFF, 0x200D},
    {0xCF00, 0xCF00, 0x200C},
    {0xCF01, 0xCF1B, 0x200D},
    {0xCF1C, 0xCF1C, 0x200C},
    {0xCF1D, 0xCF37, 0x200D},
    {0xCF38, 0xCF38, 0x200C},
    {0xCF39, 0xCF53, 0x200D},
    {0xCF54, 0xCF54, 0x200C},
    {0xCF55, 0xCF6F, 0x200D},
    {0xCF70, 0xCF70, 0x200C},
    {0xCF71, 0xCF8B, 0x200D},
    {0xCF8C, 0xCF8C, 0x200C},
    {0xCF8D, 0xCFA7, 0x200D},
    {0xCFA8, 0xCFA8, 0x200C},
    {0xCFA9, 0xCFC3, 0x200D},
    {0xCFC4, 0xCFC4, 0x200C},
    {0xCFC5, 0xCFDF, 0x200D},
    {0xCFE0, 0xCFE0, 0x200C},
    {0xCFE1, 0xCFFB, 0x200D},
    {0xCFFC, 0xCFFC, 0x200C},
    {0xCFFD, 0xD017, 0x200D},
    {0xD018, 0xD018, 0x200C},
    {0xD019, 0xD033, 0x200D},
    {0xD034, 0xD034, 0x200C},
    {0xD035, 0xD04F, 0x200D},
    {0xD050, 0xD050, 0x200C},
    {0xD051, 0xD06B, 0x200D},
    {0xD06C, 0xD06C, 0x200C},
    {0xD06D, 0xD087, 0x200D},
    {0xD088, 0xD088, 0x200C},
    {0xD089, 0xD0A3, 0x200D},
    {0xD0A4, 0xD0A4, 0x200C},
    {0xD0A5, 0xD0BF, 0x200D},
    {0xD0C0, 0xD0C0, 0x200C},
    {0xD0C1, 0xD0DB, 0x200D},
    {0xD0DC, 0xD0DC, 0x200C},
    {0xD0DD, 0xD0F7, 0x200D},
    {0xD0F8, 0xD0F8, 0x200C},
    {0xD0F9, 0xD113, 0x200D},
    {0xD114, 0xD114, 0x200C},
    {0xD115, 0xD12F, 0x200D},
    {0xD130, 0xD130, 0x200C},
    {0xD131, 0xD14B, 0x200D},
    {0xD14C, 0xD14C, 0x200C},
    {0xD14D, 0xD167, 0x200D},
    {0xD168, 0xD168, 0x200C},
    {0xD169, 0xD183, 0x200D},
    {0xD184, 0xD184, 0x200C},
    {0xD185, 0xD19F, 0x200D},
    {0xD1A0, 0xD1A0, 0x200C},
    {0xD1A1, 0xD1BB, 0x200D},
    {0xD1BC, 0xD1BC, 0x200C},
    {0xD1BD, 0xD1D7, 0x200D},
    {0xD1D8, 0xD1D8, 0x200C},
    {0xD1D9, 0xD1F3, 0x200D},
    {0xD1F4, 0xD1F4, 0x200C},
    {0xD1F5, 0xD20F, 0x200D},
    {0xD210, 0xD210, 0x200C},
    {0xD211, 0xD22B, 0x200D},
    {0xD22C, 0xD22C, 0x200C},
    {0xD22D, 0xD247, 0x200D},
    {0xD248, 0xD248, 0x200C},
    {0xD249, 0xD263, 0x200D},
    {0xD264, 0xD264, 0x200C},
    {0xD265, 0xD27F, 0x200D},
    {0xD280, 0xD280, 0x200C},
    {0xD281, 0xD29B, 0x200D},
    {0xD29C, 0xD29C, 0x200C},
    {0xD29D, 0xD2B7, 0x200D},
    {0xD2B8, 0xD2B8, 0x200C},
    {0xD2B9, 0xD2D3, 0x200D},
    {0xD2D4, 0xD2D4, 0x200C},
    {0xD2D5, 0xD2EF, 0x200D},
    {0xD2F0, 0xD2F0, 0x200C},
    {0xD2F1, 0xD30B, 0x200D},
    {0xD30C, 0xD30C, 0x200C},
    {0xD30D, 0xD327, 0x200D},
    {0xD328, 0xD328, 0x200C},
    {0xD329, 0xD343, 0x200D},
    {0xD344, 0xD344, 0x200C},
    {0xD345, 0xD35F, 0x200D},
    {0xD360, 0xD360, 0x200C},
    {0xD361, 0xD37B, 0x200D},
    {0xD37C, 0xD37C, 0x200C},
    {0xD37D, 0xD397, 0x200D},
    {0xD398, 0xD398, 0x200C},
    {0xD399, 0xD3B3, 0x200D},
    {0xD3B4, 0xD3B4, 0x200C},
    {0xD3B5, 0xD3CF, 0x200D},
    {0xD3D0, 0xD3D0, 0x200C},
    {0xD3D1, 0xD3EB, 0x200D},
    {0xD3EC, 0xD3EC, 0x200C},
    {0xD3ED, 0xD407, 0x200D},
    {0xD408, 0xD408, 0x200C},
    {0xD409, 0xD423, 0x200D},
    {0xD424, 0xD424, 0x200C},
    {0xD425, 0xD43F, 0x200D},
    {0xD440, 0xD440, 0x200C},
    {0xD441, 0xD45B, 0x200D},
    {0xD45C, 0xD45C, 0x200C},
    {0xD45D, 0xD477, 0x200D},
    {0xD478, 0xD478, 0x200C},
    {0xD479, 0xD493, 0x200D},
    {0xD494, 0xD494, 0x200C},
    {0xD495, 0xD4AF, 0x200D},
    {0xD4B0, 0xD4B0, 0x200C},
    {0xD4B1, 0xD4CB, 0x200D},
    {0xD4CC, 0xD4CC, 0x200C},
    {0xD4CD, 0xD4E7, 0x200D},
    {0xD4E8, 0xD4E8, 0x200C},
    {0xD4E9, 0xD503, 0x200D},
    {0xD504, 0xD504, 0x200C},
    {0xD505, 0xD51F, 0x200D},
    {0xD520, 0xD520, 0x200C},
    {0xD521, 0xD53B, 0x200D},
    {0xD53C, 0xD53C, 0x200C},
    {0xD53D, 0xD557, 0x200D},
    {0xD558, 0xD558, 0x200C},
    {0xD559, 0xD573, 0x200D},
    {0xD574, 0xD574, 0x200C},
    {0xD575, 0xD58F, 0x200D},
    {0xD590, 0xD590, 0x200C},
    {0xD591, 0xD5AB, 0x200D},
    {0xD5AC, 0xD5AC, 0x200C},
    {0xD5AD, 0xD5C7, 0x200D},
    {0xD5C8, 0xD5C8, 0x200C},
    {0xD5C9, 0xD5E3, 0x200D},
    {0xD5E4, 0xD5E4, 0x200C},
    {0xD5E5, 0xD5FF, 0x200D},
    {0xD600, 0xD600, 0x200C},
    {0xD601, 0xD61B, 0x200D},
    {0xD61C, 0xD61C, 0x200C},
    {0xD61D, 0xD637, 0x200D},
    {0xD638, 0xD638, 0x200C},
    {0xD639, 0xD653, 0x200D},
    {0xD654, 0xD654, 0x200C},
    {0xD655, 0xD66F, 0x200D},
    {0xD670, 0xD670, 0x200C},
    {0xD671, 0xD68B, 0x200D},
    {0xD68C, 0xD68C, 0x200C},
    {0xD68D, 0xD6A7, 0x200D},
    {0xD6A8, 0xD6A8, 0x200C},
    {0xD6A9, 0xD6C3, 0x200D},
    {0xD6C4, 0xD6C4, 0x200C},
    {0xD6C5, 0xD6DF, 0x200D},
    {0xD6E0, 0xD6E0, 0x200C},
    {0xD6E1, 0xD6FB, 0x200D},
    {0xD6FC, 0xD6FC, 0x200C},
    {0xD6FD, 0xD717, 0x200D},
    {0xD718, 0xD718, 0x200C},
    {0xD719, 0xD733, 0x200D},
    {0xD734, 0xD734, 0x200C},
    {0xD735, 0xD74F, 0x200D},
    {0xD750, 0xD750, 0x200C},
    {0xD751, 0xD76B, 0x200D},
    {0xD76C, 0xD76C, 0x200C},
    {0xD76D, 0xD787, 0x200D},
    {0xD788, 0xD788, 0x200C},
    {0xD789, 0xD7A3, 0x200D},
    {0xD7B0, 0xD7C6, 0x200A},
    {0xD7CB, 0xD7FB, 0x200B},
    {0xF900, 0xFA6D, 0x2000},
    {0xFA70, 0xFAD9, 0x2000},
    {0xFB00, 0xFB06, 0x2000},
    {0xFB13, 0xFB17, 0x2000},
    {0xFB1D, 0xFB1D, 0x2000},
    {0xFB1E, 0xFB1E, 0x2034},
    {0xFB1F, 0xFB28, 0x2000},
    {0xFB2A, 0xFB36, 0x2000},
    {0xFB38, 0xFB3C, 0x2000},
    {0xFB3E, 0xFB3E, 0x2000},
    {0xFB40, 0xFB41, 0x2000},
    {0xFB43, 0xFB44, 0x2000},
    {0xFB46, 0xFBB1, 0x2000},
    {0xFBD3, 0xFD3D, 0x2000},
    {0xFD50, 0xFD8F, 0x2000},
    {0xFD92, 0xFDC7, 0x2000},
    {0xFDF0, 0xFDFB, 0x2000},
    {0xFE00, 0xFE0E, 0x2034},
    {0xFE0F, 0xFE0F, 0x2834},
    {0xFE20, 0xFE2F, 0x2034},
    {0xFE33, 0xFE34, 0x2000},
    {0xFE4D, 0xFE4F, 0x2000},
    {0xFE70, 0xFE74, 0x2000},
    {0xFE76, 0xFEFC, 0x2000},
    {0xFEFF, 0xFEFF, 0x3},
    {0xFF10, 0xFF19, 0x2000},
    {0xFF21, 0xFF3A, 0x2000},
    {0xFF3F, 0xFF3F, 0x2000},
    {0xFF41, 0xFF5A, 0x2000},
    {0xFF66, 0xFF9D, 0x2000},
    {0xFF9E, 0xFF9F, 0x2034},
    {0xFFA0, 0xFFBE, 0x2000},
    {0xFFC2, 0xFFC7, 0x2000},
    {0xFFCA, 0xFFCF, 0x2000},
    {0xFFD2, 0xFFD7, 0x2000},
    {0xFFDA, 0xFFDC, 0x2000},
    {0xFFF0, 0xFFFB, 0x3},
    {0x10000, 0x1000B, 0x2000},
    {0x1000D, 0x10026, 0x2000},
    {0x10028, 0x1003A, 0x2000},
    {0x1003C, 0x1003D, 0x2000},
    {0x1003F, 0x1004D, 0x2000},
    {0x10050, 0x1005D, 0x2000},
    {0x10080, 0x100FA, 0x2000},
    {0x10140, 0x10174, 0x2000},
    {0x101FD, 0x101FD, 0x2034},
    {0x10280, 0x1029C, 0x2000},
    {0x102A0, 0x102D0, 0x2000},
    {0x102E0, 0x102E0, 0x2034},
    {0x10300, 0x1031F, 0x2000},
    {0x1032D, 0x1034A, 0x2000},
    {0x10350, 0x10375, 0x2000},
    {0x10376, 0x1037A, 0x2034},
    {0x10380, 0x1039D, 0x2000},
    {0x103A0, 0x103C3, 0x2000},
    {0x103C8, 0x103CF, 0x2000},
    {0x103D1, 0x103D5, 0x2000},
    {0x10400, 0x1049D, 0x2000},
    {0x104A0, 0x104A9, 0x2000},
    {0x104B0, 0x104D3, 0x2000},
    {0x104D8, 0x104FB, 0x2000},
    {0x10500, 0x10527, 0x2000},
    {0x10530, 0x10563, 0x2000},
    {0x10570, 0x1057A, 0x2000},
    {0x1057C, 0x1058A, 0x2000},
    {0x1058C, 0x10592, 0x2000},
    {0x10594, 0x10595, 0x2000},
    {0x10597, 0x105A1, 0x2000},
    {0x105A3, 0x105B1, 0x2000},
    {0x105B3, 0x105B9, 0x2000},
    {0x105BB, 0x105BC, 0x2000},
    {0x105C0, 0x105F3, 0x2000},
    {0x10600, 0x10736, 0x2000},
    {0x10740, 0x10755, 0x2000},
    {0x10760, 0x10767, 0x2000},
    {0x10780, 0x10785, 0x2000},
    {0x10787, 0x107B0, 0x2000},
    {0x107B2, 0x107BA, 0x2000},
    {0x10800, 0x10805, 0x2000},
    {0x10808, 0x10808, 0x2000},
    {0x1080A, 0x10835, 0x2000},
    {0x10837, 0x10838, 0x2000},
    {0x1083C, 0x1083C, 0x2000},
    {0x1083F, 0x10855, 0x2000},
    {0x10860, 0x10876, 0x2000},
    {0x10880, 0x1089E, 0x2000},
    {0x108E0, 0x108F2, 0x2000},
    {0x108F4, 0x108F5, 0x2000},
    {0x10900, 0x10915, 0x2000},
    {0x10920, 0x10939, 0x2000},
    {0x10940, 0x10959, 0x2000},
    {0x10980, 0x109B7, 0x2000},
    {0x109BE, 0x109BF, 0x2000},
    {0x10A00, 0x10A00, 0x2020},
    {0x10A01, 0x10A03, 0x2034},
    {0x10A05, 0x10A06, 0x2034},
    {0x10A0C, 0x10A0F, 0x2034},
    {0x10A10, 0x10A13, 0x2020},
    {0x10A15, 0x10A17, 0x2020},
    {0x10A19, 0x10A35, 0x2020},
    {0x10A38, 0x10A3A, 0x2034},
    {0x10A3F, 0x10A3F, 0x2014},
    {0x10A60, 0x10A7C, 0x2000},
    {0x10A80, 0x10A9C, 0x2000},
    {0x10AC0, 0x10AC7, 0x2000},
    {0x10AC9, 0x10AE4, 0x2000},
    {0x10AE5, 0x10AE6, 0x2034},
    {0x10B00, 0x10B35, 0x2000},
    {0x10B40, 0x10B55, 0x2000},
    {0x10B60, 0x10B72, 0x2000},
    {0x10B80, 0x10B91, 0x2000},
    {0x10C00, 0x10C48, 0x2000},
    {0x10C80, 0x10CB2, 0x2000},
    {0x10CC0, 0x10CF2, 0x2000},
    {0x10D00, 0x10D23, 0x2000},
    {0x10D24, 0x10D27, 0x2034},
    {0x10D30, 0x10D39, 0x2000},
    {0x10D40, 0x10D65, 0x2000},
    {0x10D69, 0x10D6D, 0x2034},
    {0x10D6F, 0x10D85, 0x2000},
    {0x10E80, 0x10EA9, 0x2000},
    {0x10EAB, 0x10EAC, 0x2034},
    {0x10EB0, 0x10EB1, 0x2000},
    {0x10EC2, 0x10EC7, 0x2000},
    {0x10EFA, 0x10EFF, 0x2034},
    {0x10F00, 0x10F1C, 0x2000},
    {0x10F27, 0x10F27, 0x2000},
    {0x10F30, 0x10F45, 0x2000},
    {0x10F46, 0x10F50, 0x2034},
    {0x10F70, 0x10F81, 0x2000},
    {0x10F82, 0x10F85, 0x2034},
    {0x10FB0, 0x10FC4, 0x2000},
    {0x10FE0, 0x10FF6, 0x2000},
    {0x11000, 0x11000, 0x2008},
    {0x11001, 0x11001, 0x2034},
    {0x11002, 0x11002, 0x2008},
    {0x11003, 0x11037, 0x2000},
    {0x11038, 0x11046, 0x2034},
    {0x11066, 0x1106F, 0x2000},
    {0x11070, 0x11070, 0x2034},
    {0x11071, 0x11072, 0x2000},
    {0x11073, 0x11074, 0x2034},
    {0x11075, 0x11075, 0x2000},
    {0x1107F, 0x11081, 0x2034},
    {0x11082, 0x11082, 0x2008},
    {0x11083, 0x110AF, 0x2000},
    {0x110B0, 0x110B2, 0x2008},
    {0x110B3, 0x110B6, 0x2034},
    {0x110B7, 0x110B8, 0x2008},
    {0x110B9, 0x110BA, 0x2034},
    {0x110BD, 0x110BD, 0x7},
    {0x110C2, 0x110C2, 0x2034},
    {0x110CD, 0x110CD, 0x7},
    {0x110D0, 0x110E8, 0x2000},
    {0x110F0, 0x110F9, 0x2000},
    {0x11100, 0x11102, 0x2034},
    {0x11103, 0x11126, 0x2020},
    {0x11127, 0x1112B, 0x2034},
    {0x1112C, 0x1112C, 0x2008},
    {0x1112D, 0x11132, 0x2034},
    {0x11133, 0x11133, 0x2014},
    {0x11134, 0x11134, 0x2034},
    {0x11136, 0x1113F, 0x2000},
    {0x11144, 0x11144, 0x2020},
    {0x11145, 0x11146, 0x2008},
    {0x11147, 0x11147, 0x2020},
    {0x11150, 0x11172, 0x2000},
    {0x11173, 0x11173, 0x2034},
    {0x11176, 0x11176, 0x2000},
    {0x11180, 0x11181, 0x2034},
    {0x11182, 0x11182, 0x2008},
    {0x11183, 0x111B2, 0x2000},
    {0x111B3, 0x111B5, 0x2008},
    {0x111B6, 0x111BE, 0x2034},
    {0x111BF, 0x111BF, 0x2008},
    {0x111C0, 0x111C0, 0x2034},
    {0x111C1, 0x111C1, 0x2000},
    {0x111C2, 0x111C3, 0x2007},
    {0x111C4, 0x111C4, 0x2000},
    {0x111C9, 0x111CC, 0x2034},
    {0x111CE, 0x111CE, 0x2008},
    {0x111CF, 0x111CF, 0x2034},
    {0x111D0, 0x111DA, 0x2000},
    {0x111DC, 0x111DC, 0x2000},
    {0x11200, 0x11211, 0x2000},
    {0x11213, 0x1122B, 0x2000},
    {0x1122C, 0x1122E, 0x2008},
    {0x1122F, 0x11231, 0x2034},
    {0x11232, 0x11233, 0x2008},
    {0x11234, 0x11237, 0x2034},
    {0x1123E, 0x1123E, 0x2034},
    {0x1123F, 0x11240, 0x2000},
    {0x11241, 0x11241, 0x2034},
    {0x11280, 0x11286, 0x2000},
    {0x11288, 0x11288, 0x2000},
    {0x1128A, 0x1128D, 0x2000},
    {0x1128F, 0x1129D, 0x2000},
    {0x1129F, 0x112A8, 0x2000},
    {0x112B0, 0x112DE, 0x2000},
    {0x112DF, 0x112DF, 0x2034},
    {0x112E0, 0x112E2, 0x2008},
    {0x112E3, 0x112EA, 0x2034},
    {0x112F0, 0x112F9, 0x2000},
    {0x11300, 0x11301, 0x2034},
    {0x11302, 0x11303, 0x2008},
    {0x11305, 0x1130C, 0x2000},
    {0x1130F, 0x11310, 0x2000},
    {0x11313, 0x11328, 0x2000},
    {0x1132A, 0x11330, 0x2000},
    {0x11332, 0x11333, 0x2000},
    {0x11335, 0x11339, 0x2000},
    {0x1133B, 0x1133C, 0x2034},
    {0x1133D, 0x1133D, 0x2000},
    {0x1133E, 0x1133E, 0x2034},
    {0x1133F, 0x1133F, 0x2008},
    {0x11340, 0x11340, 0x2034},
    {0x11341, 0x11344, 0x2008},
    {0x11347, 0x11348, 0x2008},
    {0x1134B, 0x1134C, 0x2008},
    {0x1134D, 0x1134D, 0x2034},
    {0x11350, 0x11350, 0x2000},
    {0x11357, 0x11357, 0x2034},
    {0x1135D, 0x11361, 0x2000},
    {0x11362, 0x11363, 0x2008},
    {0x11366, 0x1136C, 0x2034},
    {0x11370, 0x11374, 0x2034},
    {0x11380, 0x11389, 0x2020},
    {0x1138B, 0x1138B, 0x2020},
    {0x1138E, 0x1138E, 0x2020},
    {0x11390, 0x113B5, 0x2020},
    {0x113B7, 0x113B7, 0x2000},
    {0x113B8, 0x113B8, 0x2034},
    {0x113B9, 0x113BA, 0x2008},
    {0x113BB, 0x113C0, 0x2034},
    {0x113C2, 0x113C2, 0x2034},
    {0x113C5, 0x113C5, 0x2034},
    {0x113C7, 0x113C9, 0x2034},
    {0x113CA, 0x113CA, 0x2008},
    {0x113CC, 0x113CD, 0x2008},
    {0x113CE, 0x113CF, 0x2034},
    {0x113D0, 0x113D0, 0x2014},
    {0x113D1, 0x113D1, 0x2007},
    {0x113D2, 0x113D2, 0x2034},
    {0x113D3, 0x113D3, 0x2000},
    {0x113E1, 0x113E2, 0x2034},
    {0x11400, 0x11434, 0x2000},
    {0x11435, 0x11437, 0x2008},
    {0x11438, 0x1143F, 0x2034},
    {0x11440, 0x11441, 0x2008},
    {0x11442, 0x11444, 0x2034},
    {0x11445, 0x11445, 0x2008},
    {0x11446, 0x11446, 0x2034},
    {0x11447, 0x1144A, 0x2000},
    {0x11450, 0x11459, 0x2000},
    {0x1145E, 0x1145E, 0x2034},
    {0x1145F, 0x11461, 0x2000},
    {0x11480, 0x114AF, 0x2000},
    {0x114B0, 0x114B0, 0x2034},
    {0x114B1, 0x114B2, 0x2008},
    {0x114B3, 0x114B8, 0x2034},
    {0x114B9, 0x114B9, 0x2008},
    {0x114BA, 0x114BA, 0x2034},
    {0x114BB, 0x114BC, 0x2008},
    {0x114BD, 0x114BD, 0x2034},
    {0x114BE, 0x114BE, 0x2008},
    {0x114BF, 0x114C0, 0x2034},
    {0x114C1, 0x114C1, 0x2008},
    {0x114C2, 0x114C3, 0x2034},
    {0x114C4, 0x114C5, 0x2000},
    {0x114C7, 0x114C7, 0x2000},
    {0x114D0, 0x114D9, 0x2000},
    {0x11580, 0x115AE, 0x2000},
    {0x115AF, 0x115AF, 0x2034},
    {0x115B0, 0x115B1, 0x2008},
    {0x115B2, 0x115B5, 0x2034},
    {0x115B8, 0x115BB, 0x2008},
    {0x115BC, 0x115BD, 0x2034},
    {0x115BE, 0x115BE, 0x2008},
    {0x115BF, 0x115C0, 0x2034},
    {0x115D8, 0x115DB, 0x2000},
    {0x115DC, 0x115DD, 0x2034},
    {0x11600, 0x1162F, 0x2000},
    {0x11630, 0x11632, 0x2008},
    {0x11633, 0x1163A, 0x2034},
    {0x1163B, 0x1163C, 0x2008},
    {0x1163D, 0x1163D, 0x2034},
    {0x1163E, 0x1163E, 0x2008},
    {0x1163F, 0x11640, 0x2034},
    {0x11644, 0x11644, 0x2000},
    {0x11650, 0x11659, 0x2000},
    {0x11680, 0x116AA, 0x2000},
    {0x116AB, 0x116AB, 0x2034},
    {0x116AC, 0x116AC, 0x2008},
    {0x116AD, 0x116AD, 0x2034},
    {0x116AE, 0x116AF, 0x2008},
    {0x116B0, 0x116B7, 0x2034},
    {0x116B8, 0x116B8, 0x2000},
    {0x116C0, 0x116C9, 0x2000},
    {0x116D0, 0x116E3, 0x2000},
    {0x11700, 0x1171A, 0x2000},
    {0x1171D, 0x1171D, 0x2034},
    {0x1171E, 0x1171E, 0x2008},
    {0x1171F, 0x1171F, 0x2034},
    {0x11720, 0x11721, 0x2000},
    {0x11722, 0x11725, 0x2034},
    {0x11726, 0x11726, 0x2008},
    {0x11727, 0x1172B, 0x2034},
    {0x11730, 0x11739, 0x2000},
    {0x11740, 0x11746, 0x2000},
    {0x11800, 0x1182B, 0x2000},
    {0x1182C, 0x1182E, 0x2008},
    {0x1182F, 0x11837, 0x2034},
    {0x11838, 0x11838, 0x2008},
    {0x11839, 0x1183A, 0x2034},
    {0x118A0, 0x118E9, 0x2000},
    {0x118FF, 0x118FF, 0x2000},
    {0x11900, 0x11906, 0x2020},
    {0x11909, 0x11909, 0x2020},
    {0x1190C, 0x11913, 0x2020},
    {0x11915, 0x11916, 0x2020},
    {0x11918, 0x1192F, 0x2020},
    {0x11930, 0x11930, 0x2034},
    {0x11931, 0x11935, 0x2008},
    {0x11937, 0x11938, 0x2008},
    {0x1193B, 0x1193D, 0x2034},
    {0x1193E, 0x1193E, 0x2014},
    {0x1193F, 0x1193F, 0x2007},
    {0x11940, 0x11940, 0x2008},
    {0x11941, 0x11941, 0x2007},
    {0x11942, 0x11942, 0x2008},
    {0x11943, 0x11943, 0x2034},
    {0x11950, 0x11959, 0x2000},
    {0x119A0, 0x119A7, 0x2000},
    {0x119AA, 0x119D0, 0x2000},
    {0x119D1, 0x119D3, 0x2008},
    {0x119D4, 0x119D7, 0x2034},
    {0x119DA, 0x119DB, 0x2034},
    {0x119DC, 0x119DF, 0x2008},
    {0x119E0, 0x119E0, 0x2034},
    {0x119E1, 0x119E1, 0x2000},
    {0x119E3, 0x119E3, 0x2000},
    {0x119E4, 0x119E4, 0x2008},
    {0x11A00, 0x11A00, 0x2020},
    {0x11A01, 0x11A0A, 0x2034},
    {0x11A0B, 0x11A32, 0x2020},
    {0x11A33, 0x11A38, 0x2034},
    {0x11A39, 0x11A39, 0x2008},
    {0x11A3A, 0x11A3A, 0x2000},
    {0x11A3B, 0x11A3E, 0x2034},
    {0x11A47, 0x11A47, 0x2014},
    {0x11A50, 0x11A50, 0x2020},
    {0x11A51, 0x11A56, 0x2034},
    {0x11A57, 0x11A58, 0x2008},
    {0x11A59, 0x11A5B, 0x2034},
    {0x11A5C, 0x11A83, 0x2020},
    {0x11A84, 0x11A89, 0x2007},
    {0x11A8A, 0x11A96, 0x2034},
    {0x11A97, 0x11A97, 0x2008},
    {0x11A98, 0x11A98, 0x2034},
    {0x11A99, 0x11A99, 0x2014},
    {0x11A9D, 0x11A9D, 0x2000},
    {0x11AB0, 0x11AF8, 0x2000},
    {0x11B60, 0x11B60, 0x2034},
    {0x11B61, 0x11B61, 0x2008},
    {0x11B62, 0x11B64, 0x2034},
    {0x11B65, 0x11B65, 0x2008},
    {0x11B66, 0x11B66, 0x2034},
    {0x11B67, 0x11B67, 0x2008},
    {0x11BC0, 0x11BE0, 0x2000},
    {0x11BF0, 0x11BF9, 0x2000},
    {0x11C00, 0x11C08, 0x2000},
    {0x11C0A, 0x11C2E, 0x2000},
    {0x11C2F, 0x11C2F, 0x2008},
    {0x11C30, 0x11C36, 0x2034},
    {0x11C38, 0x11C3D, 0x2034},
    {0x11C3E, 0x11C3E, 0x2008},
    {0x11C3F, 0x11C3F, 0x2034},
    {0x11C40, 0x11C40, 0x2000},
    {0x11C50, 0x11C59, 0x2000},
    {0x11C72, 0x11C8F, 0x2000},
    {0x11C92, 0x11CA7, 0x2034},
    {0x11CA9, 0x11CA9, 0x2008},
    {0x11CAA, 0x11CB0, 0x2034},
    {0x11CB1, 0x11CB1, 0x2008},
    {0x11CB2, 0x11CB3, 0x2034},
    {0x11CB4, 0x11CB4, 0x2008},
    {0x11CB5, 0x11CB6, 0x2034},
    {0x11D00, 0x11D06, 0x2000},
    {0x11D08, 0x11D09, 0x2000},
    {0x11D0B, 0x11D30, 0x2000},
    {0x11D31, 0x11D36, 0x2034},
    {0x11D3A, 0x11D3A, 0x2034},
    {0x11D3C, 0x11D3D, 0x2034},
    {0x11D3F, 0x11D45, 0x2034},
    {0x11D46, 0x11D46, 0x2007},
    {0x11D47, 0x11D47, 0x2034},
    {0x11D50, 0x11D59, 0x2000},
    {0x11D60, 0x11D65, 0x2000},
    {0x11D67, 0x11D68, 0x2000},
    {0x11D6A, 0x11D89, 0x2000},
    {0x11D8A, 0x11D8E, 0x2008},
    {0x11D90, 0x11D91, 0x2034},
    {0x11D93, 0x11D94, 0x2008},
    {0x11D95, 0x11D95, 0x2034},
    {0x11D96, 0x11D96, 0x2008},
    {0x11D97, 0x11D97, 0x2034},
    {0x11D98, 0x11D98, 0x2000},
    {0x11DA0, 0x11DA9, 0x2000},
    {0x11DB0, 0x11DDB, 0x2000},
    {0x11DE0, 0x11DE9, 0x2000},
    {0x11EE0, 0x11EF2, 0x2000},
    {0x11EF3, 0x11EF4, 0x2034},
    {0x11EF5, 0x11EF6, 0x2008},
    {0x11F00, 0x11F01, 0x2034},
    {0x11F02, 0x11F02, 0x2007},
    {0x11F03, 0x11F03, 0x2008},
    {0x11F04, 0x11F10, 0x2020},
    {0x11F12, 0x11F33, 0x2020},
    {0x11F34, 0x11F35, 0x2008},
    {0x11F36, 0x11F3A, 0x2034},
    {0x11F3E, 0x11F3F, 0x2008},
    {0x11F40, 0x11F41, 0x2034},
    {0x11F42, 0x11F42, 0x2014},
    {0x11F50, 0x11F59, 0x2000},
    {0x11F5A, 0x11F5A, 0x2034},
    {0x11FB0, 0x11FB0, 0x2000},
    {0x12000, 0x12399, 0x2000},
    {0x12400, 0x1246E, 0x2000},
    {0x12480, 0x12543, 0x2000},
    {0x12F90, 0x12FF0, 0x2000},
    {0x13000, 0x1342F, 0x2000},
    {0x13430, 0x1343F, 0x3},
    {0x13440, 0x13440, 0x2034},
    {0x13441, 0x13446, 0x2000},
    {0x13447, 0x13455, 0x2034},
    {0x13460, 0x143FA, 0x2000},
    {0x14400, 0x14646, 0x2000},
    {0x16100, 0x1611D, 0x2000},
    {0x1611E, 0x16129, 0x2034},
    {0x1612A, 0x1612C, 0x2008},
    {0x1612D, 0x1612F, 0x2034},
    {0x16130, 0x16139, 0x2000},
    {0x16800, 0x16A38, 0x2000},
    {0x16A40, 0x16A5E, 0x2000},
    {0x16A60, 0x16A69, 0x2000},
    {0x16A70, 0x16ABE, 0x2000},
    {0x16AC0, 0x16AC9, 0x2000},
    {0x16AD0, 0x16AED, 0x2000},
    {0x16AF0, 0x16AF4, 0x2034},
    {0x16B00, 0x16B2F, 0x2000},
    {0x16B30, 0x16B36, 0x2034},
    {0x16B40, 0x16B43, 0x2000},
    {0x16B50, 0x16B59, 0x2000},
    {0x16B63, 0x16B77, 0x2000},
    {0x16B7D, 0x16B8F, 0x2000},
    {0x16D40, 0x16D62, 0x2000},
    {0x16D63, 0x16D63, 0x200A},
    {0x16D64, 0x16D66, 0x2000},
    {0x16D67, 0x16D6A, 0x200A},
    {0x16D6B, 0x16D6C, 0x2000},
    {0x16D70, 0x16D79, 0x2000},
    {0x16E40, 0x16E7F, 0x2000},
    {0x16EA0, 0x16EB8, 0x2000},
    {0x16EBB, 0x16ED3, 0x2000},
    {0x16F00, 0x16F4A, 0x2000},
    {0x16F4F, 0x16F4F, 0x2034},
    {0x16F50, 0x16F50, 0x2000},
    {0x16F51, 0x16F87, 0x2008},
    {0x16F8F, 0x16F92, 0x2034},
    {0x16F93, 0x16F9F, 0x2000},
    {0x16FE0, 0x16FE1, 0x2000},
    {0x16FE3, 0x16FE3, 0x2000},
    {0x16FE4, 0x16FE4, 0x2034},
    {0x16FF0, 0x16FF1, 0x2034},
    {0x16FF2, 0x16FF6, 0x2000},
    {0x17000, 0x18CD5, 0x2000},
    {0x18CFF, 0x18D1E, 0x2000},
    {0x18D80, 0x18DF2, 0x2000},
    {0x1AFF0, 0x1AFF3, 0x2000},
    {0x1AFF5, 0x1AFFB, 0x2000},
    {0x1AFFD, 0x1AFFE, 0x2000},
    {0x1B000, 0x1B122, 0x2000},
    {0x1B132, 0x1B132, 0x2000},
    {0x1B150, 0x1B152, 0x2000},
    {0x1B155, 0x1B155, 0x2000},
    {0x1B164, 0x1B167, 0x2000},
    {0x1B170, 0x1B2FB, 0x2000},
    {0x1BC00, 0x1BC6A, 0x2000},
    {0x1BC70, 0x1BC7C, 0x2000},
    {0x1BC80, 0x1BC88, 0x2000},
    {0x1BC90, 0x1BC99, 0x2000},
    {0x1BC9D, 0x1BC9E, 0x2034},
    {0x1BCA0, 0x1BCA3, 0x3},
    {0x1CCF0, 0x1CCF9, 0x2000},
    {0x1CF00, 0x1CF2D, 0x2034},
    {0x1CF30, 0x1CF46, 0x2034},
    {0x1D165, 0x1D169, 0x2034},
    {0x1D16D, 0x1D172, 0x2034},
    {0x1D173, 0x1D17A, 0x3},
    {0x1D17B, 0x1D182, 0x2034},
    {0x1D185, 0x1D18B, 0x2034},
    {0x1D1AA, 0x1D1AD, 0x2034},
    {0x1D242, 0x1D244, 0x2034},
    {0x1D400, 0x1D454, 0x2000},
    {0x1D456, 0x1D49C, 0x2000},
    {0x1D49E, 0x1D49F, 0x2000},
    {0x1D4A2, 0x1D4A2, 0x2000},
    {0x1D4A5, 0x1D4A6, 0x2000},
    {0x1D4A9, 0x1D4AC, 0x2000},
    {0x1D4AE, 0x1D4B9, 0x2000},
    {0x1D4BB, 0x1D4BB, 0x2000},
    {0x1D4BD, 0x1D4C3, 0x2000},
    {0x1D4C5, 0x1D505, 0x2000},
    {0x1D507, 0x1D50A, 0x2000},
    {0x1D50D, 0x1D514, 0x2000},
    {0x1D516, 0x1D51C, 0x2000},
    {0x1D51E, 0x1D539, 0x2000},
    {0x1D53B, 0x1D53E, 0x2000},
    {0x1D540, 0x1D544, 0x2000},
    {0x1D546, 0x1D546, 0x2000},
    {0x1D54A, 0x1D550, 0x2000},
    {0x1D552, 0x1D6A5, 0x2000},
    {0x1D6A8, 0x1D6C0, 0x2000},
    {0x1D6C2, 0x1D6DA, 0x2000},
    {0x1D6DC, 0x1D6FA, 0x2000},
    {0x1D6FC, 0x1D714, 0x2000},
    {0x1D716, 0x1D734, 0x2000},
    {0x1D736, 0x1D74E, 0x2000},
    {0x1D750, 0x1D76E, 0x2000},
    {0x1D770, 0x1D788, 0x2000},
    {0x1D78A, 0x1D7A8, 0x2000},
    {0x1D7AA, 0x1D7C2, 0x2000},
    {0x1D7C4, 0x1D7CB, 0x2000},
    {0x1D7CE, 0x1D7FF, 0x2000},
    {0x1DA00, 0x1DA36, 0x2034},
    {0x1DA3B, 0x1DA6C, 0x2034},
    {0x1DA75, 0x1DA75, 0x2034},
    {0x1DA84, 0x1DA84, 0x2034},
    {0x1DA9B, 0x1DA9F, 0x2034},
    {0x1DAA1, 0x1DAAF, 0x2034},
    {0x1DF00, 0x1DF1E, 0x2000},
    {0x1DF25, 0x1DF2A, 0x2000},
    {0x1E000, 0x1E006, 0x2034},
    {0x1E008, 0x1E018, 0x2034},
    {0x1E01B, 0x1E021, 0x2034},
    {0x1E023, 0x1E024, 0x2034},
    {0x1E026, 0x1E02A, 0x2034},
    {0x1E030, 0x1E06D, 0x2000},
    {0x1E08F, 0x1E08F, 0x2034},
    {0x1E100, 0x1E12C, 0x2000},
    {0x1E130, 0x1E136, 0x2034},
    {0x1E137, 0x1E13D, 0x2000},
    {0x1E140, 0x1E149, 0x2000},
    {0x1E14E, 0x1E14E, 0x2000},
    {0x1E290, 0x1E2AD, 0x2000},
    {0x1E2AE, 0x1E2AE, 0x2034},
    {0x1E2C0, 0x1E2EB, 0x2000},
    {0x1E2EC, 0x1E2EF, 0x2034},
    {0x1E2F0, 0x1E2F9, 0x2000},
    {0x1E4D0, 0x1E4EB, 0x2000},
    {0x1E4EC, 0x1E4EF, 0x2034},
    {0x1E4F0, 0x1E4F9, 0x2000},
    {0x1E5D0, 0x1E5ED, 0x2000},
    {0x1E5EE, 0x1E5EF, 0x2034},
    {0x1E5F0, 0x1E5FA, 0x2000},
    {0x1E6C0, 0x1E6DE, 0x2000},
    {0x1E6E0, 0x1E6E2, 0x2000},
    {0x1E6E3, 0x1E6E3, 0x2034},
    {0x1E6E4, 0x1E6E5, 0x2000},
    {0x1E6E6, 0x1E6E6, 0x2034},
    {0x1E6E7, 0x1E6ED, 0x2000},
    {0x1E6EE, 0x1E6EF, 0x2034},
    {0x1E6F0, 0x1E6F4, 0x2000},
    {0x1E6F5, 0x1E6F5, 0x2034},
    {0x1E6FE, 0x1E6FF, 0x2000},
    {0x1E7E0, 0x1E7E6, 0x2000},
    {0x1E7E8, 0x1E7EB, 0x2000},
    {0x1E7ED, 0x1E7EE, 0x2000},
    {0x1E7F0, 0x1E7FE, 0x2000},
    {0x1E800, 0x1E8C4, 0x2000},
    {0x1E8D0, 0x1E8D6, 0x2034},
    {0x1E900, 0x1E943, 0x2000},
    {0x1E944, 0x1E94A, 0x2034},
    {0x1E94B, 0x1E94B, 0x2000},
    {0x1E950, 0x1E959, 0x2000},
    {0x1EE00, 0x1EE03, 0x2000},
    {0x1EE05, 0x1EE1F, 0x2000},
    {0x1EE21, 0x1EE22, 0x2000},
    {0x1EE24, 0x1EE24, 0x2000},
    {0x1EE27, 0x1EE27, 0x2000},
    {0x1EE29, 0x1EE32, 0x2000},
    {0x1EE34, 0x1EE37, 0x2000},
    {0x1EE39, 0x1EE39, 0x2000},
    {0x1EE3B, 0x1EE3B, 0x2000},
    {0x1EE42, 0x1EE42, 0x2000},
    {0x1EE47, 0x1EE47, 0x2000},
    {0x1EE49, 0x1EE49, 0x2000},
    {0x1EE4B, 0x1EE4B, 0x2000},
    {0x1EE4D, 0x1EE4F, 0x2000},
    {0x1EE51, 0x1EE52, 0x2000},
    {0x1EE54, 0x1EE54, 0x2000},
    {0x1EE57, 0x1EE57, 0x2000},
    {0x1EE59, 0x1EE59, 0x2000},
    {0x1EE5B, 0x1EE5B, 0x2000},
    {0x1EE5D, 0x1EE5D, 0x2000},
    {0x1EE5F, 0x1EE5F, 0x2000},
    {0x1EE61, 0x1EE62, 0x2000},
    {0x1EE64, 0x1EE64, 0x2000},
    {0x1EE67, 0x1EE6A, 0x2000},
    {0x1EE6C, 0x1EE72, 0x2000},
    {0x1EE74, 0x1EE77, 0x2000},
    {0x1EE79, 0x1EE7C, 0x2000},
    {0x1EE7E, 0x1EE7E, 0x2000},
    {0x1EE80, 0x1EE89, 0x2000},
    {0x1EE8B, 0x1EE9B, 0x2000},
    {0x1EEA1, 0x1EEA3, 0x2000},
    {0x1EEA5, 0x1EEA9, 0x2000},
    {0x1EEAB, 0x1EEBB, 0x2000},
    {0x1F004, 0x1F004, 0x1C0},
    {0x1F02C, 0x1F02F, 0x40},
    {0x1F094, 0x1F09F, 0x40},
    {0x1F0AF, 0x1F0B0, 0x40},
    {0x1F0C0, 0x1F0C0, 0x40},
    {0x1F0CF, 0x1F0CF, 0x1C0},
    {0x1F0D0, 0x1F0D0, 0x40},
    {0x1F0F6, 0x1F0FF, 0x40},
    {0x1F130, 0x1F149, 0x2000},
    {0x1F150, 0x1F169, 0x2000},
    {0x1F170, 0x1F171, 0x20C0},
    {0x1F172, 0x1F17D, 0x2000},
    {0x1F17E, 0x1F17F, 0x20C0},
    {0x1F180, 0x1F189, 0x2000},
    {0x1F18E, 0x1F18E, 0x1C0},
    {0x1F191, 0x1F19A, 0x1C0},
    {0x1F1AE, 0x1F1E5, 0x40},
    {0x1F1E6, 0x1F1FF, 0x986},
    {0x1F201, 0x1F201, 0x1C0},
    {0x1F202, 0x1F202, 0xC0},
    {0x1F203, 0x1F20F, 0x40},
    {0x1F21A, 0x1F21A, 0x1C0},
    {0x1F22F, 0x1F22F, 0x1C0},
    {0x1F232, 0x1F236, 0x1C0},
    {0x1F237, 0x1F237, 0xC0},
    {0x1F238, 0x1F23A, 0x1C0},
    {0x1F23C, 0x1F23F, 0x40},
    {0x1F249, 0x1F24F, 0x40},
    {0x1F250, 0x1F251, 0x1C0},
    {0x1F252, 0x1F25F, 0x40},
    {0x1F266, 0x1F2FF, 0x40},
    {0x1F300, 0x1F320, 0x1C0},
    {0x1F321, 0x1F321, 0xC0},
    {0x1F324, 0x1F32C, 0xC0},
    {0x1F32D, 0x1F335, 0x1C0},
    {0x1F336, 0x1F336, 0xC0},
    {0x1F337, 0x1F37C, 0x1C0},
    {0x1F37D, 0x1F37D, 0xC0},
    {0x1F37E, 0x1F384, 0x1C0},
    {0x1F385, 0x1F385, 0x5C0},
    {0x1F386, 0x1F393, 0x1C0},
    {0x1F396, 0x1F397, 0xC0},
    {0x1F399, 0x1F39B, 0xC0},
    {0x1F39E, 0x1F39F, 0xC0},
    {0x1F3A0, 0x1F3C1, 0x1C0},
    {0x1F3C2, 0x1F3C4, 0x5C0},
    {0x1F3C5, 0x1F3C6, 0x1C0},
    {0x1F3C7, 0x1F3C7, 0x5C0},
    {0x1F3C8, 0x1F3C9, 0x1C0},
    {0x1F3CA, 0x1F3CA, 0x5C0},
    {0x1F3CB, 0x1F3CC, 0x4C0},
    {0x1F3CD, 0x1F3CE, 0xC0},
    {0x1F3CF, 0x1F3D3, 0x1C0},
    {0x1F3D4, 0x1F3DF, 0xC0},
    {0x1F3E0, 0x1F3F0, 0x1C0},
    {0x1F3F3, 0x1F3F3, 0xC0},
    {0x1F3F4, 0x1F3F4, 0x1C0},
    {0x1F3F5, 0x1F3F5, 0xC0},
    {0x1F3F7, 0x1F3F7, 0xC0},
    {0x1F3F8, 0x1F3FA, 0x1C0},
    {0x1F3FB, 0x1F3FF, 0xBB4},
    {0x1F400, 0x1F43E, 0x1C0},
    {0x1F43F, 0x1F43F, 0xC0},
    {0x1F440, 0x1F440, 0x1C0},
    {0x1F441, 0x1F441, 0xC0},
    {0x1F442, 0x1F443, 0x5C0},
    {0x1F444, 0x1F445, 0x1C0},
    {0x1F446, 0x1F450, 0x5C0},
    {0x1F451, 0x1F465, 0x1C0},
    {0x1F466, 0x1F478, 0x5C0},
    {0x1F479, 0x1F47B, 0x1C0},
    {0x1F47C, 0x1F47C, 0x5C0},
    {0x1F47D, 0x1F480, 0x1C0},
    {0x1F481, 0x1F483, 0x5C0},
    {0x1F484, 0x1F484, 0x1C0},
    {0x1F485, 0x1F487, 0x5C0},
    {0x1F488, 0x1F48E, 0x1C0},
    {0x1F48F, 0x1F48F, 0x5C0},
    {0x1F490, 0x1F490, 0x1C0},
    {0x1F491, 0x1F491, 0x5C0},
    {0x1F492, 0x1F4A9, 0x1C0},
    {0x1F4AA, 0x1F4AA, 0x5C0},
    {0x1F4AB, 0x1F4FC, 0x1C0},
    {0x1F4FD, 0x1F4FD, 0xC0},
    {0x1F4FF, 0x1F53D, 0x1C0},
    {0x1F549, 0x1F54A, 0xC0},
    {0x1F54B, 0x1F54E, 0x1C0},
    {0x1F550, 0x1F567, 0x1C0},
    {0x1F56F, 0x1F570, 0xC0},
    {0x1F573, 0x1F573, 0xC0},
    {0x1F574, 0x1F575, 0x4C0},
    {0x1F576, 0x1F579, 0xC0},
    {0x1F57A, 0x1F57A, 0x5C0},
    {0x1F587, 0x1F587, 0xC0},
    {0x1F58A, 0x1F58D, 0xC0},
    {0x1F590, 0x1F590, 0x4C0},
    {0x1F595, 0x1F596, 0x5C0},
    {0x1F5A4, 0x1F5A4, 0x1C0},
    {0x1F5A5, 0x1F5A5, 0xC0},
    {0x1F5A8, 0x1F5A8, 0xC0},
    {0x1F5B1, 0x1F5B2, 0xC0},
    {0x1F5BC, 0x1F5BC, 0xC0},
    {0x1F5C2, 0x1F5C4, 0xC0},
    {0x1F5D1, 0x1F5D3, 0xC0},
    {0x1F5DC, 0x1F5DE, 0xC0},
    {0x1F5E1, 0x1F5E1, 0xC0},
    {0x1F5E3, 0x1F5E3, 0xC0},
    {0x1F5E8, 0x1F5E8, 0xC0},
    {0x1F5EF, 0x1F5EF, 0xC0},
    {0x1F5F3, 0x1F5F3, 0xC0},
    {0x1F5FA, 0x1F5FA, 0xC0},
    {0x1F5FB, 0x1F644, 0x1C0},
    {0x1F645, 0x1F647, 0x5C0},
    {0x1F648, 0x1F64A, 0x1C0},
    {0x1F64B, 0x1F64F, 0x5C0},
    {0x1F680, 0x1F6A2, 0x1C0},
    {0x1F6A3, 0x1F6A3, 0x5C0},
    {0x1F6A4, 0x1F6B3, 0x1C0},
    {0x1F6B4, 0x1F6B6, 0x5C0},
    {0x1F6B7, 0x1F6BF, 0x1C0},
    {0x1F6C0, 0x1F6C0, 0x5C0},
    {0x1F6C1, 0x1F6C5, 0x1C0},
    {0x1F6CB, 0x1F6CB, 0xC0},
    {0x1F6CC, 0x1F6CC, 0x5C0},
    {0x1F6CD, 0x1F6CF, 0xC0},
    {0x1F6D0, 0x1F6D2, 0x1C0},
    {0x1F6D5, 0x1F6D8, 0x1C0},
    {0x1F6D9, 0x1F6DB, 0x40},
    {0x1F6DC, 0x1F6DF, 0x1C0},
    {0x1F6E0, 0x1F6E5, 0xC0},
    {0x1F6E9, 0x1F6E9, 0xC0},
    {0x1F6EB, 0x1F6EC, 0x1C0},
    {0x1F6ED, 0x1F6EF, 0x40},
    {0x1F6F0, 0x1F6F0, 0xC0},
    {0x1F6F3, 0x1F6F3, 0xC0},
    {0x1F6F4, 0x1F6FC, 0x1C0},
    {0x1F6FD, 0x1F6FF, 0x40},
    {0x1F7DA, 0x1F7DF, 0x40},
    {0x1F7E0, 0x1F7EB, 0x1C0},
    {0x1F7EC, 0x1F7EF, 0x40},
    {0x1F7F0, 0x1F7F0, 0x1C0},
    {0x1F7F1, 0x1F7FF, 0x40},
    {0x1F80C, 0x1F80F, 0x40},
    {0x1F848, 0x1F84F, 0x40},
    {0x1F85A, 0x1F85F, 0x40},
    {0x1F888, 0x1F88F, 0x40},
    {0x1F8AE, 0x1F8AF, 0x40},
    {0x1F8BC, 0x1F8BF, 0x40},
    {0x1F8C2, 0x1F8CF, 0x40},
    {0x1F8D9, 0x1F8FF, 0x40},
    {0x1F90C, 0x1F90C, 0x5C0},
    {0x1F90D, 0x1F90E, 0x1C0},
    {0x1F90F, 0x1F90F, 0x5C0},
    {0x1F910, 0x1F917, 0x1C0},
    {0x1F918, 0x1F91F, 0x5C0},
    {0x1F920, 0x1F925, 0x1C0},
    {0x1F926, 0x1F926, 0x5C0},
    {0x1F927, 0x1F92F, 0x1C0},
    {0x1F930, 0x1F939, 0x5C0},
    {0x1F93A, 0x1F93A, 0x1C0},
    {0x1F93C, 0x1F93E, 0x5C0},
    {0x1F93F, 0x1F945, 0x1C0},
    {0x1F947, 0x1F976, 0x1C0},
    {0x1F977, 0x1F977, 0x5C0},
    {0x1F978, 0x1F9AF, 0x1C0},
    {0x1F9B0, 0x1F9B3, 0x9C0},
    {0x1F9B4, 0x1F9B4, 0x1C0},
    {0x1F9B5, 0x1F9B6, 0x5C0},
    {0x1F9B7, 0x1F9B7, 0x1C0},
    {0x1F9B8, 0x1F9B9, 0x5C0},
    {0x1F9BA, 0x1F9BA, 0x1C0},
    {0x1F9BB, 0x1F9BB, 0x5C0},
    {0x1F9BC, 0x1F9CC, 0x1C0},
    {0x1F9CD, 0x1F9CF, 0x5C0},
    {0x1F9D0, 0x1F9D0, 0x1C0},
    {0x1F9D1, 0x1F9DD, 0x5C0},
    {0x1F9DE, 0x1F9FF, 0x1C0},
    {0x1FA58, 0x1FA5F, 0x40},
    {0x1FA6E, 0x1FA6F, 0x40},
    {0x1FA70, 0x1FA7C, 0x1C0},
    {0x1FA7D, 0x1FA7F, 0x40},
    {0x1FA80, 0x1FA8A, 0x1C0},
    {0x1FA8B, 0x1FA8D, 0x40},
    {0x1FA8E, 0x1FAC2, 0x1C0},
    {0x1FAC3, 0x1FAC5, 0x5C0},
    {0x1FAC6, 0x1FAC6, 0x1C0},
    {0x1FAC7, 0x1FAC7, 0x40},
    {0x1FAC8, 0x1FAC8, 0x1C0},
    {0x1FAC9, 0x1FACC, 0x40},
    {0x1FACD, 0x1FADC, 0x1C0},
    {0x1FADD, 0x1FADE, 0x40},
    {0x1FADF, 0x1FAEA, 0x1C0},
    {0x1FAEB, 0x1FAEE, 0x40},
    {0x1FAEF, 0x1FAEF, 0x1C0},
    {0x1FAF0, 0x1FAF8, 0x5C0},
    {0x1FAF9, 0x1FAFF, 0x40},
    {0x1FBF0, 0x1FBF9, 0x2000},
    {0x1FC00, 0x1FFFD, 0x40},
    {0x20000, 0x2A6DF, 0x2000},
    {0x2A700, 0x2B81D, 0x2000},
    {0x2B820, 0x2CEAD, 0x2000},
    {0x2CEB0, 0x2EBE0, 0x2000},
    {0x2EBF0, 0x2EE5D, 0x2000},
    {0x2F800, 0x2FA1D, 0x2000},
    {0x30000, 0x3134A, 0x2000},
    {0x31350, 0x33479, 0x2000},
    {0xE0000, 0xE001F, 0x3},
    {0xE0020, 0xE007F, 0x834},
    {0xE0080, 0xE00FF, 0x3},
    {0xE0100, 0xE01EF, 0x2034},
    {0xE01F0, 0xE0FFF, 0x3},
}};

struct CaseMapping {
  char32_t from;
  char32_t to;
};

inline constexpr std::array<CaseMapping, 1393> kLowercase{{
    {0x0041, 0x0061},
    {0x0042, 0x0062},
    {0x0043, 0x0063},
    {0x0044, 0x0064},
    {0x0045, 0x0065},
    {0x0046, 0x0066},
    {0x0047, 0x0067},
    {0x0048, 0x0068},
    {0x0049, 0x0069},
    {0x004A, 0x006A},
    {0x004B, 0x006B},
    {0x004C, 0x006C},
    {0x004D, 0x006D},
    {0x004E, 0x006E},
    {0x004F, 0x006F},
    {0x0050, 0x0070},
    {0x0051, 0x0071},
    {0x0052, 0x0072},
    {0x0053, 0x0073},
    {0x0054, 0x0074},
    {0x0055, 0x0075},
    {0x0056, 0x0076},
    {0x0057, 0x0077},
    {0x0058, 0x0078},
    {0x0059, 0x0079},
    {0x005A, 0x007A},
    {0x00C0, 0x00E0},
    {0x00C1, 0x00E1},
    {0x00C2, 0x00E2},
    {0x00C3, 0x00E3},
    {0x00C4, 0x00E4},
    {0x00C5, 0x00E5},
    {0x00C6, 0x00E6},
    {0x00C7, 0x00E7},
    {0x00C8, 0x00E8},
    {0x00C9, 0x00E9},
    {0x00CA, 0x00EA},
    {0x00CB, 0x00EB},
    {0x00CC, 0x00EC},
    {0x00CD, 0x00ED},
    {0x00CE, 0x00EE},
    {0x00CF, 0x00EF},
    {0x00D0, 0x00F0},
    {0x00D1, 0x00F1},
    {0x00D2, 0x00F2},
    {0x00D3, 0x00F3},
    {0x00D4, 0x00F4},
    {0x00D5, 0x00F5},
    {0x00D6, 0x00F6},
    {0x00D8, 0x00F8},
    {0x00D9, 0x00F9},
    {0x00DA, 0x00FA},
    {0x00DB, 0x00FB},
    {0x00DC, 0x00FC},
    {0x00DD, 0x00FD},
    {0x00DE, 0x00FE},
    {0x0100, 0x0101},
    {0x0102, 0x0103},
    {0x0104, 0x0105},
    {0x0106, 0x0107},
    {0x0108, 0x0109},
    {0x010A, 0x010B},
    {0x010C, 0x010D},
    {0x010E, 0x010F},
    {0x0110, 0x0111},
    {0x0112, 0x0113},
    {0x0114, 0x0115},
    {0x0116, 0x0117},
    {0x0118, 0x0119},
    {0x011A, 0x011B},
    {0x011C, 0x011D},
    {0x011E, 0x011F},
    {0x0120, 0x0121},
    {0x0122, 0x0123},
    {0x0124, 0x0125},
    {0x0126, 0x0127},
    {0x0128, 0x0129},
    {0x012A, 0x012B},
    {0x012C, 0x012D},
    {0x012E, 0x012F},
    {0x0130, 0x0069},
    {0x0132, 0x0133},
    {0x0134, 0x0135},
    {0x0136, 0x0137},
    {0x0139, 0x013A},
    {0x013B, 0x013C},
    {0x013D, 0x013E},
    {0x013F, 0x0140},
    {0x0141, 0x0142},
    {0x0143, 0x0144},
    {0x0145, 0x0146},
    {0x0147, 0x0148},
    {0x014A, 0x014B},
    {0x014C, 0x014D},
    {0x014E, 0x014F},
    {0x0150, 0x0151},
    {0x0152, 0x0153},
    {0x0154, 0x0155},
    {0x0156, 0x0157},
    {0x0158, 0x0159},
    {0x015A, 0x015B},
    {0x015C, 0x015D},
    {0x015E, 0x015F},
    {0x0160, 0x0161},
    {0x0162, 0x0163},
    {0x0164, 0x0165},
    {0x0166, 0x0167},
    {0x0168, 0x0169},
    {0x016A, 0x016B},
    {0x016C, 0x016D},
    {0x016E, 0x016F},
    {0x0170, 0x0171},
    {0x0172, 0x0173},
    {0x0174, 0x0175},
    {0x0176, 0x0177},
    {0x0178, 0x00FF},
    {0x0179, 0x017A},
    {0x017B, 0x017C},
    {0x017D, 0x017E},
    {0x0181, 0x0253},
    {0x0182, 0x0183},
    {0x0184, 0x0185},
    {0x0186, 0x0254},
    {0x0187, 0x0188},
    {0x0189, 0x0256},
    {0x018A, 0x0257},
    {0x018B, 0x018C},
    {0x018E, 0x01DD},
    {0x018F, 0x0259},
    {0x0190, 0x025B},
    {0x0191, 0x0192},
    {0x0193, 0x0260},
    {0x0194, 0x0263},
    {0x0196, 0x0269},
    {0x0197, 0x0268},
    {0x0198, 0x0199},
    {0x019C, 0x026F},
    {0x019D, 0x0272},
    {0x019F, 0x0275},
    {0x01A0, 0x01A1},
    {0x01A2, 0x01A3},
    {0x01A4, 0x01A5},
    {0x01A6, 0x0280},
    {0x01A7, 0x01A8},
    {0x01A9, 0x0283},
    {0x01AC, 0x01AD},
    {0x01AE, 0x0288},
    {0x01AF, 0x01B0},
    {0x01B1, 0x028A},
    {0x01B2, 0x028B},
    {0x01B3, 0x01B4},
    {0x01B5, 0x01B6},
    {0x01B7, 0x0292},
    {0x01B8, 0x01B9},
    {0x01BC, 0x01BD},
    {0x01C4, 0x01C6},
    {0x01C5, 0x01C6},
    {0x01C7, 0x01C9},
    {0x01C8, 0x01C9},
    {0x01CA, 0x01CC},
    {0x01CB, 0x01CC},
    {0x01CD, 0x01CE},
    {0x01CF, 0x01D0},
    {0x01D1, 0x01D2},
    {0x01D3, 0x01D4},
    {0x01D5, 0x01D6},
    {0x01D7, 0x01D8},
    {0x01D9, 0x01DA},
    {0x01DB, 0x01DC},
    {0x01DE, 0x01DF},
    {0x01E0, 0x01E1},
    {0x01E2, 0x01E3},
    {0x01E4, 0x01E5},
    {0x01E6, 0x01E7},
    {0x01E8, 0x01E9},
    {0x01EA, 0x01EB},
    {0x01EC, 0x01ED},
    {0x01EE, 0x01EF},
    {0x01F1, 0x01F3},
    {0x01F2, 0x01F3},
    {0x01F4, 0x01F5},
    {0x01F6, 0x0195},
    {0x01F7, 0x01BF},
    {0x01F8, 0x01F9},
    {0x01FA, 0x01FB},
    {0x01FC, 0x01FD},
    {0x01FE, 0x01FF},
    {0x0200, 0x0201},
    {0x0202, 0x0203},
    {0x0204, 0x0205},
    {0x0206, 0x0207},
    {0x0208, 0x0209},
    {0x020A, 0x020B},
    {0x020C, 0x020D},
    {0x020E, 0x020F},
    {0x0210, 0x0211},
    {0x0212, 0x0213},
    {0x0214, 0x0215},
    {0x0216, 0x0217},
    {0x0218, 0x0219},
    {0x021A, 0x021B},
    {0x021C, 0x021D},
    {0x021E, 0x021F},
    {0x0220, 0x019E},
    {0x0222, 0x0223},
    {0x0224, 0x0225},
    {0x0226, 0x0227},
    {0x0228, 0x0229},
    {0x022A, 0x022B},
    {0x022C, 0x022D},
    {0x022E, 0x022F},
    {0x0230, 0x0231},
    {0x0232, 0x0233},
    {0x023A, 0x2C65},
    {0x023B, 0x023C},
    {0x023D, 0x019A},
    {0x023E, 0x2C66},
    {0x0241, 0x0242},
    {0x0243, 0x0180},
    {0x0244, 0x0289},
    {0x0245, 0x028C},
    {0x0246, 0x0247},
    {0x0248, 0x0249},
    {0x024A, 0x024B},
    {0x024C, 0x024D},
    {0x024E, 0x024F},
    {0x0370, 0x0371},
    {0x0372, 0x0373},
    {0x0376, 0x0377},
    {0x037F, 0x03F3},
    {0x0386, 0x03AC},
    {0x0388, 0x03AD},
    {0x0389, 0x03AE},
    {0x038A, 0x03AF},
    {0x038C, 0x03CC},
    {0x038E, 0x03CD},
    {0x038F, 0x03CE},
    {0x0391, 0x03B1},
    {0x0392, 0x03B2},
    {0x0393, 0x03B3},
    {0x0394, 0x03B4},
    {0x0395, 0x03B5},
    {0x0396, 0x03B6},
    {0x0397, 0x03B7},
    {0x0398, 0x03B8},
    {0x0399, 0x03B9},
    {0x039A, 0x03BA},
    {0x039B, 0x03BB},
    {0x039C, 0x03BC},
    {0x039D, 0x03BD},
    {0x039E, 0x03BE},
    {0x039F, 0x03BF},
    {0x03A0, 0x03C0},
    {0x03A1, 0x03C1},
    {0x03A3, 0x03C3},
    {0x03A4, 0x03C4},
    {0x03A5, 0x03C5},
    {0x03A6, 0x03C6},
    {0x03A7, 0x03C7},
    {0x03A8, 0x03C8},
    {0x03A9, 0x03C9},
    {0x03AA, 0x03CA},
    {0x03AB, 0x03CB},
    {0x03CF, 0x03D7},
    {0x03D8, 0x03D9},
    {0x03DA, 0x03DB},
    {0x03DC, 0x03DD},
    {0x03DE, 0x03DF},
    {0x03E0, 0x03E1},
    {0x03E2, 0x03E3},
    {0x03E4, 0x03E5},
    {0x03E6, 0x03E7},
    {0x03E8, 0x03E9},
    {0x03EA, 0x03EB},
    {0x03EC, 0x03ED},
    {0x03EE, 0x03EF},
    {0x03F4, 0x03B8},
    {0x03F7, 0x03F8},
    {0x03F9, 0x03F2},
    {0x03FA, 0x03FB},
    {0x03FD, 0x037B},
    {0x03FE, 0x037C},
    {0x03FF, 0x037D},
    {0x0400, 0x0450},
    {0x0401, 0x0451},
    {0x0402, 0x0452},
    {0x0403, 0x0453},
    {0x0404, 0x0454},
    {0x0405, 0x0455},
    {0x0406, 0x0456},
    {0x0407, 0x0457},
    {0x0408, 0x0458},
    {0x0409, 0x0459},
    {0x040A, 0x045A},
    {0x040B, 0x045B},
    {0x040C, 0x045C},
    {0x040D, 0x045D},
    {0x040E, 0x045E},
    {0x040F, 0x045F},
    {0x0410, 0x0430},
    {0x0411, 0x0431},
    {0x0412, 0x0432},
    {0x0413, 0x0433},
    {0x0414, 0x0434},
    {0x0415, 0x0435},
    {0x0416, 0x0436},
    {0x0417, 0x0437},
    {0x0418, 0x0438},
    {0x0419, 0x0439},
    {0x041A, 0x043A},
    {0x041B, 0x043B},
    {0x041C, 0x043C},
    {0x041D, 0x043D},
    {0x041E, 0x043E},
    {0x041F, 0x043F},
    {0x0420, 0x0440},
    {0x0421, 0x0441},
    {0x0422, 0x0442},
    {0x0423, 0x0443},
    {0x0424, 0x0444},
    {0x0425, 0x0445},
    {0x0426, 0x0446},
    {0x0427, 0x0447},
    {0x0428, 0x0448},
    {0x0429, 0x0449},
    {0x042A, 0x044A},
    {0x042B, 0x044B},
    {0x042C, 0x044C},
    {0x042D, 0x044D},
    {0x042E, 0x044E},
    {0x042F, 0x044F},
    {0x0460, 0x0461},
    {0x0462, 0x0463},
    {0x0464, 0x0465},
    {0x0466, 0x0467},
    {0x0468, 0x0469},
    {0x046A, 0x046B},
    {0x046C, 0x046D},
    {0x046E, 0x046F},
    {0x0470, 0x0471},
    {0x0472, 0x0473},
    {0x0474, 0x0475},
    {0x0476, 0x0477},
    {0x0478, 0x0479},
    {0x047A, 0x047B},
    {0x047C, 0x047D},
    {0x047E, 0x047F},
    {0x0480, 0x0481},
    {0x048A, 0x048B},
    {0x048C, 0x048D},
    {0x048E, 0x048F},
    {0x0490, 0x0491},
    {0x0492, 0x0493},
    {0x0494, 0x0495},
    {0x0496, 0x0497},
    {0x0498, 0x0499},
    {0x049A, 0x049B},
    {0x049C, 0x049D},
    {0x049E, 0x049F},
    {0x04A0, 0x04A1},
    {0x04A2, 0x04A3},
    {0x04A4, 0x04A5},
    {0x04A6, 0x04A7},
    {0x04A8, 0x04A9},
    {0x04AA, 0x04AB},
    {0x04AC, 0x04AD},
    {0x04AE, 0x04AF},
    {0x04B0, 0x04B1},
    {0x04B2, 0x04B3},
    {0x04B4, 0x04B5},
    {0x04B6, 0x04B7},
    {0x04B8, 0x04B9},
    {0x04BA, 0x04BB},
    {0x04BC, 0x04BD},
    {0x04BE, 0x04BF},
    {0x04C0, 0x04CF},
    {0x04C1, 0x04C2},
    {0x04C3, 0x04C4},
    {0x04C5, 0x04C6},
    {0x04C7, 0x04C8},
    {0x04C9, 0x04CA},
    {0x04CB, 0x04CC},
    {0x04CD, 0x04CE},
    {0x04D0, 0x04D1},
    {0x04D2, 0x04D3},
    {0x04D4, 0x04D5},
    {0x04D6, 0x04D7},
    {0x04D8, 0x04D9},
    {0x04DA, 0x04DB},
    {0x04DC, 0x04DD},
    {0x04DE, 0x04DF},
    {0x04E0, 0x04E1},
    {0x04E2, 0x04E3},
    {0x04E4, 0x04E5},
    {0x04E6, 0x04E7},
    {0x04E8, 0x04E9},
    {0x04EA, 0x04EB},
    {0x04EC, 0x04ED},
    {0x04EE, 0x04EF},
    {0x04F0, 0x04F1},
    {0x04F2, 0x04F3},
    {0x04F4, 0x04F5},
    {0x04F6, 0x04F7},
    {0x04F8, 0x04F9},
    {0x04FA, 0x04FB},
    {0x04FC, 0x04FD},
    {0x04FE, 0x04FF},
    {0x0500, 0x0501},
    {0x0502, 0x0503},
    {0x0504, 0x0505},
    {0x0506, 0x0507},
    {0x0508, 0x0509},
    {0x050A, 0x050B},
    {0x050C, 0x050D},
    {0x050E, 0x050F},
    {0x0510, 0x0511},
    {0x0512, 0x0513},
    {0x0514, 0x0515},
    {0x0516, 0x0517},
    {0x0518, 0x0519},
    {0x051A, 0x051B},
    {0x051C, 0x051D},
    {0x051E, 0x051F},
    {0x0520, 0x0521},
    {0x0522, 0x0523},
    {0x0524, 0x0525},
    {0x0526, 0x0527},
    {0x0528, 0x0529},
    {0x052A, 0x052B},
    {0x052C, 0x052D},
    {0x052E, 0x052F},
    {0x0531, 0x0561},
    {0x0532, 0x0562},
    {0x0533, 0x0563},
    {0x0534, 0x0564},
    {0x0535, 0x0565},
    {0x0536, 0x0566},
    {0x0537, 0x0567},
    {0x0538, 0x0568},
    {0x0539, 0x0569},
    {0x053A, 0x056A},
    {0x053B, 0x056B},
    {0x053C, 0x056C},
    {0x053D, 0x056D},
    {0x053E, 0x056E},
    {0x053F, 0x056F},
    {0x0540, 0x0570},
    {0x0541, 0x0571},
    {0x0542, 0x0572},
    {0x0543, 0x0573},
    {0x0544, 0x0574},
    {0x0545, 0x0575},
    {0x0546, 0x0576},
    {0x0547, 0x0577},
    {0x0548, 0x0578},
    {0x0549, 0x0579},
    {0x054A, 0x057A},
    {0x054B, 0x057B},
    {0x054C, 0x057C},
    {0x054D, 0x057D},
    {0x054E, 0x057E},
    {0x054F, 0x057F},
    {0x0550, 0x0580},
    {0x0551, 0x0581},
    {0x0552, 0x0582},
    {0x0553, 0x0583},
    {0x0554, 0x0584},
    {0x0555, 0x0585},
    {0x0556, 0x0586},
    {0x10A0, 0x2D00},
    {0x10A1, 0x2D01},
    {0x10A2, 0x2D02},
    {0x10A3, 0x2D03},
    {0x10A4, 0x2D04},
    {0x10A5, 0x2D05},
    {0x10A6, 0x2D06},
    {0x10A7, 0x2D07},
    {0x10A8, 0x2D08},
    {0x10A9, 0x2D09},
    {0x10AA, 0x2D0A},
    {0x10AB, 0x2D0B},
    {0x10AC, 0x2D0C},
    {0x10AD, 0x2D0D},
    {0x10AE, 0x2D0E},
    {0x10AF, 0x2D0F},
    {0x10B0, 0x2D10},
    {0x10B1, 0x2D11},
    {0x10B2, 0x2D12},
    {0x10B3, 0x2D13},
    {0x10B4, 0x2D14},
    {0x10B5, 0x2D15},
    {0x10B6, 0x2D16},
    {0x10B7, 0x2D17},
    {0x10B8, 0x2D18},
    {0x10B9, 0x2D19},
    {0x10BA, 0x2D1A},
    {0x10BB, 0x2D1B},
    {0x10BC, 0x2D1C},
    {0x10BD, 0x2D1D},
    {0x10BE, 0x2D1E},
    {0x10BF, 0x2D1F},
    {0x10C0, 0x2D20},
    {0x10C1, 0x2D21},
    {0x10C2, 0x2D22},
    {0x10C3, 0x2D23},
    {0x10C4, 0x2D24},
    {0x10C5, 0x2D25},
    {0x10C7, 0x2D27},
    {0x10CD, 0x2D2D},
    {0x13A0, 0xAB70},
    {0x13A1, 0xAB71},
    {0x13A2, 0xAB72},
    {0x13A3, 0xAB73},
    {0x13A4, 0xAB74},
    {0x13A5, 0xAB75},
    {0x13A6, 0xAB76},
    {0x13A7, 0xAB77},
    {0x13A8, 0xAB78},
    {0x13A9, 0xAB79},
    {0x13AA, 0xAB7A},
    {0x13AB, 0xAB7B},
    {0x13AC, 0xAB7C},
    {0x13AD, 0xAB7D},
    {0x13AE, 0xAB7E},
    {0x13AF, 0xAB7F},
    {0x13B0, 0xAB80},
    {0x13B1, 0xAB81},
    {0x13B2, 0xAB82},
    {0x13B3, 0xAB83},
    {0x13B4, 0xAB84},
    {0x13B5, 0xAB85},
    {0x13B6, 0xAB86},
    {0x13B7, 0xAB87},
    {0x13B8, 0xAB88},
    {0x13B9, 0xAB89},
    {0x13BA, 0xAB8A},
    {0x13BB, 0xAB8B},
    {0x13BC, 0xAB8C},
    {0x13BD, 0xAB8D},
    {0x13BE, 0xAB8E},
    {0x13BF, 0xAB8F},
    {0x13C0, 0xAB90},
    {0x13C1, 0xAB91},
    {0x13C2, 0xAB92},
    {0x13C3, 0xAB93},
    {0x13C4, 0xAB94},
    {0x13C5, 0xAB95},
    {0x13C6, 0xAB96},
    {0x13C7, 0xAB97},
    {0x13C8, 0xAB98},
    {0x13C9, 0xAB99},
    {0x13CA, 0xAB9A},
    {0x13CB, 0xAB9B},
    {0x13CC, 0xAB9C},
    {0x13CD, 0xAB9D},
    {0x13CE, 0xAB9E},
    {0x13CF, 0xAB9F},
    {0x13D0, 0xABA0},
    {0x13D1, 0xABA1},
    {0x13D2, 0xABA2},
    {0x13D3, 0xABA3},
    {0x13D4, 0xABA4},
    {0x13D5, 0xABA5},
    {0x13D6, 0xABA6},
    {0x13D7, 0xABA7},
    {0x13D8, 0xABA8},
    {0x13D9, 0xABA9},
    {0x13DA, 0xABAA},
    {0x13DB, 0xABAB},
    {0x13DC, 0xABAC},
    {0x13DD, 0xABAD},
    {0x13DE, 0xABAE},
    {0x13DF, 0xABAF},
    {0x13E0, 0xABB0},
    {0x13E1, 0xABB1},
    {0x13E2, 0xABB2},
    {0x13E3, 0xABB3},
    {0x13E4, 0xABB4},
    {0x13E5, 0xABB5},
    {0x13E6, 0xABB6},
    {0x13E7, 0xABB7},
    {0x13E8, 0xABB8},
    {0x13E9, 0xABB9},
    {0x13EA, 0xABBA},
    {0x13EB, 0xABBB},
    {0x13EC, 0xABBC},
    {0x13ED, 0xABBD},
    {0x13EE, 0xABBE},
    {0x13EF, 0xABBF},
    {0x13F0, 0x13F8},
    {0x13F1, 0x13F9},
    {0x13F2, 0x13FA},
    {0x13F3, 0x13FB},
    {0x13F4, 0x13FC},
    {0x13F5, 0x13FD},
    {0x1C90, 0x10D0},
    {0x1C91, 0x10D1},
    {0x1C92, 0x10D2},
    {0x1C93, 0x10D3},
    {0x1C94, 0x10D4},
    {0x1C95, 0x10D5},
    {0x1C96, 0x10D6},
    {0x1C97, 0x10D7},
    {0x1C98, 0x10D8},
    {0x1C99, 0x10D9},
    {0x1C9A, 0x10DA},
    {0x1C9B, 0x10DB},
    {0x1C9C, 0x10DC},
    {0x1C9D, 0x10DD},
    {0x1C9E, 0x10DE},
    {0x1C9F, 0x10DF},
    {0x1CA0, 0x10E0},
    {0x1CA1, 0x10E1},
    {0x1CA2, 0x10E2},
    {0x1CA3, 0x10E3},
    {0x1CA4, 0x10E4},
    {0x1CA5, 0x10E5},
    {0x1CA6, 0x10E6},
    {0x1CA7, 0x10E7},
    {0x1CA8, 0x10E8},
    {0x1CA9, 0x10E9},
    {0x1CAA, 0x10EA},
    {0x1CAB, 0x10EB},
    {0x1CAC, 0x10EC},
    {0x1CAD, 0x10ED},
    {0x1CAE, 0x10EE},
    {0x1CAF, 0x10EF},
    {0x1CB0, 0x10F0},
    {0x1CB1, 0x10F1},
    {0x1CB2, 0x10F2},
    {0x1CB3, 0x10F3},
    {0x1CB4, 0x10F4},
    {0x1CB5, 0x10F5},
    {0x1CB6, 0x10F6},
    {0x1CB7, 0x10F7},
    {0x1CB8, 0x10F8},
    {0x1CB9, 0x10F9},
    {0x1CBA, 0x10FA},
    {0x1CBD, 0x10FD},
    {0x1CBE, 0x10FE},
    {0x1CBF, 0x10FF},
    {0x1E00, 0x1E01},
    {0x1E02, 0x1E03},
    {0x1E04, 0x1E05},
    {0x1E06, 0x1E07},
    {0x1E08, 0x1E09},
    {0x1E0A, 0x1E0B},
    {0x1E0C, 0x1E0D},
    {0x1E0E, 0x1E0F},
    {0x1E10, 0x1E11},
    {0x1E12, 0x1E13},
    {0x1E14, 0x1E15},
    {0x1E16, 0x1E17},
    {0x1E18, 0x1E19},
    {0x1E1A, 0x1E1B},
    {0x1E1C, 0x1E1D},
    {0x1E1E, 0x1E1F},
    {0x1E20, 0x1E21},
    {0x1E22, 0x1E23},
    {0x1E24, 0x1E25},
    {0x1E26, 0x1E27},
    {0x1E28, 0x1E29},
    {0x1E2A, 0x1E2B},
    {0x1E2C, 0x1E2D},
    {0x1E2E, 0x1E2F},
    {0x1E30, 0x1E31},
    {0x1E32, 0x1E33},
    {0x1E34, 0x1E35},
    {0x1E36, 0x1E37},
    {0x1E38, 0x1E39},
    {0x1E3A, 0x1E3B},
    {0x1E3C, 0x1E3D},
    {0x1E3E, 0x1E3F},
    {0x1E40, 0x1E41},
    {0x1E42, 0x1E43},
    {0x1E44, 0x1E45},
    {0x1E46, 0x1E47},
    {0x1E48, 0x1E49},
    {0x1E4A, 0x1E4B},
    {0x1E4C, 0x1E4D},
    {0x1E4E, 0x1E4F},
    {0x1E50, 0x1E51},
    {0x1E52, 0x1E53},
    {0x1E54, 0x1E55},
    {0x1E56, 0x1E57},
    {0x1E58, 0x1E59},
    {0x1E5A, 0x1E5B},
    {0x1E5C, 0x1E5D},
    {0x1E5E, 0x1E5F},
    {0x1E60, 0x1E61},
    {0x1E62, 0x1E63},
    {0x1E64, 0x1E65},
    {0x1E66, 0x1E67},
    {0x1E68, 0x1E69},
    {0x1E6A, 0x1E6B},
    {0x1E6C, 0x1E6D},
    {0x1E6E, 0x1E6F},
    {0x1E70, 0x1E71},
    {0x1E72, 0x1E73},
    {0x1E74, 0x1E75},
    {0x1E76, 0x1E77},
    {0x1E78, 0x1E79},
    {0x1E7A, 0x1E7B},
    {0x1E7C, 0x1E7D},
    {0x1E7E, 0x1E7F},
    {0x1E80, 0x1E81},
    {0x1E82, 0x1E83},
    {0x1E84, 0x1E85},
    {0x1E86, 0x1E87},
    {0x1E88, 0x1E89},
    {0x1E8A, 0x1E8B},
    {0x1E8C, 0x1E8D},
    {0x1E8E, 0x1E8F},
    {0x1E90, 0x1E91},
    {0x1E92, 0x1E93},
    {0x1E94, 0x1E95},
    {0x1E9E, 0x00DF},
    {0x1EA0, 0x1EA1},
    {0x1EA2, 0x1EA3},
    {0x1EA4, 0x1EA5},
    {0x1EA6, 0x1EA7},
    {0x1EA8, 0x1EA9},
    {0x1EAA, 0x1EAB},
    {0x1EAC, 0x1EAD},
    {0x1EAE, 0x1EAF},
    {0x1EB0, 0x1EB1},
    {0x1EB2, 0x1EB3},
    {0x1EB4, 0x1EB5},
    {0x1EB6, 0x1EB7},
    {0x1EB8, 0x1EB9},
    {0x1EBA, 0x1EBB},
    {0x1EBC, 0x1EBD},
    {0x1EBE, 0x1EBF},
    {0x1EC0, 0x1EC1},
    {0x1EC2, 0x1EC3},
    {0x1EC4, 0x1EC5},
    {0x1EC6, 0x1EC7},
    {0x1EC8, 0x1EC9},
    {0x1ECA, 0x1ECB},
    {0x1ECC, 0x1ECD},
    {0x1ECE, 0x1ECF},
    {0x1ED0, 0x1ED1},
    {0x1ED2, 0x1ED3},
    {0x1ED4, 0x1ED5},
    {0x1ED6, 0x1ED7},
    {0x1ED8, 0x1ED9},
    {0x1EDA, 0x1EDB},
    {0x1EDC, 0x1EDD},
    {0x1EDE, 0x1EDF},
    {0x1EE0, 0x1EE1},
    {0x1EE2, 0x1EE3},
    {0x1EE4, 0x1EE5},
    {0x1EE6, 0x1EE7},
    {0x1EE8, 0x1EE9},
    {0x1EEA, 0x1EEB},
    {0x1EEC, 0x1EED},
    {0x1EEE, 0x1EEF},
    {0x1EF0, 0x1EF1},
    {0x1EF2, 0x1EF3},
    {0x1EF4, 0x1EF5},
    {0x1EF6, 0x1EF7},
    {0x1EF8, 0x1EF9},
    {0x1EFA, 0x1EFB},
    {0x1EFC, 0x1EFD},
    {0x1EFE, 0x1EFF},
    {0x1F08, 0x1F00},
    {0x1F09, 0x1F01},
    {0x1F0A, 0x1F02},
    {0x1F0B, 0x1F03},
    {0x1F0C, 0x1F04},
    {0x1F0D, 0x1F05},
    {0x1F0E, 0x1F06},
    {0x1F0F, 0x1F07},
    {0x1F18, 0x1F10},
    {0x1F19, 0x1F11},
    {0x1F1A, 0x1F12},
    {0x1F1B, 0x1F13},
    {0x1F1C, 0x1F14},
    {0x1F1D, 0x1F15},
    {0x1F28, 0x1F20},
    {0x1F29, 0x1F21},
    {0x1F2A, 0x1F22},
    {0x1F2B, 0x1F23},
    {0x1F2C, 0x1F24},
    {0x1F2D, 0x1F25},
    {0x1F2E, 0x1F26},
    {0x1F2F, 0x1F27},
    {0x1F38, 0x1F30},
    {0x1F39, 0x1F31},
    {0x1F3A, 0x1F32},
    {0x1F3B, 0x1F33},
    {0x1F3C, 0x1F34},
    {0x1F3D, 0x1F35},
    {0x1F3E, 0x1F36},
    {0x1F3F, 0x1F37},
    {0x1F48, 0x1F40},
    {0x1F49, 0x1F41},
    {0x1F4A, 0x1F42},
    {0x1F4B, 0x1F43},
    {0x1F4C, 0x1F44},
    {0x1F4D, 0x1F45},
    {0x1F59, 0x1F51},
    {0x1F5B, 0x1F53},
    {0x1F5D, 0x1F55},
    {0x1F5F, 0x1F57},
    {0x1F68, 0x1F60},
    {0x1F69, 0x1F61},
    {0x1F6A, 0x1F62},
    {0x1F6B, 0x1F63},
    {0x1F6C, 0x1F64},
    {0x1F6D, 0x1F65},
    {0x1F6E, 0x1F66},
    {0x1F6F, 0x1F67},
    {0x1F88, 0x1F80},
    {0x1F89, 0x1F81},
    {0x1F8A, 0x1F82},
    {0x1F8B, 0x1F83},
    {0x1F8C, 0x1F84},
    {0x1F8D, 0x1F85},
    {0x1F8E, 0x1F86},
    {0x1F8F, 0x1F87},
    {0x1F98, 0x1F90},
    {0x1F99, 0x1F91},
    {0x1F9A, 0x1F92},
    {0x1F9B, 0x1F93},
    {0x1F9C, 0x1F94},
    {0x1F9D, 0x1F95},
    {0x1F9E, 0x1F96},
    {0x1F9F, 0x1F97},
    {0x1FA8, 0x1FA0},
    {0x1FA9, 0x1FA1},
    {0x1FAA, 0x1FA2},
    {0x1FAB, 0x1FA3},
    {0x1FAC, 0x1FA4},
    {0x1FAD, 0x1FA5},
    {0x1FAE, 0x1FA6},
    {0x1FAF, 0x1FA7},
    {0x1FB8, 0x1FB0},
    {0x1FB9, 0x1FB1},
    {0x1FBA, 0x1F70},
    {0x1FBB, 0x1F71},
    {0x1FBC, 0x1FB3},
    {0x1FC8, 0x1F72},
    {0x1FC9, 0x1F73},
    {0x1FCA, 0x1F74},
    {0x1FCB, 0x1F75},
    {0x1FCC, 0x1FC3},
    {0x1FD8, 0x1FD0},
    {0x1FD9, 0x1FD1},
    {0x1FDA, 0x1F76},
    {0x1FDB, 0x1F77},
    {0x1FE8, 0x1FE0},
    {0x1FE9, 0x1FE1},
    {0x1FEA, 0x1F7A},
    {0x1FEB, 0x1F7B},
    {0x1FEC, 0x1FE5},
    {0x1FF8, 0x1F78},
    {0x1FF9, 0x1F79},
    {0x1FFA, 0x1F7C},
    {0x1FFB, 0x1F7D},
    {0x1FFC, 0x1FF3},
    {0x2126, 0x03C9},
    {0x212A, 0x006B},
    {0x212B, 0x00E5},
    {0x2132, 0x214E},
    {0x2160, 0x2170},
    {0x2161, 0x2171},
    {0x2162, 0x2172},
    {0x2163, 0x2173},
    {0x2164, 0x2174},
    {0x2165, 0x2175},
    {0x2166, 0x2176},
    {0x2167, 0x2177},
    {0x2168, 0x2178},
    {0x2169, 0x2179},
    {0x216A, 0x217A},
    {0x216B, 0x217B},
    {0x216C, 0x217C},
    {0x216D, 0x217D},
    {0x216E, 0x217E},
    {0x216F, 0x217F},
    {0x2183, 0x2184},
    {0x24B6, 0x24D0},
    {0x24B7, 0x24D1},
    {0x24B8, 0x24D2},
    {0x24B9, 0x24D3},
    {0x24BA, 0x24D4},
    {0x24BB, 0x24D5},
    {0x24BC, 0x24D6},
    {0x24BD, 0x24D7},
    {0x24BE, 0x24D8},
    {0x24BF, 0x24D9},
    {0x24C0, 0x24DA},
    {0x24C1, 0x24DB},
    {0x24C2, 0x24DC},
    {0x24C3, 0x24DD},
    {0x24C4, 0x24DE},
    {0x24C5, 0x24DF},
    {0x24C6, 0x24E0},
    {0x24C7, 0x24E1},
    {0x24C8, 0x24E2},
    {0x24C9, 0x24E3},
    {0x24CA, 0x24E4},
    {0x24CB, 0x24E5},
    {0x24CC, 0x24E6},
    {0x24CD, 0x24E7},
    {0x24CE, 0x24E8},
    {0x24CF, 0x24E9},
    {0x2C00, 0x2C30},
    {0x2C01, 0x2C31},
    {0x2C02, 0x2C32},
    {0x2C03, 0x2C33},
    {0x2C04, 0x2C34},
    {0x2C05, 0x2C35},
    {0x2C06, 0x2C36},
    {0x2C07, 0x2C37},
    {0x2C08, 0x2C38},
    {0x2C09, 0x2C39},
    {0x2C0A, 0x2C3A},
    {0x2C0B, 0x2C3B},
    {0x2C0C, 0x2C3C},
    {0x2C0D, 0x2C3D},
    {0x2C0E, 0x2C3E},
    {0x2C0F, 0x2C3F},
    {0x2C10, 0x2C40},
    {0x2C11, 0x2C41},
    {0x2C12, 0x2C42},
    {0x2C13, 0x2C43},
    {0x2C14, 0x2C44},
    {0x2C15, 0x2C45},
    {0x2C16, 0x2C46},
    {0x2C17, 0x2C47},
    {0x2C18, 0x2C48},
    {0x2C19, 0x2C49},
    {0x2C1A, 0x2C4A},
    {0x2C1B, 0x2C4B},
    {0x2C1C, 0x2C4C},
    {0x2C1D, 0x2C4D},
    {0x2C1E, 0x2C4E},
    {0x2C1F, 0x2C4F},
    {0x2C20, 0x2C50},
    {0x2C21, 0x2C51},
    {0x2C22, 0x2C52},
    {0x2C23, 0x2C53},
    {0x2C24, 0x2C54},
    {0x2C25, 0x2C55},
    {0x2C26, 0x2C56},
    {0x2C27, 0x2C57},
    {0x2C28, 0x2C58},
    {0x2C29, 0x2C59},
    {0x2C2A, 0x2C5A},
    {0x2C2B, 0x2C5B},
    {0x2C2C, 0x2C5C},
    {0x2C2D, 0x2C5D},
    {0x2C2E, 0x2C5E},
    {0x2C60, 0x2C61},
    {0x2C62, 0x026B},
    {0x2C63, 0x1D7D},
    {0x2C64, 0x027D},
    {0x2C67, 0x2C68},
    {0x2C69, 0x2C6A},
    {0x2C6B, 0x2C6C},
    {0x2C6D, 0x0251},
    {0x2C6E, 0x0271},
    {0x2C6F, 0x0250},
    {0x2C70, 0x0252},
    {0x2C72, 0x2C73},
    {0x2C75, 0x2C76},
    {0x2C7E, 0x023F},
    {0x2C7F, 0x0240},
    {0x2C80, 0x2C81},
    {0x2C82, 0x2C83},
    {0x2C84, 0x2C85},
    {0x2C86, 0x2C87},
    {0x2C88, 0x2C89},
    {0x2C8A, 0x2C8B},
    {0x2C8C, 0x2C8D},
    {0x2C8E, 0x2C8F},
    {0x2C90, 0x2C91},
    {0x2C92, 0x2C93},
    {0x2C94, 0x2C95},
    {0x2C96, 0x2C97},
    {0x2C98, 0x2C99},
    {0x2C9A, 0x2C9B},
    {0x2C9C, 0x2C9D},
    {0x2C9E, 0x2C9F},
    {0x2CA0, 0x2CA1},
    {0x2CA2, 0x2CA3},
    {0x2CA4, 0x2CA5},
    {0x2CA6, 0x2CA7},
    {0x2CA8, 0x2CA9},
    {0x2CAA, 0x2CAB},
    {0x2CAC, 0x2CAD},
    {0x2CAE, 0x2CAF},
    {0x2CB0, 0x2CB1},
    {0x2CB2, 0x2CB3},
    {0x2CB4, 0x2CB5},
    {0x2CB6, 0x2CB7},
    {0x2CB8, 0x2CB9},
    {0x2CBA, 0x2CBB},
    {0x2CBC, 0x2CBD},
    {0x2CBE, 0x2CBF},
    {0x2CC0, 0x2CC1},
    {0x2CC2, 0x2CC3},
    {0x2CC4, 0x2CC5},
    {0x2CC6, 0x2CC7},
    {0x2CC8, 0x2CC9},
    {0x2CCA, 0x2CCB},
    {0x2CCC, 0x2CCD},
    {0x2CCE, 0x2CCF},
    {0x2CD0, 0x2CD1},
    {0x2CD2, 0x2CD3},
    {0x2CD4, 0x2CD5},
    {0x2CD6, 0x2CD7},
    {0x2CD8, 0x2CD9},
    {0x2CDA, 0x2CDB},
    {0x2CDC, 0x2CDD},
    {0x2CDE, 0x2CDF},
    {0x2CE0, 0x2CE1},
    {0x2CE2, 0x2CE3},
    {0x2CEB, 0x2CEC},
    {0x2CED, 0x2CEE},
    {0x2CF2, 0x2CF3},
    {0xA640, 0xA641},
    {0xA642, 0xA643},
    {0xA644, 0xA645},
    {0xA646, 0xA647},
    {0xA648, 0xA649},
    {0xA64A, 0xA64B},
    {0xA64C, 0xA64D},
    {0xA64E, 0xA64F},
    {0xA650, 0xA651},
    {0xA652, 0xA653},
    {0xA654, 0xA655},
    {0xA656, 0xA657},
    {0xA658, 0xA659},
    {0xA65A, 0xA65B},
    {0xA65C, 0xA65D},
    {0xA65E, 0xA65F},
    {0xA660, 0xA661},
    {0xA662, 0xA663},
    {0xA664, 0xA665},
    {0xA666, 0xA667},
    {0xA668, 0xA669},
    {0xA66A, 0xA66B},
    {0xA66C, 0xA66D},
    {0xA680, 0xA681},
    {0xA682, 0xA683},
    {0xA684, 0xA685},
    {0xA686, 0xA687},
    {0xA688, 0xA689},
    {0xA68A, 0xA68B},
    {0xA68C, 0xA68D},
    {0xA68E, 0xA68F},
    {0xA690, 0xA691},
    {0xA692, 0xA693},
    {0xA694, 0xA695},
    {0xA696, 0xA697},
    {0xA698, 0xA699},
    {0xA69A, 0xA69B},
    {0xA722, 0xA723},
    {0xA724, 0xA725},
    {0xA726, 0xA727},
    {0xA728, 0xA729},
    {0xA72A, 0xA72B},
    {0xA72C, 0xA72D},
    {0xA72E, 0xA72F},
    {0xA732, 0xA733},
    {0xA734, 0xA735},
    {0xA736, 0xA737},
    {0xA738, 0xA739},
    {0xA73A, 0xA73B},
    {0xA73C, 0xA73D},
    {0xA73E, 0xA73F},
    {0xA740, 0xA741},
    {0xA742, 0xA743},
    {0xA744, 0xA745},
    {0xA746, 0xA747},
    {0xA748, 0xA749},
    {0xA74A, 0xA74B},
    {0xA74C, 0xA74D},
    {0xA74E, 0xA74F},
    {0xA750, 0xA751},
    {0xA752, 0xA753},
    {0xA754, 0xA755},
    {0xA756, 0xA757},
    {0xA758, 0xA759},
    {0xA75A, 0xA75B},
    {0xA75C, 0xA75D},
    {0xA75E, 0xA75F},
    {0xA760, 0xA761},
    {0xA762, 0xA763},
    {0xA764, 0xA765},
    {0xA766, 0xA767},
    {0xA768, 0xA769},
    {0xA76A, 0xA76B},
    {0xA76C, 0xA76D},
    {0xA76E, 0xA76F},
    {0xA779, 0xA77A},
    {0xA77B, 0xA77C},
    {0xA77D, 0x1D79},
    {0xA77E, 0xA77F},
    {0xA780, 0xA781},
    {0xA782, 0xA783},
    {0xA784, 0xA785},
    {0xA786, 0xA787},
    {0xA78B, 0xA78C},
    {0xA78D, 0x0265},
    {0xA790, 0xA791},
    {0xA792, 0xA793},
    {0xA796, 0xA797},
    {0xA798, 0xA799},
    {0xA79A, 0xA79B},
    {0xA79C, 0xA79D},
    {0xA79E, 0xA79F},
    {0xA7A0, 0xA7A1},
    {0xA7A2, 0xA7A3},
    {0xA7A4, 0xA7A5},
    {0xA7A6, 0xA7A7},
    {0xA7A8, 0xA7A9},
    {0xA7AA, 0x0266},
    {0xA7AB, 0x025C},
    {0xA7AC, 0x0261},
    {0xA7AD, 0x026C},
    {0xA7AE, 0x026A},
    {0xA7B0, 0x029E},
    {0xA7B1, 0x0287},
    {0xA7B2, 0x029D},
    {0xA7B3, 0xAB53},
    {0xA7B4, 0xA7B5},
    {0xA7B6, 0xA7B7},
    {0xA7B8, 0xA7B9},
    {0xA7BA, 0xA7BB},
    {0xA7BC, 0xA7BD},
    {0xA7BE, 0xA7BF},
    {0xA7C2, 0xA7C3},
    {0xA7C4, 0xA794},
    {0xA7C5, 0x0282},
    {0xA7C6, 0x1D8E},
    {0xA7C7, 0xA7C8},
    {0xA7C9, 0xA7CA},
    {0xA7F5, 0xA7F6},
    {0xFF21, 0xFF41},
    {0xFF22, 0xFF42},
    {0xFF23, 0xFF43},
    {0xFF24, 0xFF44},
    {0xFF25, 0xFF45},
    {0xFF26, 0xFF46},
    {0xFF27, 0xFF47},
    {0xFF28, 0xFF48},
    {0xFF29, 0xFF49},
    {0xFF2A, 0xFF4A},
    {0xFF2B, 0xFF4B},
    {0xFF2C, 0xFF4C},
    {0xFF2D, 0xFF4D},
    {0xFF2E, 0xFF4E},
    {0xFF2F, 0xFF4F},
    {0xFF30, 0xFF50},
    {0xFF31, 0xFF51},
    {0xFF32, 0xFF52},
    {0xFF33, 0xFF53},
    {0xFF34, 0xFF54},
    {0xFF35, 0xFF55},
    {0xFF36, 0xFF56},
    {0xFF37, 0xFF57},
    {0xFF38, 0xFF58},
    {0xFF39, 0xFF59},
    {0xFF3A, 0xFF5A},
    {0x10400, 0x10428},
    {0x10401, 0x10429},
    {0x10402, 0x1042A},
    {0x10403, 0x1042B},
    {0x10404, 0x1042C},
    {0x10405, 0x1042D},
    {0x10406, 0x1042E},
    {0x10407, 0x1042F},
    {0x10408, 0x10430},
    {0x10409, 0x10431},
    {0x1040A, 0x10432},
    {0x1040B, 0x10433},
    {0x1040C, 0x10434},
    {0x1040D, 0x10435},
    {0x1040E, 0x10436},
    {0x1040F, 0x10437},
    {0x10410, 0x10438},
    {0x10411, 0x10439},
    {0x10412, 0x1043A},
    {0x10413, 0x1043B},
    {0x10414, 0x1043C},
    {0x10415, 0x1043D},
    {0x10416, 0x1043E},
    {0x10417, 0x1043F},
    {0x10418, 0x10440},
    {0x10419, 0x10441},
    {0x1041A, 0x10442},
    {0x1041B, 0x10443},
    {0x1041C, 0x10444},
    {0x1041D, 0x10445},
    {0x1041E, 0x10446},
    {0x1041F, 0x10447},
    {0x10420, 0x10448},
    {0x10421, 0x10449},
    {0x10422, 0x1044A},
    {0x10423, 0x1044B},
    {0x10424, 0x1044C},
    {0x10425, 0x1044D},
    {0x10426, 0x1044E},
    {0x10427, 0x1044F},
    {0x104B0, 0x104D8},
    {0x104B1, 0x104D9},
    {0x104B2, 0x104DA},
    {0x104B3, 0x104DB},
    {0x104B4, 0x104DC},
    {0x104B5, 0x104DD},
    {0x104B6, 0x104DE},
    {0x104B7, 0x104DF},
    {0x104B8, 0x104E0},
    {0x104B9, 0x104E1},
    {0x104BA, 0x104E2},
    {0x104BB, 0x104E3},
    {0x104BC, 0x104E4},
    {0x104BD, 0x104E5},
    {0x104BE, 0x104E6},
    {0x104BF, 0x104E7},
    {0x104C0, 0x104E8},
    {0x104C1, 0x104E9},
    {0x104C2, 0x104EA},
    {0x104C3, 0x104EB},
    {0x104C4, 0x104EC},
    {0x104C5, 0x104ED},
    {0x104C6, 0x104EE},
    {0x104C7, 0x104EF},
    {0x104C8, 0x104F0},
    {0x104C9, 0x104F1},
    {0x104CA, 0x104F2},
    {0x104CB, 0x104F3},
    {0x104CC, 0x104F4},
    {0x104CD, 0x104F5},
    {0x104CE, 0x104F6},
    {0x104CF, 0x104F7},
    {0x104D0, 0x104F8},
    {0x104D1, 0x104F9},
    {0x104D2, 0x104FA},
    {0x104D3, 0x104FB},
    {0x10C80, 0x10CC0},
    {0x10C81, 0x10CC1},
    {0x10C82, 0x10CC2},
    {0x10C83, 0x10CC3},
    {0x10C84, 0x10CC4},
    {0x10C85, 0x10CC5},
    {0x10C86, 0x10CC6},
    {0x10C87, 0x10CC7},
    {0x10C88, 0x10CC8},
    {0x10C89, 0x10CC9},
    {0x10C8A, 0x10CCA},
    {0x10C8B, 0x10CCB},
    {0x10C8C, 0x10CCC},
    {0x10C8D, 0x10CCD},
    {0x10C8E, 0x10CCE},
    {0x10C8F, 0x10CCF},
    {0x10C90, 0x10CD0},
    {0x10C91, 0x10CD1},
    {0x10C92, 0x10CD2},
    {0x10C93, 0x10CD3},
    {0x10C94, 0x10CD4},
    {0x10C95, 0x10CD5},
    {0x10C96, 0x10CD6},
    {0x10C97, 0x10CD7},
    {0x10C98, 0x10CD8},
    {0x10C99, 0x10CD9},
    {0x10C9A, 0x10CDA},
    {0x10C9B, 0x10CDB},
    {0x10C9C, 0x10CDC},
    {0x10C9D, 0x10CDD},
    {0x10C9E, 0x10CDE},
    {0x10C9F, 0x10CDF},
    {0x10CA0, 0x10CE0},
    {0x10CA1, 0x10CE1},
    {0x10CA2, 0x10CE2},
    {0x10CA3, 0x10CE3},
    {0x10CA4, 0x10CE4},
    {0x10CA5, 0x10CE5},
    {0x10CA6, 0x10CE6},
    {0x10CA7, 0x10CE7},
    {0x10CA8, 0x10CE8},
    {0x10CA9, 0x10CE9},
    {0x10CAA, 0x10CEA},
    {0x10CAB, 0x10CEB},
    {0x10CAC, 0x10CEC},
    {0x10CAD, 0x10CED},
    {0x10CAE, 0x10CEE},
    {0x10CAF, 0x10CEF},
    {0x10CB0, 0x10CF0},
    {0x10CB1, 0x10CF1},
    {0x10CB2, 0x10CF2},
    {0x118A0, 0x118C0},
    {0x118A1, 0x118C1},
    {0x118A2, 0x118C2},
    {0x118A3, 0x118C3},
    {0x118A4, 0x118C4},
    {0x118A5, 0x118C5},
    {0x118A6, 0x118C6},
    {0x118A7, 0x118C7},
    {0x118A8, 0x118C8},
    {0x118A9, 0x118C9},
    {0x118AA, 0x118CA},
    {0x118AB, 0x118CB},
    {0x118AC, 0x118CC},
    {0x118AD, 0x118CD},
    {0x118AE, 0x118CE},
    {0x118AF, 0x118CF},
    {0x118B0, 0x118D0},
    {0x118B1, 0x118D1},
    {0x118B2, 0x118D2},
    {0x118B3, 0x118D3},
    {0x118B4, 0x118D4},
    {0x118B5, 0x118D5},
    {0x118B6, 0x118D6},
    {0x118B7, 0x118D7},
    {0x118B8, 0x118D8},
    {0x118B9, 0x118D9},
    {0x118BA, 0x118DA},
    {0x118BB, 0x118DB},
    {0x118BC, 0x118DC},
    {0x118BD, 0x118DD},
    {0x118BE, 0x118DE},
    {0x118BF, 0x118DF},
    {0x16E40, 0x16E60},
    {0x16E41, 0x16E61},
    {0x16E42, 0x16E62},
    {0x16E43, 0x16E63},
    {0x16E44, 0x16E64},
    {0x16E45, 0x16E65},
    {0x16E46, 0x16E66},
    {0x16E47, 0x16E67},
    {0x16E48, 0x16E68},
    {0x16E49, 0x16E69},
    {0x16E4A, 0x16E6A},
    {0x16E4B, 0x16E6B},
    {0x16E4C, 0x16E6C},
    {0x16E4D, 0x16E6D},
    {0x16E4E, 0x16E6E},
    {0x16E4F, 0x16E6F},
    {0x16E50, 0x16E70},
    {0x16E51, 0x16E71},
    {0x16E52, 0x16E72},
    {0x16E53, 0x16E73},
    {0x16E54, 0x16E74},
    {0x16E55, 0x16E75},
    {0x16E56, 0x16E76},
    {0x16E57, 0x16E77},
    {0x16E58, 0x16E78},
    {0x16E59, 0x16E79},
    {0x16E5A, 0x16E7A},
    {0x16E5B, 0x16E7B},
    {0x16E5C, 0x16E7C},
    {0x16E5D, 0x16E7D},
    {0x16E5E, 0x16E7E},
    {0x16E5F, 0x16E7F},
    {0x1E900, 0x1E922},
    {0x1E901, 0x1E923},
    {0x1E902, 0x1E924},
    {0x1E903, 0x1E925},
    {0x1E904, 0x1E926},
    {0x1E905, 0x1E927},
    {0x1E906, 0x1E928},
    {0x1E907, 0x1E929},
    {0x1E908, 0x1E92A},
    {0x1E909, 0x1E92B},
    {0x1E90A, 0x1E92C},
    {0x1E90B, 0x1E92D},
    {0x1E90C, 0x1E92E},
    {0x1E90D, 0x1E92F},
    {0x1E90E, 0x1E930},
    {0x1E90F, 0x1E931},
    {0x1E910, 0x1E932},
    {0x1E911, 0x1E933},
    {0x1E912, 0x1E934},
    {0x1E913, 0x1E935},
    {0x1E914, 0x1E936},
    {0x1E915, 0x1E937},
    {0x1E916, 0x1E938},
    {0x1E917, 0x1E939},
    {0x1E918, 0x1E93A},
    {0x1E919, 0x1E93B},
    {0x1E91A, 0x1E93C},
    {0x1E91B, 0x1E93D},
    {0x1E91C, 0x1E93E},
    {0x1E91D, 0x1E93F},
    {0x1E91E, 0x1E940},
    {0x1E91F, 0x1E941},
    {0x1E920, 0x1E942},
    {0x1E921, 0x1E943},
}};

}  // namespace emojilab::unicode::data
