#!/usr/bin/env python3
# Copyright 2026 The emojilab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates include/emojilab/unicode/unicode_data.hpp.

Property values come from the `regex` package (which bundles its own UCD
snapshot); case mappings come from the interpreter's str.lower().  The
versions are recorded in the generated header and must be bumped together
with kUnicodeDataVersion when the generator is re-run.

    python3 tools/gen_unicode_tables.py > include/emojilab/unicode/unicode_data.hpp
"""

import sys
import unicodedata

import regex

UNICODE_VERSION = "17.0.0"

GCB = ["Other", "CR", "LF", "Control", "Extend", "ZWJ", "Regional_Indicator",
       "Prepend", "SpacingMark", "L", "V", "T", "LV", "LVT"]
INCB = ["None", "Linker", "Consonant", "Extend"]
FLAGS = [
    ("kExtPict", r"\p{Extended_Pictographic}"),
    ("kEmoji", r"\p{Emoji}"),
    ("kEmojiPresentation", r"\p{Emoji_Presentation}"),
    ("kEmojiModifier", r"\p{Emoji_Modifier}"),
    ("kEmojiModifierBase", r"\p{Emoji_Modifier_Base}"),
    ("kEmojiComponent", r"\p{Emoji_Component}"),
    ("kWhiteSpace", r"\p{White_Space}"),
    ("kWord", r"\w"),
]


def classify():
    gcb_res = [(i, regex.compile(r"\p{Grapheme_Cluster_Break=%s}" % n))
               for i, n in enumerate(GCB) if n != "Other"]
    incb_res = [(i, regex.compile(r"\p{Indic_Conjunct_Break=%s}" % n))
                for i, n in enumerate(INCB) if n != "None"]
    flag_res = [(1 << i, regex.compile(p)) for i, (_, p) in enumerate(FLAGS)]
    packed = []
    for cp in range(0x110000):
        ch = chr(cp)
        g = 0
        for i, r in gcb_res:
            if r.match(ch):
                g = i
                break
        c = 0
        for i, r in incb_res:
            if r.match(ch):
                c = i
                break
        f = 0
        for bit, r in flag_res:
            if r.match(ch):
                f |= bit
        packed.append(g | (c << 4) | (f << 6))
    return packed


def runs(values):
    out = []
    start = 0
    for cp in range(1, len(values) + 1):
        if cp == len(values) or values[cp] != values[start]:
            if values[start] != 0:
                out.append((start, cp - 1, values[start]))
            start = cp
    return out


def lower_pairs():
    pairs = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = chr(cp).lower()
        if len(low) == 1 and ord(low) != cp:
            pairs.append((cp, ord(low)))
    # Simple (single code point) mapping for U+0130.
    pairs.append((0x130, 0x69))
    pairs.sort()
    table = dict(pairs)
    for src, dst in pairs:
        assert table.get(dst, dst) == dst, "lowercase mapping is not idempotent"
    return pairs


def main():
    prop_runs = runs(classify())
    lows = lower_pairs()
    w = sys.stdout.write
    w("// Copyright 2026 The emojilab Authors.\n//\n")
    w("// Licensed under the Apache License, Version 2.0 (the \"License\");\n")
    w("// you may not use this file except in compliance with the License.\n")
    w("// You may obtain a copy of the License at\n//\n")
    w("//     http://www.apache.org/licenses/LICENSE-2.0\n//\n")
    w("// Unless required by applicable law or agreed to in writing, software\n")
    w("// distributed under the License is distributed on an \"AS IS\" BASIS,\n")
    w("// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.\n")
    w("// See the License for the specific language governing permissions and\n")
    w("// limitations under the License.\n\n")
    w("// GENERATED by tools/gen_unicode_tables.py -- do not edit.\n")
    w("// regex %s, case data from Python unicodedata %s.\n\n"
      % (regex.__version__, unicodedata.unidata_version))
    w("#pragma once\n\n#include <array>\n#include <cstdint>\n\n")
    w("namespace emojilab::unicode::data {\n\n")
    w('inline constexpr const char* kUnicodeDataVersion = "%s";\n' % UNICODE_VERSION)
    w('inline constexpr const char* kCaseDataVersion = "%s";\n\n'
      % unicodedata.unidata_version)
    w("// Packed property word: bits 0-3 grapheme break class, bits 4-5 Indic\n")
    w("// conjunct break class, bits 6.. boolean flags.\n")
    w("enum GraphemeBreak : std::uint8_t {\n")
    for i, n in enumerate(GCB):
        w("  kGcb%s = %d,\n" % (n.replace("_", ""), i))
    w("};\n\nenum ConjunctBreak : std::uint8_t {\n")
    for i, n in enumerate(INCB):
        w("  kIncb%s = %d,\n" % (n, i))
    w("};\n\nenum PropertyFlag : std::uint32_t {\n")
    for i, (n, _) in enumerate(FLAGS):
        w("  %s = 1u << %d,\n" % (n, i + 6))
    w("};\n\n")
    w("struct PropertyRange {\n  char32_t lo;\n  char32_t hi;\n  std::uint32_t bits;\n};\n\n")
    w("inline constexpr std::array<PropertyRange, %d> kProperties{{\n" % len(prop_runs))
    for lo, hi, v in prop_runs:
        w("    {0x%04X, 0x%04X, 0x%X},\n" % (lo, hi, v))
    w("}};\n\n")
    w("struct CaseMapping {\n  char32_t from;\n  char32_t to;\n};\n\n")
    w("inline constexpr std::array<CaseMapping, %d> kLowercase{{\n" % len(lows))
    for a, b in lows:
        w("    {0x%04X, 0x%04X},\n" % (a, b))
    w("}};\n\n}  // namespace emojilab::unicode::data\n")


if __name__ == "__main__":
    main()
