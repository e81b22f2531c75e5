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

"""Freezes independent oracle outputs into tests/data/.

grapheme_oracle.json  random strings segmented by regex's \\X
emoji_fixture.json    hand-written emoji extraction cases, each checked
                      against a small reference extractor built on \\X

Run from the repository root:  python3 tests/oracles/gen_unicode_fixtures.py
"""

import json
import random

import regex

X = regex.compile(r"\X")
EMOJI = regex.compile(r"\p{Emoji}")

ALPHABET = [
    # ASCII, controls, white space
    "a", "B", "7", "#", "*", " ", "\t", "\r", "\n", "\x01", "!", "@",
    # emoji, modifiers, joiners, selectors, keycap
    "\U0001F680", "\U0001F525", "\U0001F44D", "\U0001F468", "\U0001F469",
    "\U0001F467", "❤", "✅", "©", "\U0001F3F3", "\U0001F308",
    "\U0001F3FB", "\U0001F3FD", "\U0001F3FF", "‍", "️", "︎",
    "⃣", "\U0001F1FA", "\U0001F1F8", "\U0001F1EF", "\U0001F3F4",
    "\U000E0067", "\U000E007F", "♀", "\U0001F9B0",
    # combining / spacing marks, prepend
    "́", "ः", "؀", "ำ",
    # Hangul jamo and syllables
    "ᄀ", "ᅡ", "ᆨ", "가", "각",
    # Devanagari conjunct pieces (InCB)
    "क", "्", "ष", "ि", "त",
    # CJK / fullwidth
    "日", "Ｂ", "　",
]


def clusters(s):
    return [len(c) for c in X.findall(s)]


def grapheme_cases(rng, n):
    out = []
    for _ in range(n):
        length = rng.randint(1, 12)
        s = "".join(rng.choice(ALPHABET) for _ in range(length))
        out.append({"cps": [ord(c) for c in s], "clusters": clusters(s)})
    return out


# --- reference emoji extractor ------------------------------------------

def is_keycap_base(c):
    return c in "0123456789#*"


def droppable(c):
    return 0x1F3FB <= ord(c) <= 0x1F3FF or c in "︎️"


def is_emoji_cluster(cl):
    if not cl:
        return False
    if is_keycap_base(cl[0]):
        return "⃣" in cl[1:]
    if not EMOJI.match(cl[0]):
        return False
    return any(not droppable(c) and c != "‍" for c in cl)


def canonical(cl):
    out = []
    for c in cl:
        if droppable(c):
            continue
        if c == "‍" and (not out or out[-1] == "‍"):
            continue
        out.append(c)
    while out and out[-1] == "‍":
        out.pop()
    return "".join(out)


def extract(text, literal):
    tokens = []
    for cl in X.findall(text):
        if not is_emoji_cluster(cl):
            continue
        parts = cl.split("‍") if literal else [cl]
        for p in parts:
            c = canonical(p)
            if c and is_emoji_cluster(c):
                tokens.append(c)
    return tokens


ZWJ = "‍"
VS16 = "️"
VS15 = "︎"

# (description, input, expected default tokens, expected literal tokens)
CASES = [
    ("plain rocket", "to the moon \U0001F680\U0001F680",
     ["\U0001F680", "\U0001F680"], None),
    ("no emoji", "buy the dip", [], None),
    ("empty", "", [], None),
    ("flag us", "\U0001F1FA\U0001F1F8 stocks", ["\U0001F1FA\U0001F1F8"], None),
    ("flag jp", "\U0001F1EF\U0001F1F5", ["\U0001F1EF\U0001F1F5"], None),
    ("two flags adjacent", "\U0001F1FA\U0001F1F8\U0001F1EF\U0001F1F5",
     ["\U0001F1FA\U0001F1F8", "\U0001F1EF\U0001F1F5"], None),
    ("three regional indicators", "\U0001F1FA\U0001F1F8\U0001F1EF",
     ["\U0001F1FA\U0001F1F8", "\U0001F1EF"], None),
    ("lone regional indicator", "x \U0001F1FA y", ["\U0001F1FA"], None),
    ("flag england tag sequence",
     "\U0001F3F4\U000E0067\U000E0062\U000E0065\U000E006E\U000E0067\U000E007F",
     ["\U0001F3F4\U000E0067\U000E0062\U000E0065\U000E006E\U000E0067\U000E007F"],
     None),
    ("rainbow flag zwj", "\U0001F3F3" + VS16 + ZWJ + "\U0001F308",
     ["\U0001F3F3" + ZWJ + "\U0001F308"], ["\U0001F3F3", "\U0001F308"]),
    ("family zwj", "\U0001F468" + ZWJ + "\U0001F469" + ZWJ + "\U0001F467",
     ["\U0001F468" + ZWJ + "\U0001F469" + ZWJ + "\U0001F467"],
     ["\U0001F468", "\U0001F469", "\U0001F467"]),
    ("family four", "\U0001F468" + ZWJ + "\U0001F469" + ZWJ + "\U0001F467" +
     ZWJ + "\U0001F466",
     ["\U0001F468" + ZWJ + "\U0001F469" + ZWJ + "\U0001F467" + ZWJ +
      "\U0001F466"],
     ["\U0001F468", "\U0001F469", "\U0001F467", "\U0001F466"]),
    ("couple heart", "\U0001F469" + ZWJ + "❤" + VS16 + ZWJ + "\U0001F468",
     ["\U0001F469" + ZWJ + "❤" + ZWJ + "\U0001F468"],
     ["\U0001F469", "❤", "\U0001F468"]),
    ("astronaut skin tone", "\U0001F469\U0001F3FD" + ZWJ + "\U0001F680",
     ["\U0001F469" + ZWJ + "\U0001F680"], ["\U0001F469", "\U0001F680"]),
    ("woman running", "\U0001F3C3" + ZWJ + "♀" + VS16,
     ["\U0001F3C3" + ZWJ + "♀"], ["\U0001F3C3", "♀"]),
    ("woman running toned", "\U0001F3C3\U0001F3FF" + ZWJ + "♀" + VS16,
     ["\U0001F3C3" + ZWJ + "♀"], ["\U0001F3C3", "♀"]),
    ("eye in speech bubble", "\U0001F441" + VS16 + ZWJ + "\U0001F5E8" + VS16,
     ["\U0001F441" + ZWJ + "\U0001F5E8"], ["\U0001F441", "\U0001F5E8"]),
    ("red hair component", "\U0001F468" + ZWJ + "\U0001F9B0",
     ["\U0001F468" + ZWJ + "\U0001F9B0"], ["\U0001F468", "\U0001F9B0"]),
    ("dangling zwj", "\U0001F680" + ZWJ + " go", ["\U0001F680"], None),
    ("zwj then letter", "\U0001F680" + ZWJ + "a", ["\U0001F680"], None),
    ("thumbs up medium", "\U0001F44D\U0001F3FD ok", ["\U0001F44D"], None),
    ("thumbs up dark", "\U0001F44D\U0001F3FF", ["\U0001F44D"], None),
    ("skin tone before check mark", "\U0001F44D\U0001F3FD ok ✅" + VS16,
     ["\U0001F44D", "✅"], None),
    ("waving hand tone", "\U0001F44B\U0001F3FC hi", ["\U0001F44B"], None),
    ("lone modifier", "a \U0001F3FD b", [], None),
    ("modifier after space start", "\U0001F3FB", [], None),
    ("two toned hands", "\U0001F44D\U0001F3FB\U0001F44D\U0001F3FF",
     ["\U0001F44D", "\U0001F44D"], None),
    ("heart vs16", "❤" + VS16, ["❤"], None),
    ("heart bare", "i ❤ btc", ["❤"], None),
    ("heart vs15", "❤" + VS15, ["❤"], None),
    ("check mark button vs16", "✅" + VS16, ["✅"], None),
    ("copyright vs16", "©" + VS16, ["©"], None),
    ("copyright bare", "© 2024", ["©"], None),
    ("double exclamation vs16", "‼" + VS16, ["‼"], None),
    ("umbrella vs15", "☔" + VS15, ["☔"], None),
    ("rocket vs15", "\U0001F680" + VS15, ["\U0001F680"], None),
    ("keycap one", "1" + VS16 + "⃣", ["1⃣"], None),
    ("keycap one no vs", "1⃣", ["1⃣"], None),
    ("keycap hash", "#" + VS16 + "⃣ trend", ["#⃣"], None),
    ("keycap star", "*" + VS16 + "⃣", ["*⃣"], None),
    ("bare digits", "buy 100 shares", [], None),
    ("digit with vs16 only", "1" + VS16, [], None),
    ("hash bare", "# not emoji", [], None),
    ("keycap ten", "\U0001F51F", ["\U0001F51F"], None),
    ("emoji adjacent to word", "moon\U0001F680", ["\U0001F680"], None),
    ("emoji between words", "up\U0001F4C8down\U0001F4C9",
     ["\U0001F4C8", "\U0001F4C9"], None),
    ("chart pair", "\U0001F4C8\U0001F4C9", ["\U0001F4C8", "\U0001F4C9"], None),
    ("money bag fire", "\U0001F4B0\U0001F525\U0001F680",
     ["\U0001F4B0", "\U0001F525", "\U0001F680"], None),
    ("gem stone hands", "\U0001F48E\U0001F64C\U0001F3FE",
     ["\U0001F48E", "\U0001F64C"], None),
    ("trademark", "acme™", ["™"], None),
    ("arrow right vs16", "➡" + VS16 + " next", ["➡"], None),
    ("unicode 15 emoji", "\U0001FAE8", ["\U0001FAE8"], None),
    ("unicode 16 emoji", "\U0001FAE9", ["\U0001FAE9"], None),
    ("combining mark on emoji", "\U0001F680́", ["\U0001F680́"], None),
    ("letter with accent", "café", [], None),
    ("cjk text with emoji", "日本\U0001F1EF\U0001F1F5",
     ["\U0001F1EF\U0001F1F5"], None),
    ("person tone zwj tone", "\U0001F9D1\U0001F3FB" + ZWJ + "\U0001F91D" + ZWJ +
     "\U0001F9D1\U0001F3FF",
     ["\U0001F9D1" + ZWJ + "\U0001F91D" + ZWJ + "\U0001F9D1"],
     ["\U0001F9D1", "\U0001F91D", "\U0001F9D1"]),
    ("emoji punctuation mix", "\U0001F680!!\U0001F680?",
     ["\U0001F680", "\U0001F680"], None),
    ("newline separated", "\U0001F525\n\U0001F525", ["\U0001F525", "\U0001F525"],
     None),
    ("crlf then emoji", "a\r\n\U0001F4B0", ["\U0001F4B0"], None),
]


def emoji_cases():
    out = []
    for desc, text, default, literal in CASES:
        literal = default if literal is None else literal
        got_d = extract(text, False)
        got_l = extract(text, True)
        assert got_d == default, (desc, got_d, default)
        assert got_l == literal, (desc, got_l, literal)
        out.append({"name": desc, "input": text, "default": default,
                    "literal": literal})
    return out


def main():
    rng = random.Random(20261018)
    with open("tests/data/grapheme_oracle.json", "w", encoding="utf-8") as f:
        json.dump({"generator": "regex " + regex.__version__,
                   "cases": grapheme_cases(rng, 3000)}, f)
    cases = emoji_cases()
    assert len(cases) == 60, len(cases)
    with open("tests/data/emoji_fixture.json", "w", encoding="utf-8") as f:
        json.dump({"cases": cases}, f, ensure_ascii=False, indent=1)


if __name__ == "__main__":
    main()
