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

// Paired synthetic corpora with known ground truth.
//
// Each post either carries one emoji type (repeated 1..max_repeat times) or
// none. An emoji post picks its emoji by frequency weight and then its label
// with probability theta_e, so theta_e is the true positive share of that
// emoji. Emoji-free posts are positive with probability `pos_share`.
//
// Text is a bag of `words_per_post` words. Each word is a sentiment word of
// the post's label with probability `text_signal`, otherwise a neutral word.
// Word lists are built per community; the first round(overlap * size)
// entries of every list are shared by both communities.
//
// Spec file (JSON):
//   {"seed": 1, "vocab_overlap": 0.0, "words_per_post": 8,
//    "a": {"name": "alpha", "n_posts": 8000, "emoji_rate": 0.8,
//          "pos_share": 0.5, "text_signal": 0.6, "text_vocab": 300,
//          "max_repeat": 2, "lang": "en", "start": "2024-01-01T00:00:00Z",
//          "emojis": {"🚀": {"weight": 3, "theta": 0.8}, ...}},
//    "b": {...}}

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "emojilab/emoji/emoji.hpp"
#include "emojilab/error.hpp"
#include "emojilab/ingest/jsonl.hpp"
#include "emojilab/ingest/post.hpp"
#include "emojilab/rng.hpp"

namespace emojilab::synth {

struct EmojiParams {
  double weight = 1;
  double theta = 0.5;
};

struct Community {
  std::string name = "a";
  std::size_t n_posts = 1000;
  double emoji_rate = 0.8;
  double pos_share = 0.5;
  double text_signal = 0.6;
  std::size_t text_vocab = 300;  // sentiment words per class and neutral words
  int max_repeat = 1;
  std::string lang = "en";
  std::string start = "2024-01-01T00:00:00Z";
  std::map<std::string, EmojiParams> emojis;
};

struct Spec {
  std::uint64_t seed = 0;
  double vocab_overlap = 0;
  int words_per_post = 8;
  Community a;
  Community b;

  void validate() const {
    auto prob = [](double v, const std::string& what) {
      if (!(v >= 0 && v <= 1)) {
        throw InputError(what + " must lie in [0, 1], got " + std::to_string(v));
      }
    };
    prob(vocab_overlap, "vocab_overlap");
    if (words_per_post < 0) throw InputError("words_per_post must be non-negative");
    for (const Community* c : {&a, &b}) {
      const std::string at = "community '" + c->name + "': ";
      prob(c->emoji_rate, at + "emoji_rate");
      prob(c->pos_share, at + "pos_share");
      prob(c->text_signal, at + "text_signal");
      if (c->n_posts == 0) throw InputError(at + "n_posts must be positive");
      if (c->max_repeat < 1) throw InputError(at + "max_repeat must be at least 1");
      if (c->text_vocab == 0) throw InputError(at + "text_vocab must be positive");
      if (!parse_rfc3339(c->start)) throw InputError(at + "bad start timestamp");
      if (c->emoji_rate > 0 && c->emojis.empty()) {
        throw InputError(at + "emoji_rate > 0 but no emojis given");
      }
      double total = 0;
      for (const auto& [e, p] : c->emojis) {
        if (!emoji::is_emoji_cluster(e)) throw InputError(at + "'" + e + "' is not an emoji");
        prob(p.theta, at + "theta of " + e);
        if (!(p.weight >= 0)) throw InputError(at + "weight of " + e + " is negative");
        total += p.weight;
      }
      if (c->emoji_rate > 0 && !(total > 0)) {
        throw InputError(at + "emoji weights sum to zero");
      }
    }
    if (a.name == b.name) throw InputError("communities need distinct names");
  }
};

inline EmojiParams parse_emoji_params(const nlohmann::json& j) {
  EmojiParams p;
  if (j.is_number()) {
    p.theta = j.get<double>();
    return p;
  }
  p.weight = j.value("weight", 1.0);
  p.theta = j.value("theta", 0.5);
  return p;
}

inline Community parse_community(const nlohmann::json& j, const std::string& fallback) {
  if (!j.is_object()) throw InputError("community '" + fallback + "' must be an object");
  Community c;
  c.name = j.value("name", fallback);
  c.n_posts = j.value("n_posts", c.n_posts);
  c.emoji_rate = j.value("emoji_rate", c.emoji_rate);
  c.pos_share = j.value("pos_share", c.pos_share);
  c.text_signal = j.value("text_signal", c.text_signal);
  c.text_vocab = j.value("text_vocab", c.text_vocab);
  c.max_repeat = j.value("max_repeat", c.max_repeat);
  c.lang = j.value("lang", c.lang);
  c.start = j.value("start", c.start);
  if (j.contains("emojis")) {
    for (const auto& [e, v] : j["emojis"].items()) c.emojis[e] = parse_emoji_params(v);
  }
  return c;
}

inline Spec parse_spec(const nlohmann::json& j) {
  Spec s;
  try {
    s.seed = j.value("seed", std::uint64_t{0});
    s.vocab_overlap = j.value("vocab_overlap", 0.0);
    s.words_per_post = j.value("words_per_post", 8);
    if (!j.contains("a") || !j.contains("b")) {
      throw InputError("synthetic spec needs communities \"a\" and \"b\"");
    }
    s.a = parse_community(j["a"], "a");
    s.b = parse_community(j["b"], "b");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("synthetic spec: ") + e.what());
  }
  s.validate();
  return s;
}

inline Spec read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return parse_spec(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace detail {

struct WordLists {
  std::vector<std::string> pos, neg, neutral;
};

inline WordLists word_lists(const Community& c, double overlap) {
  const auto shared = static_cast<std::size_t>(std::llround(overlap * c.text_vocab));
  WordLists w;
  auto fill = [&](std::vector<std::string>& out, const char* kind) {
    for (std::size_t i = 0; i < c.text_vocab; ++i) {
      const std::string owner = i < shared ? "shared" : c.name;
      out.push_back(owner + kind + std::to_string(i));
    }
  };
  fill(w.pos, "up");
  fill(w.neg, "down");
  fill(w.neutral, "word");
  return w;
}

inline std::vector<Post> generate_community(const Community& c, const Spec& spec,
                                            std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);
  const auto words = word_lists(c, spec.vocab_overlap);
  std::vector<std::pair<std::string, EmojiParams>> emojis(c.emojis.begin(), c.emojis.end());
  double total_w = 0;
  for (const auto& [_, p] : emojis) total_w += p.weight;
  const Timestamp start = *parse_rfc3339(c.start);

  std::vector<Post> out;
  out.reserve(c.n_posts);
  for (std::size_t i = 0; i < c.n_posts; ++i) {
    std::string emoji_part;
    bool positive;
    if (!emojis.empty() && rng.bernoulli(c.emoji_rate)) {
      double u = rng.uniform() * total_w;
      std::size_t k = 0;
      while (k + 1 < emojis.size() && u >= emojis[k].second.weight) {
        u -= emojis[k].second.weight;
        ++k;
      }
      positive = rng.bernoulli(emojis[k].second.theta);
      const auto reps = 1 + rng.below(static_cast<std::uint64_t>(c.max_repeat));
      for (std::uint64_t r = 0; r < reps; ++r) emoji_part += emojis[k].first;
    } else {
      positive = rng.bernoulli(c.pos_share);
    }
    std::string text;
    for (int w = 0; w < spec.words_per_post; ++w) {
      const auto& list = rng.bernoulli(c.text_signal)
                             ? (positive ? words.pos : words.neg)
                             : words.neutral;
      if (!text.empty()) text.push_back(' ');
      text += list[rng.below(list.size())];
    }
    if (!emoji_part.empty()) {
      if (!text.empty()) text.push_back(' ');
      text += emoji_part;
    }
    // One post per hour keeps timestamps distinct and spread over months.
    const Timestamp ts = start + std::chrono::hours(static_cast<long>(i));
    out.push_back(make_post(c.name + "-" + std::to_string(i), std::move(text),
                            positive ? Label::kPositive : Label::kNegative, c.lang, ts,
                            c.name));
  }
  return out;
}

}  // namespace detail

struct Pair {
  std::vector<Post> a;
  std::vector<Post> b;
};

/// Both corpora; each community draws from its own stream of `spec.seed`.
inline Pair generate(const Spec& spec) {
  spec.validate();
  Pair p;
  p.a = detail::generate_community(spec.a, spec, derive_seed(spec.seed, 1));
  p.b = detail::generate_community(spec.b, spec, derive_seed(spec.seed, 2));
  return p;
}

}  // namespace emojilab::synth
