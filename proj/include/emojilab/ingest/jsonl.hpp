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

// Corpus JSONL reader / writer.
//
// One post per line:
//   {"id": str, "text": str, "label": "pos"|"neg"|null, "lang": str,
//    "timestamp": RFC 3339 str (optional), "corpus": str (optional)}
// Unknown fields (e.g. "split") are ignored on input.

#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "emojilab/emoji/emoji.hpp"
#include "emojilab/error.hpp"
#include "emojilab/ingest/normalize.hpp"
#include "emojilab/ingest/post.hpp"

namespace emojilab {

struct ParseOptions {
  /// Throw on the first bad record instead of collecting warnings.
  bool strict = true;
  /// Corpus tag for records without a "corpus" field.
  std::string default_corpus;
  emoji::ZwjMode zwj_mode = emoji::ZwjMode::kSequence;
};

struct Diagnostic {
  std::size_t line = 0;
  std::string message;
};

struct ParseResult {
  std::vector<Post> posts;
  std::vector<Diagnostic> warnings;
};

/// Builds a Post from raw fields, filling `text` and `emojis`.
inline Post make_post(std::string id, std::string raw_text, Label label,
                      std::string lang, std::optional<Timestamp> timestamp,
                      std::string corpus,
                      emoji::ZwjMode mode = emoji::ZwjMode::kSequence) {
  Post p;
  p.id = std::move(id);
  p.raw_text = std::move(raw_text);
  p.text = normalize_text(p.raw_text);
  p.label = label;
  p.lang = std::move(lang);
  p.timestamp = timestamp;
  p.corpus = std::move(corpus);
  p.emojis = emoji::extract_emoji_strings(p.text, mode);
  return p;
}

namespace detail {

inline Label parse_label(const nlohmann::json& v) {
  if (v.is_null()) return Label::kUnlabeled;
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s == "pos") return Label::kPositive;
    if (s == "neg") return Label::kNegative;
  }
  throw InputError("\"label\" must be \"pos\", \"neg\" or null, got " +
                   v.dump());
}

inline std::string require_string(const nlohmann::json& record,
                                  const char* field) {
  auto it = record.find(field);
  if (it == record.end()) {
    throw InputError(std::string("missing \"") + field + "\" field");
  }
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  throw InputError(std::string("\"") + field + "\" must be a string");
}

inline Post parse_record(const std::string& line, const ParseOptions& opts) {
  nlohmann::json record;
  try {
    record = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!record.is_object()) throw InputError("record is not a JSON object");
  std::string id = require_string(record, "id");
  if (id.empty()) throw InputError("empty \"id\"");
  std::string text = require_string(record, "text");
  Label label = Label::kUnlabeled;
  if (auto it = record.find("label"); it != record.end()) {
    label = parse_label(*it);
  }
  std::string lang = "und";
  if (auto it = record.find("lang"); it != record.end() && !it->is_null()) {
    if (!it->is_string()) throw InputError("\"lang\" must be a string");
    lang = it->get<std::string>();
  }
  std::optional<Timestamp> ts;
  if (auto it = record.find("timestamp"); it != record.end() && !it->is_null()) {
    if (!it->is_string()) throw InputError("\"timestamp\" must be a string");
    ts = parse_rfc3339(it->get_ref<const std::string&>());
    if (!ts) {
      throw InputError("\"timestamp\" is not RFC 3339: " +
                       it->get<std::string>());
    }
  }
  std::string corpus = opts.default_corpus;
  if (auto it = record.find("corpus"); it != record.end() && !it->is_null()) {
    if (!it->is_string()) throw InputError("\"corpus\" must be a string");
    corpus = it->get<std::string>();
  }
  return make_post(std::move(id), std::move(text), label, std::move(lang), ts,
                   std::move(corpus), opts.zwj_mode);
}

}  // namespace detail

/// Reads posts from a JSONL stream, in input order. Blank lines are skipped.
/// Bad records and duplicate ids (within one corpus) raise InputError in
/// strict mode and become warnings otherwise.
inline ParseResult parse_posts(std::istream& in, const ParseOptions& opts = {}) {
  ParseResult result;
  std::unordered_map<std::string, std::size_t> first_line;  // corpus\0id
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](std::string message) {
    message = "line " + std::to_string(line_no) + ": " + message;
    if (opts.strict) throw InputError(message);
    result.warnings.push_back({line_no, std::move(message)});
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Post post;
    try {
      post = detail::parse_record(line, opts);
    } catch (const InputError& e) {
      fail(e.what());
      continue;
    }
    const std::string key = post.corpus + '\0' + post.id;
    auto [it, inserted] = first_line.emplace(key, line_no);
    if (!inserted) {
      fail("duplicate id '" + post.id + "' (first seen on line " +
           std::to_string(it->second) + ", again on line " +
           std::to_string(line_no) + ")");
      continue;
    }
    result.posts.push_back(std::move(post));
  }
  return result;
}

inline ParseResult read_posts_file(const std::string& path,
                                   ParseOptions opts = {}) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  if (opts.default_corpus.empty()) {
    auto slash = path.find_last_of('/');
    std::string stem = path.substr(slash == std::string::npos ? 0 : slash + 1);
    if (auto dot = stem.find('.'); dot != std::string::npos) stem.resize(dot);
    opts.default_corpus = stem;
  }
  try {
    return parse_posts(in, opts);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// JSON record for one post (raw text, so re-parsing reproduces the Post).
inline nlohmann::ordered_json to_json(const Post& post,
                                      const std::string& split = {}) {
  nlohmann::ordered_json j;
  j["id"] = post.id;
  j["text"] = post.raw_text;
  if (post.labeled()) {
    j["label"] = to_string(post.label);
  } else {
    j["label"] = nullptr;
  }
  j["lang"] = post.lang;
  if (post.timestamp) j["timestamp"] = format_rfc3339(*post.timestamp);
  j["corpus"] = post.corpus;
  if (!split.empty()) j["split"] = split;
  return j;
}

inline void write_posts(std::ostream& out, const std::vector<Post>& posts,
                        const std::string& split = {}) {
  for (const auto& p : posts) {
    out << to_json(p, split).dump(-1, ' ', false,
                                  nlohmann::json::error_handler_t::replace)
        << '\n';
  }
}

}  // namespace emojilab
