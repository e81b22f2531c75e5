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

// Tokenizer and TF-IDF featurizer.
//
// Tokens are white-space separated words, except that every emoji cluster
// is a token of its own (in canonical form) even when glued to a word.
// N-grams join tokens with a single space. Weights are raw counts times
// idf = ln((1 + N) / (1 + df)) + 1, and each document vector is scaled to
// unit L2 norm.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emojilab/emoji/emoji.hpp"
#include "emojilab/error.hpp"
#include "emojilab/unicode/grapheme.hpp"
#include "emojilab/unicode/properties.hpp"

namespace emojilab {

inline std::vector<std::string> tokenize(std::string_view text,
                                         emoji::ZwjMode mode = emoji::ZwjMode::kSequence) {
  std::vector<std::string> tokens;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) tokens.push_back(std::move(word));
    word.clear();
  };
  for (const auto& g : unicode::segment_graphemes(text)) {
    if (emoji::is_emoji_cluster(g.codepoints)) {
      flush();
      for (auto& e : emoji::normalize_emoji(g.view(text), mode)) {
        tokens.push_back(std::move(e));
      }
    } else if (unicode::is_white_space(g.codepoints.front())) {
      flush();
    } else {
      word.append(g.view(text));
    }
  }
  flush();
  return tokens;
}

/// Compressed sparse rows.
struct SparseMatrix {
  std::size_t cols = 0;
  std::vector<std::size_t> indptr = {0};
  std::vector<std::uint32_t> indices;
  std::vector<double> values;

  std::size_t rows() const { return indptr.size() - 1; }

  void append_row(std::span<const std::pair<std::uint32_t, double>> entries) {
    for (const auto& [j, v] : entries) {
      indices.push_back(j);
      values.push_back(v);
    }
    indptr.push_back(indices.size());
  }

  double row_dot(std::size_t i, std::span<const double> w) const {
    double s = 0;
    for (std::size_t k = indptr[i]; k < indptr[i + 1]; ++k) s += values[k] * w[indices[k]];
    return s;
  }
};

struct TfidfOptions {
  int ngram_min = 1;
  int ngram_max = 2;
  emoji::ZwjMode zwj_mode = emoji::ZwjMode::kSequence;
};

class TfidfVectorizer {
 public:
  explicit TfidfVectorizer(TfidfOptions opts = {}) : opts_(opts) {
    if (opts_.ngram_min < 1 || opts_.ngram_max < opts_.ngram_min) {
      throw InputError("invalid n-gram range");
    }
  }

  /// Learns the vocabulary (sorted, so column order is reproducible) and
  /// idf weights from training documents.
  void fit(std::span<const std::string> docs) {
    if (docs.empty()) throw InputError("tfidf: no training documents");
    std::map<std::string, std::size_t> df;
    for (const auto& doc : docs) {
      auto grams = ngrams(doc);
      std::sort(grams.begin(), grams.end());
      grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
      for (auto& g : grams) ++df[std::move(g)];
    }
    if (df.empty()) throw InputError("tfidf: empty vocabulary");
    vocabulary_.clear();
    terms_.clear();
    idf_.clear();
    const double n = static_cast<double>(docs.size());
    for (const auto& [term, count] : df) {
      vocabulary_.emplace(term, static_cast<std::uint32_t>(terms_.size()));
      terms_.push_back(term);
      idf_.push_back(std::log((1 + n) / (1 + static_cast<double>(count))) + 1);
    }
    n_docs_ = docs.size();
  }

  bool fitted() const { return n_docs_ > 0; }
  std::size_t size() const { return terms_.size(); }
  std::size_t n_documents() const { return n_docs_; }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<double>& idf() const { return idf_; }
  const TfidfOptions& options() const { return opts_; }

  std::optional<std::uint32_t> column(const std::string& term) const {
    auto it = vocabulary_.find(term);
    if (it == vocabulary_.end()) return std::nullopt;
    return it->second;
  }

  /// Sorted (column, weight) pairs of one document. Unknown terms vanish.
  std::vector<std::pair<std::uint32_t, double>> transform(std::string_view doc) const {
    if (!fitted()) throw InputError("tfidf: transform before fit");
    std::map<std::uint32_t, double> tf;
    for (const auto& g : ngrams(doc)) {
      auto it = vocabulary_.find(g);
      if (it != vocabulary_.end()) tf[it->second] += 1;
    }
    std::vector<std::pair<std::uint32_t, double>> out;
    double ss = 0;
    for (const auto& [j, count] : tf) {
      const double v = count * idf_[j];
      out.emplace_back(j, v);
      ss += v * v;
    }
    if (ss > 0) {
      const double inv = 1 / std::sqrt(ss);
      for (auto& e : out) e.second *= inv;
    }
    return out;
  }

  SparseMatrix transform(std::span<const std::string> docs) const {
    SparseMatrix m;
    m.cols = size();
    for (const auto& d : docs) m.append_row(transform(d));
    return m;
  }

  std::vector<std::string> ngrams(std::string_view doc) const {
    const auto tokens = tokenize(doc, opts_.zwj_mode);
    std::vector<std::string> out;
    for (int n = opts_.ngram_min; n <= opts_.ngram_max; ++n) {
      const auto len = static_cast<std::size_t>(n);
      for (std::size_t i = 0; i + len <= tokens.size(); ++i) {
        std::string g = tokens[i];
        for (std::size_t k = 1; k < len; ++k) {
          g.push_back(' ');
          g += tokens[i + k];
        }
        out.push_back(std::move(g));
      }
    }
    return out;
  }

 private:
  TfidfOptions opts_;
  std::unordered_map<std::string, std::uint32_t> vocabulary_;
  std::vector<std::string> terms_;
  std::vector<double> idf_;
  std::size_t n_docs_ = 0;
};

}  // namespace emojilab
