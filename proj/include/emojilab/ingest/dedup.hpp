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

// Exact and near-duplicate removal.
//
// Exact duplicates share the same normalized text within a corpus; the
// survivor is the post with the earliest timestamp (posts without one rank
// last), then the lowest id. Near duplicates are detected with a 64-bit
// SimHash over whitespace-token 2-shingles: posts are visited in input
// order and a post is dropped when its fingerprint lies within
// `hamming_threshold` bits of an already kept post of the same corpus.
// Candidate lookup uses the pigeonhole split of the fingerprint into
// threshold + 1 blocks, one of which must match exactly.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "emojilab/ingest/post.hpp"
#include "emojilab/rng.hpp"

namespace emojilab {

/// 64-bit FNV-1a, finalised with SplitMix64 for avalanche.
inline std::uint64_t shingle_hash(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h);
}

inline std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\n' || text[pos] == '\r')) {
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
           text[pos] != '\n' && text[pos] != '\r') {
      ++pos;
    }
    if (pos > start) out.push_back(text.substr(start, pos - start));
  }
  return out;
}

/// SimHash of normalized text over token 2-shingles (a single token forms
/// its own shingle; empty text hashes to 0).
inline std::uint64_t simhash64(std::string_view text) {
  const auto tokens = split_whitespace(text);
  if (tokens.empty()) return 0;
  int votes[64] = {};
  auto add = [&](std::uint64_t h) {
    for (int b = 0; b < 64; ++b) votes[b] += ((h >> b) & 1) ? 1 : -1;
  };
  if (tokens.size() == 1) {
    add(shingle_hash(tokens[0]));
  } else {
    std::string shingle;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      shingle.assign(tokens[i]);
      shingle.push_back('\x1f');
      shingle.append(tokens[i + 1]);
      add(shingle_hash(shingle));
    }
  }
  std::uint64_t out = 0;
  for (int b = 0; b < 64; ++b) {
    if (votes[b] > 0) out |= std::uint64_t{1} << b;
  }
  return out;
}

inline int hamming_distance(std::uint64_t a, std::uint64_t b) noexcept {
  return std::popcount(a ^ b);
}

struct DedupStats {
  std::size_t input = 0;
  std::size_t exact_removed = 0;
  std::size_t near_removed = 0;
};

namespace detail {

inline bool earlier(const Post& a, const Post& b) {
  const bool ta = a.timestamp.has_value();
  const bool tb = b.timestamp.has_value();
  if (ta != tb) return ta;
  if (ta && *a.timestamp != *b.timestamp) return *a.timestamp < *b.timestamp;
  return a.id < b.id;
}

class NearDuplicateIndex {
 public:
  explicit NearDuplicateIndex(int threshold)
      : threshold_(threshold),
        blocks_(static_cast<int>(std::min(threshold + 1, 64))) {}

  /// Inserts `h` unless a stored fingerprint is within the threshold.
  bool insert_if_novel(std::uint64_t h) {
    if (threshold_ >= 64 && !kept_.empty()) return false;
    for (int b = 0; b < blocks_; ++b) {
      auto it = buckets_.find(key(h, b));
      if (it == buckets_.end()) continue;
      for (std::size_t idx : it->second) {
        if (hamming_distance(kept_[idx], h) <= threshold_) return false;
      }
    }
    const std::size_t idx = kept_.size();
    kept_.push_back(h);
    for (int b = 0; b < blocks_; ++b) buckets_[key(h, b)].push_back(idx);
    return true;
  }

 private:
  std::uint64_t key(std::uint64_t h, int block) const {
    const int lo = 64 * block / blocks_;
    const int hi = 64 * (block + 1) / blocks_;
    const int width = hi - lo;
    const std::uint64_t mask =
        width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
    return derive_seed(static_cast<std::uint64_t>(block), (h >> lo) & mask);
  }

  int threshold_;
  int blocks_;
  std::vector<std::uint64_t> kept_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

}  // namespace detail

/// Removes exact and near duplicates (see file comment). Output keeps the
/// relative input order of the survivors.
inline std::vector<Post> dedup(const std::vector<Post>& posts,
                               int hamming_threshold = 3,
                               DedupStats* stats = nullptr) {
  if (hamming_threshold < 0) hamming_threshold = -1;
  // Exact pass: pick one survivor per (corpus, text).
  std::unordered_map<std::string, std::size_t> best;
  for (std::size_t i = 0; i < posts.size(); ++i) {
    const std::string key = posts[i].corpus + '\0' + posts[i].text;
    auto [it, inserted] = best.emplace(key, i);
    if (!inserted && detail::earlier(posts[i], posts[it->second])) {
      it->second = i;
    }
  }
  std::vector<bool> keep(posts.size(), false);
  for (const auto& [_, idx] : best) keep[idx] = true;
  const std::size_t exact_survivors = best.size();

  // Near pass in input order, one index per corpus.
  std::map<std::string, detail::NearDuplicateIndex> indexes;
  std::vector<Post> out;
  out.reserve(exact_survivors);
  for (std::size_t i = 0; i < posts.size(); ++i) {
    if (!keep[i]) continue;
    if (hamming_threshold >= 0) {
      auto it = indexes.try_emplace(posts[i].corpus, hamming_threshold).first;
      if (!it->second.insert_if_novel(simhash64(posts[i].text))) continue;
    }
    out.push_back(posts[i]);
  }
  if (stats) {
    stats->input = posts.size();
    stats->exact_removed = posts.size() - exact_survivors;
    stats->near_removed = exact_survivors - out.size();
  }
  return out;
}

}  // namespace emojilab
