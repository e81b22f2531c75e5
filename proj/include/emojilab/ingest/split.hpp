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

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emojilab/error.hpp"
#include "emojilab/ingest/post.hpp"
#include "emojilab/rng.hpp"

namespace emojilab {

struct SplitSizes {
  std::size_t train = 55000;
  std::size_t validation = 5000;
  std::size_t test = 5000;
};

/// Balanced train / validation / in-domain test splits of one corpus.
struct CorpusSplit {
  std::vector<Post> train;
  std::vector<Post> validation;
  std::vector<Post> test_in;
  std::optional<std::vector<Post>> test_out;
  std::uint64_t seed = 0;
  bool quarter_stratified = false;
  std::vector<std::string> notes;
};

namespace detail {

/// Random order of `items` in which every prefix holds each calendar
/// quarter roughly in proportion to its share (systematic allocation).
/// Without complete timestamps this is a plain shuffle.
inline std::vector<const Post*> stratified_order(std::vector<const Post*> items,
                                                 Rng& rng,
                                                 bool by_quarter) {
  if (!by_quarter) {
    rng.shuffle(std::span<const Post*>(items));
    return items;
  }
  std::map<std::int64_t, std::vector<const Post*>> groups;
  for (const Post* p : items) groups[quarter_key(*p->timestamp)].push_back(p);
  struct Keyed {
    double position;
    std::int64_t quarter;
    const Post* post;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(items.size());
  for (auto& [quarter, members] : groups) {
    rng.shuffle(std::span<const Post*>(members));
    const double n = static_cast<double>(members.size());
    for (std::size_t j = 0; j < members.size(); ++j) {
      keyed.push_back({(static_cast<double>(j) + 0.5) / n, quarter, members[j]});
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return a.position != b.position ? a.position < b.position
                                    : a.quarter < b.quarter;
  });
  std::vector<const Post*> out;
  out.reserve(keyed.size());
  for (const auto& k : keyed) out.push_back(k.post);
  return out;
}

}  // namespace detail

/// Balances the labeled posts by undersampling the majority class, then
/// cuts label-stratified splits of the requested sizes. Odd split sizes
/// give the extra post to the positive class. When every labeled post has
/// a timestamp the draw is also stratified by calendar quarter.
/// Deterministic for a given seed.
inline CorpusSplit make_split(const std::vector<Post>& posts, SplitSizes sizes,
                              std::uint64_t seed) {
  std::vector<const Post*> pos, neg;
  bool all_timestamped = true;
  for (const auto& p : posts) {
    if (p.label == Label::kPositive) pos.push_back(&p);
    if (p.label == Label::kNegative) neg.push_back(&p);
    if (p.labeled() && !p.timestamp) all_timestamped = false;
  }
  const std::size_t sizes_arr[3] = {sizes.train, sizes.validation, sizes.test};
  std::size_t need_pos = 0, need_neg = 0;
  for (std::size_t s : sizes_arr) {
    need_pos += (s + 1) / 2;
    need_neg += s / 2;
  }
  const std::size_t pool = std::min(pos.size(), neg.size());
  if (pool < need_pos || pool < need_neg) {
    throw InputError(
        "insufficient labeled posts for the requested split: need " +
        std::to_string(need_pos) + " positive and " + std::to_string(need_neg) +
        " negative after balancing, available " + std::to_string(pos.size()) +
        " positive / " + std::to_string(neg.size()) +
        " negative (balanced pool " + std::to_string(pool) + " per class)");
  }
  const bool by_quarter = all_timestamped && (!pos.empty() || !neg.empty());

  Rng pos_rng(derive_seed(seed, 1));
  Rng neg_rng(derive_seed(seed, 2));
  pos = detail::stratified_order(std::move(pos), pos_rng, by_quarter);
  neg = detail::stratified_order(std::move(neg), neg_rng, by_quarter);
  pos.resize(pool);  // undersample to the balanced pool
  neg.resize(pool);

  CorpusSplit out;
  out.seed = seed;
  out.quarter_stratified = by_quarter;
  std::vector<Post>* targets[3] = {&out.train, &out.validation, &out.test_in};
  std::size_t pos_at = 0, neg_at = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t n_pos = (sizes_arr[k] + 1) / 2;
    const std::size_t n_neg = sizes_arr[k] / 2;
    std::vector<const Post*> chosen;
    chosen.reserve(sizes_arr[k]);
    chosen.insert(chosen.end(), pos.begin() + pos_at,
                  pos.begin() + pos_at + n_pos);
    chosen.insert(chosen.end(), neg.begin() + neg_at,
                  neg.begin() + neg_at + n_neg);
    pos_at += n_pos;
    neg_at += n_neg;
    Rng mix(derive_seed(seed, 10 + k));
    mix.shuffle(std::span<const Post*>(chosen));
    targets[k]->reserve(chosen.size());
    for (const Post* p : chosen) targets[k]->push_back(*p);
  }

  const std::size_t tv = sizes.train + sizes.validation;
  if (tv > 0 && sizes.validation * 5 != tv) {
    out.notes.push_back(
        "explicit sizes honored: validation is " +
        std::to_string(sizes.validation) + " of " + std::to_string(tv) +
        " train+validation posts rather than an 80/20 split");
  }
  return out;
}

/// Balanced random sample of `n` labeled posts (the positive class gets the
/// extra post when n is odd); used for out-of-domain test sets.
inline std::vector<Post> balanced_sample(const std::vector<Post>& posts,
                                         std::size_t n, std::uint64_t seed) {
  return make_split(posts, SplitSizes{0, 0, n}, seed).test_in;
}

}  // namespace emojilab
