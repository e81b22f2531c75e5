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

// Emoji frequency distributions and cross-corpus divergence metrics.
//
// Rankings order emojis by descending count; equal counts are ordered by
// code point sequence (byte-wise comparison of the UTF-8 strings gives the
// same order). Every occurrence of an emoji in a post is counted.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "emojilab/error.hpp"
#include "emojilab/ingest/post.hpp"
#include "emojilab/parallel.hpp"
#include "emojilab/rng.hpp"
#include "emojilab/stats/stats.hpp"

namespace emojilab {

/// Raw emoji occurrence counts, keyed by canonical emoji.
using EmojiCounts = std::map<std::string, std::uint64_t>;

inline EmojiCounts count_emojis(std::span<const Post> posts) {
  EmojiCounts counts;
  for (const auto& p : posts) {
    for (const auto& e : p.emojis) ++counts[e];
  }
  return counts;
}

/// Emojis ordered by descending count, ties by code point order.
inline std::vector<std::pair<std::string, std::uint64_t>> rank_emojis(
    const EmojiCounts& counts) {
  std::vector<std::pair<std::string, std::uint64_t>> ranked(counts.begin(),
                                                            counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return ranked;
}

/// Top-k emoji distribution of one corpus. `vocab` is in rank order and
/// `probs` is normalized over it; `all_counts` keeps the complete counts so
/// that the distribution can be re-expressed on another vocabulary.
struct FrequencyDistribution {
  std::vector<std::string> vocab;
  std::vector<std::uint64_t> counts;
  std::vector<double> probs;
  EmojiCounts all_counts;

  std::uint64_t count_of(const std::string& emoji) const {
    auto it = all_counts.find(emoji);
    return it == all_counts.end() ? 0 : it->second;
  }
};

inline FrequencyDistribution build_distribution(EmojiCounts counts,
                                                std::size_t top_k) {
  if (top_k < 1) throw InputError("top_k must be at least 1");
  auto ranked = rank_emojis(counts);
  if (ranked.empty()) throw InputError("corpus contains no emojis");
  if (ranked.size() > top_k) ranked.resize(top_k);
  FrequencyDistribution d;
  std::uint64_t total = 0;
  for (auto& [emoji, n] : ranked) {
    d.vocab.push_back(emoji);
    d.counts.push_back(n);
    total += n;
  }
  for (auto n : d.counts) {
    d.probs.push_back(static_cast<double>(n) / static_cast<double>(total));
  }
  d.all_counts = std::move(counts);
  return d;
}

inline FrequencyDistribution build_distribution(std::span<const Post> posts,
                                                std::size_t top_k) {
  return build_distribution(count_emojis(posts), top_k);
}

struct AlignedDistributions {
  std::vector<double> p;
  std::vector<double> q;
  std::vector<std::string> vocab;
};

/// Re-expresses both distributions on the union of their vocabularies:
/// a's vocabulary in rank order, then b's entries not already present.
/// Each side is renormalized from its own counts over the union.
inline AlignedDistributions align_on_union(const FrequencyDistribution& a,
                                           const FrequencyDistribution& b) {
  AlignedDistributions out;
  std::unordered_set<std::string> seen;
  for (const auto* v : {&a.vocab, &b.vocab}) {
    for (const auto& e : *v) {
      if (seen.insert(e).second) out.vocab.push_back(e);
    }
  }
  auto project = [&](const FrequencyDistribution& d) {
    std::vector<double> probs;
    probs.reserve(out.vocab.size());
    double total = 0;
    for (const auto& e : out.vocab) {
      probs.push_back(static_cast<double>(d.count_of(e)));
      total += probs.back();
    }
    if (total <= 0) throw InputError("distribution has no mass on the union");
    for (double& x : probs) x /= total;
    return probs;
  };
  out.p = project(a);
  out.q = project(b);
  return out;
}

namespace detail {

inline void require_same_length(std::span<const double> p,
                                std::span<const double> q, const char* what) {
  if (p.size() != q.size()) {
    throw InputError(std::string(what) + ": length mismatch (" +
                     std::to_string(p.size()) + " vs " +
                     std::to_string(q.size()) + ")");
  }
}

}  // namespace detail

/// Jensen-Shannon distance, base-2 logarithms, in [0, 1].
inline double jsd(std::span<const double> p, std::span<const double> q) {
  detail::require_same_length(p, q, "jsd");
  double div = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    if (p[i] > 0) div += 0.5 * p[i] * std::log2(p[i] / m);
    if (q[i] > 0) div += 0.5 * q[i] * std::log2(q[i] / m);
  }
  return std::sqrt(std::clamp(div, 0.0, 1.0));
}

/// Total variation distance: half the L1 distance.
inline double total_variation(std::span<const double> p,
                              std::span<const double> q) {
  detail::require_same_length(p, q, "total_variation");
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

/// Bhattacharyya coefficient.
inline double bhattacharyya(std::span<const double> p,
                            std::span<const double> q) {
  detail::require_same_length(p, q, "bhattacharyya");
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::sqrt(p[i] * q[i]);
  return std::min(s, 1.0);
}

enum class RboVariant { kExtrapolated, kTruncated };

/// Rank-biased overlap of two rankings with persistence `p`.
///
///   extrapolated: (X_k/k) p^k + ((1-p)/p) sum_{d=1..k} (X_d/d) p^d
///   truncated:    (1-p) sum_{d=1..k} (X_d/d) p^(d-1)
///
/// X_d is the size of the intersection of the two depth-d prefixes. When
/// the lists differ in length both are cut to the shorter one.
inline double rbo(std::span<const std::string> a, std::span<const std::string> b,
                  double p = 0.9, RboVariant variant = RboVariant::kExtrapolated) {
  if (!(p > 0 && p < 1)) throw InputError("rbo persistence must lie in (0, 1)");
  const std::size_t k = std::min(a.size(), b.size());
  for (auto list : {a, b}) {
    std::unordered_set<std::string_view> unique;
    for (const auto& item : list) {
      if (!unique.insert(item).second) {
        throw InputError("rbo: duplicate item '" + item + "' in ranking");
      }
    }
  }
  if (k == 0) return 0;
  std::unordered_set<std::string_view> seen_a, seen_b;
  std::size_t overlap = 0;
  double sum = 0;
  double weight = 1;  // p^(d-1)
  for (std::size_t d = 1; d <= k; ++d) {
    const std::string_view x = a[d - 1], y = b[d - 1];
    if (x == y) {
      ++overlap;
    } else {
      overlap += seen_b.count(x) + seen_a.count(y);
    }
    seen_a.insert(x);
    seen_b.insert(y);
    sum += static_cast<double>(overlap) / static_cast<double>(d) * weight;
    weight *= p;
  }
  // weight == p^k here
  if (variant == RboVariant::kTruncated) return (1 - p) * sum;
  return static_cast<double>(overlap) / static_cast<double>(k) * weight +
         (1 - p) * sum;
}

struct DescriptiveStats {
  std::size_t n_posts = 0;
  std::size_t n_emoji_posts = 0;
  std::uint64_t n_occurrences = 0;
  double prevalence = 0;
  std::optional<double> intensity;
  std::size_t vocab_size = 0;
  std::optional<double> effective_n;
  std::optional<double> top20_share;
};

inline DescriptiveStats descriptive_stats(std::span<const Post> posts) {
  if (posts.empty()) throw InputError("descriptive_stats: empty corpus");
  DescriptiveStats s;
  s.n_posts = posts.size();
  EmojiCounts counts;
  for (const auto& p : posts) {
    if (!p.emojis.empty()) ++s.n_emoji_posts;
    for (const auto& e : p.emojis) ++counts[e];
    s.n_occurrences += p.emojis.size();
  }
  s.prevalence =
      static_cast<double>(s.n_emoji_posts) / static_cast<double>(s.n_posts);
  s.vocab_size = counts.size();
  if (s.n_occurrences == 0) return s;
  const double total = static_cast<double>(s.n_occurrences);
  s.intensity = total / static_cast<double>(s.n_emoji_posts);
  double sum_sq = 0;
  for (const auto& [_, n] : counts) {
    const double pi = static_cast<double>(n) / total;
    sum_sq += pi * pi;
  }
  s.effective_n = 1.0 / sum_sq;
  const auto ranked = rank_emojis(counts);
  std::uint64_t head = 0;
  for (std::size_t i = 0; i < ranked.size() && i < 20; ++i) head += ranked[i].second;
  s.top20_share = static_cast<double>(head) / total;
  return s;
}

/// The four similarity measures of one corpus pair.
struct DivergenceScores {
  double jsd = 0;
  double tv = 0;
  double bc = 0;
  double rbo = 0;
  std::size_t union_size = 0;
};

inline DivergenceScores compare_distributions(
    const FrequencyDistribution& a, const FrequencyDistribution& b,
    double rbo_p = 0.9, RboVariant variant = RboVariant::kExtrapolated) {
  const auto u = align_on_union(a, b);
  DivergenceScores s;
  s.jsd = jsd(u.p, u.q);
  s.tv = total_variation(u.p, u.q);
  s.bc = bhattacharyya(u.p, u.q);
  s.rbo = rbo(a.vocab, b.vocab, rbo_p, variant);
  s.union_size = u.vocab.size();
  return s;
}

/// Bootstrap intervals of prevalence and intensity. Whole calendar months
/// are resampled when every post has a timestamp, single posts otherwise.
struct DescriptiveIntervals {
  stats::ResampleUnit unit = stats::ResampleUnit::kMonthBlock;
  stats::IntervalEstimate prevalence;
  std::optional<stats::IntervalEstimate> intensity;
};

inline DescriptiveIntervals descriptive_intervals(std::span<const Post> posts,
                                                  stats::ResamplePlan plan) {
  const auto point = descriptive_stats(posts);
  std::vector<std::int64_t> months;
  for (const auto& p : posts) {
    if (!p.timestamp) break;
    months.push_back(month_key(*p.timestamp));
  }
  const bool blocked = months.size() == posts.size();
  const auto rs = blocked ? stats::Resampler::blocks(months) : stats::Resampler::simple(posts.size());
  DescriptiveIntervals out;
  out.unit = rs.unit();
  plan.unit = rs.unit();
  auto tally = [&](std::span<const std::size_t> idx, bool want_intensity) {
    double with = 0, occurrences = 0;
    for (auto i : idx) {
      with += posts[i].emojis.empty() ? 0 : 1;
      occurrences += static_cast<double>(posts[i].emojis.size());
    }
    if (want_intensity) return with > 0 ? occurrences / with : 0.0;
    return idx.empty() ? 0.0 : with / static_cast<double>(idx.size());
  };
  out.prevalence = stats::bootstrap(
      [&](std::span<const std::size_t> idx) { return tally(idx, false); }, rs, plan);
  if (point.intensity) {
    out.intensity = stats::bootstrap(
        [&](std::span<const std::size_t> idx) { return tally(idx, true); }, rs, plan);
  }
  return out;
}

/// Uncertainty of the four scores of one corpus pair.
struct DivergenceInference {
  stats::IntervalEstimate jsd, tv, bc, rbo;
  // Permutation p-values in the direction of divergence: large JSD/TV,
  // small BC/RBO. Absent unless a permutation count was given.
  std::optional<double> jsd_p, tv_p, bc_p, rbo_p;
};

struct DivergenceInferenceOptions {
  std::size_t top_k = 100;
  double rbo_p = 0.9;
  RboVariant variant = RboVariant::kExtrapolated;
  stats::ResamplePlan plan{stats::ResampleUnit::kEmoji};
  std::size_t n_perm = 0;
};

namespace detail {

/// Scores after resampling the union vocabulary: every drawn copy of an
/// emoji contributes its probability once more on both sides, and the
/// rankings keep only the drawn emojis.
inline DivergenceScores resampled_scores(const FrequencyDistribution& a,
                                         const FrequencyDistribution& b,
                                         const AlignedDistributions& u,
                                         std::span<const std::size_t> idx, double rbo_p,
                                         RboVariant variant) {
  std::vector<double> p, q;
  std::unordered_set<std::string_view> drawn;
  double sp = 0, sq = 0;
  for (auto i : idx) {
    p.push_back(u.p[i]);
    q.push_back(u.q[i]);
    sp += u.p[i];
    sq += u.q[i];
    drawn.insert(u.vocab[i]);
  }
  DivergenceScores s;
  s.union_size = drawn.size();
  if (sp > 0 && sq > 0) {
    for (double& x : p) x /= sp;
    for (double& x : q) x /= sq;
    s.jsd = jsd(p, q);
    s.tv = total_variation(p, q);
    s.bc = bhattacharyya(p, q);
  } else {
    // One side has no mass on the drawn emojis: maximal divergence.
    s.jsd = 1;
    s.tv = 1;
    s.bc = 0;
  }
  std::vector<std::string> ra, rb;
  for (const auto& e : a.vocab) {
    if (drawn.count(e)) ra.push_back(e);
  }
  for (const auto& e : b.vocab) {
    if (drawn.count(e)) rb.push_back(e);
  }
  s.rbo = rbo(ra, rb, rbo_p, variant);
  return s;
}

}  // namespace detail

/// Percentile intervals from resampling the union emoji set, and optional
/// permutation p-values from reassigning posts between the corpora.
inline DivergenceInference divergence_inference(std::span<const Post> a_posts,
                                                std::span<const Post> b_posts,
                                                const DivergenceInferenceOptions& opts) {
  opts.plan.validate();
  const auto a = build_distribution(a_posts, opts.top_k);
  const auto b = build_distribution(b_posts, opts.top_k);
  const auto u = align_on_union(a, b);
  const auto point = compare_distributions(a, b, opts.rbo_p, opts.variant);
  const auto rs = stats::Resampler::simple(u.vocab.size(), stats::ResampleUnit::kEmoji);

  const std::size_t n = opts.plan.n_replicates;
  std::vector<double> vj(n), vt(n), vb(n), vr(n);
  parallel_for(n, opts.plan.threads, [&](std::size_t r) {
    Rng rng(derive_seed(opts.plan.master_seed, r));
    std::vector<std::size_t> idx;
    rs.draw(rng, idx);
    const auto s = detail::resampled_scores(a, b, u, idx, opts.rbo_p, opts.variant);
    vj[r] = s.jsd;
    vt[r] = s.tv;
    vb[r] = s.bc;
    vr[r] = s.rbo;
  });
  DivergenceInference out;
  const double level = opts.plan.level;
  out.jsd = stats::percentile_interval(point.jsd, std::move(vj), level);
  out.tv = stats::percentile_interval(point.tv, std::move(vt), level);
  out.bc = stats::percentile_interval(point.bc, std::move(vb), level);
  out.rbo = stats::percentile_interval(point.rbo, std::move(vr), level);

  if (opts.n_perm > 0) {
    std::vector<const Post*> pooled;
    for (const auto& p : a_posts) pooled.push_back(&p);
    for (const auto& p : b_posts) pooled.push_back(&p);
    const std::size_t m = opts.n_perm;
    std::vector<double> pj(m), pt(m), pb(m), pr(m);
    const std::uint64_t perm_seed = derive_seed(opts.plan.master_seed, 0x9e77);
    parallel_for(m, opts.plan.threads, [&](std::size_t r) {
      Rng rng(derive_seed(perm_seed, r));
      std::vector<const Post*> order = pooled;
      rng.shuffle(std::span<const Post*>(order));
      EmojiCounts ca, cb;
      for (std::size_t i = 0; i < order.size(); ++i) {
        auto& c = i < a_posts.size() ? ca : cb;
        for (const auto& e : order[i]->emojis) ++c[e];
      }
      if (ca.empty() || cb.empty()) {  // a side without emojis: no divergence signal
        pj[r] = pt[r] = 0;
        pb[r] = pr[r] = -1;
        return;
      }
      const auto s = compare_distributions(build_distribution(std::move(ca), opts.top_k),
                                           build_distribution(std::move(cb), opts.top_k),
                                           opts.rbo_p, opts.variant);
      pj[r] = s.jsd;
      pt[r] = s.tv;
      pb[r] = -s.bc;
      pr[r] = -s.rbo;
    });
    using stats::Tail;
    out.jsd_p = stats::permutation_p_value(point.jsd, pj, Tail::kGreater);
    out.tv_p = stats::permutation_p_value(point.tv, pt, Tail::kGreater);
    out.bc_p = stats::permutation_p_value(-point.bc, pb, Tail::kGreater);
    out.rbo_p = stats::permutation_p_value(-point.rbo, pr, Tail::kGreater);
  }
  return out;
}

}  // namespace emojilab
