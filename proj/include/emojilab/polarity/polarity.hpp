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

// Per-emoji sentiment polarity and cross-corpus polarity consistency.
//
// The polarity of an emoji is the Jeffreys-smoothed share of positive
// posts among the labeled posts containing it, theta = (pos + 0.5) / (n + 1).
// A post with the same emoji twice counts once for that emoji.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emojilab/error.hpp"
#include "emojilab/ingest/post.hpp"
#include "emojilab/parallel.hpp"
#include "emojilab/rng.hpp"
#include "emojilab/stats/stats.hpp"

namespace emojilab {

struct PolarityRecord {
  std::string emoji;
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  double theta = 0.5;
  bool in_tail = false;

  std::uint64_t total() const { return pos + neg; }
};

inline double jeffreys_theta(std::uint64_t pos, std::uint64_t neg) {
  return (static_cast<double>(pos) + 0.5) / (static_cast<double>(pos + neg) + 1.0);
}

/// Records for every emoji seen in a labeled post, in code point order.
/// Unlabeled posts are ignored.
inline std::vector<PolarityRecord> polarity_table(std::span<const Post> posts) {
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> counts;
  std::vector<std::string_view> seen;
  for (const auto& p : posts) {
    if (!p.labeled()) continue;
    seen.clear();
    for (const auto& e : p.emojis) {
      if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
      seen.push_back(e);
      auto& c = counts[e];
      (p.label == Label::kPositive ? c.first : c.second) += 1;
    }
  }
  std::vector<PolarityRecord> out;
  out.reserve(counts.size());
  for (const auto& [emoji, c] : counts) {
    out.push_back({emoji, c.first, c.second, jeffreys_theta(c.first, c.second), false});
  }
  return out;
}

enum class Regime { kPlatformAsset, kLanguage };

inline const char* to_string(Regime r) {
  return r == Regime::kLanguage ? "language" : "platform_asset";
}

struct SupportThresholds {
  std::uint64_t min_total = 300;
  std::uint64_t min_pos = 30;
  std::uint64_t min_neg = 30;
  std::size_t tail = 100;  // emojis taken from each end of the theta ranking

  static SupportThresholds for_regime(Regime r) {
    if (r == Regime::kLanguage) return {120, 12, 12, 50};
    return {};
  }

  bool met_by(const PolarityRecord& r) const {
    return r.total() >= min_total && r.pos >= min_pos && r.neg >= min_neg;
  }
};

/// Matched emoji set of two polarity tables.
struct ComparisonSet {
  std::vector<std::string> emojis;      // code point order
  std::vector<bool> meets_threshold;    // support rule holds on both sides
  std::vector<bool> in_tail;            // member of an extreme-polarity tail
};

namespace detail {

inline std::map<std::string, const PolarityRecord*> by_emoji(
    std::span<const PolarityRecord> table) {
  std::map<std::string, const PolarityRecord*> out;
  for (const auto& r : table) out.emplace(r.emoji, &r);
  return out;
}

/// Top and bottom `tail` entries of `shared` ranked by theta in `table`
/// (descending theta, ties by code point order).
inline std::vector<std::string> tail_members(
    const std::map<std::string, const PolarityRecord*>& table,
    const std::vector<std::string>& shared, std::size_t tail) {
  std::vector<std::string> ranked = shared;
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](const std::string& x, const std::string& y) {
                     return table.at(x)->theta > table.at(y)->theta;
                   });
  std::vector<std::string> out;
  const std::size_t k = std::min(tail, ranked.size());
  out.insert(out.end(), ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), ranked.end() - static_cast<std::ptrdiff_t>(k), ranked.end());
  return out;
}

}  // namespace detail

/// Emojis meeting the support thresholds in both tables, plus the
/// extreme-polarity tails: the `tail` highest and lowest theta emojis of
/// either table among those present in both, whatever their support.
inline ComparisonSet select_comparison_set(std::span<const PolarityRecord> a,
                                           std::span<const PolarityRecord> b,
                                           const SupportThresholds& thr,
                                           bool include_tails = true) {
  const auto ma = detail::by_emoji(a), mb = detail::by_emoji(b);
  std::vector<std::string> both;
  for (const auto& [emoji, _] : ma) {
    if (mb.count(emoji)) both.push_back(emoji);
  }
  std::map<std::string, std::pair<bool, bool>> chosen;
  for (const auto& e : both) {
    if (thr.met_by(*ma.at(e)) && thr.met_by(*mb.at(e))) chosen[e].first = true;
  }
  if (include_tails && thr.tail > 0) {
    for (const auto* m : {&ma, &mb}) {
      for (const auto& e : detail::tail_members(*m, both, thr.tail)) {
        chosen[e].second = true;
      }
    }
  }
  if (chosen.empty()) throw InputError("no emojis qualify for the polarity comparison");
  ComparisonSet out;
  for (const auto& [e, flags] : chosen) {
    out.emojis.push_back(e);
    out.meets_threshold.push_back(flags.first);
    out.in_tail.push_back(flags.second);
  }
  return out;
}

inline ComparisonSet select_comparison_set(std::span<const PolarityRecord> a,
                                           std::span<const PolarityRecord> b,
                                           Regime regime, bool include_tails = true) {
  return select_comparison_set(a, b, SupportThresholds::for_regime(regime),
                               include_tails);
}

/// Harmonic-mean weights 2 n_a n_b / (n_a + n_b), normalized to sum 1.
inline std::vector<double> harmonic_weights(std::span<const double> n_a,
                                            std::span<const double> n_b) {
  if (n_a.size() != n_b.size()) throw InputError("harmonic_weights: length mismatch");
  std::vector<double> w(n_a.size(), 0.0);
  double total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (n_a[i] < 0 || n_b[i] < 0) throw InputError("harmonic_weights: negative count");
    const double s = n_a[i] + n_b[i];
    w[i] = s > 0 ? 2 * n_a[i] * n_b[i] / s : 0.0;
    total += w[i];
  }
  if (total <= 0) throw InputError("harmonic_weights: all weights are zero");
  for (double& x : w) x /= total;
  return w;
}

/// Average (mid) ranks, 1-based.
inline std::vector<double> midranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
  std::vector<double> ranks(x.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

/// Weighted Pearson correlation of the mid-ranks of x and y.
inline double weighted_spearman(std::span<const double> x, std::span<const double> y,
                                std::span<const double> w) {
  if (x.size() != y.size() || x.size() != w.size()) {
    throw InputError("weighted_spearman: length mismatch");
  }
  if (x.size() < 3) throw InputError("weighted_spearman needs at least 3 emojis");
  const auto rx = midranks(x), ry = midranks(y);
  double sw = 0, mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(w[i] >= 0)) throw InputError("weighted_spearman: negative weight");
    sw += w[i];
    mx += w[i] * rx[i];
    my += w[i] * ry[i];
  }
  if (sw <= 0) throw InputError("weighted_spearman: weights sum to zero");
  mx /= sw;
  my /= sw;
  double cxy = 0, cxx = 0, cyy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = rx[i] - mx, dy = ry[i] - my;
    cxy += w[i] * dx * dy;
    cxx += w[i] * dx * dx;
    cyy += w[i] * dy * dy;
  }
  if (cxx <= 0 || cyy <= 0) {
    throw NumericalError("weighted_spearman: a rank vector has zero variance");
  }
  return std::clamp(cxy / std::sqrt(cxx * cyy), -1.0, 1.0);
}

/// Mean absolute difference of matched polarities.
inline double maud(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("maud: length mismatch");
  if (a.empty()) throw InputError("maud: no emojis");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s / static_cast<double>(a.size());
}

/// Weighted variant sum_e w_e |a_e - b_e| (weights renormalized to sum 1).
inline double maud(std::span<const double> a, std::span<const double> b,
                   std::span<const double> w) {
  if (a.size() != b.size() || a.size() != w.size()) {
    throw InputError("maud: length mismatch");
  }
  double s = 0, sw = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += w[i] * std::abs(a[i] - b[i]);
    sw += w[i];
  }
  if (sw <= 0) throw InputError("maud: weights sum to zero");
  return s / sw;
}

struct FlipRecord {
  std::string emoji;
  double theta_a = 0;
  double theta_b = 0;
  double median_a = 0;  // median of bootstrap thetas
  double median_b = 0;
  double delta = 0;     // theta_a - theta_b
  double ci_lo = 0;     // bootstrap interval of delta
  double ci_hi = 0;
  bool point_sign_differs = false;
  bool flip = false;
};

struct FlipOptions {
  std::size_t n_boot = 1000;
  double level = 0.95;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

namespace detail {

/// Stream of bootstrap thetas for one side. Keyed by the emoji and the
/// side's own counts, so swapping the corpora swaps the streams with them.
inline std::uint64_t side_stream(std::uint64_t seed, const std::string& emoji,
                                 std::uint64_t pos, std::uint64_t neg) {
  std::uint64_t s = derive_seed(seed, stream_key(emoji));
  s = derive_seed(s, pos);
  return derive_seed(s, neg ^ 0x9e3779b97f4a7c15ULL);
}

inline std::vector<double> bootstrap_thetas(std::uint64_t stream, std::uint64_t pos,
                                            std::uint64_t neg, std::size_t n_boot) {
  const std::uint64_t n = pos + neg;
  std::vector<double> out(n_boot);
  for (std::size_t r = 0; r < n_boot; ++r) {
    Rng rng(derive_seed(stream, r));
    std::uint64_t k = 0;
    for (std::uint64_t i = 0; i < n; ++i) k += rng.below(n) < pos;
    out[r] = jeffreys_theta(k, n - k);
  }
  return out;
}

}  // namespace detail

/// Flip test of one emoji from its labeled counts on each side. A flip needs
/// the bootstrap median polarities on opposite sides of 0.5 and a delta
/// interval that excludes 0.
inline FlipRecord flip_test(const std::string& emoji, std::uint64_t pos_a,
                            std::uint64_t neg_a, std::uint64_t pos_b,
                            std::uint64_t neg_b, const FlipOptions& opts) {
  if (opts.n_boot < 100) throw InputError("flip analysis needs at least 100 bootstrap reps");
  if (pos_a + neg_a == 0 || pos_b + neg_b == 0) {
    throw InputError("emoji " + emoji + " has no labeled posts on one side");
  }
  FlipRecord f;
  f.emoji = emoji;
  f.theta_a = jeffreys_theta(pos_a, neg_a);
  f.theta_b = jeffreys_theta(pos_b, neg_b);
  f.delta = f.theta_a - f.theta_b;
  f.point_sign_differs = (f.theta_a - 0.5) * (f.theta_b - 0.5) < 0;
  const auto ta = detail::bootstrap_thetas(
      detail::side_stream(opts.seed, emoji, pos_a, neg_a), pos_a, neg_a, opts.n_boot);
  const auto tb = detail::bootstrap_thetas(
      detail::side_stream(opts.seed, emoji, pos_b, neg_b), pos_b, neg_b, opts.n_boot);
  f.median_a = stats::median(ta);
  f.median_b = stats::median(tb);
  std::vector<double> deltas(opts.n_boot);
  for (std::size_t r = 0; r < opts.n_boot; ++r) deltas[r] = ta[r] - tb[r];
  const auto ci = stats::percentile_interval(f.delta, std::move(deltas), opts.level);
  f.ci_lo = ci.lo;
  f.ci_hi = ci.hi;
  const bool opposite = (f.median_a - 0.5) * (f.median_b - 0.5) < 0;
  f.flip = opposite && (ci.lo > 0 || ci.hi < 0);
  return f;
}

struct FlipSummary {
  std::vector<FlipRecord> records;  // one per tested emoji, input order
  double flip_rate = 0;
  double flip_rate_w = 0;

  std::vector<std::string> flipped() const {
    std::vector<std::string> out;
    for (const auto& r : records) {
      if (r.flip) out.push_back(r.emoji);
    }
    return out;
  }
};

/// Flip tests over `shared`; `weights` (optional, same order) gives the
/// weighted flip rate.
inline FlipSummary flip_analysis(std::span<const PolarityRecord> a,
                                 std::span<const PolarityRecord> b,
                                 const std::vector<std::string>& shared,
                                 const FlipOptions& opts,
                                 std::span<const double> weights = {}) {
  if (shared.empty()) throw InputError("flip analysis needs at least one emoji");
  if (!weights.empty() && weights.size() != shared.size()) {
    throw InputError("flip analysis: weights do not match the emoji list");
  }
  const auto ma = detail::by_emoji(a), mb = detail::by_emoji(b);
  for (const auto& e : shared) {
    if (!ma.count(e) || !mb.count(e)) {
      throw InputError("emoji " + e + " is missing from one polarity table");
    }
  }
  FlipSummary out;
  out.records.resize(shared.size());
  parallel_for(shared.size(), opts.threads, [&](std::size_t i) {
    const auto& ra = *ma.at(shared[i]);
    const auto& rb = *mb.at(shared[i]);
    out.records[i] = flip_test(shared[i], ra.pos, ra.neg, rb.pos, rb.neg,
                               {opts.n_boot, opts.level, opts.seed, 1});
  });
  double flips = 0, wflips = 0, wsum = 0;
  for (std::size_t i = 0; i < shared.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    wsum += w;
    if (out.records[i].flip) {
      flips += 1;
      wflips += w;
    }
  }
  out.flip_rate = flips / static_cast<double>(shared.size());
  out.flip_rate_w = wsum > 0 ? wflips / wsum : 0.0;
  return out;
}

inline FlipSummary flip_analysis(std::span<const Post> a_posts,
                                 std::span<const Post> b_posts,
                                 const std::vector<std::string>& shared,
                                 const FlipOptions& opts) {
  const auto ta = polarity_table(a_posts), tb = polarity_table(b_posts);
  return flip_analysis(ta, tb, shared, opts);
}

/// Global consistency metrics of one matched emoji set.
struct PolarityMetrics {
  std::size_t n_emojis = 0;
  std::optional<double> rho_w;  // absent with fewer than 3 emojis
  double maud = 0;
  double maud_w = 0;
  double flip_rate = 0;
  double flip_rate_w = 0;
  std::optional<stats::IntervalEstimate> rho_w_ci;
  std::optional<stats::IntervalEstimate> maud_w_ci;
  std::optional<double> maud_w_perm_p;
};

struct PolarityComparison {
  Regime regime = Regime::kPlatformAsset;
  ComparisonSet set;
  std::vector<PolarityRecord> records_a;  // matched with set.emojis
  std::vector<PolarityRecord> records_b;
  std::vector<double> weights;            // harmonic, sum 1 over the full set
  FlipSummary flips;
  PolarityMetrics all;             // threshold members plus tails
  PolarityMetrics threshold_only;  // support-qualified members only
};

struct PolarityOptions {
  Regime regime = Regime::kPlatformAsset;
  std::optional<SupportThresholds> thresholds;  // regime defaults otherwise
  bool include_tails = true;
  FlipOptions flip;
  std::size_t n_bootstrap = 0;  // emoji-level CIs of rho_w and MAUD_w
  std::size_t n_perm = 0;       // permutation test of MAUD_w
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

namespace detail {

struct MatchedView {
  std::vector<double> theta_a, theta_b, n_a, n_b;
  std::vector<bool> flip;
};

/// rho_w and MAUD_w of the rows listed in `idx` (duplicates allowed).
inline std::pair<std::optional<double>, double> rho_maud(const MatchedView& v,
                                                         std::span<const std::size_t> idx) {
  std::vector<double> ta, tb, na, nb;
  for (auto i : idx) {
    ta.push_back(v.theta_a[i]);
    tb.push_back(v.theta_b[i]);
    na.push_back(v.n_a[i]);
    nb.push_back(v.n_b[i]);
  }
  const auto w = harmonic_weights(na, nb);
  std::optional<double> rho;
  if (ta.size() >= 3) {
    try {
      rho = weighted_spearman(ta, tb, w);
    } catch (const NumericalError&) {
    }
  }
  return {rho, maud(ta, tb, w)};
}

/// Redraws a resample of `rows` until its rank vectors vary (at most 1000
/// tries) and returns the drawn rows.
inline std::vector<std::size_t> draw_rankable(const stats::Resampler& rs,
                                              const std::vector<std::size_t>& rows,
                                              const MatchedView& v, Rng& rng) {
  std::vector<std::size_t> idx, global;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    rs.draw(rng, idx);
    global.clear();
    for (auto i : idx) global.push_back(rows[i]);
    if (rho_maud(v, global).first) return global;
  }
  throw NumericalError("could not draw an emoji resample with varying ranks");
}

inline PolarityMetrics metrics_for(const MatchedView& v,
                                   const std::vector<std::size_t>& rows,
                                   const PolarityOptions& opts, std::uint64_t salt) {
  PolarityMetrics m;
  m.n_emojis = rows.size();
  if (rows.empty()) return m;
  std::vector<double> ta, tb, na, nb;
  for (auto i : rows) {
    ta.push_back(v.theta_a[i]);
    tb.push_back(v.theta_b[i]);
    na.push_back(v.n_a[i]);
    nb.push_back(v.n_b[i]);
  }
  const auto w = harmonic_weights(na, nb);
  const auto [rho, mw] = rho_maud(v, rows);
  m.rho_w = rho;
  m.maud = maud(ta, tb);
  m.maud_w = mw;
  double flips = 0, wflips = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (v.flip[rows[k]]) {
      flips += 1;
      wflips += w[k];
    }
  }
  m.flip_rate = flips / static_cast<double>(rows.size());
  m.flip_rate_w = wflips;

  if (opts.n_bootstrap > 0) {
    const auto rs = stats::Resampler::simple(rows.size(), stats::ResampleUnit::kEmoji);
    const std::uint64_t seed = derive_seed(opts.seed, salt);
    auto mapped = [&](std::span<const std::size_t> local) {
      std::vector<std::size_t> global;
      global.reserve(local.size());
      for (auto i : local) global.push_back(rows[i]);
      return global;
    };
    auto maud_reps = stats::run_replicates(
        opts.n_bootstrap, seed, opts.threads, [&](Rng& rng, std::size_t) {
          std::vector<std::size_t> idx;
          rs.draw(rng, idx);
          return rho_maud(v, mapped(idx)).second;
        });
    m.maud_w_ci = stats::percentile_interval(mw, std::move(maud_reps), opts.flip.level);
    if (rho) {
      auto rho_reps = stats::run_replicates(
          opts.n_bootstrap, derive_seed(seed, 1), opts.threads,
          [&](Rng& rng, std::size_t) {
            return *rho_maud(v, draw_rankable(rs, rows, v, rng)).first;
          });
      m.rho_w_ci = stats::percentile_interval(*rho, std::move(rho_reps), opts.flip.level);
    }
  }
  return m;
}

/// Positive count of side A after reassigning the pooled posts of one emoji
/// at random between the sides (sizes kept): a hypergeometric draw.
inline std::uint64_t reassign(std::uint64_t pool_pos, std::uint64_t pool_n,
                              std::uint64_t n_a, Rng& rng) {
  const bool flip_side = n_a > pool_n - n_a;
  const std::uint64_t draws = flip_side ? pool_n - n_a : n_a;
  std::uint64_t pos_left = pool_pos, left = pool_n, k = 0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    if (rng.below(left) < pos_left) {
      ++k;
      --pos_left;
    }
    --left;
  }
  return flip_side ? pool_pos - k : k;
}

}  // namespace detail

/// Full polarity consistency analysis of two corpora's polarity tables.
inline PolarityComparison compare_polarity(std::span<const PolarityRecord> a,
                                           std::span<const PolarityRecord> b,
                                           const PolarityOptions& opts) {
  PolarityComparison out;
  out.regime = opts.regime;
  const auto thr = opts.thresholds.value_or(SupportThresholds::for_regime(opts.regime));
  out.set = select_comparison_set(a, b, thr, opts.include_tails);
  const auto ma = detail::by_emoji(a), mb = detail::by_emoji(b);
  detail::MatchedView v;
  for (std::size_t i = 0; i < out.set.emojis.size(); ++i) {
    auto ra = *ma.at(out.set.emojis[i]);
    auto rb = *mb.at(out.set.emojis[i]);
    ra.in_tail = rb.in_tail = out.set.in_tail[i];
    out.records_a.push_back(ra);
    out.records_b.push_back(rb);
    v.theta_a.push_back(ra.theta);
    v.theta_b.push_back(rb.theta);
    v.n_a.push_back(static_cast<double>(ra.total()));
    v.n_b.push_back(static_cast<double>(rb.total()));
  }
  out.weights = harmonic_weights(v.n_a, v.n_b);
  FlipOptions fo = opts.flip;
  fo.threads = opts.threads;
  out.flips = flip_analysis(out.records_a, out.records_b, out.set.emojis, fo, out.weights);
  for (const auto& r : out.flips.records) v.flip.push_back(r.flip);

  std::vector<std::size_t> all_rows(out.set.emojis.size()), thr_rows;
  for (std::size_t i = 0; i < all_rows.size(); ++i) {
    all_rows[i] = i;
    if (out.set.meets_threshold[i]) thr_rows.push_back(i);
  }
  out.all = detail::metrics_for(v, all_rows, opts, 11);
  out.threshold_only = detail::metrics_for(v, thr_rows, opts, 12);

  if (opts.n_perm > 0) {
    const std::size_t n = all_rows.size();
    auto run = [&](const std::vector<std::size_t>& rows, PolarityMetrics& m,
                   std::uint64_t salt) {
      if (rows.empty()) return;
      m.maud_w_perm_p = stats::permutation_test(
          m.maud_w,
          [&](std::uint64_t s) {
            Rng rng(s);
            detail::MatchedView pv = v;
            for (std::size_t i = 0; i < n; ++i) {
              const auto& ra = out.records_a[i];
              const auto& rb = out.records_b[i];
              const std::uint64_t pool_pos = ra.pos + rb.pos;
              const std::uint64_t pool_n = ra.total() + rb.total();
              const std::uint64_t ka = detail::reassign(pool_pos, pool_n, ra.total(), rng);
              pv.theta_a[i] = jeffreys_theta(ka, ra.total() - ka);
              pv.theta_b[i] = jeffreys_theta(pool_pos - ka, rb.total() - (pool_pos - ka));
            }
            return detail::rho_maud(pv, rows).second;
          },
          opts.n_perm, stats::Tail::kGreater, derive_seed(opts.seed, salt), opts.threads);
    };
    run(all_rows, out.all, 21);
    run(thr_rows, out.threshold_only, 22);
  }
  return out;
}

inline PolarityComparison compare_polarity(std::span<const Post> a_posts,
                                           std::span<const Post> b_posts,
                                           const PolarityOptions& opts) {
  const auto ta = polarity_table(a_posts), tb = polarity_table(b_posts);
  return compare_polarity(ta, tb, opts);
}

}  // namespace emojilab
