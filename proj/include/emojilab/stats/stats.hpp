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

// Resampling inference: percentile bootstrap intervals, permutation tests,
// a Kolmogorov-Smirnov uniformity check and pairwise label agreement.
//
// Replicate r always draws from Rng(derive_seed(master_seed, r)), and
// replicate values are stored by index, so results do not depend on the
// thread count.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emojilab/error.hpp"
#include "emojilab/ingest/post.hpp"
#include "emojilab/parallel.hpp"
#include "emojilab/rng.hpp"

namespace emojilab::stats {

enum class ResampleUnit { kPost, kEmoji, kMonthBlock, kStratifiedClass };

inline const char* to_string(ResampleUnit u) {
  switch (u) {
    case ResampleUnit::kPost:
      return "post";
    case ResampleUnit::kEmoji:
      return "emoji";
    case ResampleUnit::kMonthBlock:
      return "month_block";
    case ResampleUnit::kStratifiedClass:
      break;
  }
  return "stratified_class";
}

struct ResamplePlan {
  ResampleUnit unit = ResampleUnit::kPost;
  std::size_t n_replicates = 1000;
  double level = 0.95;
  std::uint64_t master_seed = 0;
  unsigned threads = 1;

  void validate() const {
    if (n_replicates < 1) throw InputError("n_replicates must be at least 1");
    if (!(level > 0 && level < 1)) {
      throw InputError("confidence level must lie in (0, 1)");
    }
  }
};

struct ReplicateSummary {
  std::size_t count = 0;
  double mean = 0;
  double sd = 0;
};

struct IntervalEstimate {
  double point = 0;
  double lo = 0;
  double hi = 0;
  ReplicateSummary replicates;
};

/// Linear-interpolation quantile of sorted data (Hyndman-Fan type 7).
inline double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw InputError("quantile of an empty sample");
  const double h = (static_cast<double>(sorted.size()) - 1) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

inline double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return quantile_sorted(values, 0.5);
}

inline ReplicateSummary summarize(std::span<const double> values) {
  ReplicateSummary s;
  s.count = values.size();
  if (values.empty()) return s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  double ss = 0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.sd = values.size() > 1
             ? std::sqrt(ss / static_cast<double>(values.size() - 1))
             : 0.0;
  return s;
}

/// Percentile interval at `level` from bootstrap replicate values.
inline IntervalEstimate percentile_interval(double point,
                                            std::vector<double> replicates,
                                            double level) {
  IntervalEstimate est;
  est.point = point;
  est.replicates = summarize(replicates);
  std::sort(replicates.begin(), replicates.end());
  const double alpha = (1 - level) / 2;
  est.lo = quantile_sorted(replicates, alpha);
  est.hi = quantile_sorted(replicates, 1 - alpha);
  return est;
}

/// Draws resamples of record indices according to a resampling unit.
///
///   post / emoji       n indices drawn uniformly with replacement;
///   month_block        whole blocks (months) drawn with replacement, each
///                      contributing its records in their original order;
///   stratified_class   each stratum resampled within itself, keeping its
///                      size, so class composition is preserved.
class Resampler {
 public:
  /// Independent records (post or emoji units).
  static Resampler simple(std::size_t n,
                          ResampleUnit unit = ResampleUnit::kPost) {
    if (n == 0) throw InputError("cannot resample an empty collection");
    Resampler r;
    r.unit_ = unit;
    r.groups_.emplace_back(n);
    std::iota(r.groups_[0].begin(), r.groups_[0].end(), std::size_t{0});
    return r;
  }

  /// Month blocks: `block_keys[i]` is the block (e.g. month_key) of record i.
  static Resampler blocks(std::span<const std::int64_t> block_keys) {
    if (block_keys.empty()) throw InputError("cannot resample an empty collection");
    Resampler r;
    r.unit_ = ResampleUnit::kMonthBlock;
    std::map<std::int64_t, std::size_t> slot;
    for (std::size_t i = 0; i < block_keys.size(); ++i) {
      auto [it, inserted] = slot.emplace(block_keys[i], r.groups_.size());
      if (inserted) r.groups_.emplace_back();
      r.groups_[it->second].push_back(i);
    }
    return r;
  }

  /// Strata: `strata[i]` in [0, names.size()) is the class of record i.
  /// Every named stratum must be non-empty.
  static Resampler stratified(std::span<const int> strata,
                              std::span<const std::string> names) {
    Resampler r;
    r.unit_ = ResampleUnit::kStratifiedClass;
    r.groups_.resize(names.size());
    for (std::size_t i = 0; i < strata.size(); ++i) {
      const int s = strata[i];
      if (s < 0 || static_cast<std::size_t>(s) >= names.size()) {
        throw InputError("stratum index out of range");
      }
      r.groups_[static_cast<std::size_t>(s)].push_back(i);
    }
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (r.groups_[k].empty()) {
        throw InputError("empty stratum '" + names[k] + "'");
      }
    }
    return r;
  }

  ResampleUnit unit() const { return unit_; }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& g : groups_) n += g.size();
    return n;
  }

  /// Fills `out` with one resample of record indices.
  void draw(Rng& rng, std::vector<std::size_t>& out) const {
    out.clear();
    if (unit_ == ResampleUnit::kMonthBlock) {
      // As many blocks as the data has; the resample size varies with the
      // sizes of the drawn blocks.
      for (std::size_t b = 0; b < groups_.size(); ++b) {
        const auto& g = groups_[rng.below(groups_.size())];
        out.insert(out.end(), g.begin(), g.end());
      }
      return;
    }
    for (const auto& g : groups_) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        out.push_back(g[rng.below(g.size())]);
      }
    }
  }

 private:
  ResampleUnit unit_ = ResampleUnit::kPost;
  std::vector<std::vector<std::size_t>> groups_;
};

/// Runs `replicate(rng, r)` for r in [0, n) on derived streams and returns
/// the values in replicate order.
template <typename Fn>
std::vector<double> run_replicates(std::size_t n, std::uint64_t master_seed,
                                   unsigned threads, Fn&& replicate) {
  std::vector<double> values(n);
  parallel_for(n, threads, [&](std::size_t r) {
    Rng rng(derive_seed(master_seed, r));
    values[r] = replicate(rng, r);
  });
  return values;
}

/// Percentile bootstrap of `statistic` over one collection. The statistic
/// receives the resampled record indices.
template <typename Statistic>
IntervalEstimate bootstrap(Statistic&& statistic, const Resampler& resampler,
                           const ResamplePlan& plan) {
  plan.validate();
  std::vector<std::size_t> all(resampler.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const double point = statistic(std::span<const std::size_t>(all));
  auto values = run_replicates(
      plan.n_replicates, plan.master_seed, plan.threads,
      [&](Rng& rng, std::size_t) {
        std::vector<std::size_t> idx;
        resampler.draw(rng, idx);
        return statistic(std::span<const std::size_t>(idx));
      });
  return percentile_interval(point, std::move(values), plan.level);
}

/// Convenience overload for a sample of values and a statistic over values.
inline IntervalEstimate bootstrap(
    const std::function<double(std::span<const double>)>& statistic,
    std::span<const double> data, ResamplePlan plan) {
  const auto resampler = Resampler::simple(data.size(), plan.unit);
  return bootstrap(
      [&](std::span<const std::size_t> idx) {
        std::vector<double> sample;
        sample.reserve(idx.size());
        for (auto i : idx) sample.push_back(data[i]);
        return statistic(sample);
      },
      resampler, plan);
}

enum class Tail { kGreater, kTwoSided };

inline const char* to_string(Tail t) {
  return t == Tail::kGreater ? "greater" : "two_sided";
}

/// Add-one permutation p-value: (1 + #extreme) / (n + 1).
inline double permutation_p_value(double observed,
                                  std::span<const double> null_values,
                                  Tail tail) {
  std::size_t extreme = 0;
  for (double v : null_values) {
    if (tail == Tail::kGreater ? v >= observed
                               : std::abs(v) >= std::abs(observed)) {
      ++extreme;
    }
  }
  return static_cast<double>(1 + extreme) /
         static_cast<double>(null_values.size() + 1);
}

/// Permutation test: `null_generator(seed)` returns one statistic under the
/// null; seeds are derive_seed(master_seed, r).
template <typename NullGenerator>
double permutation_test(double observed, NullGenerator&& null_generator,
                        std::size_t n_perm, Tail tail,
                        std::uint64_t master_seed, unsigned threads = 1) {
  if (n_perm < 1) throw InputError("n_perm must be at least 1");
  std::vector<double> nulls(n_perm);
  parallel_for(n_perm, threads, [&](std::size_t r) {
    nulls[r] = null_generator(derive_seed(master_seed, r));
  });
  return permutation_p_value(observed, nulls, tail);
}

struct KsResult {
  double statistic = 0;
  double p_value = 1;
};

/// Kolmogorov distribution tail P(K > x) = 2 sum (-1)^(k-1) exp(-2 k^2 x^2).
inline double kolmogorov_tail(double x) {
  if (x <= 0) return 1;
  if (x < 0.2) return 1;
  double sum = 0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 ? 1.0 : -1.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(2 * sum, 0.0, 1.0);
}

/// One-sample KS test of `values` against Uniform(0, 1), with Stephens'
/// small-sample adjustment of the asymptotic distribution.
inline KsResult ks_uniform(std::vector<double> values) {
  if (values.empty()) throw InputError("ks_uniform: empty sample");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = std::clamp(values[i], 0.0, 1.0);
    d = std::max({d, (static_cast<double>(i) + 1) / n - f,
                  f - static_cast<double>(i) / n});
  }
  const double rn = std::sqrt(n);
  return {d, kolmogorov_tail((rn + 0.12 + 0.11 / rn) * d)};
}

/// Pairwise agreement between binary labelers plus their majority vote.
struct AgreementMatrix {
  std::vector<std::string> names;  // labelers in input order, then "majority"
  std::vector<std::vector<double>> agreement;
  std::vector<int> majority;  // 1 = positive, 0 = negative
  std::size_t majority_ties = 0;
  std::string tie_rule = "ties resolved toward positive";
};

/// `labelers` maps a name to a vector of 0/1 labels (1 = positive).
/// `voters` selects whose labels form the majority vote; empty means all.
inline AgreementMatrix agreement_matrix(
    const std::vector<std::pair<std::string, std::vector<int>>>& labelers,
    const std::vector<std::string>& voters = {}) {
  if (labelers.empty()) throw InputError("agreement_matrix: no labelers");
  const std::size_t n = labelers.front().second.size();
  for (const auto& [name, labels] : labelers) {
    if (labels.size() != n) {
      throw InputError("agreement_matrix: '" + name + "' has " +
                       std::to_string(labels.size()) + " labels, expected " +
                       std::to_string(n));
    }
    for (int v : labels) {
      if (v != 0 && v != 1) {
        throw InputError("agreement_matrix: labels must be binary");
      }
    }
  }
  AgreementMatrix m;
  std::vector<const std::vector<int>*> columns;
  std::vector<const std::vector<int>*> voting;
  for (const auto& [name, labels] : labelers) {
    m.names.push_back(name);
    columns.push_back(&labels);
    if (voters.empty() ||
        std::find(voters.begin(), voters.end(), name) != voters.end()) {
      voting.push_back(&labels);
    }
  }
  if (voting.empty()) throw InputError("agreement_matrix: no voters matched");
  m.majority.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pos = 0;
    for (const auto* v : voting) pos += static_cast<std::size_t>((*v)[i]);
    const std::size_t neg = voting.size() - pos;
    if (pos == neg) ++m.majority_ties;
    m.majority[i] = pos >= neg ? 1 : 0;
  }
  m.names.push_back("majority");
  columns.push_back(&m.majority);
  const std::size_t k = columns.size();
  m.agreement.assign(k, std::vector<double>(k, 1.0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      std::size_t same = 0;
      for (std::size_t i = 0; i < n; ++i) same += (*columns[a])[i] == (*columns[b])[i];
      const double v = n ? static_cast<double>(same) / static_cast<double>(n) : 1.0;
      m.agreement[a][b] = m.agreement[b][a] = v;
    }
  }
  return m;
}

}  // namespace emojilab::stats
