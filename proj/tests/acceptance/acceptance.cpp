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

// Acceptance driver. Prints one PASS, FAIL or SKIP line per criterion and
// exits non-zero when any criterion fails.
//
// The full-data checks run only when EMOJILAB_FULL_DATA names a directory
// laid out as described in the README; otherwise they are skipped.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "../oracles/reference.hpp"
#include "emojilab/align/align.hpp"
#include "emojilab/align/linalg.hpp"
#include "emojilab/divergence/divergence.hpp"
#include "emojilab/emoji/emoji.hpp"
#include "emojilab/ingest/jsonl.hpp"
#include "emojilab/ingest/split.hpp"
#include "emojilab/parallel.hpp"
#include "emojilab/polarity/polarity.hpp"
#include "emojilab/stats/stats.hpp"
#include "emojilab/synth/synth.hpp"
#include "emojilab/transfer/transfer.hpp"
#include "emojilab/unicode/grapheme.hpp"
#include "emojilab/unicode/utf8.hpp"

using namespace emojilab;
using linalg::Matrix;
namespace fs = std::filesystem;

namespace {

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status;
  std::string detail;
};

Outcome verdict(bool ok, std::string detail) {
  return {ok ? Status::kPass : Status::kFail, std::move(detail)};
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<double> random_distribution(std::size_t n, Rng& rng) {
  std::vector<double> p(n);
  double total = 0;
  for (auto& x : p) {
    x = rng.bernoulli(0.25) ? 0.0 : rng.uniform();
    total += x;
  }
  if (total == 0) {
    p[rng.below(n)] = 1;
    total = 1;
  }
  for (auto& x : p) x /= total;
  return p;
}

std::vector<std::string> random_ranking(std::size_t n, Rng& rng) {
  std::vector<std::string> pool;
  for (int i = 0; i < 30; ++i) pool.push_back("e" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  pool.resize(n);
  return pool;
}

Outcome metric_oracles() {
  const auto t0 = Clock::now();
  Rng rng(20260101);
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.below(20);
    const auto p = random_distribution(n, rng), q = random_distribution(n, rng);
    worst = std::max({worst, std::abs(jsd(p, q) - reference::jsd(p, q)),
                      std::abs(total_variation(p, q) - reference::tv(p, q)),
                      std::abs(bhattacharyya(p, q) - reference::bc(p, q))});
    const auto a = random_ranking(n, rng), b = random_ranking(n, rng);
    const double persistence = 0.05 + 0.9 * rng.uniform();
    worst = std::max(
        {worst,
         std::abs(rbo(a, b, persistence) - reference::rbo_extrapolated(a, b, persistence)),
         std::abs(rbo(a, b, persistence, RboVariant::kTruncated) -
                  reference::rbo_truncated(a, b, persistence))});
  }
  const double secs = seconds_since(t0);
  return verdict(worst <= 1e-10 && secs < 10,
                 fmt("1000 pairs, max abs error %.2e, %.2f s", worst, secs));
}

Outcome rbo_fixed_points() {
  const std::vector<std::string> abc = {"a", "b", "c"}, bac = {"b", "a", "c"},
                                 xyz = {"x", "y", "z"};
  const double same = rbo(abc, abc), disjoint = rbo(abc, xyz), swapped = rbo(abc, bac, 0.9);
  const bool ok = std::abs(same - 1) <= 1e-12 && disjoint == 0 &&
                  std::abs(swapped - 0.900) <= 1e-12;
  return verdict(ok, fmt("identical %.15f, disjoint %.15f, swapped head %.15f", same,
                         disjoint, swapped));
}

Matrix gaussian(std::size_t n, std::size_t d, Rng& rng) {
  Matrix m(n, d);
  for (double& x : m.data()) x = rng.normal();
  return m;
}

double residual(const Matrix& a, const Matrix& r, const Matrix& b) {
  return linalg::frobenius(linalg::subtract(linalg::multiply(a, r), b));
}

Outcome procrustes_planted() {
  const auto t0 = Clock::now();
  constexpr std::size_t kCases = 100, kRandomMaps = 1000;
  std::vector<double> cos_err(kCases), nn1(kCases);
  std::vector<std::size_t> beaten(kCases);
  parallel_for(kCases, worker_count(), [&](std::size_t c) {
    Rng rng(derive_seed(777, c));
    const Matrix a = gaussian(50, 32, rng);
    const Matrix r0 = linalg::random_orthogonal(32, rng);
    const Matrix b = linalg::multiply(a, r0);
    const auto res =
        score_alignment(centroid_matrix_from(a), centroid_matrix_from(b), procrustes(a, b));
    cos_err[c] = std::abs(res.mean_cosine - 1);
    nn1[c] = res.nn_at.at(1);

    // Optimality on a noisy target, where the fit is not exact.
    Matrix noisy = b;
    for (double& x : noisy.data()) x += 0.5 * rng.normal();
    const double best = residual(a, procrustes(a, noisy), noisy);
    for (std::size_t k = 0; k < kRandomMaps; ++k) {
      beaten[c] += best < residual(a, linalg::random_orthogonal(32, rng), noisy);
    }
  });
  const double worst_cos = *std::max_element(cos_err.begin(), cos_err.end());
  const double min_nn = *std::min_element(nn1.begin(), nn1.end());
  const std::size_t total_beaten = std::accumulate(beaten.begin(), beaten.end(), std::size_t{0});
  const double secs = seconds_since(t0);
  const bool ok = worst_cos <= 1e-8 && min_nn == 1.0 &&
                  total_beaten == kCases * kRandomMaps && secs < 30;
  return verdict(ok, fmt("100 cases (50x32), max |cos-1| %.2e, min NN@1 %.3f, "
                         "beat %zu/%zu random maps, %.2f s",
                         worst_cos, min_nn, total_beaten, kCases * kRandomMaps, secs));
}

Outcome weighted_spearman_oracle() {
  Rng rng(606);
  double worst = 0;
  std::size_t evaluated = 0;
  for (int c = 0; c < 500; ++c) {
    std::vector<double> x(6), w(6), y = {1, 2, 3, 4, 5, 6};
    for (auto& v : x) v = rng.uniform();
    for (auto& v : w) v = 0.01 + rng.uniform();
    do {
      worst = std::max(worst, std::abs(weighted_spearman(x, y, w) -
                                       reference::weighted_rank_correlation(x, y, w)));
      ++evaluated;
    } while (std::next_permutation(y.begin(), y.end()));
  }
  return verdict(worst <= 1e-10, fmt("500 weight draws x 720 orderings (%zu evaluations), "
                                     "max abs error %.2e",
                                     evaluated, worst));
}

synth::Spec flip_spec(std::uint64_t seed) {
  synth::Spec s;
  s.seed = seed;
  s.vocab_overlap = 1;
  s.words_per_post = 4;
  const std::vector<std::pair<std::string, double>> stable = {
      {"🚀", 0.8}, {"📉", 0.2}, {"🔥", 0.7}, {"😭", 0.3}};
  for (auto* c : {&s.a, &s.b}) {
    c->n_posts = 5000;  // about 1000 posts per emoji
    c->emoji_rate = 1;
    c->text_vocab = 40;
    for (const auto& [e, theta] : stable) c->emojis[e] = {1, theta};
  }
  s.a.name = "alpha";
  s.b.name = "beta";
  s.a.emojis["🐻"] = {1, 0.9};
  s.b.emojis["🐻"] = {1, 0.1};
  return s;
}

Outcome planted_flip_recovery() {
  const std::vector<std::string> shared = {"🐻", "🔥", "📉", "😭", "🚀"};
  std::vector<char> exact(50);
  std::vector<std::size_t> false_pos(50);
  parallel_for(50, worker_count(), [&](std::size_t s) {
    const auto pair = synth::generate(flip_spec(1000 + s));
    const auto res = flip_analysis(std::span<const Post>(pair.a), std::span<const Post>(pair.b),
                                   shared, {.n_boot = 1000, .seed = s});
    const auto flipped = res.flipped();
    exact[s] = std::find(flipped.begin(), flipped.end(), "🐻") != flipped.end();
    false_pos[s] = flipped.size() - (exact[s] ? 1 : 0);
  });
  const auto hits = std::count(exact.begin(), exact.end(), 1);
  const auto fps = std::accumulate(false_pos.begin(), false_pos.end(), std::size_t{0});
  return verdict(hits == 50 && fps == 0,
                 fmt("planted flip found in %ld/50 seeds, %zu false positives", hits, fps));
}

Outcome identical_generators() {
  auto s = flip_spec(42);
  s.b.emojis["🐻"] = {1, 0.9};
  const auto pair = synth::generate(s);
  const auto a = build_distribution(std::span<const Post>(pair.a), 100);
  const auto b = build_distribution(std::span<const Post>(pair.b), 100);
  const auto scores = compare_distributions(a, b);
  const auto res = flip_analysis(std::span<const Post>(pair.a), std::span<const Post>(pair.b),
                                 a.vocab, {.n_boot = 1000, .seed = 42});
  return verdict(scores.jsd < 0.05 && res.flip_rate == 0,
                 fmt("JSD %.4f, flip rate %.3f", scores.jsd, res.flip_rate));
}

double mean_of(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

Outcome bootstrap_coverage() {
  constexpr double kTruth = 0.3;
  std::vector<char> covered(200);
  parallel_for(200, worker_count(), [&](std::size_t t) {
    Rng rng(derive_seed(31337, t));
    std::vector<double> data(200);
    for (auto& x : data) x = rng.bernoulli(kTruth) ? 1.0 : 0.0;
    const auto est = stats::bootstrap(
        mean_of, data, {.n_replicates = 1000, .level = 0.95, .master_seed = derive_seed(99, t)});
    covered[t] = est.lo <= kTruth && kTruth <= est.hi;
  });
  const double rate = std::count(covered.begin(), covered.end(), 1) / 200.0;
  return verdict(rate >= 0.93 && rate <= 0.97,
                 fmt("95%% interval covered the mean in %.1f%% of 200 trials", 100 * rate));
}

Outcome permutation_uniformity() {
  constexpr std::size_t kDatasets = 500;
  std::vector<double> ps(kDatasets);
  for (std::size_t t = 0; t < kDatasets; ++t) {
    Rng rng(derive_seed(4242, t));
    std::vector<double> pooled(50);
    for (auto& x : pooled) x = rng.normal();
    auto diff = [](std::span<const double> v) {
      return mean_of(v.first(25)) - mean_of(v.subspan(25));
    };
    const double observed = diff(pooled);
    ps[t] = stats::permutation_test(
        observed,
        [&](std::uint64_t seed) {
          Rng r(seed);
          auto shuffled = pooled;
          for (std::size_t i = shuffled.size(); i > 1; --i) {
            std::swap(shuffled[i - 1], shuffled[r.below(i)]);
          }
          return diff(shuffled);
        },
        999, stats::Tail::kTwoSided, derive_seed(5151, t), worker_count());
  }
  const auto ks = stats::ks_uniform(ps);
  return verdict(ks.p_value > 0.01, fmt("%zu null datasets, KS D %.4f, p %.3f", kDatasets,
                                        ks.statistic, ks.p_value));
}

SparseMatrix random_sparse(std::size_t rows, std::size_t cols, double density, Rng& rng) {
  SparseMatrix m;
  m.cols = cols;
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::pair<std::uint32_t, double>> row;
    for (std::size_t j = 0; j < cols; ++j) {
      if (rng.bernoulli(density)) row.emplace_back(static_cast<std::uint32_t>(j), rng.normal());
    }
    m.append_row(row);
  }
  return m;
}

bool never_increases(const LogisticModel& m) {
  for (std::size_t i = 1; i < m.objective_history.size(); ++i) {
    if (m.objective_history[i] > m.objective_history[i - 1]) return false;
  }
  return true;
}

Outcome logreg_gradient() {
  Rng rng(515);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 5 + rng.below(30), d = 2 + rng.below(10);
    const auto x = random_sparse(n, d, 0.6, rng);
    std::vector<int> y(n);
    for (auto& v : y) v = rng.bernoulli(0.5) ? 1 : -1;
    std::vector<double> theta(d + 1);
    for (auto& v : theta) v = rng.normal();
    const double c = 0.1 + 2 * rng.uniform();
    std::vector<double> grad;
    logreg_objective(x, y, theta, c, &grad);
    const double h = 1e-5;
    for (std::size_t k = 0; k <= d; ++k) {
      auto tp = theta, tm = theta;
      tp[k] += h;
      tm[k] -= h;
      const double fd = (logreg_objective(x, y, tp, c) - logreg_objective(x, y, tm, c)) / (2 * h);
      const double scale = std::max({std::abs(grad[k]), std::abs(fd), 1e-3});
      worst = std::max(worst, std::abs(grad[k] - fd) / scale);
    }
  }
  return verdict(worst < 1e-5, fmt("100 instances, max relative error %.2e", worst));
}

Outcome logreg_separable_and_monotone() {
  Rng rng(717);
  int separable_ok = 0, monotone_ok = 0, runs = 0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 200, d = 10;
    std::vector<double> w(d);
    for (auto& v : w) v = rng.normal();
    SparseMatrix x;
    x.cols = d;
    std::vector<int> y;
    while (y.size() < n) {
      std::vector<std::pair<std::uint32_t, double>> row;
      std::vector<double> dense(d);
      for (std::size_t j = 0; j < d; ++j) {
        dense[j] = rng.normal();
        row.emplace_back(static_cast<std::uint32_t>(j), dense[j]);
      }
      const double s = std::inner_product(w.begin(), w.end(), dense.begin(), 0.0);
      if (std::abs(s) < 0.5) continue;  // keep a margin
      x.append_row(row);
      y.push_back(s > 0 ? 1 : -1);
    }
    const auto m = logreg_train(x, y, {.c = 100});
    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i) correct += m.predict(x, i) == y[i];
    separable_ok += correct == n;
    monotone_ok += never_increases(m);
    ++runs;

    // Noisy labels as well, for the monotonicity part.
    const auto xr = random_sparse(150, 12, 0.5, rng);
    std::vector<int> yr(150);
    for (auto& v : yr) v = rng.bernoulli(0.5) ? 1 : -1;
    monotone_ok += never_increases(logreg_train(xr, yr, {.c = 0.5 + rng.uniform()}));
    ++runs;
  }
  return verdict(separable_ok == 20 && monotone_ok == runs,
                 fmt("separable fits %d/20 at 100%% training accuracy, "
                     "objective non-increasing in %d/%d runs",
                     separable_ok, monotone_ok, runs));
}

Outcome synthetic_transfer() {
  const auto t0 = Clock::now();
  synth::Spec s;
  s.seed = 2026;
  s.vocab_overlap = 0;
  s.words_per_post = 6;
  for (auto* c : {&s.a, &s.b}) {
    c->n_posts = 8000;
    c->emoji_rate = 0.8;
    c->text_signal = 0.5;
    c->text_vocab = 80;
    c->emojis = {{"🚀", {1, 0.9}}, {"🔥", {1, 0.8}}, {"📉", {1, 0.1}}, {"😭", {1, 0.2}}};
  }
  s.a.name = "source";
  s.b.name = "target";
  const auto pair = synth::generate(s);
  const auto split = make_split(pair.a, {5000, 0, 1000}, 11);
  const auto target = balanced_sample(pair.b, 1000, 12);
  TransferOptions opts;
  opts.seed = 13;
  opts.threads = worker_count();
  const auto e = run_transfer(split, target, Modality::kEmoji, opts);
  const auto t = run_transfer(split, target, Modality::kText, opts);
  const auto te = run_transfer(split, target, Modality::kTextEmoji, opts);
  const double secs = seconds_since(t0);
  const bool ok = e.gap < 0.05 && t.acc_out >= 0.45 && t.acc_out <= 0.55 && te.gap < t.gap &&
                  t.perm_p < 0.01 && secs < 120;
  return verdict(ok, fmt("E gap %.3f, T acc_out %.3f, T gap %.3f (p %.4f), TE gap %.3f, %.1f s",
                         e.gap, t.acc_out, t.gap, t.perm_p, te.gap, secs));
}

Outcome emoji_fixture() {
  std::ifstream in(std::string(EMOJILAB_TEST_DATA) + "/emoji_fixture.json");
  if (!in) return {Status::kFail, "fixture file not found"};
  const auto fixture = nlohmann::json::parse(in);
  std::size_t cases = 0, passed = 0;
  std::string first_failure;
  for (const auto& c : fixture["cases"]) {
    ++cases;
    const auto input = c["input"].get<std::string>();
    const bool ok =
        emoji::extract_emoji_strings(input, emoji::ZwjMode::kSequence) ==
            c["default"].get<std::vector<std::string>>() &&
        emoji::extract_emoji_strings(input, emoji::ZwjMode::kLiteral) ==
            c["literal"].get<std::vector<std::string>>();
    passed += ok;
    if (!ok && first_failure.empty()) first_failure = c["name"].get<std::string>();
  }
  return verdict(cases == 60 && passed == cases,
                 fmt("%zu/%zu cases in both modes%s%s", passed, cases,
                     first_failure.empty() ? "" : ", first failure: ", first_failure.c_str()));
}

Outcome normalize_idempotence() {
  const std::vector<char32_t> pool = {
      U'a',     U'7',     U' ',     U'#',     U'*',     0x20E3,   0xFE0F,   0xFE0E,
      0x200D,   0x1F3FB,  0x1F3FF,  0x1F44D,  0x1F468,  0x1F469,  0x1F467,  0x2764,
      0x1F525,  0x1F680,  0x1F1FA,  0x1F1F8,  0x1F1EF,  0x1F3F4,  0xE0067,  0xE007F,
      0x2640,   0x2642,   0x1F9D1,  0x1F4BB,  0x00A9,   0x263A,   0x0301,   0x1F9B0};
  Rng rng(100000);
  std::size_t clusters = 0, violations = 0;
  std::string example;
  for (int t = 0; t < 100000; ++t) {
    std::vector<char32_t> cps(1 + rng.below(8));
    for (auto& cp : cps) cp = pool[rng.below(pool.size())];
    const std::string s = unicode::encode(cps);
    for (const auto& g : unicode::segment_graphemes(s)) {
      const std::string_view cluster = std::string_view(s).substr(g.offset, g.length);
      if (!emoji::is_emoji_cluster(cluster)) continue;
      ++clusters;
      const std::string once = emoji::normalize_emoji(cluster);
      bool ok = emoji::is_emoji_cluster(once) && emoji::normalize_emoji(once) == once;
      for (const auto& piece : emoji::normalize_emoji(cluster, emoji::ZwjMode::kLiteral)) {
        ok = ok && emoji::normalize_emoji(piece, emoji::ZwjMode::kLiteral) ==
                       std::vector<std::string>{piece};
      }
      if (!ok) {
        ++violations;
        if (example.empty()) example = std::string(cluster);
      }
    }
  }
  return verdict(violations == 0,
                 fmt("100000 random strings, %zu emoji clusters, %zu violations%s%s", clusters,
                     violations, example.empty() ? "" : ", e.g. ", example.c_str()));
}

std::vector<Post> load(const fs::path& p) { return read_posts_file(p.string()).posts; }

Outcome full_data_divergence(const char* root) {
  if (!root) return {Status::kSkip, "EMOJILAB_FULL_DATA not set"};
  const fs::path dir(root), a = dir / "stocks.jsonl", b = dir / "crypto.jsonl";
  if (!fs::exists(a) || !fs::exists(b)) return {Status::kSkip, "stocks/crypto corpora missing"};
  const auto pa = load(a), pb = load(b);
  const auto s = compare_distributions(build_distribution(std::span<const Post>(pa), 100),
                                       build_distribution(std::span<const Post>(pb), 100));
  const bool ok = s.jsd >= 0.274 && s.jsd <= 0.277 && std::abs(s.tv - 0.256) <= 0.0005 &&
                  std::abs(s.bc - 0.945) <= 0.0005 && std::abs(s.rbo - 0.689) <= 0.0005;
  return verdict(ok, fmt("JSD %.4f, TV %.4f, BC %.4f, RBO %.4f", s.jsd, s.tv, s.bc, s.rbo));
}

Outcome full_data_transfer(const char* root) {
  if (!root) return {Status::kSkip, "EMOJILAB_FULL_DATA not set"};
  struct Row {
    const char* source;
    const char* target;
    Modality modality;
    double acc_in;
    double gap;
  };
  const std::vector<Row> rows = {
      {"crypto", "stocks.jsonl", Modality::kEmoji, 0.768, 0.053},
      {"crypto", "stocks.jsonl", Modality::kText, 0.845, 0.106},
      {"crypto", "stocks.jsonl", Modality::kTextEmoji, 0.852, 0.087},
      {"btc", "twitter_btc.jsonl", Modality::kEmoji, 0.738, 0.035},
      {"btc", "twitter_btc.jsonl", Modality::kText, 0.831, 0.191},
      {"btc", "twitter_btc.jsonl", Modality::kTextEmoji, 0.836, 0.131}};
  const fs::path dir(root);
  for (const auto& r : rows) {
    for (const auto& f : {dir / r.source / "train.jsonl", dir / r.source / "test.jsonl",
                          dir / r.target}) {
      if (!fs::exists(f)) return {Status::kSkip, f.string() + " missing"};
    }
  }
  std::string detail;
  bool ok = true;
  for (const auto& r : rows) {
    CorpusSplit split;
    split.train = load(dir / r.source / "train.jsonl");
    split.test_in = load(dir / r.source / "test.jsonl");
    std::vector<Post> target;
    for (auto& p : load(dir / r.target)) {
      if (p.label != Label::kUnlabeled) target.push_back(std::move(p));
    }
    TransferOptions opts;
    opts.threads = worker_count();
    const auto rep = run_transfer(split, target, r.modality, opts);
    ok = ok && std::abs(rep.acc_in - r.acc_in) <= 0.01 && std::abs(rep.gap - r.gap) <= 0.01;
    detail += fmt("%s/%s acc %.3f gap %.3f; ", r.source, to_string(r.modality), rep.acc_in,
                  rep.gap);
  }
  return verdict(ok, detail);
}

}  // namespace

int main() {
  const char* full = std::getenv("EMOJILAB_FULL_DATA");
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"metric-oracles", metric_oracles},
      {"rbo-fixed-points", rbo_fixed_points},
      {"procrustes-planted-rotation", procrustes_planted},
      {"weighted-spearman-oracle", weighted_spearman_oracle},
      {"planted-flip-recovery", planted_flip_recovery},
      {"synthetic-identical-generators", identical_generators},
      {"bootstrap-coverage", bootstrap_coverage},
      {"permutation-null-uniformity", permutation_uniformity},
      {"logreg-gradient-check", logreg_gradient},
      {"logreg-separable-monotone", logreg_separable_and_monotone},
      {"synthetic-transfer-gaps", synthetic_transfer},
      {"emoji-fixture-both-modes", emoji_fixture},
      {"normalize-emoji-idempotence", normalize_idempotence},
      {"full-data-divergence", [full] { return full_data_divergence(full); }},
      {"full-data-transfer", [full] { return full_data_transfer(full); }},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {Status::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Status::kPass ? "PASS" : o.status == Status::kFail ? "FAIL" : "SKIP";
    failures += o.status == Status::kFail;
    std::printf("%s %s: %s\n", tag, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
