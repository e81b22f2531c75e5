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

// Zero-shot transfer harness: train on a source corpus, test in-domain and
// on a target corpus, and report the accuracy gap with a stratified
// bootstrap interval and a permutation p-value.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "emojilab/emoji/modality.hpp"
#include "emojilab/error.hpp"
#include "emojilab/ingest/post.hpp"
#include "emojilab/ingest/split.hpp"
#include "emojilab/rng.hpp"
#include "emojilab/stats/stats.hpp"
#include "emojilab/transfer/logreg.hpp"
#include "emojilab/transfer/tfidf.hpp"

namespace emojilab {

enum class TransferRegime { kCrossAsset, kCrossPlatform, kCrossLanguage };

inline const char* to_string(TransferRegime r) {
  switch (r) {
    case TransferRegime::kCrossAsset:
      return "cross_asset";
    case TransferRegime::kCrossPlatform:
      return "cross_platform";
    case TransferRegime::kCrossLanguage:
      break;
  }
  return "cross_language";
}

inline TransferRegime parse_transfer_regime(std::string_view s) {
  if (s == "cross_asset" || s == "asset") return TransferRegime::kCrossAsset;
  if (s == "cross_platform" || s == "platform") return TransferRegime::kCrossPlatform;
  if (s == "cross_language" || s == "language") return TransferRegime::kCrossLanguage;
  throw InputError("unknown transfer regime '" + std::string(s) + "'");
}

struct TransferReport {
  std::optional<TransferRegime> regime;
  Modality modality = Modality::kTextEmoji;
  std::string model_id = "tfidf-logreg";
  double acc_in = 0;
  double acc_out = 0;
  double gap = 0;
  stats::IntervalEstimate gap_ci;
  stats::IntervalEstimate acc_in_ci;
  stats::IntervalEstimate acc_out_ci;
  double perm_p = 1;
  std::size_t n_train = 0;
  std::size_t n_test_in = 0;
  std::size_t n_test_out = 0;
  std::size_t n_features = 0;
  bool converged = true;
  int iterations = 0;
  std::vector<std::string> notes;
};

struct TransferOptions {
  std::uint64_t seed = 0;
  LogregOptions logreg;
  TfidfOptions tfidf;
  std::size_t target_cap = 5000;
  std::size_t n_boot = 1000;
  std::size_t n_perm = 1000;
  double level = 0.95;
  unsigned threads = 1;
  std::optional<TransferRegime> regime;
};

inline int label_sign(Label l) {
  if (l == Label::kPositive) return 1;
  if (l == Label::kNegative) return -1;
  throw InputError("unlabeled post in a labeled set");
}

/// Permutation test of an accuracy gap: the pooled per-example correctness
/// indicators are reassigned to the two domains (sizes kept) and the gap
/// recomputed; two-sided on |gap|, add-one p-value.
inline double transfer_permutation_test(std::span<const char> correct_in,
                                        std::span<const char> correct_out,
                                        std::size_t n_perm, std::uint64_t seed,
                                        unsigned threads = 1) {
  if (correct_in.empty() || correct_out.empty()) {
    throw InputError("permutation test needs predictions in both domains");
  }
  std::vector<char> pooled(correct_in.begin(), correct_in.end());
  pooled.insert(pooled.end(), correct_out.begin(), correct_out.end());
  std::size_t total_correct = 0;
  for (char c : pooled) total_correct += c != 0;
  const std::size_t n_in = correct_in.size();
  const double nin = static_cast<double>(n_in);
  const double nout = static_cast<double>(correct_out.size());
  std::size_t in_correct = 0;
  for (char c : correct_in) in_correct += c != 0;
  const double observed = static_cast<double>(in_correct) / nin -
                          static_cast<double>(total_correct - in_correct) / nout;
  return stats::permutation_test(
      observed,
      [&](std::uint64_t s) {
        std::vector<char> perm = pooled;
        Rng rng(s);
        rng.shuffle(std::span<char>(perm));
        std::size_t k = 0;
        for (std::size_t i = 0; i < n_in; ++i) k += perm[i] != 0;
        return static_cast<double>(k) / nin -
               static_cast<double>(total_correct - k) / nout;
      },
      n_perm, stats::Tail::kTwoSided, seed, threads);
}

namespace detail {

inline double accuracy(std::span<const char> correct) {
  std::size_t k = 0;
  for (char c : correct) k += c != 0;
  return static_cast<double>(k) / static_cast<double>(correct.size());
}

/// Fills the accuracy, gap, interval and permutation fields from per-example
/// correctness and gold classes of both test sets.
inline void score_report(TransferReport& rep, std::span<const char> correct_in,
                         std::span<const int> class_in, std::span<const char> correct_out,
                         std::span<const int> class_out, std::size_t n_boot,
                         std::size_t n_perm, double level, std::uint64_t seed,
                         unsigned threads) {
  if (correct_in.empty() || correct_out.empty()) {
    throw InputError("both test sets must be non-empty");
  }
  rep.n_test_in = correct_in.size();
  rep.n_test_out = correct_out.size();
  rep.acc_in = accuracy(correct_in);
  rep.acc_out = accuracy(correct_out);
  rep.gap = rep.acc_in - rep.acc_out;

  // Strata are the gold classes present in each test set.
  auto resampler = [](std::span<const int> cls) {
    std::vector<std::string> names;
    std::vector<int> strata;
    for (int c : cls) {
      const std::string name = c > 0 ? "pos" : "neg";
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) it = names.insert(names.end(), name);
      strata.push_back(static_cast<int>(it - names.begin()));
    }
    return stats::Resampler::stratified(strata, names);
  };
  const auto rs_in = resampler(class_in);
  const auto rs_out = resampler(class_out);
  if (n_boot > 0) {
    std::vector<double> ins(n_boot), outs(n_boot), gaps(n_boot);
    const std::uint64_t boot_seed = derive_seed(seed, 0xb007);
    parallel_for(n_boot, threads, [&](std::size_t r) {
      Rng rng(derive_seed(boot_seed, r));
      std::vector<std::size_t> idx;
      rs_in.draw(rng, idx);
      double k = 0;
      for (auto i : idx) k += correct_in[i] != 0;
      ins[r] = k / static_cast<double>(idx.size());
      rs_out.draw(rng, idx);
      k = 0;
      for (auto i : idx) k += correct_out[i] != 0;
      outs[r] = k / static_cast<double>(idx.size());
      gaps[r] = ins[r] - outs[r];
    });
    rep.acc_in_ci = stats::percentile_interval(rep.acc_in, std::move(ins), level);
    rep.acc_out_ci = stats::percentile_interval(rep.acc_out, std::move(outs), level);
    rep.gap_ci = stats::percentile_interval(rep.gap, std::move(gaps), level);
  } else {
    rep.acc_in_ci = {rep.acc_in, rep.acc_in, rep.acc_in, {}};
    rep.acc_out_ci = {rep.acc_out, rep.acc_out, rep.acc_out, {}};
    rep.gap_ci = {rep.gap, rep.gap, rep.gap, {}};
  }
  if (n_perm > 0) {
    rep.perm_p = transfer_permutation_test(correct_in, correct_out, n_perm,
                                           derive_seed(seed, 0x9e77), threads);
  }
}

}  // namespace detail

/// A trained source model: vectorizer plus classifier.
struct TransferModel {
  Modality modality = Modality::kTextEmoji;
  TfidfVectorizer vectorizer;
  LogisticModel model;

  std::vector<std::string> project(std::span<const Post> posts) const {
    std::vector<std::string> docs;
    docs.reserve(posts.size());
    for (const auto& p : posts) {
      docs.push_back(emoji::project_modality(p, modality, vectorizer.options().zwj_mode));
    }
    return docs;
  }

  /// 1 where the prediction matches the gold label.
  std::vector<char> correctness(std::span<const Post> posts) const {
    const auto x = vectorizer.transform(project(posts));
    std::vector<char> out(posts.size());
    for (std::size_t i = 0; i < posts.size(); ++i) {
      out[i] = model.predict(x, i) == label_sign(posts[i].label);
    }
    return out;
  }
};

inline TransferModel train_transfer_model(std::span<const Post> train, Modality modality,
                                          const TransferOptions& opts) {
  TransferModel tm;
  tm.modality = modality;
  tm.vectorizer = TfidfVectorizer(opts.tfidf);
  const auto docs = tm.project(train);
  bool any = false;
  for (const auto& d : docs) any = any || !d.empty();
  if (!any) {
    throw InputError(std::string("training set is empty under modality ") +
                     to_string(modality));
  }
  tm.vectorizer.fit(docs);
  const auto x = tm.vectorizer.transform(docs);
  std::vector<int> y;
  y.reserve(train.size());
  for (const auto& p : train) y.push_back(label_sign(p.label));
  tm.model = logreg_train(x, y, opts.logreg);
  return tm;
}

/// Trains on `source.train` under `modality` and evaluates on
/// `source.test_in` and `target_test` without refitting anything.
inline TransferReport run_transfer(const CorpusSplit& source,
                                   const std::vector<Post>& target_test,
                                   Modality modality, const TransferOptions& opts) {
  if (source.test_in.empty()) throw InputError("source split has no in-domain test set");
  if (target_test.empty()) throw InputError("target test set is empty");
  TransferReport rep;
  rep.regime = opts.regime;
  rep.modality = modality;
  const auto tm = train_transfer_model(source.train, modality, opts);
  rep.n_train = source.train.size();
  rep.n_features = tm.vectorizer.size();
  rep.converged = tm.model.converged;
  rep.iterations = tm.model.iterations;
  if (!rep.converged) rep.notes.push_back("optimizer stopped before reaching tolerance");

  std::vector<Post> capped;
  const std::vector<Post>* target = &target_test;
  if (opts.target_cap > 0 && target_test.size() > opts.target_cap) {
    capped = balanced_sample(target_test, opts.target_cap, derive_seed(opts.seed, 0x7a47));
    target = &capped;
  } else if (opts.target_cap > 0 && target_test.size() < opts.target_cap) {
    rep.notes.push_back("target test has " + std::to_string(target_test.size()) +
                        " posts, fewer than " + std::to_string(opts.target_cap) +
                        "; the full set was used");
  }
  for (const auto& n : source.notes) rep.notes.push_back(n);

  const auto cin = tm.correctness(source.test_in);
  const auto cout_ = tm.correctness(*target);
  std::vector<int> kin, kout;
  for (const auto& p : source.test_in) kin.push_back(label_sign(p.label));
  for (const auto& p : *target) kout.push_back(label_sign(p.label));
  detail::score_report(rep, cin, kin, cout_, kout, opts.n_boot, opts.n_perm, opts.level,
                       opts.seed, opts.threads);
  return rep;
}

// External predictions -----------------------------------------------------

struct Prediction {
  std::string id;
  Label gold = Label::kUnlabeled;
  Label pred = Label::kUnlabeled;
  std::optional<double> score;
  std::string domain;
};

namespace detail {

inline Label binary_label(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "pos") return Label::kPositive;
    if (s == "neg") return Label::kNegative;
  }
  throw InputError(where + ": expected \"pos\" or \"neg\"");
}

}  // namespace detail

/// Reads prediction JSONL. When `expected_domain` is set, records that carry
/// a "domain" field must match it.
inline std::vector<Prediction> read_predictions(std::istream& in, const std::string& source,
                                                const std::string& expected_domain = "") {
  std::vector<Prediction> out;
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(where + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
      throw InputError(where + ": missing string field \"id\"");
    }
    Prediction p;
    p.id = j["id"].get<std::string>();
    if (!j.contains("gold")) throw InputError(where + ": missing field \"gold\"");
    if (!j.contains("pred")) throw InputError(where + ": missing field \"pred\"");
    p.gold = detail::binary_label(j["gold"], where + " gold");
    p.pred = detail::binary_label(j["pred"], where + " pred");
    if (j.contains("score") && !j["score"].is_null()) {
      if (!j["score"].is_number()) throw InputError(where + ": \"score\" must be a number");
      p.score = j["score"].get<double>();
    }
    if (j.contains("domain")) {
      if (!j["domain"].is_string()) throw InputError(where + ": \"domain\" must be a string");
      p.domain = j["domain"].get<std::string>();
      if (p.domain != "in" && p.domain != "out") {
        throw InputError(where + ": domain must be \"in\" or \"out\"");
      }
      if (!expected_domain.empty() && p.domain != expected_domain) {
        throw InputError(where + ": domain \"" + p.domain + "\" in a file of \"" +
                         expected_domain + "\" predictions");
      }
    }
    auto [it, inserted] = seen.emplace(p.id, line_no);
    if (!inserted) {
      throw InputError(source + ": duplicate id '" + p.id + "' on lines " +
                       std::to_string(it->second) + " and " + std::to_string(line_no));
    }
    out.push_back(std::move(p));
  }
  if (out.empty()) throw InputError(source + ": no predictions");
  return out;
}

inline std::vector<Prediction> read_predictions_file(const std::string& path,
                                                     const std::string& expected_domain = "") {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_predictions(in, path, expected_domain);
}

/// Every prediction id must exist among `gold` with the same label.
inline void check_against_gold(std::span<const Prediction> preds,
                               std::span<const Post> gold) {
  std::unordered_map<std::string_view, Label> labels;
  for (const auto& p : gold) labels.emplace(p.id, p.label);
  for (const auto& p : preds) {
    auto it = labels.find(p.id);
    if (it == labels.end()) {
      throw InputError("prediction id '" + p.id + "' is not in the gold file");
    }
    if (it->second != p.gold) {
      throw InputError("prediction id '" + p.id + "' disagrees with the gold label");
    }
  }
}

struct EvaluateOptions {
  std::string model_id = "external";
  std::size_t n_boot = 1000;
  std::size_t n_perm = 1000;
  double level = 0.95;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

inline TransferReport evaluate_predictions(std::span<const Prediction> pred_in,
                                           std::span<const Prediction> pred_out,
                                           const EvaluateOptions& opts = {}) {
  TransferReport rep;
  rep.model_id = opts.model_id;
  auto unpack = [](std::span<const Prediction> ps, std::vector<char>& correct,
                   std::vector<int>& cls) {
    for (const auto& p : ps) {
      correct.push_back(p.gold == p.pred);
      cls.push_back(label_sign(p.gold));
    }
  };
  std::vector<char> cin, cout_;
  std::vector<int> kin, kout;
  unpack(pred_in, cin, kin);
  unpack(pred_out, cout_, kout);
  detail::score_report(rep, cin, kin, cout_, kout, opts.n_boot, opts.n_perm, opts.level,
                       opts.seed, opts.threads);
  return rep;
}

}  // namespace emojilab
