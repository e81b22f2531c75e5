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

// JSON reports and their table projections.
//
// Every analysis writes one JSON document:
//
//   {"kind": "divergence" | "alignment" | "polarity" | "transfer" | "ingest",
//    "manifest": {...}, "result": {...}}
//
// Markdown and CSV tables are derived from one or more such documents of
// the same kind, one comparison per row:
//
//   divergence   Comparison | JSD | TV | BC | RBO            (+ CI columns)
//   descriptive  Corpus | Prevalence | Intensity | Vocab | Eff. N | Top-20 share
//   alignment    Comparison | Mean Cosine | NN@1 | NN@5
//   polarity     Comparison | rho_w | MAUD_w | Flip_w (%)     (+ CI columns)
//   transfer     Modality | Model | In-domain | Delta->target (+ CI columns)
//
// A trailing `*` marks a permutation p-value below 0.05 (0.01 for
// alignment). CSV cells carry full precision and split every interval into
// `_lo` and `_hi` columns.

#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "emojilab/align/align.hpp"
#include "emojilab/divergence/divergence.hpp"
#include "emojilab/emoji/modality.hpp"
#include "emojilab/error.hpp"
#include "emojilab/polarity/polarity.hpp"
#include "emojilab/report/manifest.hpp"
#include "emojilab/stats/stats.hpp"
#include "emojilab/transfer/transfer.hpp"

namespace emojilab::report {

inline std::string pair_label(const std::string& a, const std::string& b) {
  return a + "–" + b;
}

inline Json document(const std::string& kind, const RunManifest& manifest, Json result) {
  Json j;
  j["kind"] = kind;
  j["manifest"] = manifest.to_json();
  j["result"] = std::move(result);
  return j;
}

// Serialisation ------------------------------------------------------------

inline Json interval_json(const stats::IntervalEstimate& e) {
  return {{"lo", e.lo}, {"hi", e.hi}, {"replicates", e.replicates.count},
          {"sd", e.replicates.sd}};
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json descriptive_json(const std::string& corpus, const DescriptiveStats& s,
                             const std::optional<DescriptiveIntervals>& ci) {
  Json j;
  j["corpus"] = corpus;
  j["n_posts"] = s.n_posts;
  j["n_emoji_posts"] = s.n_emoji_posts;
  j["n_occurrences"] = s.n_occurrences;
  j["prevalence"] = s.prevalence;
  j["intensity"] = optional_json(s.intensity);
  j["vocab_size"] = s.vocab_size;
  j["effective_n"] = optional_json(s.effective_n);
  j["top20_share"] = optional_json(s.top20_share);
  if (ci) {
    j["ci_unit"] = stats::to_string(ci->unit);
    j["prevalence_ci"] = interval_json(ci->prevalence);
    j["intensity_ci"] = ci->intensity ? interval_json(*ci->intensity) : Json(nullptr);
  }
  return j;
}

struct DivergenceSettings {
  std::size_t top_k = 100;
  double rbo_p = 0.9;
  RboVariant variant = RboVariant::kExtrapolated;
  double level = 0.95;
  std::size_t n_boot = 0;
  std::size_t n_perm = 0;
};

inline Json divergence_json(const std::string& label, const DivergenceScores& s,
                            const DivergenceSettings& cfg,
                            const std::optional<DivergenceInference>& inf) {
  Json j;
  j["label"] = label;
  j["top_k"] = cfg.top_k;
  j["rbo_p"] = cfg.rbo_p;
  j["rbo_variant"] = cfg.variant == RboVariant::kExtrapolated ? "extrapolated" : "truncated";
  j["jsd"] = s.jsd;
  j["tv"] = s.tv;
  j["bc"] = s.bc;
  j["rbo"] = s.rbo;
  j["vocab_union_size"] = s.union_size;
  if (inf && cfg.n_boot > 0) {
    j["ci"] = {{"level", cfg.level},
               {"unit", "emoji"},
               {"jsd", interval_json(inf->jsd)},
               {"tv", interval_json(inf->tv)},
               {"bc", interval_json(inf->bc)},
               {"rbo", interval_json(inf->rbo)}};
  }
  if (inf && inf->jsd_p) {
    j["perm"] = {{"n", cfg.n_perm}, {"jsd_p", *inf->jsd_p}, {"tv_p", *inf->tv_p},
                 {"bc_p", *inf->bc_p}, {"rbo_p", *inf->rbo_p}};
  }
  return j;
}

inline Json alignment_json(const std::string& label, const AlignmentResult& r,
                           const CentroidMatrix& a, std::size_t n_samples,
                           std::size_t n_perm) {
  Json j;
  j["label"] = label;
  j["direction"] = r.direction;
  j["n_emojis"] = a.emojis.size();
  j["n_scored"] = r.n_scored;
  j["dim"] = a.dim();
  j["n_samples"] = n_samples;
  j["mean_cosine"] = r.mean_cosine;
  Json nn = Json::object();
  for (const auto& [k, v] : r.nn_at) nn[std::to_string(k)] = v;
  j["nn"] = std::move(nn);
  j["n_perm"] = n_perm;
  j["permutation_p"] = optional_json(r.permutation_p);
  j["excluded"] = r.excluded;
  return j;
}

inline Json metrics_json(const PolarityMetrics& m) {
  Json j;
  j["n_emojis"] = m.n_emojis;
  j["rho_w"] = optional_json(m.rho_w);
  j["maud"] = m.maud;
  j["maud_w"] = m.maud_w;
  j["flip_rate"] = m.flip_rate;
  j["flip_rate_w"] = m.flip_rate_w;
  j["flip_w_pct"] = 100 * m.flip_rate_w;
  j["rho_w_ci"] = m.rho_w_ci ? interval_json(*m.rho_w_ci) : Json(nullptr);
  j["maud_w_ci"] = m.maud_w_ci ? interval_json(*m.maud_w_ci) : Json(nullptr);
  j["maud_w_perm_p"] = optional_json(m.maud_w_perm_p);
  return j;
}

struct PolaritySettings {
  SupportThresholds thresholds;
  bool include_tails = true;
  std::size_t n_flip_boot = 1000;
  std::size_t n_boot = 0;
  std::size_t n_perm = 0;
  double level = 0.95;
};

inline Json polarity_json(const std::string& label, const PolarityComparison& c,
                          const PolaritySettings& cfg) {
  Json j;
  j["label"] = label;
  j["regime"] = to_string(c.regime);
  j["thresholds"] = {{"min_total", cfg.thresholds.min_total},
                     {"min_pos", cfg.thresholds.min_pos},
                     {"min_neg", cfg.thresholds.min_neg},
                     {"tail", cfg.thresholds.tail},
                     {"include_tails", cfg.include_tails}};
  j["flip_boot"] = cfg.n_flip_boot;
  j["n_boot"] = cfg.n_boot;
  j["n_perm"] = cfg.n_perm;
  j["level"] = cfg.level;
  j["all"] = metrics_json(c.all);
  j["threshold_only"] = metrics_json(c.threshold_only);
  Json rows = Json::array();
  for (std::size_t i = 0; i < c.set.emojis.size(); ++i) {
    const auto& ra = c.records_a[i];
    const auto& rb = c.records_b[i];
    const auto& f = c.flips.records[i];
    rows.push_back({{"emoji", c.set.emojis[i]},
                    {"pos_a", ra.pos},
                    {"neg_a", ra.neg},
                    {"pos_b", rb.pos},
                    {"neg_b", rb.neg},
                    {"theta_a", ra.theta},
                    {"theta_b", rb.theta},
                    {"weight", c.weights[i]},
                    {"meets_threshold", static_cast<bool>(c.set.meets_threshold[i])},
                    {"in_tail", static_cast<bool>(c.set.in_tail[i])},
                    {"median_a", f.median_a},
                    {"median_b", f.median_b},
                    {"delta", f.delta},
                    {"ci_lo", f.ci_lo},
                    {"ci_hi", f.ci_hi},
                    {"point_sign_differs", f.point_sign_differs},
                    {"flip", f.flip}});
  }
  j["emojis"] = std::move(rows);
  return j;
}

inline Json transfer_json(const std::string& source, const std::string& target,
                          const TransferReport& r, double level, std::size_t n_boot,
                          std::size_t n_perm) {
  Json j;
  j["label"] = source + " -> " + target;
  j["source"] = source;
  j["target"] = target;
  j["regime"] = r.regime ? Json(to_string(*r.regime)) : Json(nullptr);
  j["modality"] = to_string(r.modality);
  j["model"] = r.model_id;
  j["acc_in"] = r.acc_in;
  j["acc_out"] = r.acc_out;
  j["gap"] = r.gap;
  if (n_boot > 0) {
    j["ci"] = {{"level", level},
               {"unit", "stratified_class"},
               {"acc_in", interval_json(r.acc_in_ci)},
               {"acc_out", interval_json(r.acc_out_ci)},
               {"gap", interval_json(r.gap_ci)}};
  }
  j["n_perm"] = n_perm;
  j["perm_p"] = n_perm > 0 ? Json(r.perm_p) : Json(nullptr);
  j["n_train"] = r.n_train;
  j["n_test_in"] = r.n_test_in;
  j["n_test_out"] = r.n_test_out;
  j["n_features"] = r.n_features;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["notes"] = r.notes;
  return j;
}

inline std::string dump(const Json& j) {
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::strict) + "\n";
}

// Tables -------------------------------------------------------------------

/// One cell: literal text, a number with an optional mark, or an interval.
struct Cell {
  enum class Kind { kText, kNumber, kRange };
  Kind kind = Kind::kText;
  std::string text;
  std::optional<double> value;
  std::optional<std::pair<double, double>> interval;
  std::string mark;

  static Cell literal(std::string s) {
    Cell c;
    c.text = std::move(s);
    return c;
  }
  static Cell number(std::optional<double> v, std::string mark = {}) {
    Cell c;
    c.kind = Kind::kNumber;
    c.value = v;
    c.mark = std::move(mark);
    return c;
  }
  static Cell range(std::optional<std::pair<double, double>> iv) {
    Cell c;
    c.kind = Kind::kRange;
    c.interval = iv;
    return c;
  }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct RenderOptions {
  int digits = 3;
};

namespace detail {

inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string full(double v) { return Json(v).dump(); }

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline std::optional<double> num(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) return std::nullopt;
  return j[key].get<double>();
}

inline std::optional<std::pair<double, double>> span_of(const Json& j) {
  if (!j.is_object() || !j.contains("lo")) return std::nullopt;
  return std::pair{j["lo"].get<double>(), j["hi"].get<double>()};
}

inline std::string star(std::optional<double> p, double alpha) {
  return p && *p < alpha ? "*" : "";
}

inline std::string level_tag(const Json& ci) {
  const double level = ci.value("level", 0.95);
  return fixed(100 * level, level * 100 == std::floor(level * 100) ? 0 : 1) + "% CI";
}

}  // namespace detail

inline std::string to_markdown(const Table& t, const RenderOptions& opts = {}) {
  std::ostringstream out;
  out << '|';
  for (const auto& c : t.columns) out << ' ' << detail::md_field(c) << " |";
  out << "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i == 0 ? ":---|" : "---:|");
  out << '\n';
  for (const auto& row : t.rows) {
    out << '|';
    for (const auto& cell : row) {
      std::string s;
      switch (cell.kind) {
        case Cell::Kind::kText:
          s = detail::md_field(cell.text);
          break;
        case Cell::Kind::kNumber:
          s = cell.value ? detail::fixed(*cell.value, opts.digits) + cell.mark : "n/a";
          break;
        case Cell::Kind::kRange:
          if (cell.interval) {
            s = "[" + detail::fixed(cell.interval->first, opts.digits) + ", " +
                detail::fixed(cell.interval->second, opts.digits) + "]";
          }
          break;
      }
      out << ' ' << s << " |";
    }
    out << '\n';
  }
  return out.str();
}

/// Interval columns become `<name>_lo,<name>_hi`; values keep full precision.
inline std::string to_csv(const Table& t) {
  std::ostringstream out;
  const auto& first = t.rows.empty() ? std::vector<Cell>{} : t.rows.front();
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out << ',';
    if (i < first.size() && first[i].kind == Cell::Kind::kRange) {
      out << detail::csv_field(t.columns[i] + "_lo") << ','
          << detail::csv_field(t.columns[i] + "_hi");
    } else {
      out << detail::csv_field(t.columns[i]);
    }
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      const auto& c = row[i];
      if (c.kind == Cell::Kind::kRange) {
        if (c.interval) {
          out << detail::full(c.interval->first) << ',' << detail::full(c.interval->second);
        } else {
          out << ',';
        }
      } else if (c.kind == Cell::Kind::kNumber) {
        if (c.value) out << detail::full(*c.value);
      } else {
        out << detail::csv_field(c.text);
      }
    }
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline const Json& result_of(const Json& doc) {
  if (!doc.contains("result")) throw InputError("report has no result section");
  return doc["result"];
}

/// Adds a CI column after `name` when any row carries that interval.
inline bool any_ci(const std::vector<Json>& docs, const char* key) {
  for (const auto& d : docs) {
    const auto& r = result_of(d);
    if (r.contains("ci") && r["ci"].contains(key)) return true;
  }
  return false;
}

inline Table divergence_table(const std::vector<Json>& docs) {
  const bool ci = any_ci(docs, "jsd");
  std::string tag = "95% CI";
  for (const auto& d : docs) {
    if (result_of(d).contains("ci")) tag = level_tag(result_of(d)["ci"]);
  }
  Table t;
  t.columns = {"Comparison"};
  for (const char* m : {"JSD", "TV", "BC", "RBO"}) {
    t.columns.push_back(m);
    if (ci) t.columns.push_back(std::string(m) + " " + tag);
  }
  for (const auto& d : docs) {
    const auto& r = result_of(d);
    std::vector<Cell> row = {Cell::literal(r.value("label", ""))};
    std::optional<double> jsd_p;
    if (r.contains("perm")) jsd_p = num(r["perm"], "jsd_p");
    for (const char* k : {"jsd", "tv", "bc", "rbo"}) {
      row.push_back(Cell::number(num(r, k), std::string(k) == "jsd" ? star(jsd_p, 0.05) : ""));
      if (ci) {
        row.push_back(Cell::range(r.contains("ci") ? span_of(r["ci"][k])
                                                   : std::optional<std::pair<double, double>>{}));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Table descriptive_table(const std::vector<Json>& docs) {
  bool ci = false;
  for (const auto& d : docs) {
    for (const char* side : {"a", "b"}) {
      const auto& r = result_of(d);
      if (r.contains("descriptive") && r["descriptive"][side].contains("prevalence_ci")) ci = true;
    }
  }
  Table t;
  t.columns = {"Corpus", "Prevalence"};
  if (ci) t.columns.push_back("Prevalence 95% CI");
  t.columns.push_back("Intensity");
  if (ci) t.columns.push_back("Intensity 95% CI");
  for (const char* c : {"Vocab", "Eff. N", "Top-20 share"}) t.columns.push_back(c);
  std::vector<std::string> seen;
  for (const auto& d : docs) {
    const auto& r = result_of(d);
    if (!r.contains("descriptive")) throw InputError("report has no descriptive statistics");
    for (const char* side : {"a", "b"}) {
      const auto& s = r["descriptive"][side];
      const auto name = s.value("corpus", "");
      if (std::find(seen.begin(), seen.end(), name) != seen.end()) continue;
      seen.push_back(name);
      std::vector<Cell> row = {Cell::literal(name), Cell::number(num(s, "prevalence"))};
      if (ci) row.push_back(Cell::range(s.contains("prevalence_ci") ? span_of(s["prevalence_ci"]) : std::nullopt));
      row.push_back(Cell::number(num(s, "intensity")));
      if (ci) row.push_back(Cell::range(s.contains("intensity_ci") ? span_of(s["intensity_ci"]) : std::nullopt));
      row.push_back(Cell::literal(std::to_string(s.value("vocab_size", std::size_t{0}))));
      row.push_back(Cell::number(num(s, "effective_n")));
      row.push_back(Cell::number(num(s, "top20_share")));
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

inline Table alignment_table(const std::vector<Json>& docs) {
  Table t;
  t.columns = {"Comparison", "Mean Cosine", "NN@1", "NN@5"};
  for (const auto& d : docs) {
    const auto& r = result_of(d);
    const auto& nn = r.value("nn", Json::object());
    t.rows.push_back({Cell::literal(r.value("label", "")),
                      Cell::number(num(r, "mean_cosine"), star(num(r, "permutation_p"), 0.01)),
                      Cell::number(num(nn, "1")), Cell::number(num(nn, "5"))});
  }
  return t;
}

/// `set` is "all" (tail-augmented) or "threshold_only".
inline Table polarity_table(const std::vector<Json>& docs, const std::string& set) {
  bool ci = false;
  for (const auto& d : docs) {
    const auto& m = result_of(d)[set];
    if (m["rho_w_ci"].is_object() || m["maud_w_ci"].is_object()) ci = true;
  }
  const std::string tag = level_tag(result_of(docs.front()));
  Table t;
  t.columns = {"Comparison", "ρ_w"};
  if (ci) t.columns.push_back("ρ_w " + tag);
  t.columns.push_back("MAUD_w");
  if (ci) t.columns.push_back("MAUD_w " + tag);
  t.columns.push_back("Flip_w (%)");
  for (const auto& d : docs) {
    const auto& r = result_of(d);
    const auto& m = r[set];
    std::vector<Cell> row = {Cell::literal(r.value("label", "")), Cell::number(num(m, "rho_w"))};
    if (ci) row.push_back(Cell::range(span_of(m["rho_w_ci"])));
    row.push_back(Cell::number(num(m, "maud_w"), star(num(m, "maud_w_perm_p"), 0.05)));
    if (ci) row.push_back(Cell::range(span_of(m["maud_w_ci"])));
    row.push_back(Cell::number(num(m, "flip_w_pct")));
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Table polarity_detail_table(const std::vector<Json>& docs) {
  Table t;
  const bool many = docs.size() > 1;
  if (many) t.columns.push_back("comparison");
  for (const char* c : {"emoji", "theta_a", "theta_b", "weight", "flip", "ci_lo", "ci_hi"}) {
    t.columns.push_back(c);
  }
  for (const auto& d : docs) {
    const auto& r = result_of(d);
    for (const auto& e : r["emojis"]) {
      std::vector<Cell> row;
      if (many) row.push_back(Cell::literal(r.value("label", "")));
      row.push_back(Cell::literal(e["emoji"].get<std::string>()));
      row.push_back(Cell::number(num(e, "theta_a")));
      row.push_back(Cell::number(num(e, "theta_b")));
      row.push_back(Cell::number(num(e, "weight")));
      row.push_back(Cell::literal(e["flip"].get<bool>() ? "true" : "false"));
      row.push_back(Cell::number(num(e, "ci_lo")));
      row.push_back(Cell::number(num(e, "ci_hi")));
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

inline std::string modality_name(const std::string& m) {
  if (m == "E") return "Emoji";
  if (m == "T") return "Text";
  if (m == "TE") return "Text+Emoji";
  return m;
}

inline std::string model_name(const std::string& m) {
  return m == "tfidf-logreg" ? "TF-IDF" : m;
}

inline Table transfer_table(std::vector<Json> docs) {
  std::string target;
  for (const auto& d : docs) {
    const auto t = result_of(d).value("target", "");
    if (target.empty()) {
      target = t;
    } else if (t != target) {
      target = "target";
    }
  }
  if (target.empty()) target = "target";
  // Group rows by modality in E, T, TE order, keeping input order within.
  auto rank = [](const Json& d) {
    const auto m = result_of(d).value("modality", "");
    return m == "E" ? 0 : m == "T" ? 1 : 2;
  };
  std::stable_sort(docs.begin(), docs.end(),
                   [&](const Json& a, const Json& b) { return rank(a) < rank(b); });
  const bool ci = any_ci(docs, "gap");
  std::string tag = "95% CI";
  for (const auto& d : docs) {
    if (result_of(d).contains("ci")) tag = level_tag(result_of(d)["ci"]);
  }
  Table t;
  t.columns = {"Modality", "Model", "In-domain"};
  if (ci) t.columns.push_back("In-domain " + tag);
  t.columns.push_back("Δ→" + target);
  if (ci) t.columns.push_back("Δ " + tag);
  std::string last;
  for (const auto& d : docs) {
    const auto& r = result_of(d);
    const auto m = modality_name(r.value("modality", ""));
    std::vector<Cell> row = {Cell::literal(m == last ? "" : m),
                             Cell::literal(model_name(r.value("model", "")))};
    last = m;
    row.push_back(Cell::number(num(r, "acc_in")));
    if (ci) row.push_back(Cell::range(r.contains("ci") ? span_of(r["ci"]["acc_in"]) : std::nullopt));
    row.push_back(Cell::number(num(r, "gap"), star(num(r, "perm_p"), 0.05)));
    if (ci) row.push_back(Cell::range(r.contains("ci") ? span_of(r["ci"]["gap"]) : std::nullopt));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace detail

/// Builds one table from reports of a single kind. `view` picks among the
/// tables a kind offers: "main" for all kinds, "descriptive" for
/// divergence, "threshold" and "emojis" for polarity.
inline Table build_table(const std::vector<Json>& docs, const std::string& view = "main") {
  if (docs.empty()) throw InputError("no reports to render");
  const auto kind = docs.front().value("kind", "");
  for (const auto& d : docs) {
    if (d.value("kind", "") != kind) {
      throw InputError("cannot mix '" + kind + "' and '" + d.value("kind", "") +
                       "' reports in one table");
    }
  }
  auto bad_view = [&] {
    return InputError("report kind '" + kind + "' has no '" + view + "' table");
  };
  if (kind == "divergence") {
    if (view == "main") return detail::divergence_table(docs);
    if (view == "descriptive") return detail::descriptive_table(docs);
    throw bad_view();
  }
  if (kind == "alignment") {
    if (view == "main") return detail::alignment_table(docs);
    throw bad_view();
  }
  if (kind == "polarity") {
    if (view == "main") return detail::polarity_table(docs, "all");
    if (view == "threshold") return detail::polarity_table(docs, "threshold_only");
    if (view == "emojis") return detail::polarity_detail_table(docs);
    throw bad_view();
  }
  if (kind == "transfer") {
    if (view == "main") return detail::transfer_table(docs);
    throw bad_view();
  }
  throw InputError("no table layout for report kind '" + kind + "'");
}

inline Json read_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    auto j = Json::parse(in);
    if (!j.is_object() || !j.contains("kind")) throw InputError(path + ": not an emojilab report");
    return j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace emojilab::report
