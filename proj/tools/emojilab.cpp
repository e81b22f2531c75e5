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

// emojilab command-line tool.
//
// Exit codes: 0 success, 1 a rerun whose output differs from the original,
// 2 bad input, 3 numerical failure, 64 usage error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "emojilab/emojilab.hpp"

namespace fs = std::filesystem;
using namespace emojilab;
using report::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitUsage = 64;

/// TOML config whose keys may use underscores for the dashes of long
/// option names. `[emoji]` keys `zwj_mode` and `unicode_version` apply to
/// every command, since every command extracts emojis.
class Config : public CLI::ConfigTOML {
 public:
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigTOML::from_config(input);
    for (auto& item : items) {
      std::replace(item.name.begin(), item.name.end(), '_', '-');
      if (item.parents == std::vector<std::string>{"emoji"} &&
          (item.name == "zwj-mode" || item.name == "unicode-version")) {
        item.parents.clear();
      }
    }
    return items;
  }
};

/// Settings a rerun imposes on top of the recorded command line.
struct Overrides {
  std::optional<std::string> out;
  std::string* written = nullptr;  // receives the path of the JSON report
};

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string zwj_mode = "default";
  std::string unicode_version = unicode::kUnicodeVersion;
};

// Helpers ------------------------------------------------------------------

std::vector<Post> load_posts(const std::string& path, const Globals& g) {
  ParseOptions po;
  po.zwj_mode = emoji::parse_zwj_mode(g.zwj_mode);
  return read_posts_file(path, po).posts;
}

std::string corpus_name(const std::vector<Post>& posts, const std::string& path,
                        const std::string& given) {
  if (!given.empty()) return given;
  if (!posts.empty() && !posts.front().corpus.empty()) return posts.front().corpus;
  return fs::path(path).stem().string();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::size_t to_size(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InputError("bad " + what + " '" + s + "'");
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string sibling(const std::string& json_path, const std::string& suffix) {
  fs::path p(json_path);
  p.replace_extension();
  return p.string() + suffix;
}

/// Effective option values of the parsed command, minus output paths.
Json config_snapshot(const CLI::App& app) {
  Json j = Json::object();
  for (const CLI::Option* o : app.get_options()) {
    if (o->get_lnames().empty()) continue;
    const auto& name = o->get_lnames().front();
    if (name == "help" || name == "out" || name == "detail") continue;
    if (o->get_expected_min() == 0) {
      j[name] = o->count() > 0;
      continue;
    }
    std::string value;
    if (o->count() > 0) {
      for (const auto& r : o->results()) value += (value.empty() ? "" : ",") + r;
    } else {
      value = o->get_default_str();
    }
    j[name] = value;
  }
  for (const CLI::App* sub : app.get_subcommands()) j[sub->get_name()] = config_snapshot(*sub);
  return j;
}

class Run {
 public:
  Run(const std::vector<std::string>& args, const CLI::App& app, const Globals& g)
      : start_(std::chrono::steady_clock::now()) {
    manifest_.command = args;
    manifest_.config = config_snapshot(app);
    manifest_.seed = g.seed;
    if (const auto* cfg = app.get_config_ptr(); cfg && cfg->count() > 0) {
      const auto path = cfg->as<std::string>();
      if (!path.empty() && fs::exists(path)) manifest_.add_input(path);
    }
  }

  void input(const std::string& path) { manifest_.add_input(path); }

  Json finish(const std::string& kind, Json result) {
    manifest_.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return report::document(kind, manifest_, std::move(result));
  }

 private:
  report::RunManifest manifest_;
  std::chrono::steady_clock::time_point start_;
};

/// Writes the JSON report and its markdown projection next to it.
void emit(const Json& doc, const std::string& out, const std::string& markdown,
          const Overrides& ov) {
  write_text(out, report::dump(doc));
  if (out != "-") write_text(sibling(out, ".md"), markdown);
  if (ov.written) *ov.written = out;
}

std::string table_md(const std::vector<Json>& docs, const std::string& view = "main") {
  return report::to_markdown(report::build_table(docs, view));
}

// Subcommands --------------------------------------------------------------

struct IngestArgs {
  std::string in, out;
  int dedup_threshold = 3;
  std::string sizes = "55000,5000,5000";
  bool lenient = false;
};

void run_ingest(const IngestArgs& a, const Globals& g, Run& run, const Overrides& ov) {
  const auto out_dir = ov.out.value_or(a.out);
  const auto parts = split_list(a.sizes);
  if (parts.size() != 3) throw InputError("--sizes needs train,validation,test");
  SplitSizes sizes{to_size(parts[0], "train size"), to_size(parts[1], "validation size"),
                   to_size(parts[2], "test size")};
  run.input(a.in);
  ParseOptions po;
  po.strict = !a.lenient;
  po.zwj_mode = emoji::parse_zwj_mode(g.zwj_mode);
  auto parsed = read_posts_file(a.in, po);
  DedupStats ds;
  const auto kept = dedup(parsed.posts, a.dedup_threshold, &ds);
  const auto split = make_split(kept, sizes, g.seed);

  fs::create_directories(out_dir);
  auto write_split = [&](const std::vector<Post>& posts, const std::string& name) {
    std::ostringstream s;
    write_posts(s, posts, name);
    write_text((fs::path(out_dir) / (name + ".jsonl")).string(), s.str());
  };
  write_split(split.train, "train");
  write_split(split.validation, "validation");
  write_split(split.test_in, "test");

  Json warnings = Json::array();
  for (const auto& w : parsed.warnings) {
    warnings.push_back({{"line", w.line}, {"message", w.message}});
  }
  Json r;
  r["input"] = a.in;
  r["n_input"] = parsed.posts.size() + parsed.warnings.size();
  r["n_parsed"] = parsed.posts.size();
  r["warnings"] = std::move(warnings);
  r["dedup"] = {{"threshold", a.dedup_threshold},
                {"exact_removed", ds.exact_removed},
                {"near_removed", ds.near_removed},
                {"kept", kept.size()}};
  r["requested"] = {{"train", sizes.train}, {"validation", sizes.validation}, {"test", sizes.test}};
  r["achieved"] = {{"train", split.train.size()},
                   {"validation", split.validation.size()},
                   {"test", split.test_in.size()}};
  r["quarter_stratified"] = split.quarter_stratified;
  r["zwj_mode"] = g.zwj_mode;
  r["notes"] = split.notes;
  const auto doc = run.finish("ingest", std::move(r));
  const auto report_path = (fs::path(out_dir) / "ingest.json").string();
  write_text(report_path, report::dump(doc));
  if (ov.written) *ov.written = report_path;
}

struct ExtractArgs {
  std::string in, out = "-";
  std::string mode;
};

void run_extract(const ExtractArgs& a, Globals g) {
  if (!a.mode.empty()) g.zwj_mode = a.mode;
  const auto posts = load_posts(a.in, g);
  std::ostringstream s;
  for (const auto& p : posts) {
    Json j;
    j["id"] = p.id;
    j["emojis"] = p.emojis;
    s << j.dump() << '\n';
  }
  write_text(a.out, s.str());
}

struct DivergenceArgs {
  std::string a, b, name_a, name_b, out = "report.json";
  std::size_t top_k = 100;
  double rbo_p = 0.9;
  std::string rbo_variant = "extrapolated";
  std::size_t bootstrap = 0, perm = 0;
  double level = 0.95;
};

void run_divergence(const DivergenceArgs& a, const Globals& g, Run& run, const Overrides& ov) {
  run.input(a.a);
  run.input(a.b);
  const auto pa = load_posts(a.a, g), pb = load_posts(a.b, g);
  const auto label = report::pair_label(corpus_name(pa, a.a, a.name_a),
                                        corpus_name(pb, a.b, a.name_b));
  report::DivergenceSettings cfg;
  cfg.top_k = a.top_k;
  cfg.rbo_p = a.rbo_p;
  if (a.rbo_variant == "truncated") {
    cfg.variant = RboVariant::kTruncated;
  } else if (a.rbo_variant != "extrapolated") {
    throw InputError("--rbo-variant must be extrapolated or truncated");
  }
  cfg.level = a.level;
  cfg.n_boot = a.bootstrap;
  cfg.n_perm = a.perm;
  const auto scores = compare_distributions(build_distribution(pa, a.top_k),
                                            build_distribution(pb, a.top_k), a.rbo_p,
                                            cfg.variant);
  std::optional<DivergenceInference> inf;
  if (a.bootstrap > 0 || a.perm > 0) {
    DivergenceInferenceOptions io;
    io.top_k = a.top_k;
    io.rbo_p = a.rbo_p;
    io.variant = cfg.variant;
    io.plan.n_replicates = a.bootstrap > 0 ? a.bootstrap : 1;
    io.plan.level = a.level;
    io.plan.master_seed = derive_seed(g.seed, 1);
    io.plan.threads = g.threads;
    io.n_perm = a.perm;
    inf = divergence_inference(pa, pb, io);
  }
  auto r = report::divergence_json(label, scores, cfg, inf);
  r["zwj_mode"] = g.zwj_mode;
  auto describe = [&](const std::vector<Post>& posts, const std::string& path,
                      const std::string& given, std::uint64_t salt) {
    std::optional<DescriptiveIntervals> ci;
    if (a.bootstrap > 0) {
      stats::ResamplePlan plan;
      plan.n_replicates = a.bootstrap;
      plan.level = a.level;
      plan.master_seed = derive_seed(g.seed, salt);
      plan.threads = g.threads;
      ci = descriptive_intervals(posts, plan);
    }
    return report::descriptive_json(corpus_name(posts, path, given), descriptive_stats(posts), ci);
  };
  r["descriptive"] = {{"a", describe(pa, a.a, a.name_a, 2)}, {"b", describe(pb, a.b, a.name_b, 3)}};
  const auto doc = run.finish("divergence", std::move(r));
  const std::string md = table_md({doc}) + "\n" + table_md({doc}, "descriptive");
  emit(doc, ov.out.value_or(a.out), md, ov);
}

struct AlignArgs {
  std::string a_emb, b_emb, posts_a, posts_b, name_a, name_b, out = "report.json";
  std::size_t n = 500;
  std::optional<std::size_t> min_support;
  std::string ks = "1,2,3,4,5";
  std::size_t perm = 1000;
  bool center = false, scale = false, no_normalize = false;
};

void run_align(const AlignArgs& a, const Globals& g, Run& run, const Overrides& ov) {
  for (const auto& p : {a.posts_a, a.posts_b}) run.input(p);
  for (const auto& prefix : {a.a_emb, a.b_emb}) {
    run.input(matrix_path(prefix));
    run.input(index_path(prefix));
  }
  const auto pa = load_posts(a.posts_a, g), pb = load_posts(a.posts_b, g);
  const auto ea = read_embeddings(a.a_emb), eb = read_embeddings(a.b_emb);
  const auto ra = emoji_rows(ea, pa), rb = emoji_rows(eb, pb);
  const auto shared = shared_emojis(ra, rb, a.min_support.value_or(a.n));
  if (shared.empty()) {
    throw InputError("no emoji has " + std::to_string(a.min_support.value_or(a.n)) +
                     " embedded posts in both corpora");
  }
  CentroidOptions co;
  co.n_samples = a.n;
  co.seed = derive_seed(g.seed, 1);
  co.normalize = !a.no_normalize;
  co.threads = g.threads;
  const auto ca = compute_centroids(ea, pa, shared, co);
  const auto cb = compute_centroids(eb, pb, shared, co);
  AlignOptions ao;
  ao.procrustes = {a.center, a.scale};
  ao.ks.clear();
  for (const auto& k : split_list(a.ks)) ao.ks.push_back(static_cast<int>(to_size(k, "k")));
  ao.n_perm = a.perm;
  ao.seed = derive_seed(g.seed, 2);
  ao.threads = g.threads;
  const auto res = align(ca, cb, ao);
  const auto label = report::pair_label(corpus_name(pa, a.posts_a, a.name_a),
                                        corpus_name(pb, a.posts_b, a.name_b));
  auto r = report::alignment_json(label, res, ca, a.n, a.perm);
  r["emojis"] = ca.emojis;
  r["procrustes"] = {{"center", a.center}, {"scale", a.scale}, {"normalize", !a.no_normalize}};
  const auto doc = run.finish("alignment", std::move(r));
  emit(doc, ov.out.value_or(a.out), table_md({doc}), ov);
}

struct PolarityArgs {
  std::string a, b, name_a, name_b, out = "report.json", detail;
  std::string regime = "platform";
  std::size_t boot = 1000, bootstrap = 0, perm = 0;
  double level = 0.95;
  bool no_tails = false;
  std::optional<std::size_t> min_total, min_pos, min_neg, tail;
};

void run_polarity(const PolarityArgs& a, const Globals& g, Run& run, const Overrides& ov) {
  run.input(a.a);
  run.input(a.b);
  const auto pa = load_posts(a.a, g), pb = load_posts(a.b, g);
  PolarityOptions po;
  if (a.regime == "language") {
    po.regime = Regime::kLanguage;
  } else if (a.regime != "platform") {
    throw InputError("--regime must be platform or language");
  }
  auto thr = SupportThresholds::for_regime(po.regime);
  if (a.min_total) thr.min_total = *a.min_total;
  if (a.min_pos) thr.min_pos = *a.min_pos;
  if (a.min_neg) thr.min_neg = *a.min_neg;
  if (a.tail) thr.tail = *a.tail;
  po.thresholds = thr;
  po.include_tails = !a.no_tails;
  po.flip.n_boot = a.boot;
  po.flip.level = a.level;
  po.flip.seed = derive_seed(g.seed, 1);
  po.n_bootstrap = a.bootstrap;
  po.n_perm = a.perm;
  po.seed = derive_seed(g.seed, 2);
  po.threads = g.threads;
  const auto cmp = compare_polarity(pa, pb, po);
  report::PolaritySettings cfg{thr, po.include_tails, a.boot, a.bootstrap, a.perm, a.level};
  const auto label = report::pair_label(corpus_name(pa, a.a, a.name_a),
                                        corpus_name(pb, a.b, a.name_b));
  auto r = report::polarity_json(label, cmp, cfg);
  r["zwj_mode"] = g.zwj_mode;
  const auto doc = run.finish("polarity", std::move(r));
  const auto out = ov.out.value_or(a.out);
  const std::string md = table_md({doc}) + "\nThreshold-only set:\n\n" + table_md({doc}, "threshold");
  emit(doc, out, md, ov);
  const auto detail = !a.detail.empty() ? a.detail : out == "-" ? "" : sibling(out, ".emojis.csv");
  if (!detail.empty()) write_text(detail, report::to_csv(report::build_table({doc}, "emojis")));
}

struct TransferRunArgs {
  std::string source, target, source_name, target_name, out = "report.json";
  std::string modality = "TE", regime;
  double c = 1.0;
  std::size_t target_cap = 5000, bootstrap = 1000, perm = 1000;
  double level = 0.95;
  int ngram_max = 2;
};

std::vector<Post> read_split_file(const fs::path& path, const Globals& g) {
  if (!fs::exists(path)) throw InputError("missing split file " + path.string());
  return load_posts(path.string(), g);
}

void run_transfer_cmd(const TransferRunArgs& a, const Globals& g, Run& run,
                      const Overrides& ov) {
  const fs::path dir(a.source);
  const auto train_path = dir / "train.jsonl", test_path = dir / "test.jsonl";
  run.input(train_path.string());
  run.input(test_path.string());
  run.input(a.target);
  CorpusSplit split;
  split.seed = g.seed;
  split.train = read_split_file(train_path, g);
  split.test_in = read_split_file(test_path, g);
  std::vector<Post> target;
  for (auto& p : load_posts(a.target, g)) {
    if (p.labeled()) target.push_back(std::move(p));
  }
  TransferOptions to;
  to.seed = g.seed;
  to.logreg.c = a.c;
  to.tfidf.ngram_max = a.ngram_max;
  to.tfidf.zwj_mode = emoji::parse_zwj_mode(g.zwj_mode);
  to.target_cap = a.target_cap;
  to.n_boot = a.bootstrap;
  to.n_perm = a.perm;
  to.level = a.level;
  to.threads = g.threads;
  if (!a.regime.empty()) to.regime = parse_transfer_regime(a.regime);
  const auto rep = run_transfer(split, target, parse_modality(a.modality), to);
  const auto source = a.source_name.empty() ? corpus_name(split.train, a.source, "") : a.source_name;
  const auto tname = corpus_name(target, a.target, a.target_name);
  auto r = report::transfer_json(source, tname, rep, a.level, a.bootstrap, a.perm);
  r["zwj_mode"] = g.zwj_mode;
  const auto doc = run.finish("transfer", std::move(r));
  emit(doc, ov.out.value_or(a.out), table_md({doc}), ov);
}

struct TransferEvalArgs {
  std::string pred_in, pred_out, model_id = "external", source_name = "in-domain",
                                 target_name = "target", modality = "TE",
                                 out = "report.json";
  std::size_t bootstrap = 1000, perm = 1000;
  double level = 0.95;
};

void run_transfer_eval(const TransferEvalArgs& a, const Globals& g, Run& run,
                       const Overrides& ov) {
  run.input(a.pred_in);
  run.input(a.pred_out);
  const auto pin = read_predictions_file(a.pred_in, "in");
  const auto pout = read_predictions_file(a.pred_out, "out");
  EvaluateOptions eo;
  eo.model_id = a.model_id;
  eo.n_boot = a.bootstrap;
  eo.n_perm = a.perm;
  eo.level = a.level;
  eo.seed = g.seed;
  eo.threads = g.threads;
  auto rep = evaluate_predictions(pin, pout, eo);
  rep.modality = parse_modality(a.modality);
  const auto doc = run.finish("transfer", report::transfer_json(a.source_name, a.target_name, rep,
                                                                a.level, a.bootstrap, a.perm));
  emit(doc, ov.out.value_or(a.out), table_md({doc}), ov);
}

struct ReportArgs {
  std::vector<std::string> from;
  std::string format = "md", table = "main", out = "-";
  int digits = 3;
};

void run_report(const ReportArgs& a) {
  std::vector<Json> docs;
  for (const auto& f : a.from) docs.push_back(report::read_report(f));
  const auto t = report::build_table(docs, a.table);
  if (a.format == "md") {
    write_text(a.out, report::to_markdown(t, {a.digits}));
  } else if (a.format == "csv") {
    write_text(a.out, report::to_csv(t));
  } else {
    throw InputError("--format must be md or csv");
  }
}

struct SynthArgs {
  std::string spec, out;
};

void run_synth(const SynthArgs& a, const CLI::App& app, const Globals& g, Run& run,
               const Overrides& ov) {
  run.input(a.spec);
  auto spec = synth::read_spec_file(a.spec);
  if (app.get_option("--seed")->count() > 0) spec.seed = g.seed;
  const auto pair = synth::generate(spec);
  const auto out_dir = ov.out.value_or(a.out);
  fs::create_directories(out_dir);
  Json files = Json::object();
  for (const auto* side : {&pair.a, &pair.b}) {
    const auto& name = side == &pair.a ? spec.a.name : spec.b.name;
    std::ostringstream s;
    write_posts(s, *side);
    write_text((fs::path(out_dir) / (name + ".jsonl")).string(), s.str());
    files[name] = {{"file", name + ".jsonl"}, {"n_posts", side->size()}};
  }
  Json r;
  r["spec_seed"] = spec.seed;
  r["files"] = std::move(files);
  const auto doc = run.finish("synth", std::move(r));
  const auto report_path = (fs::path(out_dir) / "synth.json").string();
  write_text(report_path, report::dump(doc));
  if (ov.written) *ov.written = report_path;
}

int run_command(const std::vector<std::string>& args, const Overrides& ov);

struct RerunArgs {
  std::string from, out;
  bool check = false;
};

int run_rerun(const RerunArgs& a) {
  const auto original = report::read_report(a.from);
  if (!original.contains("manifest")) throw InputError(a.from + " has no manifest");
  const auto m = report::RunManifest::from_json(original["manifest"]);
  m.verify_inputs();
  // Replay exactly the recorded configuration, never the caller's environment.
  unsetenv("EMOJILAB_CONFIG");
  if (m.config.contains("config")) {
    const auto path = m.config["config"].get<std::string>();
    if (!path.empty()) setenv("EMOJILAB_CONFIG", path.c_str(), 1);
  }
  Overrides ov;
  const auto kind = original.value("kind", "");
  if (!a.out.empty()) {
    ov.out = a.out;
  } else {
    ov.out = kind == "ingest" || kind == "synth" ? sibling(a.from, ".rerun")
                                                 : sibling(a.from, ".rerun.json");
  }
  std::string written;
  ov.written = &written;
  const int code = run_command(m.command, ov);
  if (code != kExitOk || !a.check) return code;
  const auto again = report::read_report(written);
  if (report::without_wall_clock(again).dump() != report::without_wall_clock(original).dump()) {
    std::cerr << "emojilab: rerun of " << a.from << " differs from the original\n";
    return kExitMismatch;
  }
  std::cerr << "emojilab: rerun reproduces " << a.from << "\n";
  return kExitOk;
}

// Command line -------------------------------------------------------------

int run_command(const std::vector<std::string>& args, const Overrides& ov) {
  CLI::App app{"Measure emoji divergence across text communities and its effect on "
               "sentiment transfer.",
               "emojilab"};
  app.config_formatter(std::make_shared<Config>());
  app.set_config("--config", "", "TOML config file; sections mirror the subcommands")
      ->envname("EMOJILAB_CONFIG");
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_version_flag("--version", report::kToolkitVersion);

  Globals g;
  app.add_option("--seed", g.seed, "Master seed of every random stream");
  app.add_option("--threads", g.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--zwj-mode", g.zwj_mode, "ZWJ handling: default keeps sequences, literal splits")
      ->check(CLI::IsMember({"default", "sequence", "literal"}));
  app.add_option("--unicode-version", g.unicode_version,
                 "Required Unicode data version (this build pins one)");

  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    auto* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  IngestArgs ingest;
  auto* c_ingest = sub(&app, "ingest", "Parse, deduplicate, balance and split a corpus");
  c_ingest->add_option("--in", ingest.in, "Input JSONL")->required()->check(CLI::ExistingFile);
  c_ingest->add_option("--out", ingest.out, "Output directory")->required();
  c_ingest->add_option("--dedup-threshold", ingest.dedup_threshold,
                       "SimHash Hamming threshold for near duplicates (negative disables)");
  c_ingest->add_option("--sizes", ingest.sizes, "train,validation,test sizes");
  c_ingest->add_flag("--lenient", ingest.lenient, "Skip malformed lines instead of failing");

  ExtractArgs extract;
  auto* c_emoji = sub(&app, "emoji", "Emoji utilities");
  c_emoji->require_subcommand(1);
  auto* c_extract = sub(c_emoji, "extract", "Emit {id, emojis} JSONL for a corpus");
  c_extract->add_option("--in", extract.in, "Input JSONL")->required()->check(CLI::ExistingFile);
  c_extract->add_option("--mode", extract.mode, "default or literal (overrides --zwj-mode)")
      ->check(CLI::IsMember({"default", "sequence", "literal"}));
  c_extract->add_option("--out", extract.out, "Output JSONL, - for stdout");

  DivergenceArgs div;
  auto* c_div = sub(&app, "divergence", "Frequency divergence of two corpora");
  c_div->add_option("--a", div.a, "Corpus A JSONL")->required()->check(CLI::ExistingFile);
  c_div->add_option("--b", div.b, "Corpus B JSONL")->required()->check(CLI::ExistingFile);
  c_div->add_option("--name-a", div.name_a, "Display name of corpus A");
  c_div->add_option("--name-b", div.name_b, "Display name of corpus B");
  c_div->add_option("--top-k", div.top_k, "Emojis kept per corpus")->check(CLI::PositiveNumber);
  c_div->add_option("--rbo-p", div.rbo_p, "RBO persistence")->check(CLI::Range(0.0, 1.0));
  c_div->add_option("--rbo-variant", div.rbo_variant, "extrapolated or truncated");
  c_div->add_option("--bootstrap", div.bootstrap, "Bootstrap replicates (0 skips intervals)");
  c_div->add_option("--perm", div.perm, "Permutations (0 skips the test)");
  c_div->add_option("--ci-level", div.level, "Interval level")->check(CLI::Range(0.5, 0.999));
  c_div->add_option("--out", div.out, "Report JSON, - for stdout");

  AlignArgs al;
  auto* c_align = sub(&app, "align", "Procrustes alignment of emoji centroids");
  c_align->add_option("--a-emb", al.a_emb, "Embedding prefix of corpus A")->required();
  c_align->add_option("--b-emb", al.b_emb, "Embedding prefix of corpus B")->required();
  c_align->add_option("--posts-a", al.posts_a, "Corpus A JSONL")->required()->check(CLI::ExistingFile);
  c_align->add_option("--posts-b", al.posts_b, "Corpus B JSONL")->required()->check(CLI::ExistingFile);
  c_align->add_option("--name-a", al.name_a, "Display name of corpus A");
  c_align->add_option("--name-b", al.name_b, "Display name of corpus B");
  c_align->add_option("--n", al.n, "Posts sampled per centroid")->check(CLI::PositiveNumber);
  c_align->add_option("--min-support", al.min_support, "Posts an emoji needs on both sides (default --n)");
  c_align->add_option("--k", al.ks, "Neighbourhood sizes, comma separated");
  c_align->add_option("--perm", al.perm, "Permutations (0 skips the test)");
  c_align->add_flag("--center", al.center, "Centre both matrices before fitting");
  c_align->add_flag("--scale", al.scale, "Scale both matrices to unit norm");
  c_align->add_flag("--no-normalize", al.no_normalize, "Keep raw (unnormalized) centroids");
  c_align->add_option("--out", al.out, "Report JSON, - for stdout");

  PolarityArgs pol;
  auto* c_pol = sub(&app, "polarity", "Emoji polarity agreement and flips");
  c_pol->add_option("--a", pol.a, "Corpus A JSONL")->required()->check(CLI::ExistingFile);
  c_pol->add_option("--b", pol.b, "Corpus B JSONL")->required()->check(CLI::ExistingFile);
  c_pol->add_option("--name-a", pol.name_a, "Display name of corpus A");
  c_pol->add_option("--name-b", pol.name_b, "Display name of corpus B");
  c_pol->add_option("--regime", pol.regime, "platform or language support thresholds");
  c_pol->add_option("--boot", pol.boot, "Bootstrap replicates of the flip test");
  c_pol->add_option("--bootstrap", pol.bootstrap, "Emoji-level replicates for rho_w and MAUD_w intervals");
  c_pol->add_option("--perm", pol.perm, "Permutations of the MAUD_w test");
  c_pol->add_option("--ci-level", pol.level, "Interval level")->check(CLI::Range(0.5, 0.999));
  c_pol->add_flag("--no-tails", pol.no_tails, "Use only support-qualified emojis");
  c_pol->add_option("--min-total", pol.min_total, "Override the labeled-post minimum");
  c_pol->add_option("--min-pos", pol.min_pos, "Override the positive-post minimum");
  c_pol->add_option("--min-neg", pol.min_neg, "Override the negative-post minimum");
  c_pol->add_option("--tail", pol.tail, "Override the tail size");
  c_pol->add_option("--out", pol.out, "Report JSON, - for stdout");
  c_pol->add_option("--detail", pol.detail, "Per-emoji CSV (default next to --out)");

  auto* c_transfer = sub(&app, "transfer", "Zero-shot sentiment transfer");
  c_transfer->require_subcommand(1);
  TransferRunArgs tr;
  auto* c_trun = sub(c_transfer, "run", "Train TF-IDF + logistic regression and test transfer");
  c_trun->add_option("--source", tr.source, "Split directory from ingest")->required()->check(CLI::ExistingDirectory);
  c_trun->add_option("--target", tr.target, "Target-domain JSONL")->required()->check(CLI::ExistingFile);
  c_trun->add_option("--source-name", tr.source_name, "Display name of the source");
  c_trun->add_option("--target-name", tr.target_name, "Display name of the target");
  c_trun->add_option("--modality", tr.modality, "E, T or TE")->check(CLI::IsMember({"E", "T", "TE"}));
  c_trun->add_option("--regime", tr.regime, "cross_asset, cross_platform or cross_language");
  c_trun->add_option("--c", tr.c, "Inverse regularisation strength")->check(CLI::PositiveNumber);
  c_trun->add_option("--ngram-max", tr.ngram_max, "Longest n-gram")->check(CLI::Range(1, 5));
  c_trun->add_option("--target-cap", tr.target_cap, "Target posts evaluated (0 keeps all)");
  c_trun->add_option("--bootstrap", tr.bootstrap, "Bootstrap replicates (0 skips intervals)");
  c_trun->add_option("--perm", tr.perm, "Permutations (0 skips the test)");
  c_trun->add_option("--ci-level", tr.level, "Interval level")->check(CLI::Range(0.5, 0.999));
  c_trun->add_option("--out", tr.out, "Report JSON, - for stdout");
  TransferEvalArgs te;
  auto* c_teval = sub(c_transfer, "eval", "Score externally produced predictions");
  c_teval->add_option("--pred-in", te.pred_in, "In-domain predictions JSONL")->required()->check(CLI::ExistingFile);
  c_teval->add_option("--pred-out", te.pred_out, "Out-of-domain predictions JSONL")->required()->check(CLI::ExistingFile);
  c_teval->add_option("--model-id", te.model_id, "Model name shown in tables");
  c_teval->add_option("--modality", te.modality, "E, T or TE")->check(CLI::IsMember({"E", "T", "TE"}));
  c_teval->add_option("--source-name", te.source_name, "Display name of the source");
  c_teval->add_option("--target-name", te.target_name, "Display name of the target");
  c_teval->add_option("--bootstrap", te.bootstrap, "Bootstrap replicates (0 skips intervals)");
  c_teval->add_option("--perm", te.perm, "Permutations (0 skips the test)");
  c_teval->add_option("--ci-level", te.level, "Interval level")->check(CLI::Range(0.5, 0.999));
  c_teval->add_option("--out", te.out, "Report JSON, - for stdout");

  ReportArgs rep;
  auto* c_report = sub(&app, "report", "Render reports as markdown or CSV tables");
  c_report->add_option("--from", rep.from, "Report JSON (repeat for several rows)")
      ->required()->check(CLI::ExistingFile);
  c_report->add_option("--format", rep.format, "md or csv")->check(CLI::IsMember({"md", "csv"}));
  c_report->add_option("--table", rep.table, "main, descriptive, threshold or emojis");
  c_report->add_option("--digits", rep.digits, "Decimals in markdown")->check(CLI::Range(0, 12));
  c_report->add_option("--out", rep.out, "Output file, - for stdout");

  SynthArgs syn;
  auto* c_synth = sub(&app, "synth", "Generate paired synthetic corpora");
  c_synth->add_option("--spec", syn.spec, "Synthetic spec JSON")->required()->check(CLI::ExistingFile);
  c_synth->add_option("--out", syn.out, "Output directory")->required();

  RerunArgs rr;
  auto* c_rerun = sub(&app, "rerun", "Re-execute the command recorded in a report");
  c_rerun->add_option("--from", rr.from, "Report JSON")->required()->check(CLI::ExistingFile);
  c_rerun->add_option("--out", rr.out, "Where to write the new report");
  c_rerun->add_flag("--check", rr.check, "Fail unless the new report matches the original");

  std::vector<std::string> argv_store = {"emojilab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (g.unicode_version != unicode::kUnicodeVersion) {
    throw InputError("this build pins Unicode " + std::string(unicode::kUnicodeVersion) +
                     ", config asks for " + g.unicode_version);
  }
  emoji::parse_zwj_mode(g.zwj_mode);

  if (c_report->parsed()) {
    run_report(rep);
    return kExitOk;
  }
  if (c_rerun->parsed()) return run_rerun(rr);
  if (c_extract->parsed()) {
    run_extract(extract, g);
    return kExitOk;
  }
  Run run(args, app, g);
  if (c_ingest->parsed()) run_ingest(ingest, g, run, ov);
  else if (c_div->parsed()) run_divergence(div, g, run, ov);
  else if (c_align->parsed()) run_align(al, g, run, ov);
  else if (c_pol->parsed()) run_polarity(pol, g, run, ov);
  else if (c_trun->parsed()) run_transfer_cmd(tr, g, run, ov);
  else if (c_teval->parsed()) run_transfer_eval(te, g, run, ov);
  else if (c_synth->parsed()) run_synth(syn, app, g, run, ov);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run_command(args, {});
  } catch (const NumericalError& e) {
    std::cerr << "emojilab: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const InputError& e) {
    std::cerr << "emojilab: " << e.what() << "\n";
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "emojilab: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "emojilab: malformed JSON: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "emojilab: " << e.what() << "\n";
    return kExitInput;
  }
}
