//
// Copyright 2026 The paraug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cli.h"

#include <filesystem>
#include <algorithm>
#include <fstream>
#include <memory>
#include <random>

#include "CLI11.hpp"
#include "paraug/strings.h"
#include "paraug/backend_factory.h"
#include "paraug/cooc.h"
#include "paraug/corpus.h"
#include "paraug/pipeline.h"
#include "paraug/status.h"
#include "paraug/transcript_backend.h"

namespace paraug::cli {
namespace {

namespace fs = std::filesystem;

struct BitextArgs {
  std::string src;
  std::string tgt;
  std::string src_lang = "src";
  std::string tgt_lang = "tgt";
};

void AddBitextOptions(CLI::App& cmd, BitextArgs& args) {
  cmd.add_option("--src", args.src, "Source-side file (one segment per line)")
      ->required();
  cmd.add_option("--tgt", args.tgt, "Target-side file (one segment per line)")
      ->required();
  cmd.add_option("--src-lang", args.src_lang, "Source language tag");
  cmd.add_option("--tgt-lang", args.tgt_lang, "Target language tag");
}

int Fail(std::ostream& err, const absl::Status& status) {
  err << "error: " << status.message() << '\n';
  return ExitCodeFor(status);
}

absl::StatusOr<StopwordSet> LoadStopwords(const std::string& path,
                                          const std::string& lang) {
  if (path.empty()) return StopwordSet(lang, {});
  return StopwordSet::Load(path, lang);
}

struct AugmentArgs {
  BitextArgs bitext;
  std::string out_dir;
  PipelineConfig config;
  std::size_t seed_cap = 0;
  std::size_t round_cap = 0;
  std::string cooc_matrix;
  std::string record_transcript;
  bool timing = false;
};

int RunAugment(AugmentArgs& a, CLI::App& cmd, std::ostream& out, std::ostream& err) {
  PipelineConfig& config = a.config;
  if (cmd.count("--seed-cap") > 0) config.seed_cap = a.seed_cap;
  if (cmd.count("--round-cap") > 0) config.round_cap = a.round_cap;
  if (absl::Status s = config.Validate(); !s.ok()) return Fail(err, s);

  absl::StatusOr<ParallelCorpus> seed = LoadParallelCorpus(
      a.bitext.src, a.bitext.tgt, a.bitext.src_lang, a.bitext.tgt_lang);
  if (!seed.ok()) return Fail(err, seed.status());
  absl::StatusOr<StopwordSet> stop_src =
      LoadStopwords(config.stopwords_source, a.bitext.src_lang);
  if (!stop_src.ok()) return Fail(err, stop_src.status());
  absl::StatusOr<StopwordSet> stop_tgt =
      LoadStopwords(config.stopwords_target, a.bitext.tgt_lang);
  if (!stop_tgt.ok()) return Fail(err, stop_tgt.status());

  std::optional<CooccurrenceMatrix> matrix;
  if (!a.cooc_matrix.empty()) {
    absl::StatusOr<CooccurrenceMatrix> loaded = CooccurrenceMatrix::Load(a.cooc_matrix);
    if (!loaded.ok()) return Fail(err, loaded.status());
    matrix = *std::move(loaded);
  }

  absl::StatusOr<std::unique_ptr<InferenceBackend>> opened =
      OpenBackend(config.backend, std::max(1, config.workers));
  if (!opened.ok()) return Fail(err, opened.status());
  std::unique_ptr<InferenceBackend> backend = *std::move(opened);
  std::unique_ptr<RecordingBackend> recorder;
  InferenceBackend* active = backend.get();
  if (!a.record_transcript.empty()) {
    recorder = std::make_unique<RecordingBackend>(*backend);
    active = recorder.get();
  }
  absl::StatusOr<BackendDescriptor> descriptor = active->Describe();
  if (!descriptor.ok()) return Fail(err, descriptor.status());
  if (config.qe_check && !descriptor->qe_available) {
    return Fail(err, MakeError(ErrorKind::kBackend,
                               "--qe-check given but the backend has no QE model"));
  }

  Augmenter augmenter(config, *active, *std::move(stop_src), *std::move(stop_tgt),
                      std::move(matrix));
  absl::StatusOr<RunResult> result = augmenter.Run(*seed);
  if (!result.ok()) return Fail(err, result.status());
  for (const std::string& skipped : result->skipped) {
    err << "skipped " << skipped << '\n';
  }

  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  const fs::path dir(a.out_dir);
  absl::StatusOr<WriteReport> written = WriteAugmentedCorpus(
      result->corpus, dir / ("augmented." + a.bitext.src_lang),
      dir / ("augmented." + a.bitext.tgt_lang), dir / "augmented.meta.tsv");
  if (!written.ok()) return Fail(err, written.status());

  std::ofstream stats(dir / "stats.jsonl", std::ios::binary | std::ios::trunc);
  for (const RoundStats& r : result->rounds) stats << r.ToJson(a.timing) << '\n';
  if (!stats) return Fail(err, MakeError(ErrorKind::kIo, "cannot write stats.jsonl"));

  if (config.cooc_check && augmenter.matrix() && a.cooc_matrix.empty()) {
    if (absl::Status s = augmenter.matrix()->Save(dir / "cooc.tsv"); !s.ok()) {
      return Fail(err, s);
    }
  }
  if (recorder) {
    if (absl::Status s = recorder->Save(a.record_transcript); !s.ok()) {
      return Fail(err, s);
    }
  }

  for (const RoundStats& r : result->rounds) {
    out << "round " << r.round << ": " << r.seed_pairs << " input pairs ("
        << r.skipped_pairs << " skipped), " << r.variants_src << " + "
        << r.variants_tgt << " variants, " << r.candidate_pairs << " candidates, "
        << r.passed_similarity << " >= threshold, " << r.passed_cooc
        << " after cooc, " << r.passed_qe << " after qe, " << r.emitted_after_dedup
        << " emitted (" << r.wall_time.count() << " s)\n";
  }
  out << "wrote " << written->pairs << " pairs to " << a.out_dir << '\n';
  return kExitOk;
}

int RunValidate(const BitextArgs& b, const std::string& meta, std::ostream& out,
                std::ostream& err) {
  absl::StatusOr<ParallelCorpus> corpus =
      LoadParallelCorpus(b.src, b.tgt, b.src_lang, b.tgt_lang);
  if (!corpus.ok()) return Fail(err, corpus.status());
  if (!meta.empty()) {
    if (absl::Status s = ApplyMetadata(meta, *corpus); !s.ok()) return Fail(err, s);
  }
  const std::vector<Violation> violations = ValidateCorpus(*corpus);
  for (const Violation& v : violations) out << ToString(v) << '\n';
  out << corpus->pairs.size() << " pairs, " << violations.size() << " violations\n";
  return violations.empty() ? kExitOk : kExitData;
}

int RunCoocBuild(const BitextArgs& b, const std::string& stop_src_path,
                 const std::string& stop_tgt_path, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  absl::StatusOr<ParallelCorpus> corpus =
      LoadParallelCorpus(b.src, b.tgt, b.src_lang, b.tgt_lang);
  if (!corpus.ok()) return Fail(err, corpus.status());
  absl::StatusOr<StopwordSet> stop_src = LoadStopwords(stop_src_path, b.src_lang);
  if (!stop_src.ok()) return Fail(err, stop_src.status());
  absl::StatusOr<StopwordSet> stop_tgt = LoadStopwords(stop_tgt_path, b.tgt_lang);
  if (!stop_tgt.ok()) return Fail(err, stop_tgt.status());
  absl::StatusOr<CooccurrenceMatrix> matrix = BuildMatrix(*corpus, *stop_src, *stop_tgt);
  if (!matrix.ok()) return Fail(err, matrix.status());
  if (absl::Status s = matrix->Save(out_path); !s.ok()) return Fail(err, s);
  out << matrix->source_vocab().size() << " source types, "
      << matrix->target_vocab().size() << " target types, " << matrix->pair_total()
      << " co-occurrences -> " << out_path << '\n';
  return kExitOk;
}

int RunQeCheck(const BitextArgs& b, const std::string& backend_spec, double threshold,
               int workers, const std::string& report_path, std::ostream& out,
               std::ostream& err) {
  absl::StatusOr<ParallelCorpus> corpus =
      LoadParallelCorpus(b.src, b.tgt, b.src_lang, b.tgt_lang);
  if (!corpus.ok()) return Fail(err, corpus.status());
  absl::StatusOr<std::unique_ptr<InferenceBackend>> backend =
      OpenBackend(backend_spec, std::max(1, workers));
  if (!backend.ok()) return Fail(err, backend.status());
  absl::StatusOr<BackendDescriptor> descriptor = (*backend)->Describe();
  if (!descriptor.ok()) return Fail(err, descriptor.status());
  if (!descriptor->qe_available) {
    return Fail(err, MakeError(ErrorKind::kBackend, "backend has no QE model"));
  }

  const QeReport report = QeCrossCheck(*corpus, **backend, threshold, workers);
  if (!report_path.empty()) {
    std::ofstream tsv(report_path, std::ios::binary | std::ios::trunc);
    tsv << "id\tqe\tpass\terror\n";
    for (const QeReportEntry& e : report.entries) {
      tsv << e.id << '\t' << (e.score ? FormatScore(*e.score) : "") << '\t'
          << (e.pass ? "1" : "0") << '\t' << e.error << '\n';
    }
    if (!tsv) return Fail(err, MakeError(ErrorKind::kIo, "cannot write report"));
  }
  for (const QeReportEntry& e : report.entries) {
    if (e.pass) continue;
    out << "FAIL " << e.id << '\t'
        << (e.score ? FormatScore(*e.score) : StrCat("error: ", e.error)) << '\n';
  }
  out << report.passed << "/" << report.entries.size() << " pairs with qe >= "
      << threshold << " (pass rate " << report.pass_rate() << ", " << report.errors
      << " errors)\n";
  return kExitOk;
}

int RunStats(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return Fail(err, MakeError(ErrorKind::kIo, StrCat("cannot open ", path)));
  RoundStats total;
  bool funnel_ok = true;
  std::string line;
  out << "round\tinput\tskipped\tcandidates\tsimilarity\tcooc\tqe\temitted\n";
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    absl::StatusOr<RoundStats> r = RoundStatsFromJson(line);
    if (!r.ok()) return Fail(err, r.status());
    funnel_ok = funnel_ok && r->FunnelHolds();
    out << r->round << '\t' << r->seed_pairs << '\t' << r->skipped_pairs << '\t'
        << r->candidate_pairs << '\t' << r->passed_similarity << '\t' << r->passed_cooc
        << '\t' << r->passed_qe << '\t' << r->emitted_after_dedup << '\n';
    total += *r;
  }
  out << "total\t" << total.seed_pairs << '\t' << total.skipped_pairs << '\t'
      << total.candidate_pairs << '\t' << total.passed_similarity << '\t'
      << total.passed_cooc << '\t' << total.passed_qe << '\t'
      << total.emitted_after_dedup << '\n';
  if (!funnel_ok) {
    err << "error: funnel counts are not monotone\n";
    return kExitData;
  }
  return kExitOk;
}

int RunSample(const BitextArgs& b, std::size_t n, std::uint64_t seed,
              std::ostream& out, std::ostream& err) {
  absl::StatusOr<ParallelCorpus> corpus =
      LoadParallelCorpus(b.src, b.tgt, b.src_lang, b.tgt_lang);
  if (!corpus.ok()) return Fail(err, corpus.status());
  std::vector<const SegmentPair*> picked;
  std::mt19937_64 rng(seed);
  std::vector<const SegmentPair*> all;
  for (const SegmentPair& p : corpus->pairs) all.push_back(&p);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), n, rng);
  for (const SegmentPair* p : picked) {
    out << p->id << '\t' << p->source_text << '\t' << p->target_text << '\n';
  }
  return kExitOk;
}

// Splices the key=value pairs of `augment --config FILE` in front of the
// command-line flags, so later flags win.
absl::StatusOr<std::vector<std::string>> ExpandAugmentConfig(
    const std::vector<std::string>& args) {
  auto sub = std::find(args.begin(), args.end(), "augment");
  if (sub == args.end()) return args;
  std::vector<std::string> rest(sub + 1, args.end());
  std::string path;
  for (auto it = rest.begin(); it != rest.end(); ++it) {
    if (*it == "--config" && it + 1 != rest.end()) {
      path = *(it + 1);
      rest.erase(it, it + 2);
      break;
    }
    if (it->starts_with("--config=")) {
      path = it->substr(9);
      rest.erase(it);
      break;
    }
  }
  if (path.empty()) return args;

  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(path);
  } catch (const CLI::Error& e) {
    return MakeError(ErrorKind::kConfig, StrCat(path, ": ", e.what()));
  }
  std::vector<std::string> out(args.begin(), sub + 1);
  for (const CLI::ConfigItem& item : items) {
    if (item.name == "++" || item.name == "--") continue;
    if (!item.parents.empty() &&
        !(item.parents.size() == 1 && item.parents[0] == "augment")) {
      return MakeError(ErrorKind::kConfig,
                       StrCat(path, ": unexpected section for '", item.name, "'"));
    }
    std::string name = item.name;
    std::replace(name.begin(), name.end(), '_', '-');
    for (const std::string& value : item.inputs) {
      out.push_back(StrCat("--", name, "=", value));
    }
  }
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parallel corpus augmentation by masked-word substitution"};
  app.name(args.empty() ? "paraug" : args.front());
  app.require_subcommand(1);

  // augment
  AugmentArgs aug;
  PipelineConfig& cfg = aug.config;
  CLI::App* augment = app.add_subcommand("augment", "Generate an augmented corpus");
  augment->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_file;
  augment->add_option("--config", config_file, "key=value config file; flags override it");
  AddBitextOptions(*augment, aug.bitext);
  augment->add_option("--out-dir", aug.out_dir, "Output directory")->required();
  augment->add_option("--topk", cfg.topk, "Fill-mask predictions per site")
      ->capture_default_str();
  augment->add_option("--threshold", cfg.threshold, "Minimum embedding cosine")
      ->capture_default_str();
  augment->add_option("--rounds", cfg.rounds, "Augmentation rounds")->capture_default_str();
  augment->add_option("--max-sites", cfg.max_sites, "Mask sites per segment")
      ->capture_default_str();
  augment->add_option("--max-variants", cfg.max_variants_per_side,
                      "Variants per side, original included")
      ->capture_default_str();
  augment->add_option("--stopwords-src", cfg.stopwords_source, "Source stop-word list");
  augment->add_option("--stopwords-tgt", cfg.stopwords_target, "Target stop-word list");
  augment->add_option("--backend", cfg.backend,
                      "mock | mock:FIXTURE | replay:TRANSCRIPT | http://host:port")
      ->capture_default_str();
  augment->add_flag("--qe-check", cfg.qe_check, "Gate pairs on QE score");
  augment->add_option("--qe-threshold", cfg.qe_threshold, "Minimum QE score")
      ->capture_default_str();
  augment->add_flag("--cooc-check", cfg.cooc_check, "Gate pairs on co-occurrence PMI");
  augment->add_option("--cooc-min-score", cfg.cooc_min_score, "Minimum smoothed PMI")
      ->capture_default_str();
  augment->add_option("--cooc-matrix", aug.cooc_matrix,
                      "Precomputed matrix (default: built from the seed corpus)");
  augment->add_flag("--include-seed", cfg.include_seed, "Prepend the seed corpus");
  augment->add_option("--seed-cap", aug.seed_cap, "Input pairs per round");
  augment->add_option("--round-cap", aug.round_cap, "Emitted pairs per round");
  augment->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  augment->add_option("--max-skip-rate", cfg.max_skip_rate,
                      "Abort a round when more seed pairs than this fail")
      ->capture_default_str();
  augment->add_option("--record-transcript", aug.record_transcript,
                      "Save every backend call for replay");
  augment->add_flag("--timing", aug.timing, "Add wall_time_s to stats.jsonl");

  // validate
  BitextArgs validate_args;
  std::string validate_meta;
  CLI::App* validate = app.add_subcommand("validate", "Check a bitext's invariants");
  AddBitextOptions(*validate, validate_args);
  validate->add_option("--meta", validate_meta, "Metadata TSV to check alongside");

  // cooc-build
  BitextArgs cooc_args;
  std::string cooc_stop_src;
  std::string cooc_stop_tgt;
  std::string cooc_out;
  CLI::App* cooc = app.add_subcommand("cooc-build", "Build a co-occurrence matrix");
  AddBitextOptions(*cooc, cooc_args);
  cooc->add_option("--stopwords-src", cooc_stop_src, "Source stop-word list");
  cooc->add_option("--stopwords-tgt", cooc_stop_tgt, "Target stop-word list");
  cooc->add_option("--out", cooc_out, "Output TSV")->required();

  // qe-check
  BitextArgs qe_args;
  std::string qe_backend = "mock";
  double qe_threshold = 0.8;
  int qe_workers = 1;
  std::string qe_report;
  CLI::App* qe = app.add_subcommand("qe-check", "Report QE scores for a bitext");
  AddBitextOptions(*qe, qe_args);
  qe->add_option("--backend", qe_backend, "Backend")->capture_default_str();
  qe->add_option("--qe-threshold", qe_threshold, "Pass threshold")->capture_default_str();
  qe->add_option("--workers", qe_workers, "Concurrent requests")->capture_default_str();
  qe->add_option("--report", qe_report, "Per-pair TSV report");

  // stats
  std::string stats_file;
  CLI::App* stats = app.add_subcommand("stats", "Summarize a stats.jsonl file");
  stats->add_option("file", stats_file, "stats.jsonl")->required();

  // sample
  BitextArgs sample_args;
  std::size_t sample_n = 20;
  std::uint64_t sample_seed = 1;
  CLI::App* sample = app.add_subcommand("sample", "Print N random pairs for review");
  AddBitextOptions(*sample, sample_args);
  sample->add_option("-n,--count", sample_n, "Pairs to print")->capture_default_str();
  sample->add_option("--seed", sample_seed, "RNG seed")->capture_default_str();

  absl::StatusOr<std::vector<std::string>> expanded = ExpandAugmentConfig(args);
  if (!expanded.ok()) {
    err << "usage error: " << expanded.status().message() << '\n';
    return kExitUsage;
  }
  std::vector<std::string> reversed(expanded->rbegin(), expanded->rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (augment->parsed()) return RunAugment(aug, *augment, out, err);
  if (validate->parsed()) return RunValidate(validate_args, validate_meta, out, err);
  if (cooc->parsed()) {
    return RunCoocBuild(cooc_args, cooc_stop_src, cooc_stop_tgt, cooc_out, out, err);
  }
  if (qe->parsed()) {
    return RunQeCheck(qe_args, qe_backend, qe_threshold, qe_workers, qe_report, out, err);
  }
  if (stats->parsed()) return RunStats(stats_file, out, err);
  if (sample->parsed()) return RunSample(sample_args, sample_n, sample_seed, out, err);
  return kExitUsage;
}

}  // namespace paraug::cli
