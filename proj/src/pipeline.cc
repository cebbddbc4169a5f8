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

#include "paraug/pipeline.h"

#include <algorithm>
#include <cstdint>

#include "paraug/strings.h"
#include "json.hpp"
#include "paraug/status.h"

namespace paraug {
namespace {

using nlohmann::ordered_json;

using Clock = std::chrono::steady_clock;

constexpr const char* kCountKeys[] = {
    "seed_pairs",        "skipped_pairs", "variants_src", "variants_tgt",
    "candidate_pairs",   "passed_similarity", "passed_cooc", "passed_qe",
    "emitted_after_dedup",
};

std::size_t* CountField(RoundStats& s, std::string_view key) {
  if (key == "seed_pairs") return &s.seed_pairs;
  if (key == "skipped_pairs") return &s.skipped_pairs;
  if (key == "variants_src") return &s.variants_src;
  if (key == "variants_tgt") return &s.variants_tgt;
  if (key == "candidate_pairs") return &s.candidate_pairs;
  if (key == "passed_similarity") return &s.passed_similarity;
  if (key == "passed_cooc") return &s.passed_cooc;
  if (key == "passed_qe") return &s.passed_qe;
  if (key == "emitted_after_dedup") return &s.emitted_after_dedup;
  return nullptr;
}

SegmentPair ToSegmentPair(const CandidatePair& c, int round, std::size_t ordinal) {
  SegmentPair pair;
  pair.id = StrCat("g", round, "-", ordinal);
  pair.source_text = c.source_variant.text;
  pair.target_text = c.target_variant.text;
  pair.origin = Origin::Generated(round);
  pair.scores = ScoreSet{c.similarity, c.qe, c.cooc};
  return pair;
}

}  // namespace

absl::Status PipelineConfig::Validate() const {
  auto fail = [](std::string_view what) { return MakeError(ErrorKind::kConfig, what); };
  if (topk < 1) return fail("topk must be >= 1");
  if (!(threshold >= -1.0 && threshold <= 1.0)) return fail("threshold must be in [-1, 1]");
  if (rounds < 1) return fail("rounds must be >= 1");
  if (max_sites < 1) return fail("max_sites must be >= 1");
  if (max_variants_per_side < 1) return fail("max_variants_per_side must be >= 1");
  if (workers < 1) return fail("workers must be >= 1");
  if (!(max_skip_rate >= 0.0 && max_skip_rate <= 1.0)) {
    return fail("max_skip_rate must be in [0, 1]");
  }
  return absl::OkStatus();
}

bool RoundStats::FunnelHolds() const {
  return emitted_after_dedup <= passed_qe && passed_qe <= passed_cooc &&
         passed_cooc <= passed_similarity && passed_similarity <= candidate_pairs;
}

RoundStats& RoundStats::operator+=(const RoundStats& other) {
  for (const char* key : kCountKeys) {
    *CountField(*this, key) += *CountField(const_cast<RoundStats&>(other), key);
  }
  wall_time += other.wall_time;
  return *this;
}

std::string RoundStats::ToJson(bool include_timing) const {
  ordered_json j;
  j["round"] = round;
  for (const char* key : kCountKeys) {
    j[key] = *CountField(const_cast<RoundStats&>(*this), key);
  }
  if (include_timing) j["wall_time_s"] = wall_time.count();
  return j.dump();
}

absl::StatusOr<RoundStats> RoundStatsFromJson(std::string_view line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object() || !j.contains("round") ||
      !j["round"].is_number_integer()) {
    return MakeError(ErrorKind::kInvariantViolation, "malformed stats line");
  }
  RoundStats s;
  s.round = j["round"].get<int>();
  for (const char* key : kCountKeys) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
      return MakeError(ErrorKind::kInvariantViolation,
                       StrCat("stats line lacks '", key, "'"));
    }
    *CountField(s, key) = j[key].get<std::size_t>();
  }
  if (j.contains("wall_time_s") && j["wall_time_s"].is_number()) {
    s.wall_time = std::chrono::duration<double>(j["wall_time_s"].get<double>());
  }
  return s;
}

Augmenter::Augmenter(PipelineConfig config, InferenceBackend& backend,
                     StopwordSet stop_source, StopwordSet stop_target,
                     std::optional<CooccurrenceMatrix> matrix)
    : config_(std::move(config)),
      backend_(backend),
      stop_source_(std::move(stop_source)),
      stop_target_(std::move(stop_target)),
      matrix_(std::move(matrix)) {}

absl::StatusOr<PairResult> Augmenter::ScorePair(const SegmentPair& pair) {
  if (config_.cooc_check && !matrix_) {
    return MakeError(ErrorKind::kConfig, "co-occurrence gate needs a matrix");
  }
  PairResult result;
  RoundStats& stats = result.stats;
  stats.seed_pairs = 1;

  const MaskingOptions masking = config_.masking();
  absl::StatusOr<std::vector<GeneratedVariant>> sources = GenerateAllVariants(
      pair.source_text, pair.id, Side::kSource, masking, stop_source_, backend_);
  if (!sources.ok()) return Annotate(sources.status(), "source side");
  absl::StatusOr<std::vector<GeneratedVariant>> targets = GenerateAllVariants(
      pair.target_text, pair.id, Side::kTarget, masking, stop_target_, backend_);
  if (!targets.ok()) return Annotate(targets.status(), "target side");
  stats.variants_src = sources->size();
  stats.variants_tgt = targets->size();

  absl::StatusOr<std::vector<CandidatePair>> scored =
      ScorePairs(*sources, *targets, backend_, &cache_);
  if (!scored.ok()) return scored.status();
  stats.candidate_pairs = scored->size();

  std::vector<CandidatePair> kept = FilterPairs(*std::move(scored), config_.threshold);
  stats.passed_similarity = kept.size();

  if (config_.cooc_check) {
    std::erase_if(kept, [&](CandidatePair& c) {
      return !CoocGate(c, *matrix_, config_.cooc_min_score).pass;
    });
  }
  stats.passed_cooc = kept.size();

  if (config_.qe_check) {
    std::vector<CandidatePair> passed;
    for (CandidatePair& c : kept) {
      absl::StatusOr<double> qe =
          backend_.QeScore(c.source_variant.text, c.target_variant.text);
      if (!qe.ok()) return Annotate(qe.status(), "qe");
      c.qe = *qe;
      if (*qe >= config_.qe_threshold) passed.push_back(std::move(c));
    }
    kept = std::move(passed);
  }
  stats.passed_qe = kept.size();
  stats.emitted_after_dedup = kept.size();
  result.accepted = std::move(kept);
  return result;
}

absl::StatusOr<PairResult> Augmenter::AugmentPair(const SegmentPair& pair,
                                                  DedupIndex& index) {
  absl::StatusOr<PairResult> result = ScorePair(pair);
  if (!result.ok()) return result;
  result->accepted = Dedup(std::move(result->accepted), index);
  result->stats.emitted_after_dedup = result->accepted.size();
  return result;
}

absl::StatusOr<RoundResult> Augmenter::RunRound(const ParallelCorpus& input,
                                                int round) {
  DedupIndex index;
  index.Seed(input);
  return RunRound(input, round, index);
}

absl::StatusOr<RoundResult> Augmenter::RunRound(const ParallelCorpus& input,
                                                int round, DedupIndex& index) {
  const Clock::time_point start = Clock::now();
  RoundResult out;
  out.emitted.lang_source = input.lang_source;
  out.emitted.lang_target = input.lang_target;
  out.stats.round = round;

  std::size_t count = input.pairs.size();
  if (config_.seed_cap) count = std::min(count, *config_.seed_cap);

  // Scoring fans out across workers; emission and dedup then run in input
  // order so the output does not depend on scheduling.
  std::vector<absl::StatusOr<PairResult>> scored(count, absl::UnknownError("unset"));
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for num_threads(config_.workers) schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    scored[static_cast<std::size_t>(i)] = ScorePair(input.pairs[static_cast<std::size_t>(i)]);
  }

  std::size_t emitted = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (!scored[i].ok()) {
      ++out.stats.seed_pairs;
      ++out.stats.skipped_pairs;
      out.skipped.push_back(
          StrCat(input.pairs[i].id, ": ", scored[i].status().message()));
      continue;
    }
    PairResult& r = *scored[i];
    r.stats.emitted_after_dedup = 0;
    for (const CandidatePair& c : r.accepted) {
      if (config_.round_cap && emitted >= *config_.round_cap) break;
      if (!index.Insert(c.source_variant.text, c.target_variant.text)) continue;
      out.emitted.pairs.push_back(ToSegmentPair(c, round, emitted));
      ++emitted;
      ++r.stats.emitted_after_dedup;
    }
    out.stats += r.stats;
  }

  if (out.stats.skipped_pairs > 0 && count > 0) {
    const double rate = static_cast<double>(out.stats.skipped_pairs) /
                        static_cast<double>(count);
    if (rate > config_.max_skip_rate) {
      return MakeError(ErrorKind::kRunAborted,
                       StrCat("round ", round, ": ", out.stats.skipped_pairs,
                                    " of ", count, " seed pairs failed; first: ",
                                    out.skipped.front()));
    }
  }
  out.stats.wall_time = Clock::now() - start;
  return out;
}

absl::StatusOr<RunResult> Augmenter::Run(const ParallelCorpus& seed) {
  if (absl::Status s = config_.Validate(); !s.ok()) return s;
  if (config_.cooc_check && !matrix_) {
    absl::StatusOr<CooccurrenceMatrix> built =
        BuildMatrix(seed, stop_source_, stop_target_);
    if (!built.ok()) return built.status();
    matrix_ = *std::move(built);
  }

  RunResult result;
  result.corpus.lang_source = seed.lang_source;
  result.corpus.lang_target = seed.lang_target;

  DedupIndex index;
  index.Seed(seed);
  ParallelCorpus pool = seed;
  ParallelCorpus emitted;
  for (int round = 1; round <= config_.rounds; ++round) {
    absl::StatusOr<RoundResult> r = RunRound(pool, round, index);
    if (!r.ok()) return r.status();
    result.rounds.push_back(r->stats);
    result.skipped.insert(result.skipped.end(), r->skipped.begin(), r->skipped.end());
    pool.pairs.insert(pool.pairs.end(), r->emitted.pairs.begin(), r->emitted.pairs.end());
    emitted.pairs.insert(emitted.pairs.end(), r->emitted.pairs.begin(),
                         r->emitted.pairs.end());
  }
  if (config_.include_seed) result.corpus.pairs = seed.pairs;
  result.corpus.pairs.insert(result.corpus.pairs.end(), emitted.pairs.begin(),
                             emitted.pairs.end());
  return result;
}

namespace {

QeReportEntry ScoreOne(std::string id, std::string_view source, std::string_view target,
                       InferenceBackend& backend, double qe_threshold) {
  QeReportEntry entry;
  entry.id = std::move(id);
  absl::StatusOr<double> qe = backend.QeScore(source, target);
  if (!qe.ok()) {
    entry.error = std::string(qe.status().message());
    return entry;
  }
  entry.score = *qe;
  entry.pass = *qe >= qe_threshold;
  return entry;
}

void Tally(QeReport& report) {
  for (const QeReportEntry& e : report.entries) {
    if (!e.score) {
      ++report.errors;
    } else if (e.pass) {
      ++report.passed;
    } else {
      ++report.failed;
    }
  }
}

}  // namespace

QeReport QeCrossCheck(std::span<CandidatePair> pairs, InferenceBackend& backend,
                      double qe_threshold, int workers) {
  QeReport report;
  report.entries.resize(pairs.size());
  const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for num_threads(std::max(1, workers)) schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    CandidatePair& c = pairs[static_cast<std::size_t>(i)];
    QeReportEntry entry =
        ScoreOne(StrCat(c.source_variant.parent_pair_id, "#", i),
                 c.source_variant.text, c.target_variant.text, backend, qe_threshold);
    if (entry.score) c.qe = entry.score;
    report.entries[static_cast<std::size_t>(i)] = std::move(entry);
  }
  Tally(report);
  return report;
}

QeReport QeCrossCheck(ParallelCorpus& corpus, InferenceBackend& backend,
                      double qe_threshold, int workers) {
  QeReport report;
  report.entries.resize(corpus.pairs.size());
  const auto n = static_cast<std::int64_t>(corpus.pairs.size());
#pragma omp parallel for num_threads(std::max(1, workers)) schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    SegmentPair& p = corpus.pairs[static_cast<std::size_t>(i)];
    QeReportEntry entry =
        ScoreOne(p.id, p.source_text, p.target_text, backend, qe_threshold);
    if (entry.score && p.scores) p.scores->qe = entry.score;
    report.entries[static_cast<std::size_t>(i)] = std::move(entry);
  }
  Tally(report);
  return report;
}

}  // namespace paraug
