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

#ifndef PARAUG_PIPELINE_H_
#define PARAUG_PIPELINE_H_

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "paraug/backend.h"
#include "paraug/cooc.h"
#include "paraug/corpus.h"
#include "paraug/embedding_cache.h"
#include "paraug/masking.h"
#include "paraug/scoring.h"
#include "paraug/stopwords.h"

namespace paraug {

struct PipelineConfig {
  int topk = 10;
  double threshold = 0.80;
  int rounds = 1;
  std::size_t max_sites = 8;
  std::size_t max_variants_per_side = 100;
  bool qe_check = false;
  double qe_threshold = 0.8;
  bool cooc_check = false;
  double cooc_min_score = 0.0;
  std::string stopwords_source;  // paths; empty = no stop words
  std::string stopwords_target;
  std::string backend = "mock";  // "mock[:fixture.json]", "replay:file", "http://host:port"
  bool include_seed = false;
  std::optional<std::size_t> seed_cap;   // round input: first N pairs
  std::optional<std::size_t> round_cap;  // round output: first N emitted pairs
  int workers = 1;
  double max_skip_rate = 0.5;  // skipped / processed seed pairs, per round

  MaskingOptions masking() const {
    return {topk, max_sites, max_variants_per_side};
  }
  absl::Status Validate() const;
};

// Funnel counts. Gates that are switched off pass everything through, so
// emitted <= passed_qe <= passed_cooc <= passed_similarity <= candidates.
struct RoundStats {
  int round = 0;
  std::size_t seed_pairs = 0;
  std::size_t skipped_pairs = 0;
  std::size_t variants_src = 0;
  std::size_t variants_tgt = 0;
  std::size_t candidate_pairs = 0;
  std::size_t passed_similarity = 0;
  std::size_t passed_cooc = 0;
  std::size_t passed_qe = 0;
  std::size_t emitted_after_dedup = 0;
  std::chrono::duration<double> wall_time{0};

  bool FunnelHolds() const;
  RoundStats& operator+=(const RoundStats& other);
  // One JSON object, fixed key order. wall_time only when include_timing.
  std::string ToJson(bool include_timing = false) const;
};

absl::StatusOr<RoundStats> RoundStatsFromJson(std::string_view line);

struct PairResult {
  std::vector<CandidatePair> accepted;
  RoundStats stats;  // counts for this one seed pair
};

struct RoundResult {
  ParallelCorpus emitted;
  RoundStats stats;
  std::vector<std::string> skipped;  // "<pair id>: <error>"
};

struct RunResult {
  ParallelCorpus corpus;  // emitted pairs, preceded by the seed with include_seed
  std::vector<RoundStats> rounds;
  std::vector<std::string> skipped;
};

class Augmenter {
 public:
  Augmenter(PipelineConfig config, InferenceBackend& backend,
            StopwordSet stop_source = {}, StopwordSet stop_target = {},
            std::optional<CooccurrenceMatrix> matrix = std::nullopt);

  // Variants of both sides -> cross-product scores -> similarity threshold
  // -> optional co-occurrence gate -> optional QE gate. No dedup. Safe to
  // call concurrently.
  absl::StatusOr<PairResult> ScorePair(const SegmentPair& pair);

  // ScorePair followed by dedup against `index`.
  absl::StatusOr<PairResult> AugmentPair(const SegmentPair& pair, DedupIndex& index);

  // Augments every pair of `input` in order. `index` must already hold the
  // seed corpus and everything emitted earlier; new pairs are added to it.
  absl::StatusOr<RoundResult> RunRound(const ParallelCorpus& input, int round,
                                       DedupIndex& index);

  // Index seeded from `input` only.
  absl::StatusOr<RoundResult> RunRound(const ParallelCorpus& input, int round);

  // Round r runs on seed + everything emitted in rounds < r.
  absl::StatusOr<RunResult> Run(const ParallelCorpus& seed);

  const PipelineConfig& config() const { return config_; }
  const std::optional<CooccurrenceMatrix>& matrix() const { return matrix_; }

 private:
  PipelineConfig config_;
  InferenceBackend& backend_;
  StopwordSet stop_source_;
  StopwordSet stop_target_;
  std::optional<CooccurrenceMatrix> matrix_;
  EmbeddingCache cache_;
};

struct QeReportEntry {
  std::string id;
  std::optional<double> score;
  bool pass = false;
  std::string error;
};

struct QeReport {
  std::vector<QeReportEntry> entries;
  std::size_t passed = 0;
  std::size_t failed = 0;  // scored below threshold
  std::size_t errors = 0;  // backend failed for the pair

  double pass_rate() const {
    return entries.empty() ? 1.0
                           : static_cast<double>(passed) /
                                 static_cast<double>(entries.size());
  }
};

// Scores every pair with the backend's QE model and records the score in
// pair.qe. Backend errors are recorded per pair, never fatal.
QeReport QeCrossCheck(std::span<CandidatePair> pairs, InferenceBackend& backend,
                      double qe_threshold, int workers = 1);

// Same over a bitext; scores are recorded in scores->qe when scores exist.
QeReport QeCrossCheck(ParallelCorpus& corpus, InferenceBackend& backend,
                      double qe_threshold, int workers = 1);

}  // namespace paraug

#endif  // PARAUG_PIPELINE_H_
