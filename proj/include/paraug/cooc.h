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

#ifndef PARAUG_COOC_H_
#define PARAUG_COOC_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "paraug/corpus.h"
#include "paraug/scoring.h"
#include "paraug/stopwords.h"

namespace paraug {

// Sparse cross-lingual word co-occurrence counts. Words are case-folded;
// vocabularies are sorted so indices do not depend on corpus order.
// Marginals are the row and column sums of the count matrix.
class CooccurrenceMatrix {
 public:
  struct Entry {
    std::string source;
    std::string target;
    std::uint64_t count = 0;

    bool operator==(const Entry&) const = default;
  };

  CooccurrenceMatrix() = default;

  // Builds from (source, target, count) triples; repeated keys add up and
  // zero counts are ignored.
  static CooccurrenceMatrix FromEntries(std::vector<Entry> entries);

  // TSV sidecar: header "source\ttarget\tcount", then one row per nonzero
  // cell sorted by (source, target).
  absl::Status Save(const std::filesystem::path& path) const;
  static absl::StatusOr<CooccurrenceMatrix> Load(const std::filesystem::path& path);

  std::uint64_t Count(std::string_view source, std::string_view target) const;
  std::uint64_t SourceTotal(std::string_view source) const;
  std::uint64_t TargetTotal(std::string_view target) const;
  std::uint64_t pair_total() const { return pair_total_; }

  const std::vector<std::string>& source_vocab() const { return source_vocab_; }
  const std::vector<std::string>& target_vocab() const { return target_vocab_; }

  // Nonzero cells sorted by (source, target).
  std::vector<Entry> Entries() const;
  CooccurrenceMatrix Transposed() const;

  // Row/column sums and pair_total agree with the counts.
  bool MarginalsConsistent() const;

 private:
  friend absl::StatusOr<CooccurrenceMatrix> BuildMatrix(const ParallelCorpus&,
                                                        const StopwordSet&,
                                                        const StopwordSet&, Execution);

  static std::uint64_t CellKey(std::uint32_t row, std::uint32_t col) {
    return (static_cast<std::uint64_t>(row) << 32) | col;
  }
  std::optional<std::uint32_t> SourceIndex(std::string_view word) const;
  std::optional<std::uint32_t> TargetIndex(std::string_view word) const;
  void RecomputeTotals();

  std::vector<std::string> source_vocab_;
  std::vector<std::string> target_vocab_;
  std::unordered_map<std::string, std::uint32_t> source_index_;
  std::unordered_map<std::string, std::uint32_t> target_index_;
  std::unordered_map<std::uint64_t, std::uint64_t> counts_;
  std::vector<std::uint64_t> source_totals_;
  std::vector<std::uint64_t> target_totals_;
  std::uint64_t pair_total_ = 0;
};

// Case-folded non-stop-word word types of a segment, sorted and unique.
std::vector<std::string> ContentWordTypes(std::string_view segment,
                                          const StopwordSet& stopwords);

// For every pair, each source content-word type co-occurs once with each
// target content-word type. Fails with EmptyCorpus on an empty corpus.
absl::StatusOr<CooccurrenceMatrix> BuildMatrix(const ParallelCorpus& corpus,
                                               const StopwordSet& stop_source,
                                               const StopwordSet& stop_target,
                                               Execution execution = Execution::kParallel);

// Add-one smoothed PMI:
//   log((c(s,t) + 1) * N / ((c(s) + 1) * (c(t) + 1))),  N = pair_total.
double AssociationScore(const CooccurrenceMatrix& matrix, std::string_view source_word,
                        std::string_view target_word);

struct CoocDecision {
  bool pass = true;
  std::optional<double> score;
};

// When both sides carry a substitution, passes iff the association of the
// two replacement words reaches min_score. When one side is the untouched
// original there is no aligned word to compare, so the pair passes with no
// score. The decision's score is also written to pair.cooc.
CoocDecision CoocGate(CandidatePair& pair, const CooccurrenceMatrix& matrix,
                      double min_score);

}  // namespace paraug

#endif  // PARAUG_COOC_H_
