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

#ifndef PARAUG_CORPUS_H_
#define PARAUG_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace paraug {

struct Origin {
  enum class Kind { kSeed, kGenerated };

  Kind kind = Kind::kSeed;
  int round = 0;  // > 0 iff kind == kGenerated

  static Origin Seed() { return {}; }
  static Origin Generated(int round) { return {Kind::kGenerated, round}; }

  bool is_seed() const { return kind == Kind::kSeed; }
  bool operator==(const Origin&) const = default;
};

struct ScoreSet {
  double similarity = 0.0;  // embedding cosine, [-1, 1]
  std::optional<double> qe;
  std::optional<double> cooc;

  bool operator==(const ScoreSet&) const = default;
};

struct SegmentPair {
  std::string id;
  std::string source_text;
  std::string target_text;
  Origin origin;
  std::optional<ScoreSet> scores;

  bool operator==(const SegmentPair&) const = default;
};

struct ParallelCorpus {
  std::vector<SegmentPair> pairs;
  std::string lang_source;
  std::string lang_target;
};

// Builds a corpus from the contents of the two bitext files. Lines are
// trimmed and NFC-normalized; ids are zero-based line numbers.
absl::StatusOr<ParallelCorpus> ParseParallelText(std::string_view text_l1,
                                                 std::string_view text_l2,
                                                 std::string lang_source,
                                                 std::string lang_target);

absl::StatusOr<ParallelCorpus> LoadParallelCorpus(
    const std::filesystem::path& path_l1, const std::filesystem::path& path_l2,
    std::string lang_source, std::string lang_target);

struct WriteReport {
  std::size_t pairs = 0;
  std::size_t bytes_l1 = 0;
  std::size_t bytes_l2 = 0;
};

// Writes the two-file bitext plus a TSV sidecar with columns
// id, origin, round, similarity, qe, cooc.
absl::StatusOr<WriteReport> WriteAugmentedCorpus(
    const ParallelCorpus& corpus, const std::filesystem::path& out_l1,
    const std::filesystem::path& out_l2, const std::filesystem::path& out_meta);

inline constexpr std::string_view kMetaHeader =
    "id\torigin\tround\tsimilarity\tqe\tcooc";

// Shortest decimal that round-trips the double.
std::string FormatScore(double value);

std::string FormatMetaRow(const SegmentPair& pair);

// Reattaches origin and scores from a metadata sidecar, matching rows to
// pairs by position. Fails if the ids disagree.
absl::Status ApplyMetadata(const std::filesystem::path& meta_path,
                           ParallelCorpus& corpus);

enum class ViolationRule {
  kBlankSegment,
  kEmbeddedNewline,
  kDuplicateId,
  kMissingSimilarity,
  kSimilarityOutOfRange,
  kInvalidRound,
};

struct Violation {
  ViolationRule rule;
  std::string pair_id;

  bool operator==(const Violation&) const = default;
};

std::string_view ViolationRuleName(ViolationRule rule);
std::string ToString(const Violation& violation);

// Empty iff every SegmentPair / ParallelCorpus invariant holds.
std::vector<Violation> ValidateCorpus(const ParallelCorpus& corpus);

}  // namespace paraug

#endif  // PARAUG_CORPUS_H_
