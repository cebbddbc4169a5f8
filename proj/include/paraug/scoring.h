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

#ifndef PARAUG_SCORING_H_
#define PARAUG_SCORING_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "absl/status/statusor.h"
#include "paraug/backend.h"
#include "paraug/corpus.h"
#include "paraug/embedding_cache.h"
#include "paraug/masking.h"

namespace paraug {

struct CandidatePair {
  GeneratedVariant source_variant;
  GeneratedVariant target_variant;
  double similarity = 0.0;
  std::optional<double> cooc;
  std::optional<double> qe;

  bool operator==(const CandidatePair&) const = default;
};

enum class Execution { kSerial, kParallel };

// Dot product of two unit vectors, clamped to [-1, 1].
absl::StatusOr<double> CosineSimilarity(const EmbeddingVector& u,
                                        const EmbeddingVector& v);

// Full cross-product of source x target variants, minus the
// (original, original) pair, in row-major order. Each distinct text is
// embedded once; pass a cache to share embeddings across calls.
absl::StatusOr<std::vector<CandidatePair>> ScorePairs(
    std::span<const GeneratedVariant> source_variants,
    std::span<const GeneratedVariant> target_variants, InferenceBackend& backend,
    EmbeddingCache* cache = nullptr, Execution execution = Execution::kParallel);

// Keeps pairs with similarity >= threshold, order preserved.
std::vector<CandidatePair> FilterPairs(std::vector<CandidatePair> pairs,
                                       double threshold);

// Set of normalized (source, target) keys: NFC, whitespace runs collapsed,
// trimmed.
class DedupIndex {
 public:
  static std::string Key(std::string_view source, std::string_view target);

  void Seed(const ParallelCorpus& corpus);
  bool Contains(std::string_view source, std::string_view target) const;
  // True if the key was new.
  bool Insert(std::string_view source, std::string_view target);
  std::size_t size() const { return seen_.size(); }

 private:
  std::unordered_set<std::string> seen_;
};

// Drops pairs whose key is already in the index and records the rest; the
// first occurrence wins.
std::vector<CandidatePair> Dedup(std::vector<CandidatePair> pairs,
                                 DedupIndex& index);

}  // namespace paraug

#endif  // PARAUG_SCORING_H_
