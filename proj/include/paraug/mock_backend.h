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

#ifndef PARAUG_MOCK_BACKEND_H_
#define PARAUG_MOCK_BACKEND_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "paraug/backend.h"

namespace paraug {

std::uint64_t Fnv1a64(std::string_view bytes);

// Deterministic in-process backend.
//
//  * fill-mask: looks the masked word (case-folded) up in a substitution
//    table; unknown words predict nothing.
//  * embed: case-folded word tokens hashed with 64-bit FNV-1a into
//    embedding_dim buckets, counts accumulated, then L2-normalized. A text
//    without word tokens hashes its punctuation tokens instead.
//  * qe: cosine of the two mock embeddings clamped to [0, 1].
//
// Fixture file (JSON):
//   {"embedding_dim": 16,
//    "fill_mask": {"financial": [{"token": "medical", "prob": 0.4}, ...]}}
class MockBackend final : public InferenceBackend {
 public:
  using SubstitutionTable = std::map<std::string, std::vector<MaskPrediction>>;

  static constexpr int kDefaultEmbeddingDim = 16;
  static constexpr std::string_view kMaskSentinel = "[MASK]";

  explicit MockBackend(SubstitutionTable table = {},
                       int embedding_dim = kDefaultEmbeddingDim);

  static absl::StatusOr<MockBackend> FromFixtureJson(std::string_view json);
  static absl::StatusOr<MockBackend> FromFixtureFile(
      const std::filesystem::path& path);

  absl::StatusOr<BackendDescriptor> Describe() override;
  absl::StatusOr<std::vector<MaskPrediction>> FillMask(
      const MaskRequest& request) override;
  absl::StatusOr<std::vector<EmbeddingVector>> Embed(
      std::span<const std::string> texts) override;
  absl::StatusOr<double> QeScore(std::string_view source,
                                 std::string_view target) override;

  absl::StatusOr<EmbeddingVector> EmbedOne(std::string_view text) const;

  const SubstitutionTable& table() const { return table_; }
  int embedding_dim() const { return embedding_dim_; }

 private:
  SubstitutionTable table_;  // keys case-folded
  int embedding_dim_;
};

}  // namespace paraug

#endif  // PARAUG_MOCK_BACKEND_H_
