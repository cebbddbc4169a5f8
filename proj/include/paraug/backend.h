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

#ifndef PARAUG_BACKEND_H_
#define PARAUG_BACKEND_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace paraug {

struct MaskPrediction {
  std::string token;
  double prob = 0.0;  // [0, 1]

  bool operator==(const MaskPrediction&) const = default;
};

struct EmbeddingVector {
  std::vector<double> values;

  std::size_t dim() const { return values.size(); }
  bool operator==(const EmbeddingVector&) const = default;
};

struct BackendDescriptor {
  std::string name;
  std::string mask_sentinel;
  int embedding_dim = 0;
  std::string qe_scale;
  bool qe_available = true;
};

struct MaskRequest {
  std::string masked_text;  // exactly one mask sentinel
  int topk = 10;
  // The word that was replaced by the sentinel. Informational: real models
  // never see it and the HTTP client does not send it; the mock backend
  // keys its substitution table on it.
  std::string masked_word;
};

// Everything the pipeline needs from models. Implementations must be safe to
// call concurrently.
class InferenceBackend {
 public:
  virtual ~InferenceBackend() = default;

  // Stable for the lifetime of the backend.
  virtual absl::StatusOr<BackendDescriptor> Describe() = 0;

  // At most request.topk predictions, ordered by prob desc then token asc.
  virtual absl::StatusOr<std::vector<MaskPrediction>> FillMask(
      const MaskRequest& request) = 0;

  // One unit-norm vector per text, same order. Batch composition never
  // changes the result for a given text.
  virtual absl::StatusOr<std::vector<EmbeddingVector>> Embed(
      std::span<const std::string> texts) = 0;

  virtual absl::StatusOr<double> QeScore(std::string_view source,
                                         std::string_view target) = 0;
};

inline constexpr double kUnitNormTolerance = 1e-4;

// Sorts by (prob desc, token asc) and truncates to topk.
void CanonicalizePredictions(std::vector<MaskPrediction>& predictions, int topk);

std::size_t CountOccurrences(std::string_view text, std::string_view needle);

// MalformedMaskInput unless `text` contains `sentinel` exactly once.
absl::Status CheckMaskedText(std::string_view text, std::string_view sentinel);

double L2Norm(std::span<const double> values);
bool IsUnitNorm(const EmbeddingVector& v, double tolerance = kUnitNormTolerance);

}  // namespace paraug

#endif  // PARAUG_BACKEND_H_
