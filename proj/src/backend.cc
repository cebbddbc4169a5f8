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

#include "paraug/backend.h"

#include <algorithm>
#include <cmath>

#include "paraug/strings.h"
#include "paraug/status.h"

namespace paraug {

void CanonicalizePredictions(std::vector<MaskPrediction>& predictions, int topk) {
  std::sort(predictions.begin(), predictions.end(),
            [](const MaskPrediction& a, const MaskPrediction& b) {
              if (a.prob != b.prob) return a.prob > b.prob;
              return a.token < b.token;
            });
  if (topk < 0) topk = 0;
  if (predictions.size() > static_cast<std::size_t>(topk)) {
    predictions.resize(static_cast<std::size_t>(topk));
  }
}

std::size_t CountOccurrences(std::string_view text, std::string_view needle) {
  if (needle.empty()) return 0;
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string_view::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

absl::Status CheckMaskedText(std::string_view text, std::string_view sentinel) {
  const std::size_t n = CountOccurrences(text, sentinel);
  if (n != 1) {
    return MakeError(ErrorKind::kMalformedMaskInput,
                     StrCat("expected exactly one '", sentinel,
                                  "', found ", n));
  }
  return absl::OkStatus();
}

double L2Norm(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v * v;
  return std::sqrt(sum);
}

bool IsUnitNorm(const EmbeddingVector& v, double tolerance) {
  return std::abs(L2Norm(v.values) - 1.0) <= tolerance;
}

}  // namespace paraug
