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

#ifndef PARAUG_MASKING_H_
#define PARAUG_MASKING_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "paraug/backend.h"
#include "paraug/stopwords.h"
#include "paraug/tokenizer.h"

namespace paraug {

enum class Side { kSource, kTarget };

std::string_view SideName(Side side);

struct MaskSite {
  std::size_t token_index = 0;
  std::string original_token;

  bool operator==(const MaskSite&) const = default;
};

struct GeneratedVariant {
  std::string text;
  std::string parent_pair_id;
  Side side = Side::kSource;
  std::optional<MaskSite> site;  // absent for the untouched original
  std::string replacement;
  double model_prob = 1.0;
  bool is_original = false;

  bool operator==(const GeneratedVariant&) const = default;
};

struct MaskingOptions {
  int topk = 10;
  std::size_t max_sites = 8;
  std::size_t max_variants_per_side = 100;
};

// Word tokens that are neither stop words nor numerals, left to right, at
// most max_sites of them.
std::vector<MaskSite> EnumerateMaskSites(std::span<const Token> tokens,
                                         const StopwordSet& stopwords,
                                         std::size_t max_sites);

// Masks the site with the backend's sentinel, asks for topk predictions and
// turns every usable one into a single-substitution variant. Predictions are
// dropped when they case-fold to the original word, are not exactly one word
// token (whitespace, punctuation, the sentinel), or would denormalize the
// text. Sorted by model_prob desc, then replacement.
absl::StatusOr<std::vector<GeneratedVariant>> GenerateVariantsAt(
    std::string_view segment, const MaskSite& site, int topk,
    InferenceBackend& backend, std::string_view parent_pair_id = {},
    Side side = Side::kSource);

// The original segment (first, is_original) plus the substitution variants of
// every mask site. Duplicate texts keep the highest-probability edit; the set
// is capped at max_variants_per_side by probability, then returned in
// generation order.
absl::StatusOr<std::vector<GeneratedVariant>> GenerateAllVariants(
    std::string_view segment, std::string_view parent_pair_id, Side side,
    const MaskingOptions& options, const StopwordSet& stopwords,
    InferenceBackend& backend);

GeneratedVariant OriginalVariant(std::string_view segment,
                                 std::string_view parent_pair_id, Side side);

}  // namespace paraug

#endif  // PARAUG_MASKING_H_
