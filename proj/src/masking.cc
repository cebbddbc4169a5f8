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

#include "paraug/masking.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "paraug/strings.h"
#include "paraug/status.h"
#include "paraug/unicode.h"

namespace paraug {

std::string_view SideName(Side side) {
  return side == Side::kSource ? "source" : "target";
}

std::vector<MaskSite> EnumerateMaskSites(std::span<const Token> tokens,
                                         const StopwordSet& stopwords,
                                         std::size_t max_sites) {
  std::vector<MaskSite> sites;
  for (std::size_t i = 0; i < tokens.size() && sites.size() < max_sites; ++i) {
    const Token& t = tokens[i];
    if (!t.is_word() || IsNumeral(t.text) || stopwords.Contains(t.text)) continue;
    sites.push_back({i, t.text});
  }
  return sites;
}

GeneratedVariant OriginalVariant(std::string_view segment,
                                 std::string_view parent_pair_id, Side side) {
  GeneratedVariant v;
  v.text = std::string(segment);
  v.parent_pair_id = std::string(parent_pair_id);
  v.side = side;
  v.model_prob = 1.0;
  v.is_original = true;
  return v;
}

absl::StatusOr<std::vector<GeneratedVariant>> GenerateVariantsAt(
    std::string_view segment, const MaskSite& site, int topk,
    InferenceBackend& backend, std::string_view parent_pair_id, Side side) {
  const std::vector<Token> tokens = Tokenize(segment);
  if (site.token_index >= tokens.size() || !tokens[site.token_index].is_word() ||
      tokens[site.token_index].text != site.original_token) {
    return MakeError(ErrorKind::kInvariantViolation,
                     StrCat("mask site ", site.token_index, " '",
                                  site.original_token, "' does not match segment"));
  }
  const Token& target = tokens[site.token_index];

  absl::StatusOr<BackendDescriptor> descriptor = backend.Describe();
  if (!descriptor.ok()) return descriptor.status();
  const std::string& sentinel = descriptor->mask_sentinel;

  const std::string_view prefix = segment.substr(0, target.start);
  const std::string_view suffix = segment.substr(target.end);
  MaskRequest request{StrCat(prefix, sentinel, suffix), topk,
                      site.original_token};
  absl::StatusOr<std::vector<MaskPrediction>> predictions = backend.FillMask(request);
  if (!predictions.ok()) {
    return Annotate(predictions.status(),
                    StrCat("fill_mask at token ", site.token_index, " '",
                                 site.original_token, "'"));
  }

  const std::string folded_original =
      unicode::FoldCase(unicode::Nfc(site.original_token));
  const bool segment_is_nfc = unicode::IsNfc(segment);

  std::vector<GeneratedVariant> out;
  for (const MaskPrediction& p : *predictions) {
    std::string replacement = unicode::Nfc(p.token);
    if (unicode::FoldCase(replacement) == folded_original) continue;
    if (replacement.find(sentinel) != std::string::npos) continue;
    const std::vector<Token> parts = Tokenize(replacement);
    if (parts.size() != 1 || !parts.front().is_word() ||
        parts.front().text != replacement) {
      continue;
    }
    std::string text = StrCat(prefix, replacement, suffix);
    if (segment_is_nfc && !unicode::IsNfc(text)) continue;

    GeneratedVariant v;
    v.text = std::move(text);
    v.parent_pair_id = std::string(parent_pair_id);
    v.side = side;
    v.site = site;
    v.replacement = std::move(replacement);
    v.model_prob = p.prob;
    out.push_back(std::move(v));
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const GeneratedVariant& a, const GeneratedVariant& b) {
                     if (a.model_prob != b.model_prob) return a.model_prob > b.model_prob;
                     return a.replacement < b.replacement;
                   });
  if (topk < 0) topk = 0;
  if (out.size() > static_cast<std::size_t>(topk)) {
    out.resize(static_cast<std::size_t>(topk));
  }
  return out;
}

absl::StatusOr<std::vector<GeneratedVariant>> GenerateAllVariants(
    std::string_view segment, std::string_view parent_pair_id, Side side,
    const MaskingOptions& options, const StopwordSet& stopwords,
    InferenceBackend& backend) {
  if (options.max_variants_per_side == 0) return std::vector<GeneratedVariant>();

  const std::vector<Token> tokens = Tokenize(segment);
  const std::vector<MaskSite> sites =
      EnumerateMaskSites(tokens, stopwords, options.max_sites);

  // Substitutions in generation order; duplicates resolved as they arrive.
  std::vector<GeneratedVariant> generated;
  std::unordered_map<std::string, std::size_t> by_text;
  for (const MaskSite& site : sites) {
    absl::StatusOr<std::vector<GeneratedVariant>> at = GenerateVariantsAt(
        segment, site, options.topk, backend, parent_pair_id, side);
    if (!at.ok()) return at.status();
    for (GeneratedVariant& v : *at) {
      if (v.text == segment) continue;
      auto [it, inserted] = by_text.try_emplace(v.text, generated.size());
      if (inserted) {
        generated.push_back(std::move(v));
      } else if (v.model_prob > generated[it->second].model_prob) {
        generated[it->second] = std::move(v);
      }
    }
  }

  const std::size_t slots = options.max_variants_per_side - 1;
  std::vector<std::size_t> keep(generated.size());
  std::iota(keep.begin(), keep.end(), 0);
  if (keep.size() > slots) {
    std::stable_sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
      return generated[a].model_prob > generated[b].model_prob;
    });
    keep.resize(slots);
    std::sort(keep.begin(), keep.end());
  }

  std::vector<GeneratedVariant> out;
  out.reserve(keep.size() + 1);
  out.push_back(OriginalVariant(segment, parent_pair_id, side));
  for (std::size_t i : keep) out.push_back(std::move(generated[i]));
  return out;
}

}  // namespace paraug
