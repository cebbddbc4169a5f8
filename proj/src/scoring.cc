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

#include "paraug/scoring.h"

#include <algorithm>

#include "paraug/strings.h"
#include "paraug/scoring_kernels.h"
#include "paraug/status.h"
#include "paraug/unicode.h"

namespace paraug {
namespace {

absl::Status CheckVariantSides(std::span<const GeneratedVariant> source_variants,
                               std::span<const GeneratedVariant> target_variants) {
  const std::string* parent = nullptr;
  auto check = [&](const GeneratedVariant& v, Side want) -> absl::Status {
    if (v.side != want) {
      return MakeError(ErrorKind::kInvariantViolation,
                       StrCat("variant '", v.text, "' is on the ",
                                    SideName(v.side), " side, expected ",
                                    SideName(want)));
    }
    if (parent == nullptr) parent = &v.parent_pair_id;
    if (v.parent_pair_id != *parent) {
      return MakeError(ErrorKind::kInvariantViolation,
                       StrCat("variants from pairs '", *parent, "' and '",
                                    v.parent_pair_id, "' mixed"));
    }
    return absl::OkStatus();
  };
  for (const GeneratedVariant& v : source_variants) {
    if (absl::Status s = check(v, Side::kSource); !s.ok()) return s;
  }
  for (const GeneratedVariant& v : target_variants) {
    if (absl::Status s = check(v, Side::kTarget); !s.ok()) return s;
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<double>> Flatten(const std::vector<EmbeddingVector>& vectors,
                                            std::size_t dim) {
  std::vector<double> flat;
  flat.reserve(vectors.size() * dim);
  for (const EmbeddingVector& v : vectors) {
    if (v.dim() != dim) {
      return MakeError(ErrorKind::kDimensionMismatch,
                       StrCat("embedding dims ", v.dim(), " and ", dim));
    }
    flat.insert(flat.end(), v.values.begin(), v.values.end());
  }
  return flat;
}

}  // namespace

absl::StatusOr<double> CosineSimilarity(const EmbeddingVector& u,
                                        const EmbeddingVector& v) {
  if (u.dim() != v.dim()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     StrCat(u.dim(), " vs ", v.dim()));
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) dot += u.values[i] * v.values[i];
  return std::clamp(dot, -1.0, 1.0);
}

absl::StatusOr<std::vector<CandidatePair>> ScorePairs(
    std::span<const GeneratedVariant> source_variants,
    std::span<const GeneratedVariant> target_variants, InferenceBackend& backend,
    EmbeddingCache* cache, Execution execution) {
  if (absl::Status s = CheckVariantSides(source_variants, target_variants); !s.ok()) {
    return s;
  }
  if (source_variants.empty() || target_variants.empty()) {
    return std::vector<CandidatePair>();
  }

  EmbeddingCache local;
  EmbeddingCache& embeddings = cache != nullptr ? *cache : local;

  std::vector<std::string> texts;
  texts.reserve(source_variants.size() + target_variants.size());
  for (const GeneratedVariant& v : source_variants) texts.push_back(v.text);
  for (const GeneratedVariant& v : target_variants) texts.push_back(v.text);
  absl::StatusOr<std::vector<EmbeddingVector>> vectors =
      embeddings.EmbedAll(backend, texts);
  if (!vectors.ok()) return vectors.status();

  const std::size_t n = source_variants.size();
  const std::size_t m = target_variants.size();
  const std::size_t dim = vectors->front().dim();
  std::vector<EmbeddingVector> src(vectors->begin(), vectors->begin() + n);
  std::vector<EmbeddingVector> tgt(vectors->begin() + n, vectors->end());
  absl::StatusOr<std::vector<double>> rows = Flatten(src, dim);
  if (!rows.ok()) return rows.status();
  absl::StatusOr<std::vector<double>> cols = Flatten(tgt, dim);
  if (!cols.ok()) return cols.status();

  std::vector<double> sims(n * m);
  if (execution == Execution::kParallel) {
    kernels::CrossDotParallel(*rows, *cols, dim, sims);
  } else {
    kernels::CrossDotSerial(*rows, *cols, dim, sims);
  }

  std::vector<CandidatePair> out;
  out.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (source_variants[i].is_original && target_variants[j].is_original) continue;
      out.push_back({source_variants[i], target_variants[j], sims[i * m + j],
                     std::nullopt, std::nullopt});
    }
  }
  return out;
}

std::vector<CandidatePair> FilterPairs(std::vector<CandidatePair> pairs,
                                       double threshold) {
  std::erase_if(pairs, [threshold](const CandidatePair& p) {
    return !(p.similarity >= threshold);
  });
  return pairs;
}

std::string DedupIndex::Key(std::string_view source, std::string_view target) {
  return StrCat(unicode::CollapseWhitespace(unicode::Nfc(source)), "\t",
                      unicode::CollapseWhitespace(unicode::Nfc(target)));
}

void DedupIndex::Seed(const ParallelCorpus& corpus) {
  for (const SegmentPair& pair : corpus.pairs) {
    Insert(pair.source_text, pair.target_text);
  }
}

bool DedupIndex::Contains(std::string_view source, std::string_view target) const {
  return seen_.contains(Key(source, target));
}

bool DedupIndex::Insert(std::string_view source, std::string_view target) {
  return seen_.insert(Key(source, target)).second;
}

std::vector<CandidatePair> Dedup(std::vector<CandidatePair> pairs,
                                 DedupIndex& index) {
  std::vector<CandidatePair> out;
  out.reserve(pairs.size());
  for (CandidatePair& p : pairs) {
    if (index.Insert(p.source_variant.text, p.target_variant.text)) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace paraug
