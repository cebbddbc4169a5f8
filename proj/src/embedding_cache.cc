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

#include "paraug/embedding_cache.h"

#include <mutex>
#include <unordered_set>

namespace paraug {

absl::StatusOr<std::vector<EmbeddingVector>> EmbeddingCache::EmbedAll(
    InferenceBackend& backend, std::span<const std::string> texts) {
  std::vector<std::string> missing;
  {
    std::shared_lock<std::shared_mutex> lock(mu_);
    std::unordered_set<std::string_view> queued;
    for (const std::string& t : texts) {
      if (!vectors_.contains(t) && queued.insert(t).second) missing.push_back(t);
    }
  }
  if (!missing.empty()) {
    absl::StatusOr<std::vector<EmbeddingVector>> fresh = backend.Embed(missing);
    if (!fresh.ok()) return fresh.status();
    std::unique_lock<std::shared_mutex> lock(mu_);
    for (std::size_t i = 0; i < missing.size(); ++i) {
      vectors_.try_emplace(std::move(missing[i]), std::move((*fresh)[i]));
    }
  }
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  std::shared_lock<std::shared_mutex> lock(mu_);
  for (const std::string& t : texts) out.push_back(vectors_.at(t));
  return out;
}

std::size_t EmbeddingCache::size() const {
  std::shared_lock<std::shared_mutex> lock(mu_);
  return vectors_.size();
}

}  // namespace paraug
