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

#ifndef PARAUG_EMBEDDING_CACHE_H_
#define PARAUG_EMBEDDING_CACHE_H_

#include <cstddef>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "paraug/backend.h"

namespace paraug {

// Per-run memo of text -> embedding. Safe for concurrent use.
class EmbeddingCache {
 public:
  // Returns one vector per text; texts not cached yet are embedded in a
  // single backend call (each distinct text once).
  absl::StatusOr<std::vector<EmbeddingVector>> EmbedAll(
      InferenceBackend& backend, std::span<const std::string> texts);

  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, EmbeddingVector> vectors_;
};

}  // namespace paraug

#endif  // PARAUG_EMBEDDING_CACHE_H_
