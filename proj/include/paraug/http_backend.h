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

#ifndef PARAUG_HTTP_BACKEND_H_
#define PARAUG_HTTP_BACKEND_H_

#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <string>

#include "paraug/backend.h"

namespace paraug {

struct HttpBackendOptions {
  std::string base_url;  // e.g. "http://localhost:8000"
  int max_in_flight = 4;
  int embed_batch_size = 32;
  int connect_timeout_seconds = 5;
  int read_timeout_seconds = 300;
};

// Client for the model-server protocol:
//   GET  /health     -> {name, mask_sentinel, embedding_dim, qe_scale, qe_available}
//   POST /fill_mask  {text, topk}     -> {predictions: [{token, prob}, ...]}
//   POST /embed      {texts: [...]}   -> {vectors: [[...], ...]}
//   POST /qe         {source, target} -> {score}
// Non-200 responses carry {error}.
class HttpBackend final : public InferenceBackend {
 public:
  explicit HttpBackend(HttpBackendOptions options);

  absl::StatusOr<BackendDescriptor> Describe() override;
  absl::StatusOr<std::vector<MaskPrediction>> FillMask(
      const MaskRequest& request) override;
  absl::StatusOr<std::vector<EmbeddingVector>> Embed(
      std::span<const std::string> texts) override;
  absl::StatusOr<double> QeScore(std::string_view source,
                                 std::string_view target) override;

 private:
  absl::StatusOr<std::string> Get(const std::string& path);
  absl::StatusOr<std::string> Post(const std::string& path, const std::string& body);
  absl::StatusOr<std::vector<EmbeddingVector>> EmbedBatch(
      std::span<const std::string> texts, int expected_dim);

  HttpBackendOptions options_;
  std::counting_semaphore<> slots_;
  std::mutex descriptor_mu_;
  std::optional<BackendDescriptor> descriptor_;
};

}  // namespace paraug

#endif  // PARAUG_HTTP_BACKEND_H_
