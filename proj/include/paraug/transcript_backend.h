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

#ifndef PARAUG_TRANSCRIPT_BACKEND_H_
#define PARAUG_TRANSCRIPT_BACKEND_H_

#include <filesystem>
#include <map>
#include <mutex>
#include <string>

#include "paraug/backend.h"

namespace paraug {

// Transcript = JSON lines {"request": {...}, "response": {...}}, sorted by
// request so the file is identical whatever order calls were made in.
// Embeddings are recorded per text, so replay is batch-invariant.
// Fill-mask requests are keyed on {text, topk} only, like the wire format.
using Transcript = std::map<std::string, std::string>;

// Forwards to `inner` and remembers every successful response.
class RecordingBackend final : public InferenceBackend {
 public:
  explicit RecordingBackend(InferenceBackend& inner) : inner_(inner) {}

  absl::StatusOr<BackendDescriptor> Describe() override;
  absl::StatusOr<std::vector<MaskPrediction>> FillMask(
      const MaskRequest& request) override;
  absl::StatusOr<std::vector<EmbeddingVector>> Embed(
      std::span<const std::string> texts) override;
  absl::StatusOr<double> QeScore(std::string_view source,
                                 std::string_view target) override;

  Transcript transcript() const;
  absl::Status Save(const std::filesystem::path& path) const;

 private:
  void Record(std::string key, std::string response);

  InferenceBackend& inner_;
  mutable std::mutex mu_;
  Transcript transcript_;
};

// Serves responses from a saved transcript; unknown requests are a
// BackendError.
class ReplayBackend final : public InferenceBackend {
 public:
  explicit ReplayBackend(Transcript transcript)
      : transcript_(std::move(transcript)) {}

  static absl::StatusOr<ReplayBackend> Load(const std::filesystem::path& path);

  absl::StatusOr<BackendDescriptor> Describe() override;
  absl::StatusOr<std::vector<MaskPrediction>> FillMask(
      const MaskRequest& request) override;
  absl::StatusOr<std::vector<EmbeddingVector>> Embed(
      std::span<const std::string> texts) override;
  absl::StatusOr<double> QeScore(std::string_view source,
                                 std::string_view target) override;

 private:
  absl::StatusOr<std::string> Lookup(const std::string& key) const;

  Transcript transcript_;
};

}  // namespace paraug

#endif  // PARAUG_TRANSCRIPT_BACKEND_H_
