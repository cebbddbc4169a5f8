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

#include "paraug/transcript_backend.h"

#include <fstream>

#include "paraug/strings.h"
#include "json.hpp"
#include "paraug/status.h"

namespace paraug {
namespace {

using nlohmann::json;

std::string HealthKey() { return json{{"op", "health"}}.dump(); }

std::string FillMaskKey(const MaskRequest& r) {
  return json{{"op", "fill_mask"}, {"text", r.masked_text}, {"topk", r.topk}}.dump();
}

std::string EmbedKey(const std::string& text) {
  return json{{"op", "embed"}, {"text", text}}.dump();
}

std::string QeKey(std::string_view source, std::string_view target) {
  return json{{"op", "qe"}, {"source", std::string(source)},
              {"target", std::string(target)}}
      .dump();
}

json DescriptorToJson(const BackendDescriptor& d) {
  return {{"name", d.name},
          {"mask_sentinel", d.mask_sentinel},
          {"embedding_dim", d.embedding_dim},
          {"qe_scale", d.qe_scale},
          {"qe_available", d.qe_available}};
}

// Recorded entries are trusted but may be hand-edited; type errors surface as
// BackendError rather than exceptions.
template <typename Fn>
auto Guarded(Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    return MakeError(ErrorKind::kBackend,
                     StrCat("corrupt transcript entry: ", e.what()));
  }
}

absl::StatusOr<json> ParseRecorded(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    return MakeError(ErrorKind::kBackend, "corrupt transcript entry");
  }
  return doc;
}

}  // namespace

void RecordingBackend::Record(std::string key, std::string response) {
  std::lock_guard<std::mutex> lock(mu_);
  transcript_.insert_or_assign(std::move(key), std::move(response));
}

absl::StatusOr<BackendDescriptor> RecordingBackend::Describe() {
  absl::StatusOr<BackendDescriptor> d = inner_.Describe();
  if (d.ok()) Record(HealthKey(), DescriptorToJson(*d).dump());
  return d;
}

absl::StatusOr<std::vector<MaskPrediction>> RecordingBackend::FillMask(
    const MaskRequest& request) {
  absl::StatusOr<std::vector<MaskPrediction>> out = inner_.FillMask(request);
  if (out.ok()) {
    json predictions = json::array();
    for (const MaskPrediction& p : *out) {
      predictions.push_back({{"token", p.token}, {"prob", p.prob}});
    }
    Record(FillMaskKey(request), json{{"predictions", predictions}}.dump());
  }
  return out;
}

absl::StatusOr<std::vector<EmbeddingVector>> RecordingBackend::Embed(
    std::span<const std::string> texts) {
  absl::StatusOr<std::vector<EmbeddingVector>> out = inner_.Embed(texts);
  if (out.ok()) {
    for (std::size_t i = 0; i < texts.size(); ++i) {
      Record(EmbedKey(texts[i]), json{{"vector", (*out)[i].values}}.dump());
    }
  }
  return out;
}

absl::StatusOr<double> RecordingBackend::QeScore(std::string_view source,
                                                 std::string_view target) {
  absl::StatusOr<double> out = inner_.QeScore(source, target);
  if (out.ok()) Record(QeKey(source, target), json{{"score", *out}}.dump());
  return out;
}

Transcript RecordingBackend::transcript() const {
  std::lock_guard<std::mutex> lock(mu_);
  return transcript_;
}

absl::Status RecordingBackend::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return MakeError(ErrorKind::kIo, StrCat("cannot write ", path.string()));
  }
  for (const auto& [request, response] : transcript()) {
    out << R"({"request":)" << request << R"(,"response":)" << response << "}\n";
  }
  if (!out) return MakeError(ErrorKind::kIo, "transcript write failed");
  return absl::OkStatus();
}

absl::StatusOr<ReplayBackend> ReplayBackend::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorKind::kIo,
                     StrCat("cannot open transcript ", path.string()));
  }
  Transcript transcript;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json entry = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (entry.is_discarded() || !entry.contains("request") ||
        !entry.contains("response")) {
      return MakeError(ErrorKind::kConfig,
                       StrCat("transcript line ", line_no, " is malformed"));
    }
    transcript[entry["request"].dump()] = entry["response"].dump();
  }
  return ReplayBackend(std::move(transcript));
}

absl::StatusOr<std::string> ReplayBackend::Lookup(const std::string& key) const {
  auto it = transcript_.find(key);
  if (it == transcript_.end()) {
    return MakeError(ErrorKind::kBackend,
                     StrCat("request not in transcript: ", key));
  }
  return it->second;
}

absl::StatusOr<BackendDescriptor> ReplayBackend::Describe() {
  return Guarded([&]() -> absl::StatusOr<BackendDescriptor> {
    absl::StatusOr<std::string> text = Lookup(HealthKey());
    if (!text.ok()) return text.status();
    absl::StatusOr<json> j = ParseRecorded(*text);
    if (!j.ok()) return j.status();
    return BackendDescriptor{(*j)["name"].get<std::string>(),
                             (*j)["mask_sentinel"].get<std::string>(),
                             (*j)["embedding_dim"].get<int>(),
                             (*j)["qe_scale"].get<std::string>(),
                             (*j)["qe_available"].get<bool>()};
  });
}

absl::StatusOr<std::vector<MaskPrediction>> ReplayBackend::FillMask(
    const MaskRequest& request) {
  return Guarded([&]() -> absl::StatusOr<std::vector<MaskPrediction>> {
    absl::StatusOr<std::string> text = Lookup(FillMaskKey(request));
    if (!text.ok()) return text.status();
    absl::StatusOr<json> j = ParseRecorded(*text);
    if (!j.ok()) return j.status();
    std::vector<MaskPrediction> out;
    for (const json& p : (*j)["predictions"]) {
      out.push_back({p["token"].get<std::string>(), p["prob"].get<double>()});
    }
    return out;
  });
}

absl::StatusOr<std::vector<EmbeddingVector>> ReplayBackend::Embed(
    std::span<const std::string> texts) {
  return Guarded([&]() -> absl::StatusOr<std::vector<EmbeddingVector>> {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) {
      absl::StatusOr<std::string> text = Lookup(EmbedKey(t));
      if (!text.ok()) return text.status();
      absl::StatusOr<json> j = ParseRecorded(*text);
      if (!j.ok()) return j.status();
      out.push_back({(*j)["vector"].get<std::vector<double>>()});
    }
    return out;
  });
}

absl::StatusOr<double> ReplayBackend::QeScore(std::string_view source,
                                              std::string_view target) {
  return Guarded([&]() -> absl::StatusOr<double> {
    absl::StatusOr<std::string> text = Lookup(QeKey(source, target));
    if (!text.ok()) return text.status();
    absl::StatusOr<json> j = ParseRecorded(*text);
    if (!j.ok()) return j.status();
    return (*j)["score"].get<double>();
  });
}

}  // namespace paraug
