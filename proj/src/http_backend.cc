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

#include "paraug/http_backend.h"

#include <algorithm>

#include "paraug/strings.h"
#include "httplib.h"
#include "json.hpp"
#include "paraug/status.h"

namespace paraug {
namespace {

using nlohmann::json;

absl::StatusOr<json> ParseBody(const std::string& body, std::string_view what) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return MakeError(ErrorKind::kBackend,
                     StrCat(what, ": response is not a JSON object"));
  }
  return doc;
}

std::string ErrorFromBody(const std::string& body) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_object() && doc.contains("error") && doc["error"].is_string()) {
    return doc["error"].get<std::string>();
  }
  return body.substr(0, 200);
}

// Releases a semaphore slot on scope exit.
class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<>& slots) : slots_(slots) {
    slots_.acquire();
  }
  ~SlotGuard() { slots_.release(); }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  std::counting_semaphore<>& slots_;
};

}  // namespace

HttpBackend::HttpBackend(HttpBackendOptions options)
    : options_(std::move(options)),
      slots_(std::max(1, options_.max_in_flight)) {
  if (options_.embed_batch_size < 1) options_.embed_batch_size = 1;
}

absl::StatusOr<std::string> HttpBackend::Get(const std::string& path) {
  SlotGuard guard(slots_);
  httplib::Client client(options_.base_url);
  client.set_connection_timeout(options_.connect_timeout_seconds, 0);
  client.set_read_timeout(options_.read_timeout_seconds, 0);
  httplib::Result result = client.Get(path.c_str());
  if (!result) {
    return MakeError(ErrorKind::kBackendUnavailable,
                     StrCat("GET ", options_.base_url, path, ": ",
                                  httplib::to_string(result.error())));
  }
  if (result->status != 200) {
    return MakeError(ErrorKind::kBackend,
                     StrCat("GET ", path, " -> ", result->status, ": ",
                                  ErrorFromBody(result->body)));
  }
  return result->body;
}

absl::StatusOr<std::string> HttpBackend::Post(const std::string& path,
                                              const std::string& body) {
  SlotGuard guard(slots_);
  httplib::Client client(options_.base_url);
  client.set_connection_timeout(options_.connect_timeout_seconds, 0);
  client.set_read_timeout(options_.read_timeout_seconds, 0);
  httplib::Result result = client.Post(path.c_str(), body, "application/json");
  if (!result) {
    return MakeError(ErrorKind::kBackendUnavailable,
                     StrCat("POST ", options_.base_url, path, ": ",
                                  httplib::to_string(result.error())));
  }
  if (result->status == 503) {
    return MakeError(ErrorKind::kBackendUnavailable,
                     StrCat("POST ", path, " -> 503: ",
                                  ErrorFromBody(result->body)));
  }
  if (result->status != 200) {
    return MakeError(ErrorKind::kBackend,
                     StrCat("POST ", path, " -> ", result->status, ": ",
                                  ErrorFromBody(result->body)));
  }
  return result->body;
}

absl::StatusOr<BackendDescriptor> HttpBackend::Describe() {
  {
    std::lock_guard<std::mutex> lock(descriptor_mu_);
    if (descriptor_) return *descriptor_;
  }
  absl::StatusOr<std::string> body = Get("/health");
  if (!body.ok()) return body.status();
  absl::StatusOr<json> doc = ParseBody(*body, "/health");
  if (!doc.ok()) return doc.status();

  BackendDescriptor d;
  const json& j = *doc;
  if (!j.contains("name") || !j["name"].is_string() ||
      !j.contains("mask_sentinel") || !j["mask_sentinel"].is_string() ||
      !j.contains("embedding_dim") || !j["embedding_dim"].is_number_integer()) {
    return MakeError(ErrorKind::kBackend, "/health: missing descriptor fields");
  }
  d.name = j["name"].get<std::string>();
  d.mask_sentinel = j["mask_sentinel"].get<std::string>();
  d.embedding_dim = j["embedding_dim"].get<int>();
  if (j.contains("qe_scale") && j["qe_scale"].is_string()) {
    d.qe_scale = j["qe_scale"].get<std::string>();
  }
  if (j.contains("qe_available") && j["qe_available"].is_boolean()) {
    d.qe_available = j["qe_available"].get<bool>();
  }
  if (d.mask_sentinel.empty() || d.embedding_dim < 2) {
    return MakeError(ErrorKind::kBackend,
                     "/health: descriptor needs a sentinel and embedding_dim >= 2");
  }

  std::lock_guard<std::mutex> lock(descriptor_mu_);
  if (!descriptor_) descriptor_ = std::move(d);
  return *descriptor_;
}

absl::StatusOr<std::vector<MaskPrediction>> HttpBackend::FillMask(
    const MaskRequest& request) {
  absl::StatusOr<BackendDescriptor> d = Describe();
  if (!d.ok()) return d.status();
  if (absl::Status s = CheckMaskedText(request.masked_text, d->mask_sentinel);
      !s.ok()) {
    return s;
  }
  if (request.topk < 1) {
    return MakeError(ErrorKind::kMalformedMaskInput, "topk must be >= 1");
  }
  const json payload = {{"text", request.masked_text}, {"topk", request.topk}};
  absl::StatusOr<std::string> body = Post("/fill_mask", payload.dump());
  if (!body.ok()) return body.status();
  absl::StatusOr<json> doc = ParseBody(*body, "/fill_mask");
  if (!doc.ok()) return doc.status();
  if (!doc->contains("predictions") || !(*doc)["predictions"].is_array()) {
    return MakeError(ErrorKind::kBackend, "/fill_mask: missing predictions");
  }
  std::vector<MaskPrediction> out;
  for (const json& p : (*doc)["predictions"]) {
    if (!p.is_object() || !p.contains("token") || !p["token"].is_string() ||
        !p.contains("prob") || !p["prob"].is_number()) {
      return MakeError(ErrorKind::kBackend, "/fill_mask: malformed prediction");
    }
    MaskPrediction mp{p["token"].get<std::string>(), p["prob"].get<double>()};
    if (mp.token.empty() || !(mp.prob >= 0.0 && mp.prob <= 1.0)) {
      return MakeError(ErrorKind::kBackend,
                       "/fill_mask: prediction needs a token and prob in [0,1]");
    }
    out.push_back(std::move(mp));
  }
  CanonicalizePredictions(out, request.topk);
  return out;
}

absl::StatusOr<std::vector<EmbeddingVector>> HttpBackend::EmbedBatch(
    std::span<const std::string> texts, int expected_dim) {
  const json payload = {{"texts", std::vector<std::string>(texts.begin(), texts.end())}};
  absl::StatusOr<std::string> body = Post("/embed", payload.dump());
  if (!body.ok()) return body.status();
  absl::StatusOr<json> doc = ParseBody(*body, "/embed");
  if (!doc.ok()) return doc.status();
  if (!doc->contains("vectors") || !(*doc)["vectors"].is_array() ||
      (*doc)["vectors"].size() != texts.size()) {
    return MakeError(ErrorKind::kBackend,
                     "/embed: expected one vector per input text");
  }
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const json& row : (*doc)["vectors"]) {
    if (!row.is_array()) {
      return MakeError(ErrorKind::kBackend, "/embed: vector is not an array");
    }
    EmbeddingVector v;
    v.values.reserve(row.size());
    for (const json& x : row) {
      if (!x.is_number()) {
        return MakeError(ErrorKind::kBackend, "/embed: non-numeric component");
      }
      v.values.push_back(x.get<double>());
    }
    if (static_cast<int>(v.dim()) != expected_dim) {
      return MakeError(ErrorKind::kBackend,
                       StrCat("/embed: got dim ", v.dim(), ", descriptor says ",
                                    expected_dim));
    }
    if (!IsUnitNorm(v)) {
      return MakeError(ErrorKind::kBackend,
                       StrCat("/embed: vector norm ", L2Norm(v.values),
                                    " is not 1"));
    }
    out.push_back(std::move(v));
  }
  return out;
}

absl::StatusOr<std::vector<EmbeddingVector>> HttpBackend::Embed(
    std::span<const std::string> texts) {
  absl::StatusOr<BackendDescriptor> d = Describe();
  if (!d.ok()) return d.status();
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  const auto batch = static_cast<std::size_t>(options_.embed_batch_size);
  for (std::size_t begin = 0; begin < texts.size(); begin += batch) {
    const std::size_t n = std::min(batch, texts.size() - begin);
    absl::StatusOr<std::vector<EmbeddingVector>> part =
        EmbedBatch(texts.subspan(begin, n), d->embedding_dim);
    if (!part.ok()) return part.status();
    for (EmbeddingVector& v : *part) out.push_back(std::move(v));
  }
  return out;
}

absl::StatusOr<double> HttpBackend::QeScore(std::string_view source,
                                            std::string_view target) {
  const json payload = {{"source", std::string(source)}, {"target", std::string(target)}};
  absl::StatusOr<std::string> body = Post("/qe", payload.dump());
  if (!body.ok()) return body.status();
  absl::StatusOr<json> doc = ParseBody(*body, "/qe");
  if (!doc.ok()) return doc.status();
  if (!doc->contains("score") || !(*doc)["score"].is_number()) {
    return MakeError(ErrorKind::kBackend, "/qe: missing score");
  }
  return (*doc)["score"].get<double>();
}

}  // namespace paraug
