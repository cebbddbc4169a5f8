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

#include "paraug/mock_backend.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "paraug/strings.h"
#include "json.hpp"
#include "paraug/status.h"
#include "paraug/tokenizer.h"
#include "paraug/unicode.h"

namespace paraug {

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

MockBackend::MockBackend(SubstitutionTable table, int embedding_dim)
    : embedding_dim_(embedding_dim) {
  for (auto& [word, predictions] : table) {
    auto& slot = table_[unicode::FoldCase(unicode::Nfc(word))];
    slot.insert(slot.end(), predictions.begin(), predictions.end());
  }
  for (auto& [word, predictions] : table_) {
    CanonicalizePredictions(predictions, static_cast<int>(predictions.size()));
  }
}

absl::StatusOr<MockBackend> MockBackend::FromFixtureJson(std::string_view json) {
  nlohmann::json doc = nlohmann::json::parse(json, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return MakeError(ErrorKind::kConfig, "mock fixture is not a JSON object");
  }
  int dim = kDefaultEmbeddingDim;
  if (doc.contains("embedding_dim")) {
    if (!doc["embedding_dim"].is_number_integer() || doc["embedding_dim"].get<int>() < 2) {
      return MakeError(ErrorKind::kConfig, "embedding_dim must be an integer >= 2");
    }
    dim = doc["embedding_dim"].get<int>();
  }
  SubstitutionTable table;
  if (doc.contains("fill_mask")) {
    const nlohmann::json& fill = doc["fill_mask"];
    if (!fill.is_object()) {
      return MakeError(ErrorKind::kConfig, "fill_mask must be an object");
    }
    for (const auto& [word, list] : fill.items()) {
      if (!list.is_array()) {
        return MakeError(ErrorKind::kConfig,
                         StrCat("fill_mask[", word, "] must be an array"));
      }
      auto& predictions = table[word];
      for (const nlohmann::json& entry : list) {
        if (!entry.is_object() || !entry.contains("token") ||
            !entry["token"].is_string() || !entry.contains("prob") ||
            !entry["prob"].is_number()) {
          return MakeError(ErrorKind::kConfig,
                           StrCat("bad prediction under '", word, "'"));
        }
        MaskPrediction p{entry["token"].get<std::string>(),
                         entry["prob"].get<double>()};
        if (p.token.empty() || !(p.prob >= 0.0 && p.prob <= 1.0)) {
          return MakeError(ErrorKind::kConfig,
                           StrCat("prediction under '", word,
                                        "' needs a token and prob in [0,1]"));
        }
        predictions.push_back(std::move(p));
      }
    }
  }
  return MockBackend(std::move(table), dim);
}

absl::StatusOr<MockBackend> MockBackend::FromFixtureFile(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorKind::kIo,
                     StrCat("cannot open mock fixture ", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return FromFixtureJson(buffer.str());
}

absl::StatusOr<BackendDescriptor> MockBackend::Describe() {
  return BackendDescriptor{"mock", std::string(kMaskSentinel), embedding_dim_,
                           "[0,1]", true};
}

absl::StatusOr<std::vector<MaskPrediction>> MockBackend::FillMask(
    const MaskRequest& request) {
  if (absl::Status s = CheckMaskedText(request.masked_text, kMaskSentinel); !s.ok()) {
    return s;
  }
  if (request.topk < 1) {
    return MakeError(ErrorKind::kMalformedMaskInput, "topk must be >= 1");
  }
  auto it = table_.find(unicode::FoldCase(unicode::Nfc(request.masked_word)));
  if (it == table_.end()) return std::vector<MaskPrediction>();
  std::vector<MaskPrediction> out = it->second;
  CanonicalizePredictions(out, request.topk);
  return out;
}

absl::StatusOr<EmbeddingVector> MockBackend::EmbedOne(std::string_view text) const {
  const std::vector<Token> tokens = Tokenize(text);
  if (tokens.empty()) {
    return MakeError(ErrorKind::kInvariantViolation, "cannot embed blank text");
  }
  const bool has_words = std::any_of(tokens.begin(), tokens.end(),
                                     [](const Token& t) { return t.is_word(); });
  EmbeddingVector v;
  v.values.assign(static_cast<std::size_t>(embedding_dim_), 0.0);
  for (const Token& token : tokens) {
    if (has_words && !token.is_word()) continue;
    const std::uint64_t h = Fnv1a64(unicode::FoldCase(unicode::Nfc(token.text)));
    v.values[h % static_cast<std::uint64_t>(embedding_dim_)] += 1.0;
  }
  const double norm = L2Norm(v.values);
  for (double& x : v.values) x /= norm;
  return v;
}

absl::StatusOr<std::vector<EmbeddingVector>> MockBackend::Embed(
    std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out(texts.size());
  std::vector<absl::Status> errors(texts.size());
  const auto n = static_cast<std::ptrdiff_t>(texts.size());
#pragma omp parallel for schedule(static) if (n > 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    absl::StatusOr<EmbeddingVector> v = EmbedOne(texts[static_cast<std::size_t>(i)]);
    if (v.ok()) {
      out[static_cast<std::size_t>(i)] = *std::move(v);
    } else {
      errors[static_cast<std::size_t>(i)] = v.status();
    }
  }
  for (const absl::Status& s : errors) {
    if (!s.ok()) return s;
  }
  return out;
}

absl::StatusOr<double> MockBackend::QeScore(std::string_view source,
                                            std::string_view target) {
  absl::StatusOr<EmbeddingVector> u = EmbedOne(source);
  if (!u.ok()) return u.status();
  absl::StatusOr<EmbeddingVector> v = EmbedOne(target);
  if (!v.ok()) return v.status();
  double dot = 0.0;
  for (std::size_t i = 0; i < u->values.size(); ++i) {
    dot += u->values[i] * v->values[i];
  }
  return std::clamp(dot, 0.0, 1.0);
}

}  // namespace paraug
