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

#include "paraug/corpus.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "paraug/strings.h"
#include "paraug/status.h"
#include "paraug/unicode.h"

namespace paraug {
namespace {

constexpr double kSimilarityTolerance = 1e-6;

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  if (text.empty()) return lines;
  lines = SplitChar(text, '\n');
  if (text.back() == '\n') lines.pop_back();
  return lines;
}

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorKind::kIo, StrCat("cannot open ", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    return MakeError(ErrorKind::kIo, StrCat("read failed: ", path.string()));
  }
  return std::move(buffer).str();
}

bool HasNewline(std::string_view text) {
  return text.find_first_of("\n\r") != std::string_view::npos;
}

std::string OptionalScore(const std::optional<double>& value) {
  return value ? FormatScore(*value) : std::string();
}

absl::StatusOr<std::optional<double>> ParseOptionalScore(std::string_view field) {
  if (field.empty()) return std::optional<double>();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    return MakeError(ErrorKind::kInvariantViolation,
                     StrCat("bad score field '", field, "'"));
  }
  return std::optional<double>(value);
}

}  // namespace

absl::StatusOr<ParallelCorpus> ParseParallelText(std::string_view text_l1,
                                                 std::string_view text_l2,
                                                 std::string lang_source,
                                                 std::string lang_target) {
  if (!unicode::IsValidUtf8(text_l1) || !unicode::IsValidUtf8(text_l2)) {
    return MakeError(ErrorKind::kEncoding, "input is not valid UTF-8");
  }
  const std::vector<std::string_view> lines_l1 = SplitLines(text_l1);
  const std::vector<std::string_view> lines_l2 = SplitLines(text_l2);
  if (lines_l1.size() != lines_l2.size()) {
    return MakeError(ErrorKind::kMismatchedLineCount,
                     StrCat(lines_l1.size(), " source lines vs ",
                                  lines_l2.size(), " target lines"));
  }

  ParallelCorpus corpus;
  corpus.lang_source = std::move(lang_source);
  corpus.lang_target = std::move(lang_target);
  corpus.pairs.reserve(lines_l1.size());
  for (std::size_t i = 0; i < lines_l1.size(); ++i) {
    SegmentPair pair;
    pair.id = std::to_string(i);
    pair.source_text = unicode::Nfc(unicode::TrimWhitespace(lines_l1[i]));
    pair.target_text = unicode::Nfc(unicode::TrimWhitespace(lines_l2[i]));
    if (pair.source_text.empty() || pair.target_text.empty()) {
      return MakeError(ErrorKind::kBlankSegment, StrCat("line ", i));
    }
    corpus.pairs.push_back(std::move(pair));
  }
  return corpus;
}

absl::StatusOr<ParallelCorpus> LoadParallelCorpus(
    const std::filesystem::path& path_l1, const std::filesystem::path& path_l2,
    std::string lang_source, std::string lang_target) {
  absl::StatusOr<std::string> text_l1 = ReadFile(path_l1);
  if (!text_l1.ok()) return text_l1.status();
  absl::StatusOr<std::string> text_l2 = ReadFile(path_l2);
  if (!text_l2.ok()) return text_l2.status();
  return ParseParallelText(*text_l1, *text_l2, std::move(lang_source),
                           std::move(lang_target));
}

std::string FormatScore(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string FormatMetaRow(const SegmentPair& pair) {
  const bool seed = pair.origin.is_seed();
  std::string similarity;
  std::string qe;
  std::string cooc;
  if (pair.scores) {
    similarity = FormatScore(pair.scores->similarity);
    qe = OptionalScore(pair.scores->qe);
    cooc = OptionalScore(pair.scores->cooc);
  }
  return StrCat(pair.id, "\t", seed ? "seed" : "generated", "\t",
                      pair.origin.round, "\t", similarity, "\t", qe, "\t",
                      cooc);
}

absl::StatusOr<WriteReport> WriteAugmentedCorpus(
    const ParallelCorpus& corpus, const std::filesystem::path& out_l1,
    const std::filesystem::path& out_l2, const std::filesystem::path& out_meta) {
  for (const SegmentPair& pair : corpus.pairs) {
    if (HasNewline(pair.source_text) || HasNewline(pair.target_text)) {
      return MakeError(ErrorKind::kInvariantViolation,
                       StrCat("newline in segment ", pair.id));
    }
  }

  std::ofstream l1(out_l1, std::ios::binary | std::ios::trunc);
  std::ofstream l2(out_l2, std::ios::binary | std::ios::trunc);
  std::ofstream meta(out_meta, std::ios::binary | std::ios::trunc);
  if (!l1 || !l2 || !meta) {
    return MakeError(ErrorKind::kIo, "cannot open output files for writing");
  }

  WriteReport report;
  meta << kMetaHeader << '\n';
  for (const SegmentPair& pair : corpus.pairs) {
    l1 << pair.source_text << '\n';
    l2 << pair.target_text << '\n';
    meta << FormatMetaRow(pair) << '\n';
    report.bytes_l1 += pair.source_text.size() + 1;
    report.bytes_l2 += pair.target_text.size() + 1;
    ++report.pairs;
  }
  l1.flush();
  l2.flush();
  meta.flush();
  if (!l1 || !l2 || !meta) {
    return MakeError(ErrorKind::kIo, "write failed");
  }
  return report;
}

absl::Status ApplyMetadata(const std::filesystem::path& meta_path,
                           ParallelCorpus& corpus) {
  absl::StatusOr<std::string> text = ReadFile(meta_path);
  if (!text.ok()) return text.status();
  std::vector<std::string_view> lines = SplitLines(*text);
  if (lines.empty() || lines.front() != kMetaHeader) {
    return MakeError(ErrorKind::kInvariantViolation,
                     "metadata header row missing");
  }
  if (lines.size() - 1 != corpus.pairs.size()) {
    return MakeError(ErrorKind::kMismatchedLineCount,
                     StrCat(lines.size() - 1, " metadata rows vs ",
                                  corpus.pairs.size(), " pairs"));
  }
  for (std::size_t i = 0; i < corpus.pairs.size(); ++i) {
    std::vector<std::string_view> fields = SplitChar(lines[i + 1], '\t');
    if (fields.size() != 6) {
      return MakeError(ErrorKind::kInvariantViolation,
                       StrCat("metadata row ", i, " has ", fields.size(),
                                    " columns"));
    }
    SegmentPair& pair = corpus.pairs[i];
    pair.id = std::string(fields[0]);
    int round = 0;
    std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), round);
    if (fields[1] == "seed") {
      pair.origin = Origin::Seed();
    } else if (fields[1] == "generated") {
      pair.origin = Origin::Generated(round);
    } else {
      return MakeError(ErrorKind::kInvariantViolation,
                       StrCat("unknown origin '", fields[1], "'"));
    }
    absl::StatusOr<std::optional<double>> similarity = ParseOptionalScore(fields[3]);
    absl::StatusOr<std::optional<double>> qe = ParseOptionalScore(fields[4]);
    absl::StatusOr<std::optional<double>> cooc = ParseOptionalScore(fields[5]);
    for (const auto* s : {&similarity, &qe, &cooc}) {
      if (!s->ok()) return s->status();
    }
    if (*similarity) {
      pair.scores = ScoreSet{**similarity, *qe, *cooc};
    } else {
      pair.scores.reset();
    }
  }
  return absl::OkStatus();
}

std::string_view ViolationRuleName(ViolationRule rule) {
  switch (rule) {
    case ViolationRule::kBlankSegment: return "BlankSegment";
    case ViolationRule::kEmbeddedNewline: return "EmbeddedNewline";
    case ViolationRule::kDuplicateId: return "DuplicateId";
    case ViolationRule::kMissingSimilarity: return "MissingSimilarity";
    case ViolationRule::kSimilarityOutOfRange: return "SimilarityOutOfRange";
    case ViolationRule::kInvalidRound: return "InvalidRound";
  }
  return "Unknown";
}

std::string ToString(const Violation& violation) {
  return StrCat(ViolationRuleName(violation.rule), "(\"",
                      violation.pair_id, "\")");
}

std::vector<Violation> ValidateCorpus(const ParallelCorpus& corpus) {
  std::vector<Violation> violations;
  std::unordered_set<std::string> ids;
  for (const SegmentPair& pair : corpus.pairs) {
    auto add = [&](ViolationRule rule) { violations.push_back({rule, pair.id}); };
    if (!ids.insert(pair.id).second) add(ViolationRule::kDuplicateId);
    if (unicode::TrimWhitespace(pair.source_text).empty() ||
        unicode::TrimWhitespace(pair.target_text).empty()) {
      add(ViolationRule::kBlankSegment);
    }
    if (HasNewline(pair.source_text) || HasNewline(pair.target_text)) {
      add(ViolationRule::kEmbeddedNewline);
    }
    if (pair.origin.is_seed() ? pair.origin.round != 0 : pair.origin.round < 1) {
      add(ViolationRule::kInvalidRound);
    }
    if (!pair.origin.is_seed() && !pair.scores) {
      add(ViolationRule::kMissingSimilarity);
    }
    if (pair.scores) {
      const double s = pair.scores->similarity;
      if (!(std::abs(s) <= 1.0 + kSimilarityTolerance)) {
        add(ViolationRule::kSimilarityOutOfRange);
      }
    }
  }
  return violations;
}

}  // namespace paraug
