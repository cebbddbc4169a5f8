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

#include "paraug/cooc.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>

#include "paraug/strings.h"
#include "paraug/status.h"
#include "paraug/tokenizer.h"
#include "paraug/unicode.h"

namespace paraug {
namespace {

constexpr std::string_view kHeader = "source\ttarget\tcount";

std::string Fold(std::string_view word) {
  return unicode::FoldCase(unicode::Nfc(word));
}

std::unordered_map<std::string, std::uint32_t> IndexOf(
    const std::vector<std::string>& vocab) {
  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    index.emplace(vocab[i], static_cast<std::uint32_t>(i));
  }
  return index;
}

std::vector<std::string> SortedUnion(const std::vector<std::vector<std::string>>& sets) {
  std::vector<std::string> all;
  for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<std::uint32_t> ToIndices(
    const std::vector<std::string>& words,
    const std::unordered_map<std::string, std::uint32_t>& index) {
  std::vector<std::uint32_t> out;
  out.reserve(words.size());
  for (const std::string& w : words) out.push_back(index.at(w));
  return out;
}

}  // namespace

std::vector<std::string> ContentWordTypes(std::string_view segment,
                                          const StopwordSet& stopwords) {
  std::vector<std::string> types;
  for (const Token& t : Tokenize(segment)) {
    if (!t.is_word() || stopwords.Contains(t.text)) continue;
    types.push_back(Fold(t.text));
  }
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  return types;
}

std::optional<std::uint32_t> CooccurrenceMatrix::SourceIndex(std::string_view word) const {
  auto it = source_index_.find(Fold(word));
  if (it == source_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> CooccurrenceMatrix::TargetIndex(std::string_view word) const {
  auto it = target_index_.find(Fold(word));
  if (it == target_index_.end()) return std::nullopt;
  return it->second;
}

void CooccurrenceMatrix::RecomputeTotals() {
  source_totals_.assign(source_vocab_.size(), 0);
  target_totals_.assign(target_vocab_.size(), 0);
  pair_total_ = 0;
  for (const auto& [key, count] : counts_) {
    source_totals_[key >> 32] += count;
    target_totals_[key & 0xffffffffu] += count;
    pair_total_ += count;
  }
}

CooccurrenceMatrix CooccurrenceMatrix::FromEntries(std::vector<Entry> entries) {
  std::erase_if(entries, [](const Entry& e) { return e.count == 0; });
  for (Entry& e : entries) {
    e.source = Fold(e.source);
    e.target = Fold(e.target);
  }
  CooccurrenceMatrix m;
  for (const Entry& e : entries) {
    m.source_vocab_.push_back(e.source);
    m.target_vocab_.push_back(e.target);
  }
  for (auto* vocab : {&m.source_vocab_, &m.target_vocab_}) {
    std::sort(vocab->begin(), vocab->end());
    vocab->erase(std::unique(vocab->begin(), vocab->end()), vocab->end());
  }
  m.source_index_ = IndexOf(m.source_vocab_);
  m.target_index_ = IndexOf(m.target_vocab_);
  for (const Entry& e : entries) {
    m.counts_[CellKey(m.source_index_.at(e.source), m.target_index_.at(e.target))] +=
        e.count;
  }
  m.RecomputeTotals();
  return m;
}

std::uint64_t CooccurrenceMatrix::Count(std::string_view source,
                                        std::string_view target) const {
  const auto s = SourceIndex(source);
  const auto t = TargetIndex(target);
  if (!s || !t) return 0;
  auto it = counts_.find(CellKey(*s, *t));
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t CooccurrenceMatrix::SourceTotal(std::string_view source) const {
  const auto s = SourceIndex(source);
  return s ? source_totals_[*s] : 0;
}

std::uint64_t CooccurrenceMatrix::TargetTotal(std::string_view target) const {
  const auto t = TargetIndex(target);
  return t ? target_totals_[*t] : 0;
}

std::vector<CooccurrenceMatrix::Entry> CooccurrenceMatrix::Entries() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cells(counts_.begin(),
                                                             counts_.end());
  // Vocabularies are sorted, so index order is word order.
  std::sort(cells.begin(), cells.end());
  std::vector<Entry> out;
  out.reserve(cells.size());
  for (const auto& [key, count] : cells) {
    out.push_back({source_vocab_[key >> 32], target_vocab_[key & 0xffffffffu], count});
  }
  return out;
}

CooccurrenceMatrix CooccurrenceMatrix::Transposed() const {
  CooccurrenceMatrix t;
  t.source_vocab_ = target_vocab_;
  t.target_vocab_ = source_vocab_;
  t.source_index_ = target_index_;
  t.target_index_ = source_index_;
  for (const auto& [key, count] : counts_) {
    t.counts_[CellKey(static_cast<std::uint32_t>(key & 0xffffffffu),
                      static_cast<std::uint32_t>(key >> 32))] = count;
  }
  t.RecomputeTotals();
  return t;
}

bool CooccurrenceMatrix::MarginalsConsistent() const {
  std::vector<std::uint64_t> rows(source_vocab_.size(), 0);
  std::vector<std::uint64_t> cols(target_vocab_.size(), 0);
  std::uint64_t total = 0;
  for (const auto& [key, count] : counts_) {
    rows[key >> 32] += count;
    cols[key & 0xffffffffu] += count;
    total += count;
    if (count > std::min(source_totals_[key >> 32], target_totals_[key & 0xffffffffu])) {
      return false;
    }
  }
  return rows == source_totals_ && cols == target_totals_ && total == pair_total_;
}

absl::Status CooccurrenceMatrix::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return MakeError(ErrorKind::kIo, StrCat("cannot write ", path.string()));
  }
  out << kHeader << '\n';
  for (const Entry& e : Entries()) {
    out << e.source << '\t' << e.target << '\t' << e.count << '\n';
  }
  if (!out) return MakeError(ErrorKind::kIo, "co-occurrence write failed");
  return absl::OkStatus();
}

absl::StatusOr<CooccurrenceMatrix> CooccurrenceMatrix::Load(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorKind::kIo, StrCat("cannot open ", path.string()));
  }
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    return MakeError(ErrorKind::kInvariantViolation,
                     StrCat(path.string(), ": missing co-occurrence header"));
  }
  std::vector<Entry> entries;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> fields = SplitChar(line, '\t');
    Entry e;
    if (fields.size() == 3) {
      e.source = std::string(fields[0]);
      e.target = std::string(fields[1]);
      auto [ptr, ec] = std::from_chars(fields[2].data(),
                                       fields[2].data() + fields[2].size(), e.count);
      if (ec == std::errc() && ptr == fields[2].data() + fields[2].size()) {
        entries.push_back(std::move(e));
        continue;
      }
    }
    return MakeError(ErrorKind::kInvariantViolation,
                     StrCat(path.string(), ":", line_no, ": malformed row"));
  }
  return FromEntries(std::move(entries));
}

absl::StatusOr<CooccurrenceMatrix> BuildMatrix(const ParallelCorpus& corpus,
                                               const StopwordSet& stop_source,
                                               const StopwordSet& stop_target,
                                               Execution execution) {
  if (corpus.pairs.empty()) {
    return MakeError(ErrorKind::kEmptyCorpus, "cannot build co-occurrence matrix");
  }
  const auto n = static_cast<std::int64_t>(corpus.pairs.size());
  const bool parallel = execution == Execution::kParallel;

  std::vector<std::vector<std::string>> source_types(corpus.pairs.size());
  std::vector<std::vector<std::string>> target_types(corpus.pairs.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const SegmentPair& pair = corpus.pairs[static_cast<std::size_t>(i)];
    source_types[static_cast<std::size_t>(i)] = ContentWordTypes(pair.source_text, stop_source);
    target_types[static_cast<std::size_t>(i)] = ContentWordTypes(pair.target_text, stop_target);
  }

  CooccurrenceMatrix m;
  m.source_vocab_ = SortedUnion(source_types);
  m.target_vocab_ = SortedUnion(target_types);
  m.source_index_ = IndexOf(m.source_vocab_);
  m.target_index_ = IndexOf(m.target_vocab_);

  if (!parallel) {
    for (std::size_t i = 0; i < corpus.pairs.size(); ++i) {
      for (std::uint32_t s : ToIndices(source_types[i], m.source_index_)) {
        for (std::uint32_t t : ToIndices(target_types[i], m.target_index_)) {
          ++m.counts_[CooccurrenceMatrix::CellKey(s, t)];
        }
      }
    }
  } else {
    // Per-thread partial counts, merged by addition (commutative, so the
    // result matches the serial loop exactly).
#pragma omp parallel
    {
      std::unordered_map<std::uint64_t, std::uint64_t> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::int64_t i = 0; i < n; ++i) {
        const auto row = static_cast<std::size_t>(i);
        const auto sources = ToIndices(source_types[row], m.source_index_);
        const auto targets = ToIndices(target_types[row], m.target_index_);
        for (std::uint32_t s : sources) {
          for (std::uint32_t t : targets) ++local[CooccurrenceMatrix::CellKey(s, t)];
        }
      }
#pragma omp critical(paraug_cooc_merge)
      for (const auto& [key, count] : local) m.counts_[key] += count;
    }
  }
  m.RecomputeTotals();
  return m;
}

double AssociationScore(const CooccurrenceMatrix& matrix, std::string_view source_word,
                        std::string_view target_word) {
  const double joint = static_cast<double>(matrix.Count(source_word, target_word));
  const double source = static_cast<double>(matrix.SourceTotal(source_word));
  const double target = static_cast<double>(matrix.TargetTotal(target_word));
  const double total = static_cast<double>(matrix.pair_total());
  return std::log((joint + 1.0) * total / ((source + 1.0) * (target + 1.0)));
}

CoocDecision CoocGate(CandidatePair& pair, const CooccurrenceMatrix& matrix,
                      double min_score) {
  CoocDecision decision;
  if (!pair.source_variant.is_original && !pair.target_variant.is_original) {
    const double score = AssociationScore(matrix, pair.source_variant.replacement,
                                          pair.target_variant.replacement);
    decision.score = score;
    decision.pass = score >= min_score;
  }
  pair.cooc = decision.score;
  return decision;
}

}  // namespace paraug
