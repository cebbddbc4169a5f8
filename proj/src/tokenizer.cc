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

#include "paraug/tokenizer.h"

#include "paraug/unicode.h"

namespace paraug {

std::vector<Token> Tokenize(std::string_view text) {
  using unicode::CodePoint;
  const std::vector<CodePoint> cps = unicode::Decode(text);
  std::vector<Token> tokens;

  auto emit = [&](std::size_t first, std::size_t last, Token::Kind kind) {
    const std::size_t start = cps[first].begin;
    const std::size_t end = cps[last - 1].end;
    tokens.push_back({std::string(text.substr(start, end - start)), start, end, kind});
  };

  std::size_t i = 0;
  while (i < cps.size()) {
    if (unicode::IsWhitespace(cps[i].value)) {
      ++i;
      continue;
    }
    std::size_t chunk_end = i;
    while (chunk_end < cps.size() && !unicode::IsWhitespace(cps[chunk_end].value)) {
      ++chunk_end;
    }

    std::size_t word_begin = i;
    while (word_begin < chunk_end && unicode::IsPunctuation(cps[word_begin].value)) {
      ++word_begin;
    }
    std::size_t word_end = chunk_end;
    while (word_end > word_begin && unicode::IsPunctuation(cps[word_end - 1].value)) {
      --word_end;
    }

    for (std::size_t p = i; p < word_begin; ++p) {
      emit(p, p + 1, Token::Kind::kPunctuation);
    }
    if (word_begin < word_end) emit(word_begin, word_end, Token::Kind::kWord);
    for (std::size_t p = word_end; p < chunk_end; ++p) {
      emit(p, p + 1, Token::Kind::kPunctuation);
    }
    i = chunk_end;
  }
  return tokens;
}

bool IsNumeral(std::string_view token) {
  if (token.empty()) return false;
  for (const unicode::CodePoint& cp : unicode::Decode(token)) {
    if (!unicode::IsDecimalDigit(cp.value)) return false;
  }
  return true;
}

}  // namespace paraug
