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

#ifndef PARAUG_TOKENIZER_H_
#define PARAUG_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace paraug {

struct Token {
  enum class Kind { kWord, kPunctuation };

  std::string text;
  std::size_t start = 0;  // byte offsets into the segment, [start, end)
  std::size_t end = 0;
  Kind kind = Kind::kWord;

  bool is_word() const { return kind == Kind::kWord; }
  bool operator==(const Token&) const = default;
};

// Splits on Unicode whitespace, then peels leading and trailing punctuation
// code points off each chunk as single-code-point punctuation tokens.
// Interior punctuation (apostrophes, hyphens, ...) stays in the word.
// The text between consecutive tokens is always whitespace, so the segment
// can be rebuilt exactly from the tokens and the original separators.
std::vector<Token> Tokenize(std::string_view text);

// True if every code point is a decimal digit.
bool IsNumeral(std::string_view token);

}  // namespace paraug

#endif  // PARAUG_TOKENIZER_H_
