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

#ifndef PARAUG_UNICODE_H_
#define PARAUG_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Thin UTF-8 helpers over ICU. All functions taking text expect valid UTF-8;
// check with IsValidUtf8 at the input boundary.
namespace paraug::unicode {

struct CodePoint {
  char32_t value;
  std::size_t begin;  // byte offset
  std::size_t end;
};

bool IsValidUtf8(std::string_view text);

std::vector<CodePoint> Decode(std::string_view text);

std::string Nfc(std::string_view text);
bool IsNfc(std::string_view text);

// Simple (1:1) case folding, code point by code point.
std::string FoldCase(std::string_view text);

bool IsWhitespace(char32_t c);
bool IsPunctuation(char32_t c);
bool IsDecimalDigit(char32_t c);

bool ContainsWhitespace(std::string_view text);

std::string_view TrimWhitespace(std::string_view text);

// Trims and replaces every whitespace run with a single ASCII space.
std::string CollapseWhitespace(std::string_view text);

}  // namespace paraug::unicode

#endif  // PARAUG_UNICODE_H_
