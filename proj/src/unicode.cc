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

#include "paraug/unicode.h"

#include <cstdlib>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace paraug::unicode {
namespace {

const icu::Normalizer2& NfcInstance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  // ICU ships the NFC data in libicudata; failure here means a broken install.
  if (U_FAILURE(status) || nfc == nullptr) std::abort();
  return *nfc;
}

void AppendUtf8(std::string& out, char32_t c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  [[maybe_unused]] UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buf), len, U8_MAX_LENGTH,
            static_cast<UChar32>(c), error);
  out.append(buf, static_cast<std::size_t>(len));
}

}  // namespace

bool IsValidUtf8(std::string_view text) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return false;
  }
  return true;
}

std::vector<CodePoint> Decode(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t begin = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) c = 0xFFFD;
    out.push_back({static_cast<char32_t>(c), static_cast<std::size_t>(begin),
                   static_cast<std::size_t>(i)});
  }
  return out;
}

std::string Nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString normalized = NfcInstance().normalize(
      icu::UnicodeString::fromUTF8(
          icu::StringPiece(text.data(), static_cast<int32_t>(text.size()))),
      status);
  if (U_FAILURE(status)) return std::string(text);
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

bool IsNfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const bool normalized = NfcInstance().isNormalized(
      icu::UnicodeString::fromUTF8(
          icu::StringPiece(text.data(), static_cast<int32_t>(text.size()))),
      status);
  return U_SUCCESS(status) && normalized;
}

std::string FoldCase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const CodePoint& cp : Decode(text)) {
    AppendUtf8(out, static_cast<char32_t>(u_foldCase(
                        static_cast<UChar32>(cp.value), U_FOLD_CASE_DEFAULT)));
  }
  return out;
}

bool IsWhitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool IsPunctuation(char32_t c) { return u_ispunct(static_cast<UChar32>(c)); }

bool IsDecimalDigit(char32_t c) {
  return u_charType(static_cast<UChar32>(c)) == U_DECIMAL_DIGIT_NUMBER;
}

bool ContainsWhitespace(std::string_view text) {
  for (const CodePoint& cp : Decode(text)) {
    if (IsWhitespace(cp.value)) return true;
  }
  return false;
}

std::string_view TrimWhitespace(std::string_view text) {
  const std::vector<CodePoint> cps = Decode(text);
  std::size_t first = 0;
  while (first < cps.size() && IsWhitespace(cps[first].value)) ++first;
  if (first == cps.size()) return text.substr(text.size());
  std::size_t last = cps.size();
  while (last > first && IsWhitespace(cps[last - 1].value)) --last;
  return text.substr(cps[first].begin, cps[last - 1].end - cps[first].begin);
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (const CodePoint& cp : Decode(text)) {
    if (IsWhitespace(cp.value)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.append(text.substr(cp.begin, cp.end - cp.begin));
  }
  return out;
}

}  // namespace paraug::unicode
