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

#include "gtest/gtest.h"

namespace paraug::unicode {
namespace {

TEST(UnicodeTest, NfcComposes) {
  const std::string decomposed = "e\xcc\x81";  // e + COMBINING ACUTE
  const std::string composed = "\xc3\xa9";     // U+00E9
  EXPECT_EQ(Nfc(decomposed), composed);
  EXPECT_TRUE(IsNfc(composed));
  EXPECT_FALSE(IsNfc(decomposed));
  // U+0958 is a composition exclusion: NFC keeps KA + NUKTA decomposed.
  EXPECT_EQ(Nfc("\xe0\xa5\x98"), "\xe0\xa4\x95\xe0\xa4\xbc");
}

TEST(UnicodeTest, SimpleCaseFolding) {
  EXPECT_EQ(FoldCase("The COURT"), "the court");
  EXPECT_EQ(FoldCase("ÉTÉ"), "été");
  // Simple folding keeps sharp s as one code point.
  EXPECT_EQ(FoldCase("Straße"), "straße");
  EXPECT_EQ(FoldCase("नया"), "नया");
}

TEST(UnicodeTest, Utf8Validation) {
  EXPECT_TRUE(IsValidUtf8("plain ascii"));
  EXPECT_TRUE(IsValidUtf8("हिन्दी"));
  EXPECT_FALSE(IsValidUtf8("\xff\xfe"));
  EXPECT_FALSE(IsValidUtf8("abc\xc3"));
}

TEST(UnicodeTest, TrimsUnicodeWhitespace) {
  EXPECT_EQ(TrimWhitespace("　 a b \t"), "a b");
  EXPECT_EQ(TrimWhitespace(" \t "), "");
  EXPECT_EQ(TrimWhitespace(""), "");
}

TEST(UnicodeTest, CollapsesWhitespaceRuns) {
  EXPECT_EQ(CollapseWhitespace("  a \t　 b  c "), "a b c");
  EXPECT_EQ(CollapseWhitespace("a  b"), CollapseWhitespace("a b"));
}

TEST(UnicodeTest, CharacterClasses) {
  EXPECT_TRUE(IsPunctuation(U'.'));
  EXPECT_TRUE(IsPunctuation(U'।'));  // danda
  EXPECT_TRUE(IsPunctuation(U'’'));
  EXPECT_FALSE(IsPunctuation(U'a'));
  EXPECT_TRUE(IsDecimalDigit(U'7'));
  EXPECT_TRUE(IsDecimalDigit(U'१'));  // Devanagari one
  EXPECT_TRUE(IsWhitespace(U' '));
  EXPECT_TRUE(ContainsWhitespace("a b"));
  EXPECT_FALSE(ContainsWhitespace("ab"));
}

TEST(UnicodeTest, DecodeOffsets) {
  const auto cps = Decode("aéb");
  ASSERT_EQ(cps.size(), 3u);
  EXPECT_EQ(cps[1].value, U'é');
  EXPECT_EQ(cps[1].begin, 1u);
  EXPECT_EQ(cps[1].end, 3u);
}

}  // namespace
}  // namespace paraug::unicode
