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

#include "paraug/stopwords.h"

#include <fstream>

#include "paraug/strings.h"
#include "paraug/status.h"
#include "paraug/unicode.h"

namespace paraug {

StopwordSet::StopwordSet(std::string language,
                         std::initializer_list<std::string_view> words)
    : language_(std::move(language)) {
  for (std::string_view word : words) Add(word);
}

absl::StatusOr<StopwordSet> StopwordSet::Load(const std::filesystem::path& path,
                                              std::string language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorKind::kIo,
                     StrCat("cannot open stop-word list ", path.string()));
  }
  StopwordSet set;
  set.language_ = std::move(language);
  std::string line;
  while (std::getline(in, line)) {
    if (!unicode::IsValidUtf8(line)) {
      return MakeError(ErrorKind::kEncoding,
                       StrCat("stop-word list ", path.string()));
    }
    std::string_view word = unicode::TrimWhitespace(line);
    if (word.empty() || word.front() == '#') continue;
    set.Add(word);
  }
  return set;
}

void StopwordSet::Add(std::string_view word) {
  words_.insert(unicode::FoldCase(unicode::Nfc(word)));
}

bool StopwordSet::Contains(std::string_view word) const {
  if (words_.empty()) return false;
  return words_.contains(unicode::FoldCase(unicode::Nfc(word)));
}

}  // namespace paraug
