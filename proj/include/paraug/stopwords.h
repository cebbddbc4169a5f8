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

#ifndef PARAUG_STOPWORDS_H_
#define PARAUG_STOPWORDS_H_

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_set>

#include "absl/status/statusor.h"

namespace paraug {

// Case-insensitive word set. Words are stored case-folded.
class StopwordSet {
 public:
  StopwordSet() = default;
  StopwordSet(std::string language, std::initializer_list<std::string_view> words);

  // One word per line, UTF-8. Blank lines and lines starting with '#' are
  // skipped.
  static absl::StatusOr<StopwordSet> Load(const std::filesystem::path& path,
                                          std::string language);

  void Add(std::string_view word);
  bool Contains(std::string_view word) const;

  const std::string& language() const { return language_; }
  std::size_t size() const { return words_.size(); }

 private:
  std::string language_;
  std::unordered_set<std::string> words_;
};

}  // namespace paraug

#endif  // PARAUG_STOPWORDS_H_
