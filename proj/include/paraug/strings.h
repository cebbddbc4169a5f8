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

#ifndef PARAUG_STRINGS_H_
#define PARAUG_STRINGS_H_

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace paraug {

// Streams every argument into one string.
template <typename... Args>
std::string StrCat(const Args&... args) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << args);
  return std::move(os).str();
}

// Splits on every occurrence of `sep`; "a\tb" -> {"a", "b"}, "" -> {""}.
inline std::vector<std::string_view> SplitChar(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (std::size_t pos = text.find(sep); pos != std::string_view::npos;
       pos = text.find(sep, begin)) {
    parts.push_back(text.substr(begin, pos - begin));
    begin = pos + 1;
  }
  parts.push_back(text.substr(begin));
  return parts;
}

}  // namespace paraug

#endif  // PARAUG_STRINGS_H_
