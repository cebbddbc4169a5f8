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

#ifndef PARAUG_STATUS_H_
#define PARAUG_STATUS_H_

#include <optional>
#include <string_view>

#include "absl/status/status.h"

namespace paraug {

// Named failure kinds. Each maps onto an absl status code and is attached to
// the status as a payload so callers can tell e.g. MismatchedLineCount from
// BlankSegment without parsing messages.
enum class ErrorKind {
  kMismatchedLineCount,
  kEncoding,
  kBlankSegment,
  kIo,
  kInvariantViolation,
  kMalformedMaskInput,
  kBackendUnavailable,
  kBackend,
  kDimensionMismatch,
  kEmptyCorpus,
  kRunAborted,
  kConfig,
};

std::string_view ErrorKindName(ErrorKind kind);

absl::Status MakeError(ErrorKind kind, std::string_view message);

std::optional<ErrorKind> ErrorKindOf(const absl::Status& status);

inline bool IsKind(const absl::Status& status, ErrorKind kind) {
  return ErrorKindOf(status) == kind;
}

// Prepends context to the message, keeping code and payloads.
absl::Status Annotate(const absl::Status& status, std::string_view context);

// Process exit codes used by the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitBackend = 3;
inline constexpr int kExitAborted = 4;

int ExitCodeFor(const absl::Status& status);

}  // namespace paraug

#endif  // PARAUG_STATUS_H_
