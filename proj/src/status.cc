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

#include "paraug/status.h"

#include <string>

#include "absl/strings/cord.h"
#include "paraug/strings.h"

namespace paraug {
namespace {

constexpr char kKindPayloadUrl[] = "paraug/error_kind";

constexpr ErrorKind kAllKinds[] = {
    ErrorKind::kMismatchedLineCount, ErrorKind::kEncoding,
    ErrorKind::kBlankSegment,        ErrorKind::kIo,
    ErrorKind::kInvariantViolation,  ErrorKind::kMalformedMaskInput,
    ErrorKind::kBackendUnavailable,  ErrorKind::kBackend,
    ErrorKind::kDimensionMismatch,   ErrorKind::kEmptyCorpus,
    ErrorKind::kRunAborted,          ErrorKind::kConfig,
};

absl::StatusCode CodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMismatchedLineCount:
    case ErrorKind::kEncoding:
    case ErrorKind::kBlankSegment:
    case ErrorKind::kInvariantViolation:
    case ErrorKind::kMalformedMaskInput:
    case ErrorKind::kDimensionMismatch:
    case ErrorKind::kEmptyCorpus:
    case ErrorKind::kConfig:
      return absl::StatusCode::kInvalidArgument;
    case ErrorKind::kIo:
      return absl::StatusCode::kNotFound;
    case ErrorKind::kBackendUnavailable:
      return absl::StatusCode::kUnavailable;
    case ErrorKind::kBackend:
      return absl::StatusCode::kInternal;
    case ErrorKind::kRunAborted:
      return absl::StatusCode::kAborted;
  }
  return absl::StatusCode::kUnknown;
}

}  // namespace

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMismatchedLineCount: return "MismatchedLineCount";
    case ErrorKind::kEncoding: return "EncodingError";
    case ErrorKind::kBlankSegment: return "BlankSegment";
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kInvariantViolation: return "InvariantViolation";
    case ErrorKind::kMalformedMaskInput: return "MalformedMaskInput";
    case ErrorKind::kBackendUnavailable: return "BackendUnavailable";
    case ErrorKind::kBackend: return "BackendError";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kRunAborted: return "RunAborted";
    case ErrorKind::kConfig: return "ConfigError";
  }
  return "Unknown";
}

absl::Status MakeError(ErrorKind kind, std::string_view message) {
  absl::Status status(CodeFor(kind), StrCat(ErrorKindName(kind), ": ", message));
  status.SetPayload(kKindPayloadUrl, absl::Cord(std::string(ErrorKindName(kind))));
  return status;
}

std::optional<ErrorKind> ErrorKindOf(const absl::Status& status) {
  if (status.ok()) return std::nullopt;
  auto payload = status.GetPayload(kKindPayloadUrl);
  if (!payload) return std::nullopt;
  const std::string name(*payload);
  for (ErrorKind kind : kAllKinds) {
    if (ErrorKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

absl::Status Annotate(const absl::Status& status, std::string_view context) {
  if (status.ok()) return status;
  absl::Status out(status.code(), StrCat(context, ": ", status.message()));
  status.ForEachPayload(
      [&out](absl::string_view url, const absl::Cord& payload) {
        out.SetPayload(url, payload);
      });
  return out;
}

int ExitCodeFor(const absl::Status& status) {
  if (status.ok()) return kExitOk;
  std::optional<ErrorKind> kind = ErrorKindOf(status);
  if (!kind) {
    return status.code() == absl::StatusCode::kUnavailable ? kExitBackend
                                                           : kExitData;
  }
  switch (*kind) {
    case ErrorKind::kBackendUnavailable:
    case ErrorKind::kBackend:
    case ErrorKind::kMalformedMaskInput:
      return kExitBackend;
    case ErrorKind::kRunAborted:
      return kExitAborted;
    case ErrorKind::kConfig:
      return kExitUsage;
    default:
      return kExitData;
  }
}

}  // namespace paraug
