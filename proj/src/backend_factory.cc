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

#include "paraug/backend_factory.h"

#include "paraug/strings.h"
#include "paraug/http_backend.h"
#include "paraug/mock_backend.h"
#include "paraug/status.h"
#include "paraug/transcript_backend.h"

namespace paraug {

absl::StatusOr<std::unique_ptr<InferenceBackend>> OpenBackend(std::string_view spec,
                                                              int max_in_flight) {
  if (spec == "mock") return std::make_unique<MockBackend>();
  if (spec.starts_with("mock:")) {
    absl::StatusOr<MockBackend> mock = MockBackend::FromFixtureFile(std::string(spec.substr(5)));
    if (!mock.ok()) return mock.status();
    return std::make_unique<MockBackend>(*std::move(mock));
  }
  if (spec.starts_with("replay:")) {
    absl::StatusOr<ReplayBackend> replay = ReplayBackend::Load(std::string(spec.substr(7)));
    if (!replay.ok()) return replay.status();
    return std::make_unique<ReplayBackend>(*std::move(replay));
  }
  if (spec.starts_with("http://")) {
    HttpBackendOptions options;
    options.base_url = std::string(spec);
    options.max_in_flight = max_in_flight;
    return std::make_unique<HttpBackend>(std::move(options));
  }
  return MakeError(ErrorKind::kConfig,
                   StrCat("unknown backend '", spec,
                                "' (want mock, mock:FILE, replay:FILE or http://...)"));
}

}  // namespace paraug
