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

#ifndef PARAUG_BACKEND_FACTORY_H_
#define PARAUG_BACKEND_FACTORY_H_

#include <memory>
#include <string_view>

#include "absl/status/statusor.h"
#include "paraug/backend.h"

namespace paraug {

// Opens a backend from its command-line spelling:
//   "mock"                 mock with an empty substitution table
//   "mock:fixture.json"    mock with a fixture file
//   "replay:transcript"    replays a recorded transcript
//   "http://host:port"     remote model server
absl::StatusOr<std::unique_ptr<InferenceBackend>> OpenBackend(
    std::string_view spec, int max_in_flight = 4);

}  // namespace paraug

#endif  // PARAUG_BACKEND_FACTORY_H_
