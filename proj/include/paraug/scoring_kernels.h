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

#ifndef PARAUG_SCORING_KERNELS_H_
#define PARAUG_SCORING_KERNELS_H_

#include <cstddef>
#include <span>

// Dense cross-product kernels. `rows` is n x dim and `cols` is m x dim, both
// row-major; `out` receives the n x m dot products, row-major, clamped to
// [-1, 1]. The serial version is the reference the parallel one is tested
// against; both produce bit-identical results.
namespace paraug::kernels {

void CrossDotSerial(std::span<const double> rows, std::span<const double> cols,
                    std::size_t dim, std::span<double> out);

void CrossDotParallel(std::span<const double> rows, std::span<const double> cols,
                      std::size_t dim, std::span<double> out);

}  // namespace paraug::kernels

#endif  // PARAUG_SCORING_KERNELS_H_
