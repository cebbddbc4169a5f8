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

#include "paraug/scoring_kernels.h"

#include <algorithm>
#include <cstdint>

namespace paraug::kernels {
namespace {

inline double ClampedDot(const double* a, const double* b, std::size_t dim) {
  double sum = 0.0;
  for (std::size_t k = 0; k < dim; ++k) sum += a[k] * b[k];
  return std::clamp(sum, -1.0, 1.0);
}

}  // namespace

void CrossDotSerial(std::span<const double> rows, std::span<const double> cols,
                    std::size_t dim, std::span<double> out) {
  if (dim == 0) return;
  const std::size_t n = rows.size() / dim;
  const std::size_t m = cols.size() / dim;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out[i * m + j] = ClampedDot(&rows[i * dim], &cols[j * dim], dim);
    }
  }
}

void CrossDotParallel(std::span<const double> rows, std::span<const double> cols,
                      std::size_t dim, std::span<double> out) {
  if (dim == 0) return;
  const auto n = static_cast<std::int64_t>(rows.size() / dim);
  const std::size_t m = cols.size() / dim;
  const double* r = rows.data();
  const double* c = cols.data();
  double* o = out.data();
  // Each output cell is written by exactly one thread with the same
  // summation order as the serial loop.
#pragma omp parallel for schedule(static) if (n * static_cast<std::int64_t>(m) > 4096)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto row = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < m; ++j) {
      o[row * m + j] = ClampedDot(r + row * dim, c + j * dim, dim);
    }
  }
}

}  // namespace paraug::kernels
