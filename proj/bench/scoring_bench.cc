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

// Serial reference vs OpenMP kernels.

#include <cmath>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "paraug/cooc.h"
#include "paraug/scoring_kernels.h"

namespace paraug {
namespace {

std::vector<double> RandomUnitRows(std::size_t n, std::size_t dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<double> out(n * dim);
  for (std::size_t i = 0; i < n; ++i) {
    double norm = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      out[i * dim + k] = gauss(rng);
      norm += out[i * dim + k] * out[i * dim + k];
    }
    norm = std::sqrt(norm);
    for (std::size_t k = 0; k < dim; ++k) out[i * dim + k] /= norm;
  }
  return out;
}

template <void (*Kernel)(std::span<const double>, std::span<const double>, std::size_t,
                         std::span<double>)>
void BM_CrossDot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t dim = 768;
  const std::vector<double> rows = RandomUnitRows(n, dim, 1);
  const std::vector<double> cols = RandomUnitRows(n, dim, 2);
  std::vector<double> out(n * n);
  for (auto _ : state) {
    Kernel(rows, cols, dim, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n));
}
BENCHMARK(BM_CrossDot<kernels::CrossDotSerial>)->Name("CrossDot/serial")->Arg(50)->Arg(100)->Arg(300);
BENCHMARK(BM_CrossDot<kernels::CrossDotParallel>)->Name("CrossDot/parallel")->Arg(50)->Arg(100)->Arg(300);

ParallelCorpus SyntheticCorpus(std::size_t pairs) {
  std::mt19937 rng(3);
  ParallelCorpus c;
  for (std::size_t i = 0; i < pairs; ++i) {
    std::string s, t;
    for (int k = 0; k < 12; ++k) s += "s" + std::to_string(rng() % 2000) + " ";
    for (int k = 0; k < 12; ++k) t += "t" + std::to_string(rng() % 2000) + " ";
    c.pairs.push_back({std::to_string(i), s, t, Origin::Seed(), {}});
  }
  return c;
}

template <Execution kExecution>
void BM_BuildMatrix(benchmark::State& state) {
  const ParallelCorpus corpus = SyntheticCorpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto m = BuildMatrix(corpus, {}, {}, kExecution);
    benchmark::DoNotOptimize(m);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_BuildMatrix<Execution::kSerial>)->Name("BuildMatrix/serial")->Arg(1000)->Arg(10000);
BENCHMARK(BM_BuildMatrix<Execution::kParallel>)->Name("BuildMatrix/parallel")->Arg(1000)->Arg(10000);

}  // namespace
}  // namespace paraug
BENCHMARK_MAIN();
