// Copyright 2026 The oomkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "oom/oom.hpp"

namespace {

using namespace oom;

std::shared_ptr<const MatrixOom> sticky() {
  Matrix t(2, 2);
  t << 0.9, 0.1, 0.1, 0.9;
  static const auto m =
      std::make_shared<const MatrixOom>(hmm_to_oom(Hmm{Alphabet({"a", "b"}), t, Matrix::Identity(2, 2),
                                                       Vector::Constant(2, 0.5)}));
  return m;
}

void BM_InnerProductTruncated(benchmark::State& state) {
  const auto m = sticky();
  const auto g = FutureFunction::basis(m, m->alphabet().parse("ab"));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(inner_product_truncated(g, g, n));
}
BENCHMARK(BM_InnerProductTruncated)->DenseRange(4, 16, 4);

void BM_InnerProductParallel(benchmark::State& state) {
  const auto m = sticky();
  const auto g = FutureFunction::basis(m, m->alphabet().parse("ab"));
  for (auto _ : state)
    benchmark::DoNotOptimize(inner_product_truncated(g, g, static_cast<int>(state.range(0)), {kDefaultNodeBudget, true}));
}
BENCHMARK(BM_InnerProductParallel)->Arg(16);

void BM_GramMatrix(benchmark::State& state) {
  const auto m = sticky();
  std::vector<Word> prefixes;
  for (const char* p : {"eps", "a", "b", "aa", "ab", "ba", "bb"}) prefixes.push_back(m->alphabet().parse(p));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(m, prefixes, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GramMatrix)->Arg(8)->Arg(12);

void BM_Validate(benchmark::State& state) {
  const auto m = sticky();
  for (auto _ : state) benchmark::DoNotOptimize(validate(*m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Validate)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
