// Copyright 2026 The sfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "sfi/belrank.hpp"
#include "sfi/families.hpp"
#include "support.hpp"

namespace sfi {
namespace {

void BM_FieldMul(benchmark::State& state) {
  auto f = FieldCtx::create(static_cast<unsigned>(state.range(0)), 1,
                            static_cast<unsigned>(state.range(1)));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Elem> pick(1, f->order() - 1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = pick(rng);
  Elem acc = 1;
  for (auto _ : state) {
    for (Elem x : xs) acc = f->mul(acc, x) ^ 1;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_FieldMul)->Args({2, 6})->Args({3, 5});

void BM_FieldAdd(benchmark::State& state) {
  auto f = FieldCtx::create(static_cast<unsigned>(state.range(0)), 1,
                            static_cast<unsigned>(state.range(1)));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = pick(rng);
  Elem acc = 0;
  for (auto _ : state) {
    for (Elem x : xs) acc = f->add(acc, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_FieldAdd)->Args({2, 6})->Args({3, 5});

void BM_MatrixRank(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(1));
  auto f = FieldCtx::create(static_cast<unsigned>(state.range(0)), 1, n);
  std::mt19937_64 rng(3);
  const Matrix m = test::random_matrix(f, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(m));
}
BENCHMARK(BM_MatrixRank)->Args({2, 5})->Args({2, 6})->Args({3, 5});

void BM_BelRankExhaustive(benchmark::State& state) {
  const Algebra s = state.range(0) == 0 ? test::order16_trivial_nuclei() : test::knuth_binary32();
  SearchOptions o;
  o.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(bel_rank(s, o).value);
  state.SetItemsProcessed(state.iterations() * search_space_size(s.field()));
}
BENCHMARK(BM_BelRankExhaustive)
    ->Args({0, 1})
    ->Args({1, 1})
    ->Args({1, 8})
    ->Unit(benchmark::kMillisecond);

void BM_Nuclei(benchmark::State& state) {
  const Algebra g = test::gtf_auto(3, 1, 5, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(g.nuclei().left_exp);
}
BENCHMARK(BM_Nuclei)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace sfi

BENCHMARK_MAIN();
