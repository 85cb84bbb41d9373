// Copyright 2026 The typdl Authors. All Rights Reserved.
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

#include "generators.hpp"
#include "kb_files.hpp"
#include "typdl/models.hpp"
#include "typdl/parser.hpp"

namespace {

using namespace typdl;

void BM_OracleWorker(benchmark::State& state) {
  KnowledgeBase kb = testgen::load_kb("worker.kb");
  kb.abox.clear();
  const Query q = parse_query("T(Worker) <= ReachableAtOffice");
  models::OracleOptions opt;
  opt.domain_bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(models::oracle_entails(kb, q, opt));
}
BENCHMARK(BM_OracleWorker)->DenseRange(1, 4);

void BM_CanonicalOracleWorker(benchmark::State& state) {
  KnowledgeBase kb = testgen::load_kb("worker.kb");
  kb.abox.clear();
  const Query q = parse_query("T(SmartWorker) <= ~ReachableAtOffice");
  models::OracleOptions opt;
  opt.domain_bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(models::oracle_min_canonical_entails(kb, q, opt));
}
BENCHMARK(BM_CanonicalOracleWorker)->DenseRange(2, 4);

void BM_Postulates(benchmark::State& state) {
  testgen::Rng rng(5);
  const int size = static_cast<int>(state.range(0));
  std::vector<models::RankedInterpretation> ms;
  for (int i = 0; i < 16; ++i) ms.push_back(testgen::random_model(rng, size, 1, 0));
  for (auto _ : state) {
    for (const auto& m : ms) benchmark::DoNotOptimize(models::check_postulates(m, models::all_subsets(m)));
  }
}
BENCHMARK(BM_Postulates)->DenseRange(2, 5);

}  // namespace
