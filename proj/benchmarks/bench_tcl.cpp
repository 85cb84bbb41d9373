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

#include <string>

#include "kb_files.hpp"
#include "typdl/parser.hpp"
#include "typdl/tcl.hpp"

namespace {

using namespace typdl;

void BM_PetFish(benchmark::State& state) {
  const KnowledgeBase kb = testgen::load_kb("pet_fish.kb");
  for (auto _ : state) benchmark::DoNotOptimize(tcl::revise(kb, Concept::atom("Fish"), Concept::atom("Pet")));
}
BENCHMARK(BM_PetFish);

// n defaults per concept, head and modifier disagreeing on every other property.
void BM_CombinationWidth(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::string text = "mode tcl.\n";
  for (int i = 0; i < n; ++i) {
    const std::string p = "P" + std::to_string(i);
    text += "0.8 :: T(H) <= " + p + ".\n";
    text += "0.7 :: T(M) <= " + std::string(i % 2 ? "~" : "") + p + ".\n";
  }
  const KnowledgeBase kb = parse_kb(text);
  for (auto _ : state) benchmark::DoNotOptimize(tcl::revise(kb, Concept::atom("H"), Concept::atom("M")));
}
BENCHMARK(BM_CombinationWidth)->DenseRange(2, 8, 2);

void BM_EnumerateScenarios(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::string text = "mode tcl.\n";
  for (int i = 0; i < n; ++i) text += "0.75 :: T(H) <= P" + std::to_string(i) + ".\n";
  const KnowledgeBase kb = parse_kb(text);
  for (auto _ : state) benchmark::DoNotOptimize(tcl::enumerate_scenarios(kb));
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_EnumerateScenarios)->DenseRange(4, 16, 4);

}  // namespace
