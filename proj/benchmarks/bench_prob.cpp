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

#include "typdl/parser.hpp"
#include "typdl/prob.hpp"

namespace {

using namespace typdl;

// Student KB with n students, one typicality assumption each.
KnowledgeBase students(int n) {
  std::string text = "mode alctp.\n0.6 :: T(Student) <= SportLover.\n0.9 :: T(Student) <= SocialNetworkUser.\n";
  for (int i = 0; i < n; ++i) text += "s" + std::to_string(i) + " : Student.\n";
  return parse_kb(text);
}

void BM_Extensions(benchmark::State& state) {
  const KnowledgeBase kb = students(static_cast<int>(state.range(0)));
  const prob::AssumptionIndex index = prob::build_index(kb);
  for (auto _ : state) benchmark::DoNotOptimize(prob::enumerate_extensions(index));
}
BENCHMARK(BM_Extensions)->DenseRange(2, 12, 2);

void BM_QueryProbability(benchmark::State& state) {
  const KnowledgeBase kb = students(static_cast<int>(state.range(0)));
  const Assertion q = std::get<Assertion>(parse_query("s0 : SportLover"));
  for (auto _ : state) benchmark::DoNotOptimize(prob::query_probability(kb, q));
}
BENCHMARK(BM_QueryProbability)->DenseRange(1, 5);

}  // namespace
