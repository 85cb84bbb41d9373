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
#include "typdl/alc.hpp"
#include "typdl/parser.hpp"
#include "typdl/rational_closure.hpp"
#include "typdl/skeptical.hpp"

namespace {

using namespace typdl;

// C(n) <= ... <= C0 with alternating defaults, giving n + 1 ranks.
KnowledgeBase exception_chain(int n) {
  std::string text;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) text += "C" + std::to_string(i) + " <= C" + std::to_string(i - 1) + ".\n";
    text += "T(C" + std::to_string(i) + ") <= " + (i % 2 ? "~" : "") + "P.\n";
    text += "T(C" + std::to_string(i) + ") <= Q" + std::to_string(i) + ".\n";
  }
  return parse_kb(text);
}

void BM_RankingChain(benchmark::State& state) {
  alc::set_cache_enabled(false);
  const KnowledgeBase kb = exception_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rc::compute_ranking(kb));
  alc::set_cache_enabled(true);
}
BENCHMARK(BM_RankingChain)->DenseRange(1, 9, 2);

void BM_SkepticalChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const KnowledgeBase kb = exception_chain(n);
  const rc::RankingResult r = rc::compute_ranking(kb);
  const Inclusion q = std::get<Inclusion>(parse_query("T(C" + std::to_string(n) + ") <= Q0"));
  for (auto _ : state) benchmark::DoNotOptimize(sc::sc_entails(r, q));
}
BENCHMARK(BM_SkepticalChain)->DenseRange(1, 9, 2);

// Worker TBox with n paola-like individuals, each Worker and half SmartWorker.
void BM_AboxEntailment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::string text = testgen::read_kb_text("worker.kb");
  for (int i = 0; i < n; ++i) {
    text += "w" + std::to_string(i) + " : Worker.\n";
    if (i % 2) text += "w" + std::to_string(i) + " : SmartWorker.\n";
  }
  const KnowledgeBase kb = parse_kb(text);
  const Assertion q = std::get<Assertion>(parse_query("w0 : ReachableAtOffice"));
  for (auto _ : state) benchmark::DoNotOptimize(rc::rc_abox_entails(kb, q));
}
BENCHMARK(BM_AboxEntailment)->DenseRange(0, 6, 2);

}  // namespace
