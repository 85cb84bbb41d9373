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

#include <vector>

#include "generators.hpp"
#include "typdl/alc.hpp"

namespace {

using namespace typdl;

// Fresh reasoner per batch so the per-reasoner caches do not hide the search.
void BM_RandomSatisfiability(benchmark::State& state) {
  testgen::Rng rng(1);
  testgen::Shape s;
  s.atoms = 4;
  s.roles = 2;
  s.depth = static_cast<int>(state.range(0));
  std::vector<Inclusion> tbox;
  for (int i = 0; i < 3; ++i) tbox.push_back(Inclusion::strict(testgen::random_concept(rng, s, 1), testgen::random_concept(rng, s, 1)));
  std::vector<Concept> queries;
  for (int i = 0; i < 64; ++i) queries.push_back(testgen::random_concept(rng, s, s.depth));
  for (auto _ : state) {
    alc::Reasoner r(tbox);
    for (const auto& c : queries) benchmark::DoNotOptimize(r.is_satisfiable(c));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(queries.size()));
}
BENCHMARK(BM_RandomSatisfiability)->DenseRange(1, 4);

// Chain A0 <= some r. A1, ..., A(n-1) <= some r. A0 with a clash at the root.
void BM_CyclicChainBlocking(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Inclusion> tbox;
  auto a = [](int i) { return Concept::atom("A" + std::to_string(i)); };
  for (int i = 0; i < n; ++i) {
    tbox.push_back(Inclusion::strict(a(i), Concept::exists("r", a((i + 1) % n))));
    tbox.push_back(Inclusion::strict(a(i), Concept::forall("r", Concept::disj(Concept::atom("B"), Concept::atom("C")))));
  }
  const Concept q = Concept::conj(a(0), Concept::forall("r", Concept::negate(Concept::atom("B"))));
  for (auto _ : state) {
    alc::Reasoner r(tbox);
    benchmark::DoNotOptimize(r.is_satisfiable(q));
  }
}
BENCHMARK(BM_CyclicChainBlocking)->RangeMultiplier(2)->Range(2, 64);

// Unabsorbable disjunctive axioms force or-branching in every label.
void BM_DisjunctiveAxioms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Inclusion> tbox;
  for (int i = 0; i < n; ++i) {
    const Concept p = Concept::atom("P" + std::to_string(i));
    tbox.push_back(Inclusion::strict(Concept::top(), Concept::disj(p, Concept::atom("Q" + std::to_string(i)))));
  }
  const Concept q = Concept::exists("r", Concept::exists("r", Concept::top()));
  for (auto _ : state) {
    alc::Reasoner r(tbox);
    benchmark::DoNotOptimize(r.is_satisfiable(q));
  }
}
BENCHMARK(BM_DisjunctiveAxioms)->DenseRange(2, 12, 2);

}  // namespace
