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

#include <gtest/gtest.h>

#include "generators.hpp"
#include "kb_files.hpp"
#include "typdl/parser.hpp"
#include "typdl/tcl.hpp"

namespace typdl::tcl {
namespace {

const Concept kFish = Concept::atom("Fish");
const Concept kPet = Concept::atom("Pet");

// Probabilities of the bundled pet-fish defaults, in file order.
const Rational kPetFish[] = {Rational(8, 10), Rational(6, 10), Rational(9, 10), Rational(8, 10),
                             Rational(9, 10), Rational(8, 10), Rational(8, 10)};

Rational by_hand(const std::vector<bool>& sel) {
  Rational p = 1;
  for (std::size_t i = 0; i < sel.size(); ++i) p *= sel[i] ? kPetFish[i] : 1 - kPetFish[i];
  return p;
}

Scenario scenario(std::initializer_list<std::size_t> ds, std::size_t n) {
  Scenario w;
  w.selected.assign(n, false);
  for (std::size_t d : ds) w.selected[d] = true;
  return w;
}

TEST(Tcl, ScenarioEnumeration) {
  const KnowledgeBase kb = testgen::load_kb("pet_fish.kb");
  const auto all = enumerate_scenarios(kb);
  ASSERT_EQ(all.size(), 128U);
  Rational sum = 0;
  for (const auto& w : all) {
    EXPECT_EQ(w.probability, by_hand(w.selected));
    sum += w.probability;
  }
  EXPECT_EQ(sum, 1);
  const std::vector<bool> sigma{true, false, true, true, false, false, false};
  EXPECT_EQ(selection_probability(kb, sigma), Rational(576, 625000));
  EXPECT_EQ(enumerate_scenarios(parse_kb("mode tcl.\n")).size(), 1U);
  EXPECT_EQ(enumerate_scenarios(parse_kb("mode tcl.\n"))[0].probability, 1);
  EXPECT_THROW(enumerate_scenarios(kb, 6), CombinationError);
}

TEST(Tcl, Consistency) {
  const KnowledgeBase kb = testgen::load_kb("pet_fish.kb");
  EXPECT_FALSE(is_consistent_scenario(kb, scenario({0, 5}, 7), kFish, kPet));
  EXPECT_FALSE(is_consistent_scenario(kb, scenario({4}, 7), kFish, kPet));
  Options plain;
  plain.role_saturation = false;
  EXPECT_TRUE(is_consistent_scenario(kb, scenario({4}, 7), kFish, kPet, plain));
  EXPECT_TRUE(is_consistent_scenario(kb, scenario({}, 7), kFish, kPet));
  EXPECT_TRUE(is_consistent_scenario(kb, scenario({0, 1, 2, 3}, 7), kFish, kPet));
  EXPECT_FALSE(is_consistent_scenario(parse_kb("mode tcl.\nFish <= ~Pet.\n"), scenario({}, 0), kFish, kPet));
}

TEST(Tcl, PetFishSelection) {
  const KnowledgeBase kb = testgen::load_kb("pet_fish.kb");
  const SelectionResult res = select_scenarios(kb, kFish, kPet);
  EXPECT_EQ(res.applicable.size(), 7U);
  ASSERT_EQ(res.selected.size(), 1U);
  EXPECT_EQ(res.selected[0].defaults(), (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_EQ(res.selected[0].probability, by_hand({true, false, true, true, false, false, false}));
  EXPECT_EQ(res.selected[0].probability, Rational(576, 625000));
  // The first block holds only trivial scenarios.
  ASSERT_EQ(res.trace.size(), 2U);
  for (const auto& e : res.trace[0].entries) EXPECT_EQ(e.verdict, ScenarioVerdict::Trivial);
  std::size_t conflicts = 0;
  for (const auto& e : res.trace[1].entries) conflicts += e.verdict == ScenarioVerdict::ModifierConflict ? 1 : 0;
  EXPECT_EQ(conflicts, 3U);
}

TEST(Tcl, PetFishRevision) {
  const KnowledgeBase kb = testgen::load_kb("pet_fish.kb");
  const CombinationResult res = revise(kb, kFish, kPet);
  EXPECT_EQ(to_string(res.combined), "Pet & Fish");
  ASSERT_EQ(res.additions.size(), 3U);
  EXPECT_EQ(to_string(res.additions[0]), "0.8 :: T(Pet & Fish) <= ~Affectionate");
  EXPECT_EQ(to_string(res.additions[1]), "0.9 :: T(Pet & Fish) <= Scaly");
  EXPECT_EQ(to_string(res.additions[2]), "0.8 :: T(Pet & Fish) <= ~Warm");
  EXPECT_EQ(res.revised.defeasible.size(), 10U);
  EXPECT_NO_THROW(res.revised.validate());
  EXPECT_EQ(parse_kb(serialize_kb(res.revised)), res.revised);
}

TEST(Tcl, RevisionIsIterable) {
  KnowledgeBase kb = revise(testgen::load_kb("pet_fish.kb"), kFish, kPet).revised;
  // Emergent attribute added by hand, then a third concept.
  kb.defeasible.push_back(Inclusion::weighted(Rational(7, 10), parse_concept("Pet & Fish"), Concept::atom("Red")));
  kb.defeasible.push_back(Inclusion::weighted(Rational(9, 10), Concept::atom("Tropical"), Concept::atom("Warm")));
  EXPECT_NO_THROW(kb.validate());
  const KnowledgeBase reparsed = parse_kb(serialize_kb(kb));
  const CombinationResult res = revise(reparsed, parse_concept("Pet & Fish"), Concept::atom("Tropical"));
  EXPECT_FALSE(res.selection.selected.empty());
  EXPECT_EQ(to_string(res.combined), "Tropical & (Pet & Fish)");
}

TEST(Tcl, ConflictFreeKb) {
  // Two compatible defaults: {1, 2} is maximal hence trivial; the next block
  // is {1} alone (0.9 * 0.2 = 0.18 against 0.1 * 0.8 = 0.08).
  const KnowledgeBase kb = parse_kb("mode tcl.\n0.9 :: T(A) <= B.\n0.8 :: T(C) <= D.\n");
  const SelectionResult res = select_scenarios(kb, Concept::atom("A"), Concept::atom("C"));
  ASSERT_EQ(res.selected.size(), 1U);
  EXPECT_EQ(res.selected[0].defaults(), (std::vector<std::size_t>{0}));
  EXPECT_EQ(res.selected[0].probability, Rational(9, 10) * Rational(2, 10));
}

TEST(Tcl, Failures) {
  EXPECT_THROW(select_scenarios(parse_kb("mode tcl.\n"), kFish, kPet), CombinationError);
  EXPECT_THROW(select_scenarios(parse_kb("mode tcl.\nFish <= ~Pet.\n0.9 :: T(Fish) <= A.\n"), kFish, kPet),
               CombinationError);
}

TEST(Tcl, InapplicableDefaultsStayOut) {
  const KnowledgeBase kb = parse_kb("mode tcl.\n0.9 :: T(A) <= B.\n0.8 :: T(C) <= D.\n0.7 :: T(E) <= F.\n");
  const SelectionResult res = select_scenarios(kb, Concept::atom("A"), Concept::atom("C"));
  EXPECT_EQ(res.applicable, (std::vector<std::size_t>{0, 1}));
  for (const auto& w : res.selected) EXPECT_FALSE(w.selected[2]);
}

TEST(TclProperty, ScenarioProbabilitiesSumToOne) {
  testgen::Rng rng(91);
  testgen::Shape s;
  s.dialect = Dialect::Tcl;
  s.max_defaults = 12;
  s.max_assertions = 0;
  for (int i = 0; i < 20; ++i) {
    const KnowledgeBase kb = testgen::random_kb(rng, s);
    Rational sum = 0;
    for (const auto& w : enumerate_scenarios(kb)) sum += w.probability;
    EXPECT_EQ(sum, 1);
  }
}

TEST(TclProperty, SelectionInvariants) {
  testgen::Rng rng(92);
  testgen::Shape s;
  s.dialect = Dialect::Tcl;
  s.depth = 1;
  s.max_strict = 1;
  s.max_assertions = 0;
  const Concept head = Concept::atom("A");
  const Concept mod = Concept::atom("B");
  int combined = 0;
  for (int i = 0; i < 150; ++i) {
    KnowledgeBase kb = testgen::random_kb(rng, s);
    // Defaults on the HEAD and on the MODIFIER.
    const int n = testgen::pick(rng, 2, 5);
    for (int k = 0; k < n; ++k) {
      kb.defeasible.push_back(Inclusion::weighted(testgen::random_probability(rng, Dialect::Tcl),
                                                  k % 2 ? mod : head, testgen::random_concept(rng, s, 1)));
    }
    SelectionResult res;
    try {
      res = select_scenarios(kb, head, mod);
    } catch (const CombinationError&) {
      continue;
    }
    ++combined;
    const std::string ctx = serialize_kb(kb);
    for (const auto& w : res.selected) {
      EXPECT_TRUE(is_consistent_scenario(kb, w, head, mod)) << ctx;
      bool extendable = false;
      for (std::size_t d : res.applicable) {
        if (w.selected[d]) continue;
        Scenario bigger = w;
        bigger.selected[d] = true;
        bigger.probability = selection_probability(kb, bigger.selected);
        // q > 1/2, so adding a default raises the probability.
        EXPECT_GT(bigger.probability, w.probability);
        extendable |= is_consistent_scenario(kb, bigger, head, mod);
      }
      EXPECT_TRUE(extendable) << "selected scenario is maximal\n" << ctx;
    }
    // The most probable consistent scenario is maximal, hence trivial.
    ASSERT_GE(res.trace.size(), 2U) << ctx;
    for (const auto& e : res.trace.front().entries) EXPECT_EQ(e.verdict, ScenarioVerdict::Trivial) << ctx;
    EXPECT_NO_THROW(revise(kb, head, mod).revised.validate());
  }
  EXPECT_GT(combined, 50);
}

}  // namespace
}  // namespace typdl::tcl
