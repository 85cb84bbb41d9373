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
#include "typdl/alc.hpp"
#include "typdl/models.hpp"
#include "typdl/parser.hpp"

namespace typdl {
namespace {

Concept C(const char* text) { return parse_concept(text); }

std::vector<Inclusion> tbox(const char* text) { return parse_kb(text).strict; }

TEST(Alc, Nnf) {
  EXPECT_EQ(alc::nnf(C("~(A & some r. B)")), C("~A | all r. ~B"));
  EXPECT_EQ(alc::nnf(C("~all r. (A | ~B)")), C("some r. (~A & B)"));
  EXPECT_EQ(alc::nnf(C("~~A")), C("A"));
  EXPECT_EQ(alc::nnf(C("~Top")), C("Bot"));
}

TEST(Alc, PropositionalClashes) {
  EXPECT_FALSE(alc::is_satisfiable(C("A & ~A"), {}));
  EXPECT_FALSE(alc::is_satisfiable(C("Bot"), {}));
  EXPECT_TRUE(alc::is_satisfiable(C("(A | B) & ~A"), {}));
  EXPECT_FALSE(alc::is_satisfiable(C("(A | B) & ~A & ~B"), {}));
}

TEST(Alc, RoleRestrictions) {
  EXPECT_FALSE(alc::is_satisfiable(C("some r. A & all r. ~A"), {}));
  EXPECT_TRUE(alc::is_satisfiable(C("some r. A & all s. ~A"), {}));
  EXPECT_TRUE(alc::is_satisfiable(C("all r. Bot"), {}));
  EXPECT_FALSE(alc::is_satisfiable(C("some r. some r. A & all r. all r. ~A"), {}));
  EXPECT_TRUE(alc::is_satisfiable(C("some r. A & some r. ~A"), {}));
}

TEST(Alc, Tbox) {
  const auto t = tbox("A <= B.\nB <= C.\n");
  EXPECT_TRUE(alc::entails(t, C("A"), C("C")));
  EXPECT_FALSE(alc::entails(t, C("C"), C("A")));
  EXPECT_FALSE(alc::is_satisfiable(C("A & ~C"), t));
  // A general inclusion, internalized.
  const auto g = tbox("some r. A <= B.\n");
  EXPECT_FALSE(alc::is_satisfiable(C("some r. A & ~B"), g));
  EXPECT_TRUE(alc::is_satisfiable(C("some r. ~A & ~B"), g));
  EXPECT_FALSE(alc::is_satisfiable(C("Top"), tbox("Top <= Bot.\n")));
}

TEST(Alc, CyclicTboxNeedsBlocking) {
  const auto t = tbox("A <= some r. A.\n");
  EXPECT_TRUE(alc::is_satisfiable(C("A"), t));
  EXPECT_FALSE(alc::is_satisfiable(C("A & all r. ~A"), t));
  const auto u = tbox("A <= some r. A & B.\nB <= all r. ~A.\n");
  EXPECT_FALSE(alc::is_satisfiable(C("A"), u));
}

TEST(Alc, Abox) {
  const KnowledgeBase kb = parse_kb("A <= all r. B.\na : A.\n(a, b) : r.\nb : ~B | C.\n");
  EXPECT_TRUE(alc::abox_consistent(kb.strict, kb.abox));
  EXPECT_TRUE(alc::instance_of(kb.strict, kb.abox, C("B & C"), "b"));
  EXPECT_FALSE(alc::instance_of(kb.strict, kb.abox, C("C"), "a"));
  EXPECT_TRUE(alc::instance_of(kb.strict, kb.abox, C("some r. C"), "a"));
  std::vector<Assertion> bad = kb.abox;
  bad.emplace_back(ConceptAssertion{LeftConcept::plain(C("~C")), "b"});
  EXPECT_FALSE(alc::abox_consistent(kb.strict, bad));
}

TEST(Alc, RefusesTypicalAxioms) {
  EXPECT_THROW(alc::Reasoner(parse_kb("T(A) <= B.\n").defeasible), std::invalid_argument);
}

TEST(Alc, CacheDoesNotChangeAnswers) {
  testgen::Rng rng(31);
  testgen::Shape s;
  s.depth = 3;
  std::vector<std::pair<KnowledgeBase, Concept>> cases;
  for (int i = 0; i < 200; ++i) cases.emplace_back(testgen::random_kb(rng, s), testgen::random_concept(rng, s, 3));
  std::vector<bool> cached;
  alc::set_cache_enabled(true);
  for (const auto& [kb, c] : cases) cached.push_back(alc::is_satisfiable(c, kb.strict));
  alc::set_cache_enabled(false);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    alc::Reasoner r(cases[i].first.strict);
    EXPECT_EQ(r.is_satisfiable(cases[i].second), cached[i]) << to_string(cases[i].second);
  }
  alc::set_cache_enabled(true);
}

std::size_t existential_count(const Concept& c) {
  std::set<Concept> subs;
  collect_subconcepts(alc::nnf(c), subs);
  std::size_t n = 0;
  for (const auto& x : subs) n += x.is(ConceptKind::Exists) ? 1 : 0;
  return n;
}

// Without a TBox, a concept of role depth <= 1 with k distinct existentials
// has a model of at most k + 1 elements, so the bounded oracle is exact.
TEST(AlcProperty, AgreesWithOracleOnShallowConcepts) {
  testgen::Rng rng(32);
  testgen::Shape s;
  s.depth = 3;
  s.roles = 2;
  models::OracleOptions opt;
  opt.domain_bound = 4;
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 300; ++i) {
    const Concept c = testgen::random_concept(rng, s, s.depth);
    if (role_depth(c) > 1 || existential_count(c) > 3) continue;
    KnowledgeBase kb;
    const auto res = models::oracle_entails(kb, Inclusion::strict(c, Concept::bottom()), opt);
    EXPECT_EQ(alc::is_satisfiable(c, {}), !res.entailed) << to_string(c);
    ++checked;
  }
  EXPECT_GE(checked, 300);
}

// With a TBox the oracle is bounded, so only one direction is exact: a
// finite model it finds proves satisfiability.
TEST(AlcProperty, OracleModelsAreTableauSatisfiable) {
  testgen::Rng rng(33);
  testgen::Shape s;
  s.depth = 2;
  s.max_defaults = 0;
  s.max_assertions = 0;
  s.max_strict = 2;
  models::OracleOptions opt;
  opt.domain_bound = 3;
  int found = 0;
  int unsat = 0;
  for (int i = 0; i < 300; ++i) {
    const KnowledgeBase kb = testgen::random_kb(rng, s);
    const Concept c = testgen::random_concept(rng, s, 2);
    models::OracleResult res;
    try {
      res = models::oracle_entails(kb, Inclusion::strict(c, Concept::bottom()), opt);
    } catch (const models::OracleGuardError&) {
      continue;
    }
    const bool sat = alc::is_satisfiable(c, kb.strict);
    if (!res.entailed) {
      ++found;
      EXPECT_TRUE(sat) << serialize_kb(kb) << to_string(c);
    }
    unsat += sat ? 0 : 1;
  }
  EXPECT_GT(found, 50);
  EXPECT_GT(unsat, 10);
}

TEST(AlcProperty, InstanceCheckMatchesOracleOnAboxes) {
  testgen::Rng rng(34);
  testgen::Shape s;
  s.depth = 1;
  s.max_defaults = 0;
  s.max_strict = 1;
  s.max_assertions = 3;
  models::OracleOptions opt;
  opt.domain_bound = 3;
  for (int i = 0; i < 200; ++i) {
    const KnowledgeBase kb = testgen::random_kb(rng, s);
    bool typical = false;
    for (const auto& a : kb.abox) {
      if (const auto* ca = std::get_if<ConceptAssertion>(&a)) typical |= ca->left.typical;
    }
    if (typical) continue;
    const std::string a = testgen::individual_name(testgen::pick(rng, 0, 1));
    const Concept c = testgen::random_concept(rng, s, 1);
    std::vector<Assertion> abox = kb.abox;
    abox.emplace_back(ConceptAssertion{LeftConcept::plain(Concept::top()), a});
    models::OracleResult res;
    try {
      res = models::oracle_entails(kb, Assertion{ConceptAssertion{LeftConcept::plain(c), a}}, opt);
    } catch (const models::OracleGuardError&) {
      continue;
    }
    // A bounded countermodel refutes the instance check.
    if (!res.entailed) {
      EXPECT_FALSE(alc::instance_of(kb.strict, abox, c, a)) << serialize_kb(kb) << to_string(c);
    }
  }
}

}  // namespace
}  // namespace typdl
