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
#include "typdl/prob.hpp"

namespace typdl::prob {
namespace {

Assertion assertion(const char* text) { return std::get<Assertion>(parse_query(text)); }

const Rational kHalf(1, 2);

TEST(Prob, StudentIndex) {
  const AssumptionIndex idx = build_index(testgen::load_kb("student.kb"));
  ASSERT_EQ(idx.size(), 1U);
  EXPECT_EQ(idx.pairs[0].first, "ann");
  EXPECT_EQ(idx.pairs[0].second, Concept::atom("Student"));
  EXPECT_EQ(idx.probabilities[0], Rational(6, 10) * Rational(9, 10));
}

TEST(Prob, EmptyAboxGivesEmptyIndex) {
  const AssumptionIndex idx = build_index(parse_kb("0.6 :: T(Student) <= SportLover.\n"));
  EXPECT_EQ(idx.size(), 0U);
  const auto exts = enumerate_extensions(idx);
  ASSERT_EQ(exts.size(), 1U);
  EXPECT_EQ(exts[0].probability, 1);
  EXPECT_TRUE(exts[0].assertions.empty());
}

TEST(Prob, ExceptionalIndividualIsOmitted) {
  const KnowledgeBase kb = parse_kb(
      "mode alctp.\nSmartWorker <= Worker.\n0.7 :: T(Worker) <= Reachable.\n"
      "0.8 :: T(SmartWorker) <= ~Reachable.\npaola : SmartWorker.\nluca : Worker.\n");
  const AssumptionIndex idx = build_index(kb);
  ASSERT_EQ(idx.size(), 2U);
  EXPECT_EQ(idx.pairs[0], std::make_pair(std::string("luca"), Concept::atom("Worker")));
  EXPECT_EQ(idx.pairs[1], std::make_pair(std::string("paola"), Concept::atom("SmartWorker")));
  EXPECT_EQ(idx.probabilities[0], Rational(7, 10));
  EXPECT_EQ(idx.probabilities[1], Rational(8, 10));
}

TEST(Prob, StudentExtensions) {
  const auto exts = enumerate_extensions(build_index(testgen::load_kb("student.kb")));
  ASSERT_EQ(exts.size(), 2U);
  const Rational p = Rational(6, 10) * Rational(9, 10);
  EXPECT_FALSE(exts[0].kept[0]);
  EXPECT_EQ(exts[0].probability, 1 - p);
  EXPECT_TRUE(exts[1].kept[0]);
  EXPECT_EQ(exts[1].probability, p);
  ASSERT_EQ(exts[1].assertions.size(), 1U);
  EXPECT_EQ(to_string(exts[1].assertions[0]), "ann : T(Student)");
}

TEST(Prob, StudentQueries) {
  const KnowledgeBase kb = testgen::load_kb("student.kb");
  const Assertion q = assertion("ann : SportLover");
  EXPECT_EQ(query_probability(kb, q), Rational(6, 10) * Rational(9, 10));
  EXPECT_EQ(prob_entails(kb, q, kHalf, 1).verdict, RangeVerdict::Entailed);
  const RangeResult wide = prob_entails(kb, q, Rational(1, 10), 1);
  EXPECT_EQ(wide.verdict, RangeVerdict::NotEntailed);
  EXPECT_EQ(wide.in_range.size(), 2U);
  ASSERT_TRUE(wide.witness);
  EXPECT_EQ(*wide.witness, 0U);
  EXPECT_EQ(prob_entails(kb, q, Rational(9, 10), 1).verdict, RangeVerdict::Vacuous);
  EXPECT_EQ(prob_entails(kb, assertion("ann : SocialNetworkUser & SportLover"), kHalf, 1).verdict,
            RangeVerdict::Entailed);
}

TEST(Prob, TboxQueriesIgnoreTheRange) {
  const KnowledgeBase kb = testgen::load_kb("student.kb");
  for (const Rational& lo : {Rational(1, 100), kHalf, Rational(99, 100)}) {
    EXPECT_EQ(prob_entails(kb, parse_query("T(Student) <= SportLover"), lo, 1).verdict, RangeVerdict::Entailed);
    EXPECT_EQ(prob_entails(kb, parse_query("T(Student) <= Rich"), lo, 1).verdict, RangeVerdict::NotEntailed);
  }
}

TEST(Prob, ExtremeQueries) {
  const KnowledgeBase kb = testgen::load_kb("student.kb");
  EXPECT_EQ(query_probability(kb, assertion("ann : Student")), 1);
  EXPECT_EQ(query_probability(kb, assertion("ann : ~Student")), 0);
  EXPECT_EQ(query_probability(kb, assertion("ann : Rich")), 0);
}

TEST(Prob, BadRanges) {
  const KnowledgeBase kb = testgen::load_kb("student.kb");
  const Query q = parse_query("ann : SportLover");
  EXPECT_THROW(prob_entails(kb, q, 0, 1), ProbError);
  EXPECT_THROW(prob_entails(kb, q, Rational(3, 4), kHalf), ProbError);
  EXPECT_THROW(prob_entails(kb, q, kHalf, 2), ProbError);
}

TEST(Prob, Guard) {
  AssumptionIndex idx;
  for (int i = 0; i < 21; ++i) {
    idx.pairs.emplace_back("a" + std::to_string(i), Concept::atom("A"));
    idx.probabilities.emplace_back(kHalf);
  }
  EXPECT_THROW(enumerate_extensions(idx), ProbError);
  EXPECT_THROW(enumerate_extensions(idx, 5), ProbError);
}

TEST(Prob, StrippedKb) {
  const KnowledgeBase kb = testgen::load_kb("student.kb");
  const auto exts = enumerate_extensions(build_index(kb));
  const KnowledgeBase ext = extended_kb(kb, exts[1]);
  EXPECT_EQ(ext.dialect, Dialect::Plain);
  EXPECT_FALSE(ext.defeasible[0].probability);
  EXPECT_EQ(ext.abox.size(), 2U);
}

TEST(ProbProperty, ExtensionProbabilitiesSumToOne) {
  testgen::Rng rng(81);
  for (int i = 0; i < 60; ++i) {
    AssumptionIndex idx;
    const int n = testgen::pick(rng, 0, 12);
    for (int k = 0; k < n; ++k) {
      idx.pairs.emplace_back(testgen::individual_name(k % 3), Concept::atom(testgen::atom_name(k)));
      idx.probabilities.emplace_back(testgen::pick(rng, 1, 99), 100);
    }
    const auto exts = enumerate_extensions(idx);
    ASSERT_EQ(exts.size(), std::size_t{1} << n);
    Rational sum = 0;
    for (const auto& e : exts) {
      EXPECT_GT(e.probability, 0);
      sum += e.probability;
    }
    EXPECT_EQ(sum, 1);
  }
}

TEST(ProbProperty, GeneratedKbs) {
  testgen::Rng rng(82);
  testgen::Shape s;
  s.dialect = Dialect::Alctp;
  s.depth = 1;
  s.max_defaults = 3;
  s.max_assertions = 3;
  s.max_strict = 1;
  for (int i = 0; i < 60; ++i) {
    const KnowledgeBase kb = testgen::random_kb(rng, s);
    const Assertion q{ConceptAssertion{LeftConcept::plain(testgen::random_flat(rng, s)), "a"}};
    Rational p;
    try {
      p = query_probability(kb, q);
    } catch (const std::exception&) {
      continue;  // inconsistent KB
    }
    EXPECT_GE(p, 0);
    EXPECT_LE(p, 1);
    // A range holding every extension decides like the sum: entailed iff P = 1.
    const auto exts = enumerate_extensions(build_index(kb));
    Rational lo = 1;
    for (const auto& e : exts) lo = std::min(lo, e.probability);
    const RangeVerdict all = prob_entails(kb, q, lo, 1).verdict;
    EXPECT_EQ(all == RangeVerdict::Entailed, p == 1) << serialize_kb(kb);
    // Narrowing to a nonempty sub-range keeps entailment.
    if (all == RangeVerdict::Entailed) {
      Rational hi = 0;
      for (const auto& e : exts) hi = std::max(hi, e.probability);
      EXPECT_EQ(prob_entails(kb, q, hi, 1).verdict, RangeVerdict::Entailed);
    }
  }
}

}  // namespace
}  // namespace typdl::prob
