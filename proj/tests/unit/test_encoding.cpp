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
#include "typdl/encoding.hpp"
#include "typdl/models.hpp"
#include "typdl/parser.hpp"

namespace typdl::encoding {
namespace {

TEST(Encoding, FreshNames) {
  Signature sig;
  sig.atoms = {"box_A", "box_A_"};
  EXPECT_EQ(fresh_name("box_A", sig), "box_A__");
  EXPECT_EQ(fresh_name("box_B", sig), "box_B");
}

TEST(Encoding, Shape) {
  const KnowledgeBase kb = parse_kb("box_Bird <= Fly.\nT(Bird) <= Fly.\na : T(Bird).\n");
  const EncodedKb enc = encode(kb);
  const std::string box = enc.box_of(Concept::atom("Bird"));
  EXPECT_NE(box, "box_Bird");
  EXPECT_EQ(enc.typical(Concept::atom("Bird")), Concept::conj(Concept::atom("Bird"), Concept::atom(box)));
  // The original strict axiom, two per boxed concept, one per default.
  EXPECT_EQ(enc.tbox.size(), 4U);
  const KnowledgeBase plain = enc.as_kb();
  EXPECT_EQ(plain.dialect, Dialect::Plain);
  EXPECT_TRUE(plain.defeasible.empty());
  EXPECT_EQ(parse_kb(serialize_kb(plain)), plain);
}

TEST(Encoding, ExtraConceptsGetBoxes) {
  const EncodedKb enc = encode(parse_kb("A <= B.\n"), {parse_concept("A & C")});
  EXPECT_EQ(enc.box.size(), 1U);
  EXPECT_NO_THROW(enc.box_of(parse_concept("C & A")));
}

TEST(Encoding, MonotonicEntailment) {
  const KnowledgeBase worker = testgen::load_kb("worker.kb");
  EXPECT_TRUE(tr_entails(worker, parse_query("T(Worker) <= ReachableAtOffice")));
  EXPECT_TRUE(tr_entails(worker, parse_query("T(A) <= A")));
  EXPECT_FALSE(tr_entails(worker, parse_query("T(Worker & Slim) <= ReachableAtOffice")));
  EXPECT_FALSE(tr_entails(worker, parse_query("paola : ~ReachableAtOffice")));
  EXPECT_TRUE(tr_entails(worker, parse_query("paola : Worker")));
  EXPECT_TRUE(tr_entails(parse_kb("T(A) <= B.\na : T(A).\n"), parse_query("a : B")));
  EXPECT_TRUE(tr_entails(parse_kb("(a, b) : r.\n"), parse_query("(a, b) : r")));
  EXPECT_FALSE(tr_entails(parse_kb("(a, b) : r.\n"), parse_query("(b, a) : r")));
}

TEST(Encoding, TypicalityIsNotMonotone) {
  // T(A) <= B does not make typical A & C elements B monotonically.
  const KnowledgeBase kb = parse_kb("T(A) <= B.\n");
  EXPECT_FALSE(tr_entails(kb, parse_query("T(A & C) <= B")));
  // But T(A) & C elements are B.
  EXPECT_TRUE(tr_entails(parse_kb("T(A) <= B.\na : T(A).\na : C.\n"), parse_query("a : B & C")));
}

TEST(Encoding, Consistency) {
  EXPECT_TRUE(tr_consistent(testgen::load_kb("penguin.kb")));
  EXPECT_FALSE(tr_consistent(parse_kb("T(A) <= ~A.\na : A.\n")));
  EXPECT_TRUE(tr_consistent(parse_kb("T(A) <= ~A.\n")));
  EXPECT_FALSE(tr_satisfiable(parse_kb("T(A) <= ~A.\n"), parse_concept("A")));
  EXPECT_TRUE(tr_consistent(testgen::load_kb("empty.kb")));
}

// Soundness against ranked models: an entailed query has no bounded
// countermodel. Completeness is checked on the decided direction too: a
// countermodel means mono refuses.
TEST(EncodingProperty, NeverContradictsOracle) {
  testgen::Rng rng(51);
  testgen::Shape s;
  s.depth = 1;
  s.max_strict = 1;
  models::OracleOptions opt;
  opt.domain_bound = 3;
  int entailed = 0;
  int refuted = 0;
  for (int i = 0; i < 300; ++i) {
    const KnowledgeBase kb = testgen::random_kb(rng, s);
    const Query q = testgen::random_query(rng, s);
    models::OracleResult res;
    try {
      res = models::oracle_entails(kb, q, opt);
    } catch (const models::OracleGuardError&) {
      continue;
    }
    const bool mono = tr_entails(kb, q);
    if (mono) {
      ++entailed;
      EXPECT_TRUE(res.entailed) << serialize_kb(kb) << to_string(q);
    }
    if (!res.entailed) {
      ++refuted;
      EXPECT_FALSE(mono);
    }
  }
  EXPECT_GT(entailed, 30);
  EXPECT_GT(refuted, 30);
}

}  // namespace
}  // namespace typdl::encoding
