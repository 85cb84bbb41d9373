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

// Acceptance checks: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "kb_files.hpp"
#include "typdl/alc.hpp"
#include "typdl/encoding.hpp"
#include "typdl/models.hpp"
#include "typdl/parser.hpp"
#include "typdl/prob.hpp"
#include "typdl/rational_closure.hpp"
#include "typdl/skeptical.hpp"
#include "typdl/tcl.hpp"

namespace {

using namespace typdl;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + ("failed: " + f);
    for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const char* kWorkerTbox =
    "SmartWorker <= Worker.\nT(Worker) <= ReachableAtOffice.\nT(SmartWorker) <= ~ReachableAtOffice.\n";

void worker(Check& c) {
  double worst = 0;
  auto rc = [&](const std::string& abox, const std::string& q) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool v = rc::rc_entails(parse_kb(kWorkerTbox + abox), parse_query(q));
    worst = std::max(worst, seconds_since(t0));
    return v;
  };
  const std::string w = "paola : Worker.\n";
  const std::string sw = "paola : Worker.\npaola : SmartWorker.\n";
  const std::string slim = "paola : Slim.\n";
  const std::string fab = "fabrizio : some HasColleague. SmartWorker.\n";
  c.expect(rc(w, "paola : ReachableAtOffice"), "ReachableAtOffice(paola) from {Worker(paola)}");
  c.expect(rc(sw, "paola : ~ReachableAtOffice"), "~ReachableAtOffice(paola) with SmartWorker(paola)");
  c.expect(!rc(sw, "paola : ReachableAtOffice"), "ReachableAtOffice(paola) refused with SmartWorker(paola)");
  c.expect(rc("", "T(Worker & Slim) <= ReachableAtOffice"), "T(Worker & Slim) <= ReachableAtOffice");
  c.expect(rc("", "T(SmartWorker & Slim) <= ~ReachableAtOffice"), "T(SmartWorker & Slim) <= ~ReachableAtOffice");
  c.expect(rc(w + slim, "paola : ReachableAtOffice"), "Slim(paola) keeps ReachableAtOffice(paola)");
  c.expect(rc(sw + slim, "paola : ~ReachableAtOffice"), "Slim(paola) keeps ~ReachableAtOffice(paola)");
  c.expect(!rc(w + slim, "paola : ~ReachableAtOffice"), "Slim(paola) adds nothing");
  c.expect(rc(fab, "fabrizio : some HasColleague. ~ReachableAtOffice"),
           "(some HasColleague. ~ReachableAtOffice)(fabrizio)");
  c.expect(rc(std::string("paola : Worker.\npaola : SmartWorker.\n") + fab,
              "fabrizio : some HasColleague. ~ReachableAtOffice"),
           "fabrizio with the full ABox");
  c.expect(worst < 2.0, "each query under 2 s");
  c.note("slowest query " + std::to_string(worst) + " s");
}

void penguin(Check& c) {
  const KnowledgeBase kb = testgen::load_kb("penguin.kb");
  const rc::RankingResult r = rc::compute_ranking(kb);
  c.expect(r.concept_rank(parse_concept("Bird")) == 0, "rank(Bird) = 0");
  c.expect(r.concept_rank(parse_concept("Penguin")) == 1, "rank(Penguin) = 1");
  c.expect(r.concept_rank(parse_concept("BabyPenguin")) == 2, "rank(BabyPenguin) = 2");
  const sc::Base base = sc::build_base(r, parse_concept("BabyPenguin"));
  // Defaults (3)..(7) are local indices 0..4.
  c.expect(base.defaults() == std::vector<std::size_t>{1, 2, 4}, "base = {(4), (5), (7)}");
  c.expect(!base.stop_rank, "no stop");
  const Inclusion nice = std::get<Inclusion>(parse_query("T(BabyPenguin) <= NiceFeather"));
  const Inclusion nofly = std::get<Inclusion>(parse_query("T(BabyPenguin) <= ~Fly"));
  c.expect(sc::sc_entails(r, nice), "sc entails T(BabyPenguin) <= NiceFeather");
  c.expect(sc::sc_entails(r, nofly), "sc entails T(BabyPenguin) <= ~Fly");
  c.expect(!rc::rc_entails_tbox(r, nice), "rc refuses T(BabyPenguin) <= NiceFeather");
  c.expect(!rc::rc_entails_tbox(r, nofly), "rc refuses T(BabyPenguin) <= ~Fly");
}

void old_eagle(Check& c) {
  const KnowledgeBase kb = testgen::load_kb("old_eagle.kb");
  const rc::RankingResult r = rc::compute_ranking(kb);
  c.expect(r.default_ranks() == std::vector<int>{0, 0, 0}, "all three defaults rank 0");
  const sc::Base base = sc::build_base(r, parse_concept("OldEagle"));
  c.expect(base.defaults().empty(), "empty base");
  c.expect(base.stop_rank && *base.stop_rank == 0, "stop_rank = 0");
  c.expect(!sc::sc_entails(r, std::get<Inclusion>(parse_query("T(OldEagle) <= Fly"))), "T(OldEagle) <= Fly refused");
}

void pet_fish(Check& c) {
  const KnowledgeBase kb = testgen::load_kb("pet_fish.kb");
  const Concept fish = Concept::atom("Fish");
  const Concept pet = Concept::atom("Pet");
  const tcl::CombinationResult res = tcl::revise(kb, fish, pet);
  const std::vector<bool> sigma{true, false, true, true, false, false, false};
  // 0.8 * 0.4 * 0.9 * 0.8 * 0.1 * 0.2 * 0.2
  const Rational expected = Rational(8, 10) * Rational(4, 10) * Rational(9, 10) * Rational(8, 10) *
                            Rational(1, 10) * Rational(2, 10) * Rational(2, 10);
  c.expect(expected == Rational(576, 625000), "hand product equals 576/625000");
  c.expect(res.selection.selected.size() == 1, "exactly one selected scenario");
  if (!res.selection.selected.empty()) {
    c.expect(res.selection.selected[0].selected == sigma, "selected scenario is {(1,1),(2,0),(3,1),(4,1),(5,0),(6,0),(7,0)}");
    c.expect(res.selection.selected[0].probability == expected, "probability 576/625000");
    c.expect(to_decimal_string(res.selection.selected[0].probability) == "0.0009216", "decimal 0.0009216");
  }
  const std::vector<std::pair<Rational, std::string>> want{
      {Rational(8, 10), "~Affectionate"}, {Rational(9, 10), "Scaly"}, {Rational(8, 10), "~Warm"}};
  c.expect(res.additions.size() == 3, "three additions");
  for (std::size_t i = 0; i < std::min(res.additions.size(), want.size()); ++i) {
    c.expect(*res.additions[i].probability == want[i].first && to_string(res.additions[i].right) == want[i].second &&
                 canonical_form(res.additions[i].antecedent()) == canonical_form(Concept::conj(fish, pet)),
             "addition " + to_string(res.additions[i]));
  }
  const auto all = tcl::enumerate_scenarios(kb);
  Rational sum = 0;
  for (const auto& w : all) sum += w.probability;
  c.expect(all.size() == 128, "128 scenarios");
  c.expect(sum == 1, "scenario probabilities sum to 1");
}

void postulates(Check& c) {
  testgen::Rng rng(2024);
  std::size_t violations = 0;
  std::size_t instances = 0;
  for (int i = 0; i < 1000; ++i) {
    const models::RankedInterpretation m = testgen::random_model(rng, 5, 2, 1);
    const auto rep = models::check_postulates(m, models::all_subsets(m));
    violations += rep.violations.size();
    for (std::size_t k : rep.instances) instances += k;
  }
  c.expect(violations == 0, "no violation on 1000 models");
  c.note(std::to_string(instances) + " postulate instances");
  // Mutation control: add the worst element of S to the min-set.
  const models::Selector corrupted = [](const models::RankedInterpretation& m, models::Mask s) {
    models::Mask out = models::min_rank(m, s);
    int worst = -1;
    for (int x = 0; x < m.size; ++x) {
      if ((s >> x) & 1U && (worst < 0 || m.rank[x] > m.rank[worst])) worst = x;
    }
    return worst < 0 ? out : out | (models::Mask{1} << worst);
  };
  std::size_t caught = 0;
  for (int i = 0; i < 50; ++i) {
    const models::RankedInterpretation m = testgen::random_model(rng, 5, 0, 0);
    caught += models::check_postulates(m, models::all_subsets(m), corrupted).violations.size();
  }
  c.expect(caught >= 1, "corrupted min-set is caught");
  c.note(std::to_string(caught) + " violations under mutation");
}

void oracle_equivalence(Check& c) {
  testgen::Rng rng(6006);
  testgen::Shape s;
  s.atoms = 3;
  s.roles = 1;
  s.depth = 1;
  s.max_defaults = 2;
  s.max_strict = 1;
  s.max_assertions = 1;
  s.flat_abox = false;
  int rc_decided = 0;
  int rc_agree = 0;
  int mono_entailed = 0;
  int mono_checked = 0;
  int guarded = 0;
  for (int i = 0; i < 400; ++i) {
    const KnowledgeBase kb = testgen::random_kb(rng, s);
    const Query q = testgen::random_query(rng, s);
    const std::string ctx = serialize_kb(kb) + "query " + to_string(q);
    try {
      const auto can = models::oracle_min_canonical_entails(kb, q);
      if (can.verdict != models::CanonicalVerdict::NoCanonicalModel) {
        bool rc = true;
        try {
          rc = rc::rc_entails(kb, q);
        } catch (const rc::RcError&) {
        }
        ++rc_decided;
        if (rc == (can.verdict == models::CanonicalVerdict::Entailed)) {
          ++rc_agree;
        } else {
          c.expect(false, "rc disagrees on\n" + ctx);
        }
      }
      const auto mono = models::oracle_entails(kb, q);
      ++mono_checked;
      if (encoding::tr_entails(kb, q)) {
        ++mono_entailed;
        c.expect(mono.entailed, "mono entailed but the oracle has a countermodel\n" + ctx);
      }
    } catch (const models::OracleGuardError&) {
      ++guarded;
    }
  }
  c.expect(rc_decided >= 1, "some KB decided by the canonical oracle");
  c.expect(mono_checked >= 200, "at least 200 KBs checked against the ranked-model oracle");
  c.note("400 KBs, rc agrees on " + std::to_string(rc_agree) + "/" + std::to_string(rc_decided) +
         " with a canonical model within bound 4, mono entailed " + std::to_string(mono_entailed) + " of " +
         std::to_string(mono_checked) + " without countermodel, " + std::to_string(guarded) + " over the guard");
}

void student(Check& c) {
  const KnowledgeBase kb = testgen::load_kb("student.kb");
  const Rational p = Rational(6, 10) * Rational(9, 10);
  const auto exts = prob::enumerate_extensions(prob::build_index(kb));
  std::multiset<Rational> got;
  for (const auto& e : exts) got.insert(e.probability);
  c.expect(got == std::multiset<Rational>{Rational(27, 50), Rational(23, 50)}, "extensions {27/50, 23/50}");
  c.expect(p == Rational(27, 50), "0.6 * 0.9 = 27/50");
  const Assertion q = std::get<Assertion>(parse_query("ann : SportLover"));
  c.expect(prob::query_probability(kb, q) == p, "P(SportLover(ann)) = 27/50");
  c.expect(prob::prob_entails(kb, q, Rational(1, 2), 1).verdict == prob::RangeVerdict::Entailed, "range [0.5, 1] entails");
  c.expect(prob::prob_entails(kb, q, Rational(1, 10), 1).verdict == prob::RangeVerdict::NotEntailed,
           "range [0.1, 1] does not entail");
}

void round_trip(Check& c) {
  for (const char* name : testgen::kBundled) {
    const KnowledgeBase kb = testgen::load_kb(name);
    c.expect(parse_kb(serialize_kb(kb)) == kb, std::string("round trip of ") + name);
  }
  testgen::Rng rng(8008);
  int failures = 0;
  int errors = 0;
  for (int i = 0; i < 500; ++i) {
    testgen::Shape s;
    s.depth = testgen::pick(rng, 0, 3);
    s.max_strict = 3;
    s.max_defaults = 3;
    s.max_assertions = 3;
    s.flat_abox = false;
    s.dialect = static_cast<Dialect>(testgen::pick(rng, 0, 2));
    const KnowledgeBase kb = testgen::random_kb(rng, s);
    std::string text = serialize_kb(kb);
    if (!(parse_kb(text) == kb)) ++failures;
    // Corrupt one character; any error must point inside the text.
    if (text.empty()) continue;
    text.insert(static_cast<std::size_t>(testgen::pick(rng, 0, static_cast<int>(text.size()) - 1)), 1, '$');
    try {
      parse_kb(text);
    } catch (const ParseError& e) {
      ++errors;
      int lines = 1;
      for (char ch : text) lines += ch == '\n';
      if (e.line() < 1 || e.line() > lines || e.column() < 1) c.expect(false, "error position " + std::string(e.what()));
    }
  }
  c.expect(failures == 0, std::to_string(failures) + " generated KBs do not round-trip");
  c.expect(errors > 0, "corrupted inputs raise positioned errors");
  c.note("500 generated KBs, " + std::to_string(errors) + " positioned parse errors");
}

void klm(Check& c) {
  testgen::Rng rng(9009);
  testgen::Shape s;
  s.atoms = 4;
  s.roles = 1;
  s.depth = 1;
  s.max_defaults = 3;
  s.max_strict = 1;
  s.max_assertions = 0;
  int checks = 0;
  for (int i = 0; i < 100; ++i) {
    const KnowledgeBase kb = testgen::random_kb(rng, s);
    const rc::RankingResult r = rc::compute_ranking(kb);
    const Concept b = testgen::random_flat(rng, s);
    const Concept d = testgen::random_concept(rng, s, 1);
    const Concept e = testgen::random_concept(rng, s, 1);
    const Concept x = testgen::random_literal(rng, s);
    const std::string ctx = serialize_kb(kb) + "B = " + to_string(b) + ", D = " + to_string(d);
    auto sc = [&](const Concept& l, const Concept& rgt) { return sc::sc_entails(r, Inclusion::typical(l, rgt)); };
    c.expect(sc(b, b), "reflexivity\n" + ctx);
    const bool has_d = sc(b, d);
    for (const Concept& b2 : {Concept::conj(b, Concept::top()), Concept::negate(Concept::negate(b)),
                              Concept::conj(b, Concept::disj(b, x))}) {
      c.expect(sc(b2, d) == has_d, "left logical equivalence with " + to_string(b2) + "\n" + ctx);
    }
    if (has_d) c.expect(sc(b, Concept::disj(d, x)), "right weakening\n" + ctx);
    if (has_d && sc(b, e)) c.expect(sc(b, Concept::conj(d, e)), "and\n" + ctx);
    checks += 5;
  }
  c.note("100 KBs, " + std::to_string(checks) + " property checks");
}

struct Criterion {
  int number;
  const char* title;
  double limit;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worker example under rational closure", 20.0, worker},
      {2, "penguin ranks, skeptical base and drowning", 2.0, penguin},
      {3, "old eagle skeptical base", 2.0, old_eagle},
      {4, "pet fish combination", 5.0, pet_fish},
      {5, "f_T postulates with mutation control", 60.0, postulates},
      {6, "rc and mono against the model oracles", 600.0, oracle_equivalence},
      {7, "ALC^P student probabilities", 2.0, student},
      {8, "parser round trip and error positions", 30.0, round_trip},
      {9, "KLM properties of skeptical closure", 300.0, klm},
  };
  bool all = true;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double t = seconds_since(t0);
    c.expect(t < cr.limit, "time limit " + std::to_string(cr.limit) + " s");
    all = all && c.ok();
    char time[32];
    std::snprintf(time, sizeof time, "%.3f", t);
    const std::string detail = c.detail();
    std::cout << "criterion " << cr.number << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << cr.title << " (" << time
              << " s" << (detail.empty() ? "" : "; " + detail) << ")" << std::endl;
  }
  return all ? 0 : 1;
}
