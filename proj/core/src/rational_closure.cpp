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

#include "typdl/rational_closure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "typdl/alc.hpp"
#include "typdl/deadline.hpp"
#include "typdl/encoding.hpp"

namespace typdl::rc {

std::string rank_string(int rank) { return rank == kInfinite ? "inf" : std::to_string(rank); }

bool exceptional(const Concept& c, const std::vector<Inclusion>& defaults, const std::vector<Inclusion>& strict) {
  return !alc::is_satisfiable(Concept::conj(c, materialization(defaults)), strict);
}

std::vector<Inclusion> RankingResult::level(std::size_t i) const {
  std::vector<Inclusion> out;
  for (std::size_t d : levels.at(i)) out.push_back(defaults[d]);
  return out;
}

int RankingResult::concept_rank(const Concept& c) const {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!exceptional(c, level(i), strict)) return static_cast<int>(i);
  }
  return kInfinite;
}

std::vector<int> RankingResult::default_ranks() const {
  std::vector<int> out;
  for (const auto& d : defaults) out.push_back(concept_rank(d.antecedent()));
  return out;
}

int RankingResult::max_finite_rank() const {
  int best = -1;
  for (int r : default_ranks()) {
    if (r != kInfinite) best = std::max(best, r);
  }
  return best;
}

RankingResult compute_ranking(const KnowledgeBase& kb) {
  RankingResult r;
  r.strict = kb.strict;
  for (const auto& d : kb.defeasible) r.defaults.push_back(Inclusion::typical(d.antecedent(), d.consequent()));
  std::vector<bool> hardened(r.defaults.size(), false);
  while (true) {
    r.levels.clear();
    std::vector<std::size_t> cur(r.defaults.size());
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    while (true) {
      check_deadline();
      r.levels.push_back(cur);
      const std::vector<Inclusion> e = r.level(r.levels.size() - 1);
      std::vector<std::size_t> next;
      for (std::size_t d : cur) {
        if (exceptional(r.defaults[d].antecedent(), e, r.strict)) next.push_back(d);
      }
      if (next == cur) break;
      cur = std::move(next);
    }
    // Defaults left at the fixpoint have infinite rank: no model has a
    // typical instance of their antecedent, so they hold strictly.
    bool changed = false;
    for (std::size_t d : r.levels.back()) {
      if (hardened[d]) continue;
      hardened[d] = true;
      changed = true;
      r.strict.push_back(Inclusion::strict(r.defaults[d].antecedent(), r.defaults[d].consequent()));
    }
    if (!changed) break;
  }
  return r;
}

bool rc_entails_tbox(const RankingResult& r, const Inclusion& q) {
  const Concept counter = Concept::conj(q.left.term, Concept::negate(q.right));
  if (!q.left.typical) return r.concept_rank(counter) == kInfinite;
  const int rc = r.concept_rank(q.left.term);
  if (rc == kInfinite) return true;
  return rc < r.concept_rank(counter);
}

bool rc_entails_tbox(const KnowledgeBase& kb, const Inclusion& q) { return rc_entails_tbox(compute_ranking(kb), q); }

namespace {

/// Names the witnesses of top-level existential conjuncts of a : C.
void skolemize(const std::string& a, const Concept& c, Signature& sig, std::vector<Assertion>& out) {
  std::vector<Concept> parts;
  std::function<void(const Concept&)> split = [&](const Concept& x) {
    if (x.is(ConceptKind::And)) {
      split(x.left());
      split(x.right());
    } else {
      parts.push_back(x);
    }
  };
  split(c);
  std::vector<Concept> rest;
  for (const auto& p : parts) {
    if (!p.is(ConceptKind::Exists)) {
      rest.push_back(p);
      continue;
    }
    const std::string s = encoding::fresh_name(a + "_" + p.name(), sig);
    sig.individuals.insert(s);
    out.emplace_back(RoleAssertion{p.name(), a, s});
    skolemize(s, p.child(), sig, out);
  }
  out.emplace_back(ConceptAssertion{LeftConcept::plain(make_conjunction(rest)), a});
}

std::vector<Assertion> with_mu(const AboxAnalysis& an, const RankingResult& r, const std::vector<int>& mu) {
  std::vector<Assertion> abox = an.abox;
  for (std::size_t i = 0; i < an.individuals.size(); ++i) {
    abox.emplace_back(ConceptAssertion{LeftConcept::plain(materialization(r.level(mu[i]))), an.individuals[i]});
  }
  return abox;
}

std::vector<int> as_vector(const AboxAnalysis& an, const RankAssignment& mu) {
  std::vector<int> v;
  for (const auto& n : an.individuals) v.push_back(mu.at(n));
  return v;
}

}  // namespace

AboxAnalysis analyze_abox(const KnowledgeBase& kb, const RankingResult& r,
                          const std::vector<std::string>& extra_individuals, std::size_t max_assignments) {
  AboxAnalysis an;
  Signature sig = signature(kb);
  for (const auto& n : extra_individuals) sig.individuals.insert(n);
  for (const auto& a : kb.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      if (ca->left.typical) {
        const int rank = r.concept_rank(ca->left.term);
        if (rank == kInfinite) throw RcError("inconsistent knowledge base: " + to_string(a) + " has infinite rank");
        auto [it, fresh] = an.cap.emplace(ca->individual, rank);
        if (!fresh) it->second = std::min(it->second, rank);
      }
      skolemize(ca->individual, ca->left.term, sig, an.abox);
    } else {
      an.abox.push_back(a);
    }
  }
  an.individuals.assign(sig.individuals.begin(), sig.individuals.end());

  const int top = static_cast<int>(r.levels.size()) - 1;
  const std::size_t n = an.individuals.size();
  std::vector<int> hi(n, top);
  for (std::size_t i = 0; i < n; ++i) {
    if (auto it = an.cap.find(an.individuals[i]); it != an.cap.end()) hi[i] = std::min(hi[i], it->second);
  }
  std::size_t space = 1;
  for (int h : hi) {
    space *= static_cast<std::size_t>(h + 1);
    if (space > max_assignments) throw RcError("too many individual rank assignments to enumerate");
  }

  std::vector<std::vector<int>> found;
  auto dominates = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return false;
    }
    return true;
  };
  const int max_sum = std::accumulate(hi.begin(), hi.end(), 0);
  std::vector<int> mu(n, 0);
  // Vectors with a fixed sum, generated recursively.
  std::function<void(std::size_t, int)> gen = [&](std::size_t i, int left) {
    if (i == n) {
      if (left != 0) return;
      for (const auto& f : found) {
        if (dominates(mu, f)) return;
      }
      check_deadline();
      if (alc::abox_consistent(r.strict, with_mu(an, r, mu))) found.push_back(mu);
      return;
    }
    for (int v = 0; v <= std::min(hi[i], left); ++v) {
      mu[i] = v;
      gen(i + 1, left - v);
    }
    mu[i] = 0;
  };
  for (int s = 0; s <= max_sum; ++s) gen(0, s);
  if (found.empty()) throw RcError("inconsistent knowledge base: no admissible individual rank assignment");
  for (const auto& f : found) {
    RankAssignment a;
    for (std::size_t i = 0; i < n; ++i) a[an.individuals[i]] = f[i];
    an.minimal.push_back(std::move(a));
  }
  return an;
}

bool rc_abox_entails(const KnowledgeBase& kb, const RankingResult& r, const Assertion& q) {
  if (const auto* ra = std::get_if<RoleAssertion>(&q)) {
    for (const auto& a : kb.abox) {
      if (a == q) return true;
    }
    try {
      analyze_abox(kb, r, {ra->subject, ra->object});
    } catch (const RcError&) {
      return true;
    }
    return false;
  }
  const auto& ca = std::get<ConceptAssertion>(q);
  const AboxAnalysis an = analyze_abox(kb, r, {ca.individual});
  const int want = ca.left.typical ? r.concept_rank(ca.left.term) : 0;
  for (const auto& mu : an.minimal) {
    if (ca.left.typical && mu.at(ca.individual) != want) return false;
    if (!alc::instance_of(r.strict, with_mu(an, r, as_vector(an, mu)), ca.left.term, ca.individual)) return false;
  }
  return true;
}

bool rc_abox_entails(const KnowledgeBase& kb, const Assertion& q) {
  return rc_abox_entails(kb, compute_ranking(kb), q);
}

bool rc_entails(const KnowledgeBase& kb, const Query& q) {
  if (const auto* inc = std::get_if<Inclusion>(&q)) return rc_entails_tbox(kb, *inc);
  return rc_abox_entails(kb, std::get<Assertion>(q));
}

}  // namespace typdl::rc
