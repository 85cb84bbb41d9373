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

#include "typdl/prob.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "typdl/encoding.hpp"
#include "typdl/rational_closure.hpp"

namespace typdl::prob {

const char* verdict_name(RangeVerdict v) {
  switch (v) {
    case RangeVerdict::Entailed:
      return "entailed";
    case RangeVerdict::NotEntailed:
      return "not-entailed";
    case RangeVerdict::Vacuous:
      return "vacuous";
  }
  return "vacuous";
}

AssumptionIndex build_index(const KnowledgeBase& kb) {
  // Antecedents of the probabilistic defaults with their product.
  std::map<Concept, std::pair<Concept, Rational>> concepts;
  for (const auto& d : kb.defeasible) {
    if (!d.probability) continue;
    const Concept key = canonical_form(d.antecedent());
    auto [it, fresh] = concepts.emplace(key, std::make_pair(d.antecedent(), Rational(1)));
    it->second.second *= *d.probability;
  }
  AssumptionIndex index;
  if (concepts.empty() || kb.abox.empty()) return index;

  const KnowledgeBase plain = strip_probabilities(kb);
  const rc::RankingResult ranking = rc::compute_ranking(plain);
  struct Entry {
    std::string individual;
    std::string text;
    Concept concept_term;
    Rational p;
  };
  std::vector<Entry> entries;
  for (const auto& a : signature(kb).individuals) {
    for (const auto& [key, cp] : concepts) {
      const Assertion q = ConceptAssertion{LeftConcept::typ(cp.first), a};
      if (rc::rc_abox_entails(plain, ranking, q)) entries.push_back({a, to_string(cp.first), cp.first, cp.second});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return std::tie(x.individual, x.text) < std::tie(y.individual, y.text); });
  for (auto& e : entries) {
    index.pairs.emplace_back(e.individual, e.concept_term);
    index.probabilities.push_back(e.p);
  }
  return index;
}

std::vector<AboxExtension> enumerate_extensions(const AssumptionIndex& index, std::size_t max_n) {
  const std::size_t n = index.size();
  if (n > max_n || n >= 63) {
    throw ProbError("too many typicality assumptions: " + std::to_string(n) + " (limit " + std::to_string(max_n) + ")");
  }
  std::vector<AboxExtension> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    AboxExtension e;
    e.probability = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const bool keep = (mask >> i) & 1U;
      e.kept.push_back(keep);
      if (keep) {
        e.assertions.emplace_back(ConceptAssertion{LeftConcept::typ(index.pairs[i].second), index.pairs[i].first});
        e.probability *= index.probabilities[i];
      } else {
        e.probability *= 1 - index.probabilities[i];
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

KnowledgeBase extended_kb(const KnowledgeBase& kb, const AboxExtension& ext) {
  KnowledgeBase out = strip_probabilities(kb);
  out.abox.insert(out.abox.end(), ext.assertions.begin(), ext.assertions.end());
  return out;
}

RangeResult prob_entails(const KnowledgeBase& kb, const Query& q, const Rational& low, const Rational& high,
                         std::size_t max_n) {
  if (low <= 0 || high > 1 || low > high) throw ProbError("range must satisfy 0 < min <= max <= 1");
  RangeResult res;
  if (const auto* inc = std::get_if<Inclusion>(&q)) {
    res.verdict = rc::rc_entails_tbox(strip_probabilities(kb), *inc) ? RangeVerdict::Entailed : RangeVerdict::NotEntailed;
    return res;
  }
  const auto exts = enumerate_extensions(build_index(kb), max_n);
  for (std::size_t i = 0; i < exts.size(); ++i) {
    if (exts[i].probability < low || exts[i].probability > high) continue;
    res.in_range.push_back(i);
    if (!res.witness && !encoding::tr_entails(extended_kb(kb, exts[i]), q)) res.witness = i;
  }
  if (res.in_range.empty()) {
    res.verdict = RangeVerdict::Vacuous;
  } else {
    res.verdict = res.witness ? RangeVerdict::NotEntailed : RangeVerdict::Entailed;
  }
  return res;
}

Rational query_probability(const KnowledgeBase& kb, const Assertion& q, std::size_t max_n) {
  Rational total = 0;
  for (const auto& e : enumerate_extensions(build_index(kb), max_n)) {
    if (encoding::tr_entails(extended_kb(kb, e), q)) total += e.probability;
  }
  return total;
}

}  // namespace typdl::prob
