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

#include "typdl/tcl.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "typdl/alc.hpp"
#include "typdl/deadline.hpp"

namespace typdl::tcl {

namespace {

void forall_roles(const Concept& c, std::set<std::string>& out) {
  std::set<Concept> subs;
  collect_subconcepts(alc::nnf(c), subs);
  for (const auto& s : subs) {
    if (s.is(ConceptKind::Forall)) out.insert(s.name());
  }
}

Concept combined_concept(const Concept& head, const Concept& modifier) { return Concept::conj(modifier, head); }

bool same_concept(const Concept& a, const Concept& b) { return canonical_form(a) == canonical_form(b); }

class Checker {
 public:
  Checker(const KnowledgeBase& kb, const Concept& head, const Concept& modifier, const Options& opt)
      : kb_(kb), c_(combined_concept(head, modifier)), opt_(opt) {
    if (opt_.role_saturation) {
      for (const auto& ax : kb_.strict) {
        if (alc::entails(kb_.strict, c_, ax.left.term)) forall_roles(ax.right, rigid_roles_);
      }
    }
  }

  bool consistent(const std::vector<std::size_t>& ds) const {
    std::vector<Concept> parts{c_};
    std::set<std::string> roles = rigid_roles_;
    for (std::size_t d : ds) {
      parts.push_back(kb_.defeasible[d].consequent());
      if (opt_.role_saturation) forall_roles(kb_.defeasible[d].consequent(), roles);
    }
    for (const auto& r : roles) parts.push_back(Concept::exists(r, Concept::top()));
    check_deadline();
    return alc::is_satisfiable(make_conjunction(parts), kb_.strict);
  }

  const Concept& combined() const { return c_; }

 private:
  const KnowledgeBase& kb_;
  Concept c_;
  Options opt_;
  std::set<std::string> rigid_roles_;
};

}  // namespace

std::vector<std::size_t> Scenario::defaults() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (selected[i]) out.push_back(i);
  }
  return out;
}

const char* verdict_name(ScenarioVerdict v) {
  switch (v) {
    case ScenarioVerdict::Trivial:
      return "trivial";
    case ScenarioVerdict::ModifierConflict:
      return "modifier-conflict";
    case ScenarioVerdict::Selected:
      return "selected";
  }
  return "selected";
}

Rational selection_probability(const KnowledgeBase& kb, const std::vector<bool>& selected) {
  Rational p = 1;
  for (std::size_t i = 0; i < kb.defeasible.size(); ++i) {
    const Rational q = kb.defeasible[i].probability.value_or(Rational(1));
    p *= selected.at(i) ? q : 1 - q;
  }
  return p;
}

std::vector<Scenario> enumerate_scenarios(const KnowledgeBase& kb, std::size_t max_n) {
  const std::size_t n = kb.defeasible.size();
  if (n > max_n || n >= 63) {
    throw CombinationError("too many defaults for scenario enumeration: " + std::to_string(n) + " (limit " +
                           std::to_string(max_n) + ")");
  }
  std::vector<Scenario> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Scenario w;
    for (std::size_t i = 0; i < n; ++i) w.selected.push_back(((mask >> i) & 1U) != 0);
    w.probability = selection_probability(kb, w.selected);
    out.push_back(std::move(w));
  }
  return out;
}

bool is_consistent_scenario(const KnowledgeBase& kb, const Scenario& w, const Concept& head, const Concept& modifier,
                            const Options& opt) {
  return Checker(kb, head, modifier, opt).consistent(w.defaults());
}

SelectionResult select_scenarios(const KnowledgeBase& kb, const Concept& head, const Concept& modifier,
                                 const Options& opt) {
  const Checker check(kb, head, modifier, opt);
  const std::size_t n = kb.defeasible.size();
  SelectionResult res;
  for (std::size_t i = 0; i < n; ++i) {
    if (alc::entails(kb.strict, check.combined(), kb.defeasible[i].antecedent())) res.applicable.push_back(i);
  }
  const std::size_t m = res.applicable.size();
  if (m > opt.max_defaults || m >= 63) {
    throw CombinationError("too many applicable defaults: " + std::to_string(m) + " (limit " +
                           std::to_string(opt.max_defaults) + ")");
  }

  // Consistency is antimonotone, so a consistent set is maximal iff no
  // single applicable default can be added.
  std::vector<char> ok(std::size_t{1} << m, 0);
  auto defaults_of = [&](std::uint64_t mask) {
    std::vector<std::size_t> ds;
    for (std::size_t j = 0; j < m; ++j) {
      if ((mask >> j) & 1U) ds.push_back(res.applicable[j]);
    }
    return ds;
  };
  for (std::uint64_t mask = 0; mask < ok.size(); ++mask) {
    bool sub_ok = true;
    for (std::size_t j = 0; j < m && sub_ok; ++j) {
      if ((mask >> j) & 1U) sub_ok = ok[mask & ~(std::uint64_t{1} << j)] != 0;
    }
    ok[mask] = sub_ok && check.consistent(defaults_of(mask)) ? 1 : 0;
  }

  struct Candidate {
    Scenario w;
    std::uint64_t mask;
    bool trivial;
  };
  std::vector<Candidate> cands;
  for (std::uint64_t mask = 0; mask < ok.size(); ++mask) {
    if (!ok[mask]) continue;
    ++res.consistent;
    bool maximal = true;
    for (std::size_t j = 0; j < m && maximal; ++j) {
      if (!((mask >> j) & 1U) && ok[mask | (std::uint64_t{1} << j)]) maximal = false;
    }
    Scenario w;
    w.selected.assign(n, false);
    for (std::size_t d : defaults_of(mask)) w.selected[d] = true;
    w.probability = selection_probability(kb, w.selected);
    cands.push_back({std::move(w), mask, maximal});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) { return a.w.probability > b.w.probability; });

  std::vector<std::size_t> head_defaults;
  std::vector<std::size_t> modifier_defaults;
  for (std::size_t d : res.applicable) {
    if (same_concept(kb.defeasible[d].antecedent(), head)) head_defaults.push_back(d);
    if (same_concept(kb.defeasible[d].antecedent(), modifier)) modifier_defaults.push_back(d);
  }
  auto conflict = [&](std::size_t m_d, std::size_t h_d) { return !check.consistent({m_d, h_d}); };

  for (std::size_t lo = 0; lo < cands.size();) {
    std::size_t hi = lo;
    while (hi < cands.size() && cands[hi].w.probability == cands[lo].w.probability) ++hi;
    Block block{cands[lo].w.probability, {}};
    for (std::size_t i = lo; i < hi; ++i) {
      ScenarioVerdict v = ScenarioVerdict::Selected;
      if (cands[i].trivial) {
        v = ScenarioVerdict::Trivial;
      } else {
        for (std::size_t md : modifier_defaults) {
          if (!cands[i].w.selected[md]) continue;
          for (std::size_t j = lo; j < hi && v == ScenarioVerdict::Selected; ++j) {
            if (j == i) continue;
            for (std::size_t hd : head_defaults) {
              if (hd != md && cands[j].w.selected[hd] && conflict(md, hd)) {
                v = ScenarioVerdict::ModifierConflict;
                break;
              }
            }
          }
        }
      }
      if (v == ScenarioVerdict::Selected) res.selected.push_back(cands[i].w);
      block.entries.push_back({cands[i].w, v});
    }
    res.trace.push_back(std::move(block));
    if (!res.selected.empty()) return res;
    lo = hi;
  }
  throw CombinationError("no scenario survives for " + to_string(check.combined()));
}

CombinationResult revise(const KnowledgeBase& kb, const Concept& head, const Concept& modifier, const Options& opt) {
  CombinationResult out{head, modifier, combined_concept(head, modifier), select_scenarios(kb, head, modifier, opt),
                        {}, kb};
  // Consequents selected in every surviving scenario, in source order.
  std::vector<std::size_t> common;
  for (std::size_t d = 0; d < kb.defeasible.size(); ++d) {
    if (std::all_of(out.selection.selected.begin(), out.selection.selected.end(),
                    [&](const Scenario& w) { return w.selected[d]; })) {
      common.push_back(d);
    }
  }
  std::vector<Concept> seen;
  for (std::size_t d : common) {
    const Concept& cons = kb.defeasible[d].consequent();
    if (std::any_of(seen.begin(), seen.end(), [&](const Concept& s) { return same_concept(s, cons); })) continue;
    seen.push_back(cons);
    // HEAD first, then MODIFIER, then the default itself.
    std::optional<Rational> p;
    for (const Concept* source : {&head, &modifier}) {
      for (std::size_t e : common) {
        const auto& inc = kb.defeasible[e];
        if (!p && same_concept(inc.antecedent(), *source) && same_concept(inc.consequent(), cons)) p = inc.probability;
      }
    }
    if (!p) p = kb.defeasible[d].probability;
    out.additions.push_back(Inclusion::weighted(p.value_or(Rational(1)), out.combined, cons));
  }
  out.revised.defeasible.insert(out.revised.defeasible.end(), out.additions.begin(), out.additions.end());
  return out;
}

}  // namespace typdl::tcl
