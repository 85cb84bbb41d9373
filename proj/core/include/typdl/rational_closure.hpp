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

#ifndef TYPDL_RATIONAL_CLOSURE_HPP
#define TYPDL_RATIONAL_CLOSURE_HPP

#include <cstddef>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "typdl/concept.hpp"
#include "typdl/kb.hpp"

namespace typdl::rc {

/// Rank of a concept that stays exceptional at the fixpoint.
constexpr int kInfinite = std::numeric_limits<int>::max();

std::string rank_string(int rank);

class RcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// C & materialization(defaults) is unsatisfiable w.r.t. strict.
bool exceptional(const Concept& c, const std::vector<Inclusion>& defaults, const std::vector<Inclusion>& strict);

/// E_0 = all defaults, E_{i+1} = defaults of E_i whose antecedent is
/// exceptional w.r.t. E_i, stopped at the first repetition. levels holds
/// E_0 ... E_k with E_k the fixpoint (stored once; possibly empty).
/// Defaults in a nonempty fixpoint have infinite rank; they are added to
/// strict as plain inclusions and the levels are recomputed until stable.
struct RankingResult {
  /// Strict axioms of the KB plus the infinite-rank defaults.
  std::vector<Inclusion> strict;
  std::vector<Inclusion> defaults;
  std::vector<std::vector<std::size_t>> levels;

  std::vector<Inclusion> level(std::size_t i) const;
  /// Least i with C not exceptional w.r.t. E_i, kInfinite if none.
  int concept_rank(const Concept& c) const;
  /// Rank of each default's antecedent, in source order.
  std::vector<int> default_ranks() const;
  /// Largest finite default rank, -1 when there is none.
  int max_finite_rank() const;
};

/// Probabilities, if any, are ignored.
RankingResult compute_ranking(const KnowledgeBase& kb);

/// T(C) <= D: rank(C) is infinite or rank(C) < rank(C & ~D).
/// C <= D: C & ~D has infinite rank (no model of the KB has an instance).
bool rc_entails_tbox(const RankingResult& r, const Inclusion& q);
bool rc_entails_tbox(const KnowledgeBase& kb, const Inclusion& q);

/// Individual rank assignment mu: individual -> level index. An individual
/// with mu(a) = i must satisfy the materialization of E_i.
using RankAssignment = std::map<std::string, int>;

struct AboxAnalysis {
  /// ABox after replacing typicality assertions and naming the existential
  /// witnesses of concept assertions (fresh individuals).
  std::vector<Assertion> abox;
  /// Upper bounds on mu from typicality assertions.
  std::map<std::string, int> cap;
  std::vector<std::string> individuals;
  std::vector<RankAssignment> minimal;
};

/// Enumerates admissible assignments by increasing sum and keeps the
/// pointwise-minimal ones. `extra_individuals` are added with no
/// assertions. Throws RcError when no assignment is admissible (the KB is
/// inconsistent) or when the search space exceeds `max_assignments`.
AboxAnalysis analyze_abox(const KnowledgeBase& kb, const RankingResult& r,
                          const std::vector<std::string>& extra_individuals = {},
                          std::size_t max_assignments = 1u << 20);

/// C(a) holds iff every minimal assignment entails it; T(C)(a) additionally
/// needs mu(a) = rank(C). Role assertions hold iff asserted.
bool rc_abox_entails(const KnowledgeBase& kb, const Assertion& q);
bool rc_abox_entails(const KnowledgeBase& kb, const RankingResult& r, const Assertion& q);

/// Dispatch on the query form.
bool rc_entails(const KnowledgeBase& kb, const Query& q);

}  // namespace typdl::rc

#endif  // TYPDL_RATIONAL_CLOSURE_HPP
