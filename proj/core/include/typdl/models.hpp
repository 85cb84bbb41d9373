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

#ifndef TYPDL_MODELS_HPP
#define TYPDL_MODELS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "typdl/concept.hpp"
#include "typdl/kb.hpp"

namespace typdl::models {

/// Subset of a domain of at most 64 elements.
using Mask = std::uint64_t;

constexpr int kMaxDomain = 64;

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite ranked interpretation. Elements are 0..size-1; the preference
/// relation is x < y iff rank[x] < rank[y].
struct RankedInterpretation {
  int size = 0;
  std::map<std::string, Mask> atoms;
  /// role -> successor set of every element
  std::map<std::string, std::vector<Mask>> roles;
  std::vector<int> rank;
  std::map<std::string, int> individuals;

  Mask domain() const { return size >= 64 ? ~Mask{0} : ((Mask{1} << size) - 1); }
  bool less(int x, int y) const { return rank[x] < rank[y]; }
  bool has_edge(const std::string& role, int x, int y) const;
  /// Throws ModelError when the shape is inconsistent (sizes, ranges).
  void validate() const;
};

/// Throws ModelError for names missing from the interpretation.
Mask extension(const RankedInterpretation& m, const Concept& c);

/// Elements of minimal rank within a set.
Mask min_rank(const RankedInterpretation& m, Mask s);

/// (T(C))^I = Min_<(C^I)
Mask typical_set(const RankedInterpretation& m, const Concept& c);

/// Length of the longest descending chain starting at x, computed from the
/// induced relation (not read off the rank).
int longest_chain(const RankedInterpretation& m, int x);

// f_T postulates. A selector maps a subset S of the domain to f_T(S); the
// default one is min_rank. (4) and (5) are instantiated on all pairs of the
// family, which covers finite unions when the family is union-closed.
using Selector = std::function<Mask(const RankedInterpretation&, Mask)>;

struct PostulateViolation {
  int postulate;  // 1..6
  Mask s;
  Mask r;
  std::string detail;
};

struct PostulateReport {
  std::array<std::size_t, 6> instances{};
  std::vector<PostulateViolation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(int postulate) const;
};

PostulateReport check_postulates(const RankedInterpretation& m, const std::vector<Mask>& family,
                                 const Selector& f = {});

/// Every subset of the domain (size must be small).
std::vector<Mask> all_subsets(const RankedInterpretation& m);

bool satisfies(const RankedInterpretation& m, const Inclusion& inc);
bool satisfies(const RankedInterpretation& m, const Assertion& a);
/// Strict, defeasible (probabilities ignored) and ABox.
bool satisfies(const RankedInterpretation& m, const KnowledgeBase& kb);
bool satisfies_query(const RankedInterpretation& m, const Query& q);

/// One row per element: rank, atoms, role edges; then the individuals.
std::string to_table(const RankedInterpretation& m);

// ── Brute-force oracles ────────────────────────────────────────────────────
// Both search all finite ranked models of the KB up to a domain bound.
//
// Enumeration is over element descriptions rather than raw extensions: an
// element is a truth assignment to the atoms and to the existential
// subterms of the KB and the query (its type) plus a rank. Role edges are
// then taken maximal, i.e. x R y whenever y respects every universal
// restriction of x. Any ranked model of the KB collapses to such a
// description (merging elements with identical type and rank) without
// changing the truth of any KB axiom or query, and every description
// passing the witness check unfolds into a model; so a countermodel of
// size <= bound exists iff the search finds one. Returned countermodels are
// materialized and re-checked with satisfies/satisfies_query.
// ───────────────────────────────────────────────────────────────────────────

struct OracleOptions {
  int domain_bound = 4;
  /// Refuse bounds above this unless raised explicitly.
  int max_bound = 6;
  /// Refuse signatures with more element-type bits than this.
  int max_type_bits = 12;
};

class OracleGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  bool entailed = true;
  std::optional<RankedInterpretation> countermodel;
  std::size_t candidates = 0;
};

/// kb |= q over ranked models with at most domain_bound elements.
/// Probabilities are ignored.
OracleResult oracle_entails(const KnowledgeBase& kb, const Query& q, const OracleOptions& opt = {});

enum class CanonicalVerdict { Entailed, NotEntailed, NoCanonicalModel };

const char* verdict_name(CanonicalVerdict v);

struct CanonicalResult {
  CanonicalVerdict verdict = CanonicalVerdict::NoCanonicalModel;
  std::optional<RankedInterpretation> countermodel;
  /// Number of KB-consistent combinations over the relevant concept set.
  std::size_t required_types = 0;
  std::size_t canonical_models = 0;
  std::size_t minimal_models = 0;
};

/// Relevant concept set: concepts occurring at top level in the KB and the
/// query, closed under single negation (canonical forms).
std::vector<Concept> relevant_concepts(const KnowledgeBase& kb, const Query& q);

/// Minimal canonical entailment, bounded. A model is canonical when every
/// combination of relevant concepts consistent with the KB is realized by
/// some element; among canonical models with the same interpretation of
/// atoms, roles and individuals, only rank-minimal ones are kept, and among
/// those only the ones whose vector of individual ranks is pointwise
/// minimal. The query must hold in every survivor.
CanonicalResult oracle_min_canonical_entails(const KnowledgeBase& kb, const Query& q,
                                             const OracleOptions& opt = {});

}  // namespace typdl::models

#endif  // TYPDL_MODELS_HPP
