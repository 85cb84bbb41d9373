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

#ifndef TYPDL_ALC_HPP
#define TYPDL_ALC_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "typdl/concept.hpp"
#include "typdl/kb.hpp"

namespace typdl::alc {

/// Negation normal form: negation only in front of atoms.
Concept nnf(const Concept& c);

struct Stats {
  std::size_t nodes = 0;
  std::size_t branches = 0;
  std::size_t cache_hits = 0;
  std::size_t blocked = 0;
};

// ── Reasoner ───────────────────────────────────────────────────────────────
// Tableau decision procedure for ALC w.r.t. a fixed general TBox.
//
//   * Inclusions A <= D and A & E <= D (A atomic) are absorbed into lazy
//     rules fired when A enters a label; every other strict inclusion
//     C <= D is internalized as nnf(~C | D) in each label.
//   * Nodes are explored depth first (trace style). A node's label is
//     propositionally saturated first (and-rule, universals along edges,
//     absorbed rules, then the or-rule with semantic branching: a later
//     disjunct is tried with the earlier ones negated; a disjunction with
//     one open disjunct is propagated without branching), then one
//     successor per existential is checked, seeded with the existential's
//     filler, the matching universal fillers and the internalized axioms.
//   * A successor whose seed label is a subset of an ancestor's label is
//     blocked (subset blocking).
//   * ABoxes are precompleted over the named individuals before the trace
//     search starts from each of them.
//
// Unsatisfiable seed labels are cached for the lifetime of the reasoner;
// satisfiable ones only when the result did not depend on blocking by a
// node outside the explored subtree. A Reasoner is not thread-safe; use
// one per thread.
// ───────────────────────────────────────────────────────────────────────────
class Reasoner {
 public:
  /// Throws std::invalid_argument for typical or probabilistic inclusions.
  explicit Reasoner(const std::vector<Inclusion>& strict);
  ~Reasoner();
  Reasoner(Reasoner&&) noexcept;
  Reasoner& operator=(Reasoner&&) noexcept;

  bool is_satisfiable(const Concept& c);
  /// strict |= c <= d
  bool entails(const Concept& c, const Concept& d);
  /// ABox must not contain typicality assertions.
  bool abox_consistent(const std::vector<Assertion>& abox);
  /// strict, abox |= c(a)
  bool instance_of(const std::vector<Assertion>& abox, const Concept& c, const std::string& a);

  const Stats& stats() const;
  /// Stable text identifying the TBox, for cache keys.
  const std::string& fingerprint() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Convenience entry points. Satisfiability results are memoized in a
// process-wide append-only cache keyed by (TBox fingerprint, canonical
// concept); the cache is safe for concurrent use.
bool is_satisfiable(const Concept& c, const std::vector<Inclusion>& strict);
bool entails(const std::vector<Inclusion>& strict, const Concept& c, const Concept& d);
bool abox_consistent(const std::vector<Inclusion>& strict, const std::vector<Assertion>& abox);
bool instance_of(const std::vector<Inclusion>& strict, const std::vector<Assertion>& abox, const Concept& c,
                 const std::string& a);

void set_cache_enabled(bool enabled);
std::size_t cache_size();
void clear_cache();

}  // namespace typdl::alc

#endif  // TYPDL_ALC_HPP
