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

#ifndef TYPDL_CONCEPT_HPP
#define TYPDL_CONCEPT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace typdl {

enum class ConceptKind : std::uint8_t {
  Atom,
  Top,
  Bottom,
  Not,
  And,
  Or,
  Exists,
  Forall,
};

// ── Concept ────────────────────────────────────────────────────────────────
// Immutable ALC concept term. Nodes are shared, so copies are cheap and
// concurrent readers need no synchronization. Equality and ordering are
// structural; the ordering is total and deterministic, which the canonical
// form relies on when sorting operands.
//
// The typicality operator is deliberately not a constructor here: it may
// only wrap a whole concept on the left of an inclusion or in an assertion
// (see LeftConcept in kb.hpp).
// ───────────────────────────────────────────────────────────────────────────
class Concept {
 public:
  /// Top, so that a default-constructed Concept is a valid term.
  Concept();

  static Concept atom(std::string name);
  static Concept top();
  static Concept bottom();
  static Concept negate(Concept c);
  static Concept conj(Concept l, Concept r);
  static Concept disj(Concept l, Concept r);
  static Concept exists(std::string role, Concept c);
  static Concept forall(std::string role, Concept c);

  ConceptKind kind() const;
  /// Atom name for Atom, role name for Exists/Forall, empty otherwise.
  const std::string& name() const;
  /// Operand of Not/Exists/Forall.
  const Concept& child() const;
  const Concept& left() const;
  const Concept& right() const;

  bool is(ConceptKind k) const { return kind() == k; }
  std::size_t hash() const;
  /// Number of constructor nodes in the term.
  std::size_t size() const;

  friend bool operator==(const Concept& a, const Concept& b);
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node);
  static Concept make(ConceptKind kind, std::string name, std::vector<Concept> children);
  std::shared_ptr<const Node> node_;
};

/// Canonical textual form: Top, Bot, ~C, C & D, C | D, some R. C, all R. C.
std::string to_string(const Concept& c);

/// Flattens and sorts conjunctions/disjunctions, removes duplicates and
/// unit elements, eliminates double negation. Idempotent.
Concept canonical_form(const Concept& c);

/// Left-associated conjunction; Top for an empty list.
Concept make_conjunction(const std::vector<Concept>& parts);
/// Left-associated disjunction; Bottom for an empty list.
Concept make_disjunction(const std::vector<Concept>& parts);

void collect_atoms(const Concept& c, std::set<std::string>& out);
void collect_roles(const Concept& c, std::set<std::string>& out);
/// Every subterm of c, including c itself.
void collect_subconcepts(const Concept& c, std::set<Concept>& out);

/// Maximum nesting depth of role restrictions.
int role_depth(const Concept& c);

struct ConceptHash {
  std::size_t operator()(const Concept& c) const { return c.hash(); }
};

}  // namespace typdl

#endif  // TYPDL_CONCEPT_HPP
