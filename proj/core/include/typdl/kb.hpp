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

#ifndef TYPDL_KB_HPP
#define TYPDL_KB_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "typdl/concept.hpp"
#include "typdl/rational.hpp"

namespace typdl {

/// Either a plain concept or T(C). T never nests.
struct LeftConcept {
  Concept term;
  bool typical = false;

  static LeftConcept plain(Concept c) { return {std::move(c), false}; }
  static LeftConcept typ(Concept c) { return {std::move(c), true}; }

  friend bool operator==(const LeftConcept&, const LeftConcept&) = default;
};

struct Inclusion {
  LeftConcept left;
  Concept right;
  std::optional<Rational> probability;

  static Inclusion strict(Concept c, Concept d) { return {LeftConcept::plain(std::move(c)), std::move(d), {}}; }
  static Inclusion typical(Concept c, Concept d) { return {LeftConcept::typ(std::move(c)), std::move(d), {}}; }
  static Inclusion weighted(Rational p, Concept c, Concept d) {
    return {LeftConcept::typ(std::move(c)), std::move(d), std::move(p)};
  }

  const Concept& antecedent() const { return left.term; }
  const Concept& consequent() const { return right; }

  friend bool operator==(const Inclusion&, const Inclusion&) = default;
};

struct ConceptAssertion {
  LeftConcept left;
  std::string individual;

  friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
};

struct RoleAssertion {
  std::string role;
  std::string subject;
  std::string object;

  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};

using Assertion = std::variant<ConceptAssertion, RoleAssertion>;

/// A query is an inclusion (strict or typicality) or an assertion.
using Query = std::variant<Inclusion, Assertion>;

enum class Dialect { Plain, Alctp, Tcl };

const char* dialect_name(Dialect d);

class KbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strict inclusions, ordered defeasible inclusions and ABox. The defeasible
/// list keeps source order so that default indices are stable across
/// parsing, serialization and every derived construction.
struct KnowledgeBase {
  Dialect dialect = Dialect::Plain;
  std::vector<Inclusion> strict;
  std::vector<Inclusion> defeasible;
  std::vector<Assertion> abox;

  /// Throws KbError when an invariant of the dialect is violated.
  void validate() const;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

struct Signature {
  std::set<std::string> atoms;
  std::set<std::string> roles;
  std::set<std::string> individuals;
};

Signature signature(const KnowledgeBase& kb);
void extend_signature(const Query& q, Signature& sig);

/// Conjunction of (~C | D) over the defaults T(C) <= D; Top when empty.
Concept materialization(const std::vector<Inclusion>& defaults);

/// Copy of kb with probabilities removed and dialect set to plain.
KnowledgeBase strip_probabilities(const KnowledgeBase& kb);

std::string to_string(const LeftConcept& l);
std::string to_string(const Inclusion& inc);
std::string to_string(const Assertion& a);
std::string to_string(const Query& q);

/// True for T(C) <= D and a : T(C).
bool is_typicality_query(const Query& q);

}  // namespace typdl

#endif  // TYPDL_KB_HPP
