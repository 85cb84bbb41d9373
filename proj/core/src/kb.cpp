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

#include "typdl/kb.hpp"

namespace typdl {

const char* dialect_name(Dialect d) {
  switch (d) {
    case Dialect::Plain:
      return "plain";
    case Dialect::Alctp:
      return "alctp";
    case Dialect::Tcl:
      return "tcl";
  }
  return "plain";
}

void KnowledgeBase::validate() const {
  for (const auto& inc : strict) {
    if (inc.left.typical) throw KbError("strict inclusion with typical left side: " + to_string(inc));
    if (inc.probability) throw KbError("probability on a strict inclusion: " + to_string(inc));
  }
  const Rational half(1, 2);
  for (const auto& inc : defeasible) {
    if (!inc.left.typical) throw KbError("defeasible inclusion without T: " + to_string(inc));
    switch (dialect) {
      case Dialect::Plain:
        if (inc.probability) throw KbError("probability in plain dialect: " + to_string(inc));
        break;
      case Dialect::Alctp:
        if (inc.probability && (*inc.probability <= 0 || *inc.probability >= 1)) {
          throw KbError("probability outside (0, 1): " + to_string(inc));
        }
        break;
      case Dialect::Tcl:
        if (!inc.probability) throw KbError("typicality inclusion without probability in tcl dialect: " + to_string(inc));
        if (*inc.probability <= half || *inc.probability >= 1) {
          throw KbError("probability outside (0.5, 1): " + to_string(inc));
        }
        break;
    }
  }
  if (dialect == Dialect::Tcl) {
    for (const auto& a : abox) {
      if (const auto* ca = std::get_if<ConceptAssertion>(&a); ca && ca->left.typical) {
        throw KbError("typicality assertion in tcl dialect: " + to_string(a));
      }
    }
  }
}

namespace {

void add_left(const LeftConcept& l, Signature& sig) {
  collect_atoms(l.term, sig.atoms);
  collect_roles(l.term, sig.roles);
}

void add_inclusion(const Inclusion& inc, Signature& sig) {
  add_left(inc.left, sig);
  collect_atoms(inc.right, sig.atoms);
  collect_roles(inc.right, sig.roles);
}

void add_assertion(const Assertion& a, Signature& sig) {
  if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
    add_left(ca->left, sig);
    sig.individuals.insert(ca->individual);
  } else {
    const auto& ra = std::get<RoleAssertion>(a);
    sig.roles.insert(ra.role);
    sig.individuals.insert(ra.subject);
    sig.individuals.insert(ra.object);
  }
}

}  // namespace

Signature signature(const KnowledgeBase& kb) {
  Signature sig;
  for (const auto& inc : kb.strict) add_inclusion(inc, sig);
  for (const auto& inc : kb.defeasible) add_inclusion(inc, sig);
  for (const auto& a : kb.abox) add_assertion(a, sig);
  return sig;
}

void extend_signature(const Query& q, Signature& sig) {
  if (const auto* inc = std::get_if<Inclusion>(&q)) {
    add_inclusion(*inc, sig);
  } else {
    add_assertion(std::get<Assertion>(q), sig);
  }
}

Concept materialization(const std::vector<Inclusion>& defaults) {
  std::vector<Concept> parts;
  parts.reserve(defaults.size());
  for (const auto& d : defaults) {
    parts.push_back(Concept::disj(Concept::negate(d.antecedent()), d.consequent()));
  }
  return make_conjunction(parts);
}

KnowledgeBase strip_probabilities(const KnowledgeBase& kb) {
  KnowledgeBase out = kb;
  out.dialect = Dialect::Plain;
  for (auto& d : out.defeasible) d.probability.reset();
  return out;
}

std::string to_string(const LeftConcept& l) {
  return l.typical ? "T(" + to_string(l.term) + ")" : to_string(l.term);
}

std::string to_string(const Inclusion& inc) {
  std::string out;
  if (inc.probability) out += to_decimal_string(*inc.probability) + " :: ";
  out += to_string(inc.left) + " <= " + to_string(inc.right);
  return out;
}

std::string to_string(const Assertion& a) {
  if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
    return ca->individual + " : " + to_string(ca->left);
  }
  const auto& ra = std::get<RoleAssertion>(a);
  return "(" + ra.subject + ", " + ra.object + ") : " + ra.role;
}

std::string to_string(const Query& q) {
  if (const auto* inc = std::get_if<Inclusion>(&q)) return to_string(*inc);
  return to_string(std::get<Assertion>(q));
}

bool is_typicality_query(const Query& q) {
  if (const auto* inc = std::get_if<Inclusion>(&q)) return inc->left.typical;
  const auto* ca = std::get_if<ConceptAssertion>(&std::get<Assertion>(q));
  return ca && ca->left.typical;
}

}  // namespace typdl
