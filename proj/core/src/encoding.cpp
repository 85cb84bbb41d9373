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

#include "typdl/encoding.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

#include "typdl/alc.hpp"

namespace typdl::encoding {

namespace {

bool taken_name(const std::string& n, const Signature& sig) {
  return sig.atoms.count(n) || sig.roles.count(n) || sig.individuals.count(n);
}

std::string slug(const Concept& c) {
  if (c.is(ConceptKind::Atom)) return c.name();
  std::string out;
  for (char ch : to_string(c)) {
    if (std::isalnum(static_cast<unsigned char>(ch))) {
      out += ch;
    } else if (ch == '~') {
      out += "not";
    } else if (ch == '&') {
      out += "and";
    } else if (ch == '|') {
      out += "or";
    } else if (ch == ' ' && !out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

void typical_concepts(const KnowledgeBase& kb, std::vector<Concept>& out) {
  for (const auto& d : kb.defeasible) out.push_back(d.antecedent());
  for (const auto& a : kb.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a); ca && ca->left.typical) out.push_back(ca->left.term);
  }
}

}  // namespace

std::string fresh_name(const std::string& base, const Signature& taken) {
  std::string n = base;
  while (taken_name(n, taken)) n += "_";
  return n;
}

const std::string& EncodedKb::box_of(const Concept& c) const {
  auto it = box.find(canonical_form(c));
  if (it == box.end()) throw std::out_of_range("no box atom for " + to_string(c));
  return it->second;
}

Concept EncodedKb::typical(const Concept& c) const { return Concept::conj(c, Concept::atom(box_of(c))); }

KnowledgeBase EncodedKb::as_kb() const {
  KnowledgeBase out;
  out.strict = tbox;
  out.abox = abox;
  return out;
}

EncodedKb encode(const KnowledgeBase& kb, const std::vector<Concept>& extra) {
  Signature sig = signature(kb);
  for (const auto& c : extra) {
    collect_atoms(c, sig.atoms);
    collect_roles(c, sig.roles);
  }
  EncodedKb enc;
  enc.pref = fresh_name("pref", sig);
  sig.roles.insert(enc.pref);

  std::vector<Concept> under_t;
  typical_concepts(kb, under_t);
  under_t.insert(under_t.end(), extra.begin(), extra.end());
  for (const auto& c : under_t) {
    const Concept key = canonical_form(c);
    if (enc.box.count(key)) continue;
    const std::string name = fresh_name("box_" + slug(key), sig);
    sig.atoms.insert(name);
    enc.box.emplace(key, name);
  }

  for (const auto& inc : kb.strict) enc.tbox.push_back(Inclusion::strict(inc.left.term, inc.right));
  // Box axioms in order of first occurrence.
  std::set<Concept> done;
  for (const auto& c : under_t) {
    const Concept key = canonical_form(c);
    if (!done.insert(key).second) continue;
    const Concept b = Concept::atom(enc.box.at(key));
    enc.tbox.push_back(
        Inclusion::strict(b, Concept::forall(enc.pref, Concept::conj(Concept::negate(c), b))));
    enc.tbox.push_back(
        Inclusion::strict(Concept::negate(b), Concept::exists(enc.pref, Concept::conj(c, b))));
  }
  for (const auto& d : kb.defeasible) enc.tbox.push_back(Inclusion::strict(enc.typical(d.antecedent()), d.right));
  for (const auto& a : kb.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a); ca && ca->left.typical) {
      enc.abox.emplace_back(ConceptAssertion{LeftConcept::plain(enc.typical(ca->left.term)), ca->individual});
    } else {
      enc.abox.push_back(a);
    }
  }
  return enc;
}

bool tr_entails(const KnowledgeBase& kb, const Query& q) {
  std::vector<Concept> extra;
  if (is_typicality_query(q)) {
    if (const auto* inc = std::get_if<Inclusion>(&q)) {
      extra.push_back(inc->left.term);
    } else {
      extra.push_back(std::get<ConceptAssertion>(std::get<Assertion>(q)).left.term);
    }
  }
  const EncodedKb enc = encode(kb, extra);
  std::vector<Assertion> abox = enc.abox;

  if (const auto* inc = std::get_if<Inclusion>(&q)) {
    Signature sig = signature(kb);
    extend_signature(q, sig);
    for (const auto& [c, n] : enc.box) sig.atoms.insert(n);
    const std::string x = fresh_name("x", sig);
    const Concept lhs = inc->left.typical ? enc.typical(inc->left.term) : inc->left.term;
    abox.emplace_back(ConceptAssertion{LeftConcept::plain(Concept::conj(lhs, Concept::negate(inc->right))), x});
    return !alc::abox_consistent(enc.tbox, abox);
  }
  const auto& a = std::get<Assertion>(q);
  if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
    const Concept c = ca->left.typical ? enc.typical(ca->left.term) : ca->left.term;
    abox.emplace_back(ConceptAssertion{LeftConcept::plain(Concept::negate(c)), ca->individual});
    return !alc::abox_consistent(enc.tbox, abox);
  }
  for (const auto& b : kb.abox) {
    if (b == a) return true;
  }
  return !alc::abox_consistent(enc.tbox, abox);
}

bool tr_consistent(const KnowledgeBase& kb) {
  const EncodedKb enc = encode(kb);
  return alc::abox_consistent(enc.tbox, enc.abox);
}

bool tr_satisfiable(const KnowledgeBase& kb, const Concept& c) {
  return !tr_entails(kb, Inclusion::strict(c, Concept::bottom()));
}

}  // namespace typdl::encoding
