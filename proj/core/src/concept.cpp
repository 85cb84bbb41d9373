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

#include "typdl/concept.hpp"

#include <algorithm>
#include <utility>

namespace typdl {

struct Concept::Node {
  ConceptKind kind;
  std::string name;
  std::vector<Concept> children;
  std::size_t hash;
  std::size_t size;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Concept::Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Concept::Concept() : Concept(top()) {}

Concept Concept::make(ConceptKind kind, std::string name, std::vector<Concept> children) {
  auto n = std::make_shared<Node>();
  std::size_t h = mix(static_cast<std::size_t>(kind) + 1, std::hash<std::string>{}(name));
  std::size_t s = 1;
  for (const auto& ch : children) {
    h = mix(h, ch.hash());
    s += ch.size();
  }
  n->kind = kind;
  n->name = std::move(name);
  n->children = std::move(children);
  n->hash = h;
  n->size = s;
  return Concept(std::shared_ptr<const Node>(std::move(n)));
}

Concept Concept::atom(std::string name) { return make(ConceptKind::Atom, std::move(name), {}); }

Concept Concept::top() {
  static const Concept t = make(ConceptKind::Top, std::string(), {});
  return t;
}

Concept Concept::bottom() {
  static const Concept b = make(ConceptKind::Bottom, std::string(), {});
  return b;
}

Concept Concept::negate(Concept c) { return make(ConceptKind::Not, std::string(), {std::move(c)}); }

Concept Concept::conj(Concept l, Concept r) {
  return make(ConceptKind::And, std::string(), {std::move(l), std::move(r)});
}

Concept Concept::disj(Concept l, Concept r) {
  return make(ConceptKind::Or, std::string(), {std::move(l), std::move(r)});
}

Concept Concept::exists(std::string role, Concept c) {
  return make(ConceptKind::Exists, std::move(role), {std::move(c)});
}

Concept Concept::forall(std::string role, Concept c) {
  return make(ConceptKind::Forall, std::move(role), {std::move(c)});
}

ConceptKind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
const Concept& Concept::child() const { return node_->children.at(0); }
const Concept& Concept::left() const { return node_->children.at(0); }
const Concept& Concept::right() const { return node_->children.at(1); }
std::size_t Concept::hash() const { return node_->hash; }
std::size_t Concept::size() const { return node_->size; }

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  const auto& ac = a.node_->children;
  const auto& bc = b.node_->children;
  for (std::size_t i = 0; i < ac.size() && i < bc.size(); ++i) {
    if (auto c = ac[i] <=> bc[i]; c != 0) return c;
  }
  return ac.size() <=> bc.size();
}

namespace {

bool is_unary_like(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::And:
    case ConceptKind::Or:
      return false;
    default:
      return true;
  }
}

void write(const Concept& c, std::string& out) {
  switch (c.kind()) {
    case ConceptKind::Atom:
      out += c.name();
      return;
    case ConceptKind::Top:
      out += "Top";
      return;
    case ConceptKind::Bottom:
      out += "Bot";
      return;
    case ConceptKind::Not:
      out += '~';
      if (is_unary_like(c.child())) {
        write(c.child(), out);
      } else {
        out += '(';
        write(c.child(), out);
        out += ')';
      }
      return;
    case ConceptKind::And: {
      const bool lp = c.left().is(ConceptKind::Or);
      const bool rp = !is_unary_like(c.right());
      if (lp) out += '(';
      write(c.left(), out);
      if (lp) out += ')';
      out += " & ";
      if (rp) out += '(';
      write(c.right(), out);
      if (rp) out += ')';
      return;
    }
    case ConceptKind::Or: {
      const bool rp = c.right().is(ConceptKind::Or);
      write(c.left(), out);
      out += " | ";
      if (rp) out += '(';
      write(c.right(), out);
      if (rp) out += ')';
      return;
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      out += c.is(ConceptKind::Exists) ? "some " : "all ";
      out += c.name();
      out += ". ";
      if (is_unary_like(c.child())) {
        write(c.child(), out);
      } else {
        out += '(';
        write(c.child(), out);
        out += ')';
      }
      return;
  }
}

void flatten(const Concept& c, ConceptKind k, std::vector<Concept>& out) {
  if (c.kind() == k) {
    flatten(c.left(), k, out);
    flatten(c.right(), k, out);
  } else {
    out.push_back(c);
  }
}

Concept chain(const std::vector<Concept>& parts, ConceptKind k) {
  Concept acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = k == ConceptKind::And ? Concept::conj(acc, parts[i]) : Concept::disj(acc, parts[i]);
  }
  return acc;
}

Concept canonical_junction(const Concept& c) {
  const ConceptKind k = c.kind();
  const ConceptKind unit = k == ConceptKind::And ? ConceptKind::Top : ConceptKind::Bottom;
  const ConceptKind zero = k == ConceptKind::And ? ConceptKind::Bottom : ConceptKind::Top;
  std::vector<Concept> raw;
  flatten(c, k, raw);
  std::vector<Concept> parts;
  for (const auto& r : raw) {
    // canonical children may themselves be junctions of the same kind
    flatten(canonical_form(r), k, parts);
  }
  std::vector<Concept> kept;
  for (auto& p : parts) {
    if (p.is(zero)) return p;
    if (!p.is(unit)) kept.push_back(std::move(p));
  }
  if (kept.empty()) return k == ConceptKind::And ? Concept::top() : Concept::bottom();
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return chain(kept, k);
}

}  // namespace

std::string to_string(const Concept& c) {
  std::string out;
  write(c, out);
  return out;
}

Concept canonical_form(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atom:
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return c;
    case ConceptKind::Not: {
      Concept inner = canonical_form(c.child());
      if (inner.is(ConceptKind::Not)) return inner.child();
      if (inner.is(ConceptKind::Top)) return Concept::bottom();
      if (inner.is(ConceptKind::Bottom)) return Concept::top();
      return Concept::negate(std::move(inner));
    }
    case ConceptKind::And:
    case ConceptKind::Or:
      return canonical_junction(c);
    case ConceptKind::Exists:
      return Concept::exists(c.name(), canonical_form(c.child()));
    case ConceptKind::Forall:
      return Concept::forall(c.name(), canonical_form(c.child()));
  }
  return c;
}

Concept make_conjunction(const std::vector<Concept>& parts) {
  if (parts.empty()) return Concept::top();
  return chain(parts, ConceptKind::And);
}

Concept make_disjunction(const std::vector<Concept>& parts) {
  if (parts.empty()) return Concept::bottom();
  return chain(parts, ConceptKind::Or);
}

void collect_atoms(const Concept& c, std::set<std::string>& out) {
  switch (c.kind()) {
    case ConceptKind::Atom:
      out.insert(c.name());
      return;
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return;
    case ConceptKind::Not:
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      collect_atoms(c.child(), out);
      return;
    case ConceptKind::And:
    case ConceptKind::Or:
      collect_atoms(c.left(), out);
      collect_atoms(c.right(), out);
      return;
  }
}

void collect_roles(const Concept& c, std::set<std::string>& out) {
  switch (c.kind()) {
    case ConceptKind::Atom:
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return;
    case ConceptKind::Not:
      collect_roles(c.child(), out);
      return;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      out.insert(c.name());
      collect_roles(c.child(), out);
      return;
    case ConceptKind::And:
    case ConceptKind::Or:
      collect_roles(c.left(), out);
      collect_roles(c.right(), out);
      return;
  }
}

void collect_subconcepts(const Concept& c, std::set<Concept>& out) {
  if (!out.insert(c).second) return;
  switch (c.kind()) {
    case ConceptKind::Not:
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      collect_subconcepts(c.child(), out);
      return;
    case ConceptKind::And:
    case ConceptKind::Or:
      collect_subconcepts(c.left(), out);
      collect_subconcepts(c.right(), out);
      return;
    default:
      return;
  }
}

int role_depth(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Not:
      return role_depth(c.child());
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      return 1 + role_depth(c.child());
    case ConceptKind::And:
    case ConceptKind::Or:
      return std::max(role_depth(c.left()), role_depth(c.right()));
    default:
      return 0;
  }
}

}  // namespace typdl
