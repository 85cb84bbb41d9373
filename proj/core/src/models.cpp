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

#include "typdl/models.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace typdl::models {

namespace {

Mask bit(int x) { return Mask{1} << x; }

std::string mask_string(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < kMaxDomain; ++x) {
    if (!(s & bit(x))) continue;
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

const std::vector<Mask>& successors(const RankedInterpretation& m, const std::string& role) {
  auto it = m.roles.find(role);
  if (it == m.roles.end()) throw ModelError("unknown role: " + role);
  return it->second;
}

}  // namespace

bool RankedInterpretation::has_edge(const std::string& role, int x, int y) const {
  return (successors(*this, role)[x] & bit(y)) != 0;
}

void RankedInterpretation::validate() const {
  if (size < 0 || size > kMaxDomain) throw ModelError("domain size out of range");
  if (static_cast<int>(rank.size()) != size) throw ModelError("rank vector does not match the domain");
  for (int r : rank) {
    if (r < 0) throw ModelError("negative rank");
  }
  for (const auto& [name, ext] : atoms) {
    if (ext & ~domain()) throw ModelError("atom extension outside the domain: " + name);
  }
  for (const auto& [name, succ] : roles) {
    if (static_cast<int>(succ.size()) != size) throw ModelError("role table does not match the domain: " + name);
    for (Mask s : succ) {
      if (s & ~domain()) throw ModelError("role edge outside the domain: " + name);
    }
  }
  for (const auto& [name, x] : individuals) {
    if (x < 0 || x >= size) throw ModelError("individual mapped outside the domain: " + name);
  }
}

Mask extension(const RankedInterpretation& m, const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atom: {
      auto it = m.atoms.find(c.name());
      if (it == m.atoms.end()) throw ModelError("unknown atom: " + c.name());
      return it->second;
    }
    case ConceptKind::Top:
      return m.domain();
    case ConceptKind::Bottom:
      return 0;
    case ConceptKind::Not:
      return m.domain() & ~extension(m, c.child());
    case ConceptKind::And:
      return extension(m, c.left()) & extension(m, c.right());
    case ConceptKind::Or:
      return extension(m, c.left()) | extension(m, c.right());
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      const auto& succ = successors(m, c.name());
      const Mask inner = extension(m, c.child());
      Mask out = 0;
      for (int x = 0; x < m.size; ++x) {
        const bool holds = c.is(ConceptKind::Exists) ? (succ[x] & inner) != 0 : (succ[x] & ~inner) == 0;
        if (holds) out |= bit(x);
      }
      return out;
    }
  }
  return 0;
}

Mask min_rank(const RankedInterpretation& m, Mask s) {
  int best = -1;
  for (int x = 0; x < m.size; ++x) {
    if ((s & bit(x)) && (best < 0 || m.rank[x] < best)) best = m.rank[x];
  }
  Mask out = 0;
  for (int x = 0; x < m.size; ++x) {
    if ((s & bit(x)) && m.rank[x] == best) out |= bit(x);
  }
  return out;
}

Mask typical_set(const RankedInterpretation& m, const Concept& c) { return min_rank(m, extension(m, c)); }

int longest_chain(const RankedInterpretation& m, int x) {
  // Elements in increasing rank order, so every y < x is settled first.
  std::vector<int> order(m.size);
  for (int i = 0; i < m.size; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return m.rank[a] < m.rank[b]; });
  std::vector<int> len(m.size, 0);
  for (int a : order) {
    for (int b = 0; b < m.size; ++b) {
      if (m.less(b, a)) len[a] = std::max(len[a], len[b] + 1);
    }
  }
  return len[x];
}

std::size_t PostulateReport::count(int postulate) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [&](const auto& v) { return v.postulate == postulate; }));
}

std::vector<Mask> all_subsets(const RankedInterpretation& m) {
  if (m.size > 16) throw ModelError("domain too large for subset enumeration");
  std::vector<Mask> out;
  for (Mask s = 0; s <= m.domain(); ++s) out.push_back(s);
  return out;
}

PostulateReport check_postulates(const RankedInterpretation& m, const std::vector<Mask>& family, const Selector& sel) {
  const Selector f = sel ? sel : Selector([](const RankedInterpretation& mm, Mask s) { return min_rank(mm, s); });
  PostulateReport rep;
  auto fail = [&](int p, Mask s, Mask r, std::string detail) { rep.violations.push_back({p, s, r, std::move(detail)}); };
  auto sub = [](Mask a, Mask b) { return (a & ~b) == 0; };

  for (Mask s : family) {
    const Mask fs = f(m, s);
    ++rep.instances[0];
    if (!sub(fs, s)) fail(1, s, 0, "f(S) = " + mask_string(fs) + " is not within S = " + mask_string(s));
    ++rep.instances[1];
    if (s != 0 && fs == 0) fail(2, s, 0, "S = " + mask_string(s) + " nonempty but f(S) empty");
    for (Mask r : family) {
      const Mask fsr = f(m, s & r);
      ++rep.instances[2];
      if (sub(fs, r) && fs != fsr) {
        fail(3, s, r, "f(S) within R but f(S & R) = " + mask_string(fsr) + " differs from f(S) = " + mask_string(fs));
      }
      ++rep.instances[5];
      if ((fs & r) != 0 && !sub(fsr, fs)) {
        fail(6, s, r, "f(S) meets R but f(S & R) = " + mask_string(fsr) + " is not within f(S) = " + mask_string(fs));
      }
      // Pairs for the union postulates, S as S1 and R as S2.
      const Mask fu = f(m, s | r);
      ++rep.instances[3];
      if (!sub(fu, fs | f(m, r))) fail(4, s, r, "f(S1 | S2) = " + mask_string(fu) + " not within f(S1) | f(S2)");
      ++rep.instances[4];
      if (!sub(fs & f(m, r), fu)) fail(5, s, r, "f(S1) & f(S2) not within f(S1 | S2) = " + mask_string(fu));
    }
  }
  return rep;
}

bool satisfies(const RankedInterpretation& m, const Inclusion& inc) {
  const Mask lhs = inc.left.typical ? typical_set(m, inc.left.term) : extension(m, inc.left.term);
  return (lhs & ~extension(m, inc.right)) == 0;
}

bool satisfies(const RankedInterpretation& m, const Assertion& a) {
  if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
    auto it = m.individuals.find(ca->individual);
    if (it == m.individuals.end()) throw ModelError("unmapped individual: " + ca->individual);
    const Mask ext = ca->left.typical ? typical_set(m, ca->left.term) : extension(m, ca->left.term);
    return (ext & bit(it->second)) != 0;
  }
  const auto& ra = std::get<RoleAssertion>(a);
  auto s = m.individuals.find(ra.subject);
  auto o = m.individuals.find(ra.object);
  if (s == m.individuals.end()) throw ModelError("unmapped individual: " + ra.subject);
  if (o == m.individuals.end()) throw ModelError("unmapped individual: " + ra.object);
  return m.has_edge(ra.role, s->second, o->second);
}

bool satisfies(const RankedInterpretation& m, const KnowledgeBase& kb) {
  for (const auto& inc : kb.strict) {
    if (!satisfies(m, inc)) return false;
  }
  for (const auto& inc : kb.defeasible) {
    if (!satisfies(m, inc)) return false;
  }
  for (const auto& a : kb.abox) {
    if (!satisfies(m, a)) return false;
  }
  return true;
}

bool satisfies_query(const RankedInterpretation& m, const Query& q) {
  if (const auto* inc = std::get_if<Inclusion>(&q)) return satisfies(m, *inc);
  return satisfies(m, std::get<Assertion>(q));
}

std::string to_table(const RankedInterpretation& m) {
  std::ostringstream out;
  out << "element  rank  atoms  edges\n";
  for (int x = 0; x < m.size; ++x) {
    out << "e" << x << "  " << m.rank[x] << "  {";
    bool first = true;
    for (const auto& [name, ext] : m.atoms) {
      if (!(ext & bit(x))) continue;
      out << (first ? "" : ", ") << name;
      first = false;
    }
    out << "}  {";
    first = true;
    for (const auto& [role, succ] : m.roles) {
      for (int y = 0; y < m.size; ++y) {
        if (!(succ[x] & bit(y))) continue;
        out << (first ? "" : ", ") << role << "->e" << y;
        first = false;
      }
    }
    out << "}\n";
  }
  for (const auto& [name, x] : m.individuals) out << name << " = e" << x << "\n";
  return out.str();
}

}  // namespace typdl::models
