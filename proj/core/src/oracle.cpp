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

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "typdl/deadline.hpp"
#include "typdl/encoding.hpp"
#include "typdl/models.hpp"

namespace typdl::models {

const char* verdict_name(CanonicalVerdict v) {
  switch (v) {
    case CanonicalVerdict::Entailed:
      return "entailed";
    case CanonicalVerdict::NotEntailed:
      return "not-entailed";
    case CanonicalVerdict::NoCanonicalModel:
      return "no-canonical-model";
  }
  return "no-canonical-model";
}

namespace {

constexpr int kNone = std::numeric_limits<int>::max();

// ── element types ──────────────────────────────────────────────────────────
// A type fixes the atoms and every existential subterm (R, E) at an element.
// Universal restrictions all R. D read the existential (R, ~D). All other
// concepts are evaluated from these bits.
class TypeSpace {
 public:
  TypeSpace(const KnowledgeBase& kb, const std::vector<Concept>& extra, const OracleOptions& opt) {
    Signature sig = signature(kb);
    std::vector<Concept> all;
    for (const auto& inc : kb.strict) all.insert(all.end(), {inc.left.term, inc.right});
    for (const auto& inc : kb.defeasible) all.insert(all.end(), {inc.left.term, inc.right});
    for (const auto& a : kb.abox) {
      if (const auto* ca = std::get_if<ConceptAssertion>(&a)) all.push_back(ca->left.term);
    }
    all.insert(all.end(), extra.begin(), extra.end());
    for (const auto& c : all) {
      collect_atoms(c, sig.atoms);
      collect_roles(c, sig.roles);
    }
    atoms_.assign(sig.atoms.begin(), sig.atoms.end());
    roles_.assign(sig.roles.begin(), sig.roles.end());
    for (const auto& c : all) discover(canonical_form(c));
    bits_ = static_cast<int>(atoms_.size() + exs_.size());
    if (bits_ > opt.max_type_bits) {
      throw OracleGuardError("oracle guard: " + std::to_string(bits_) + " type bits exceed the limit of " +
                             std::to_string(opt.max_type_bits));
    }
    for (std::size_t i = 0; i < exs_.size(); ++i) exs_[i].filler_node = compile(exs_[i].filler);
    for (const auto& c : all) compile(canonical_form(c));
  }

  int compile(const Concept& raw) {
    const Concept c = canonical_form(raw);
    if (auto it = node_index_.find(c); it != node_index_.end()) return it->second;
    Node n{c.kind(), -1, -1, -1, false};
    switch (c.kind()) {
      case ConceptKind::Atom:
        n.basic = atom_bit(c.name());
        break;
      case ConceptKind::Top:
      case ConceptKind::Bottom:
        break;
      case ConceptKind::Not:
        n.a = compile(c.child());
        break;
      case ConceptKind::And:
      case ConceptKind::Or:
        n.a = compile(c.left());
        n.b = compile(c.right());
        break;
      case ConceptKind::Exists:
        n.basic = ex_bit(c.name(), c.child());
        break;
      case ConceptKind::Forall:
        n.basic = ex_bit(c.name(), canonical_form(Concept::negate(c.child())));
        n.negated = true;
        break;
    }
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(n);
    node_index_.emplace(c, id);
    if (!types_.empty()) throw std::logic_error("concept compiled after type generation");
    return id;
  }

  /// All type bit patterns satisfying the strict axioms, then pruned to the
  /// ones whose existentials can be witnessed by surviving types.
  void generate(const std::vector<Inclusion>& strict) {
    std::vector<std::pair<int, int>> axioms;
    for (const auto& inc : strict) axioms.emplace_back(node(inc.left.term), node(inc.right));
    for (std::uint32_t t = 0; t < (std::uint32_t{1} << bits_); ++t) {
      std::vector<char> v = evaluate(t);
      bool ok = true;
      for (auto [l, r] : axioms) ok = ok && (!v[l] || v[r]);
      if (!ok) continue;
      types_.push_back(t);
      values_.push_back(std::move(v));
    }
    build_compat();
    std::vector<char> alive(types_.size(), 1);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < types_.size(); ++x) {
        if (!alive[x]) continue;
        for (std::size_t i = 0; i < exs_.size(); ++i) {
          if (!has_ex(x, i)) continue;
          bool found = false;
          for (std::size_t y = 0; y < types_.size() && !found; ++y) {
            found = alive[y] && witnesses(x, i, y);
          }
          if (!found) {
            alive[x] = 0;
            changed = true;
            break;
          }
        }
      }
    }
    std::vector<std::uint32_t> t2;
    std::vector<std::vector<char>> v2;
    for (std::size_t x = 0; x < types_.size(); ++x) {
      if (!alive[x]) continue;
      t2.push_back(types_[x]);
      v2.push_back(std::move(values_[x]));
    }
    types_ = std::move(t2);
    values_ = std::move(v2);
    build_compat();
  }

  int node(const Concept& c) const { return node_index_.at(canonical_form(c)); }
  std::size_t size() const { return types_.size(); }
  bool val(std::size_t type, int node) const { return values_[type][node] != 0; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<std::string>& roles() const { return roles_; }
  int role_index(const std::string& r) const {
    return static_cast<int>(std::lower_bound(roles_.begin(), roles_.end(), r) - roles_.begin());
  }
  std::size_t ex_count() const { return exs_.size(); }
  int ex_role(std::size_t i) const { return exs_[i].role; }
  bool has_ex(std::size_t type, std::size_t i) const { return (types_[type] >> (atoms_.size() + i)) & 1U; }
  bool atom_true(std::size_t type, std::size_t a) const { return (types_[type] >> a) & 1U; }

  /// y may be an r-successor of x: y respects x's universal restrictions.
  bool compatible(int r, std::size_t x, std::size_t y) const { return compat_[r][x * types_.size() + y] != 0; }

  /// y is a compatible successor of x that witnesses existential i.
  bool witnesses(std::size_t x, std::size_t i, std::size_t y) const {
    return compatible(exs_[i].role, x, y) && val(y, exs_[i].filler_node);
  }

 private:
  struct Ex {
    int role;
    Concept filler;
    int filler_node = -1;
  };
  struct Node {
    ConceptKind k;
    int a;
    int b;
    int basic;
    bool negated;
  };

  int atom_bit(const std::string& name) const {
    return static_cast<int>(std::lower_bound(atoms_.begin(), atoms_.end(), name) - atoms_.begin());
  }

  int ex_bit(const std::string& role, const Concept& filler) {
    auto key = std::make_pair(role, canonical_form(filler));
    auto it = ex_index_.find(key);
    if (it == ex_index_.end()) throw std::logic_error("undiscovered existential");
    return static_cast<int>(atoms_.size()) + it->second;
  }

  void discover(const Concept& c) {
    switch (c.kind()) {
      case ConceptKind::Not:
        discover(c.child());
        break;
      case ConceptKind::And:
      case ConceptKind::Or:
        discover(c.left());
        discover(c.right());
        break;
      case ConceptKind::Exists:
      case ConceptKind::Forall: {
        const Concept filler =
            c.is(ConceptKind::Exists) ? c.child() : canonical_form(Concept::negate(c.child()));
        discover(filler);
        auto key = std::make_pair(c.name(), filler);
        if (!ex_index_.count(key)) {
          ex_index_.emplace(key, static_cast<int>(exs_.size()));
          exs_.push_back({role_index(c.name()), filler});
        }
        break;
      }
      default:
        break;
    }
  }

  std::vector<char> evaluate(std::uint32_t t) const {
    std::vector<char> v(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Node& n = nodes_[i];
      switch (n.k) {
        case ConceptKind::Atom:
          v[i] = (t >> n.basic) & 1U;
          break;
        case ConceptKind::Top:
          v[i] = 1;
          break;
        case ConceptKind::Bottom:
          v[i] = 0;
          break;
        case ConceptKind::Not:
          v[i] = !v[n.a];
          break;
        case ConceptKind::And:
          v[i] = v[n.a] && v[n.b];
          break;
        case ConceptKind::Or:
          v[i] = v[n.a] || v[n.b];
          break;
        case ConceptKind::Exists:
        case ConceptKind::Forall: {
          const bool e = (t >> n.basic) & 1U;
          v[i] = n.negated ? !e : e;
          break;
        }
      }
    }
    return v;
  }

  void build_compat() {
    const std::size_t n = types_.size();
    compat_.assign(roles_.size(), std::vector<char>(n * n, 1));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < exs_.size(); ++i) {
        if (has_ex(x, i)) continue;
        // ~(some R. E) at x: no R-successor satisfies E.
        for (std::size_t y = 0; y < n; ++y) {
          if (val(y, exs_[i].filler_node)) compat_[exs_[i].role][x * n + y] = 0;
        }
      }
    }
  }

  std::vector<std::string> atoms_;
  std::vector<std::string> roles_;
  std::vector<Ex> exs_;
  std::map<std::pair<std::string, Concept>, int> ex_index_;
  std::vector<Node> nodes_;
  std::map<Concept, int> node_index_;
  int bits_ = 0;
  std::vector<std::uint32_t> types_;
  std::vector<std::vector<char>> values_;
  std::vector<std::vector<char>> compat_;
};

struct Element {
  int rank;
  std::size_t type;
};

/// A role edge excluded from the maximal relation (used to falsify role
/// assertion queries).
struct Removed {
  int role = -1;
  int from = -1;
  int to = -1;
};

// ── search over element sets ───────────────────────────────────────────────
class Search {
 public:
  Search(const KnowledgeBase& kb, const Query* q, const std::vector<Concept>& extra, const OracleOptions& opt)
      : kb_(kb), q_(q), space_(kb, extra, opt), bound_(opt.domain_bound) {
    if (opt.domain_bound < 1) throw OracleGuardError("oracle guard: domain bound must be positive");
    if (opt.domain_bound > opt.max_bound || opt.domain_bound > kMaxDomain) {
      throw OracleGuardError("oracle guard: domain bound " + std::to_string(opt.domain_bound) +
                             " exceeds the limit of " + std::to_string(opt.max_bound));
    }
    for (const auto& d : kb.defeasible) defaults_.emplace_back(space_.node(d.left.term), space_.node(d.right));
    Signature sig = signature(kb);
    if (q) extend_signature(*q, sig);
    individuals_.assign(sig.individuals.begin(), sig.individuals.end());
    space_.generate(kb.strict);
  }

  TypeSpace& space() { return space_; }
  const std::vector<std::string>& individuals() const { return individuals_; }

  /// Visits every element set (ranks gapless from 0, strictly increasing
  /// (rank, type) order) whose prefix satisfies all defaults. The visitor
  /// returns true to stop.
  template <typename Visit, typename Prune>
  bool run(Visit&& visit, Prune&& prune) {
    std::vector<Element> els;
    std::map<int, int> seen;  // concept node -> lowest rank with an instance
    return extend(els, seen, visit, prune);
  }

  int min_rank_of(const std::vector<Element>& els, int node) const {
    int best = kNone;
    for (const auto& e : els) {
      if (space_.val(e.type, node)) best = std::min(best, e.rank);
    }
    return best;
  }

  bool defaults_hold(const std::vector<Element>& els, const std::vector<int>& ranks) const {
    for (auto [c, d] : defaults_) {
      int best = kNone;
      for (std::size_t i = 0; i < els.size(); ++i) {
        if (space_.val(els[i].type, c)) best = std::min(best, ranks[i]);
      }
      for (std::size_t i = 0; i < els.size(); ++i) {
        if (space_.val(els[i].type, c) && ranks[i] == best && !space_.val(els[i].type, d)) return false;
      }
    }
    return true;
  }

  bool edge(const std::vector<Element>& els, int r, int x, int y, const Removed& rm) const {
    if (r == rm.role && x == rm.from && y == rm.to) return false;
    return space_.compatible(r, els[x].type, els[y].type);
  }

  bool witnessed(const std::vector<Element>& els, const Removed& rm) const {
    for (std::size_t x = 0; x < els.size(); ++x) {
      for (std::size_t i = 0; i < space_.ex_count(); ++i) {
        if (!space_.has_ex(els[x].type, i)) continue;
        bool found = false;
        for (std::size_t y = 0; y < els.size() && !found; ++y) {
          found = space_.witnesses(els[x].type, i, els[y].type) &&
                  !(space_.ex_role(i) == rm.role && static_cast<int>(x) == rm.from && static_cast<int>(y) == rm.to);
        }
        if (!found) return false;
      }
    }
    return true;
  }

  /// Truth of an assertion for a fixed individual map.
  bool holds(const std::vector<Element>& els, const std::vector<int>& ranks, const std::vector<int>& map,
             const Assertion& a, const Removed& rm) const {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      const int x = map[ind(ca->individual)];
      const int c = space_.node(ca->left.term);
      if (!space_.val(els[x].type, c)) return false;
      if (!ca->left.typical) return true;
      int best = kNone;
      for (std::size_t i = 0; i < els.size(); ++i) {
        if (space_.val(els[i].type, c)) best = std::min(best, ranks[i]);
      }
      return ranks[x] == best;
    }
    const auto& ra = std::get<RoleAssertion>(a);
    return edge(els, space_.role_index(ra.role), map[ind(ra.subject)], map[ind(ra.object)], rm);
  }

  bool abox_holds(const std::vector<Element>& els, const std::vector<int>& ranks, const std::vector<int>& map,
                  const Removed& rm) const {
    for (const auto& a : kb_.abox) {
      if (!holds(els, ranks, map, a, rm)) return false;
    }
    return true;
  }

  /// Query truth through the type valuation (inclusions and assertions).
  bool query_holds(const std::vector<Element>& els, const std::vector<int>& ranks, const std::vector<int>& map,
                   const Removed& rm) const {
    if (const auto* inc = std::get_if<Inclusion>(q_)) {
      const int c = space_.node(inc->left.term);
      const int d = space_.node(inc->right);
      int best = kNone;
      for (std::size_t i = 0; i < els.size(); ++i) {
        if (space_.val(els[i].type, c)) best = std::min(best, ranks[i]);
      }
      for (std::size_t i = 0; i < els.size(); ++i) {
        if (!space_.val(els[i].type, c) || space_.val(els[i].type, d)) continue;
        if (!inc->left.typical || ranks[i] == best) return false;
      }
      return true;
    }
    return holds(els, ranks, map, std::get<Assertion>(*q_), rm);
  }

  /// Calls f(map) for every individual map; stops when f returns true.
  template <typename F>
  bool each_map(std::size_t n, F&& f) const {
    std::vector<int> map(individuals_.size(), 0);
    while (true) {
      if (f(map)) return true;
      std::size_t i = 0;
      while (i < map.size() && ++map[i] == static_cast<int>(n)) map[i++] = 0;
      if (i == map.size()) return false;
    }
  }

  /// Least rank function making the defaults and the typicality
  /// assertions true, if any (admissible rankings are closed under
  /// pointwise minimum). Violations push elements up one step at a time;
  /// every admissible ranking stays above the current one.
  std::optional<std::vector<int>> least_ranking(const std::vector<Element>& els, const std::vector<int>& map) const {
    const int n = static_cast<int>(els.size());
    std::vector<int> r(els.size(), 0);
    auto lowest = [&](int c) {
      int best = kNone;
      for (int i = 0; i < n; ++i) {
        if (space_.val(els[i].type, c)) best = std::min(best, r[i]);
      }
      return best;
    };
    for (bool changed = true; changed;) {
      changed = false;
      for (auto [c, d] : defaults_) {
        const int best = lowest(c);
        for (int i = 0; i < n; ++i) {
          if (space_.val(els[i].type, c) && r[i] == best && !space_.val(els[i].type, d)) {
            ++r[i];
            changed = true;
          }
        }
      }
      for (const auto& a : kb_.abox) {
        const auto* ca = std::get_if<ConceptAssertion>(&a);
        if (!ca || !ca->left.typical) continue;
        const int c = space_.node(ca->left.term);
        const int x = map[ind(ca->individual)];
        if (!space_.val(els[x].type, c)) return std::nullopt;
        for (int i = 0; i < n; ++i) {
          if (space_.val(els[i].type, c) && r[i] < r[x]) {
            r[i] = r[x];
            changed = true;
          }
        }
      }
      if (std::any_of(r.begin(), r.end(), [&](int v) { return v >= n; })) return std::nullopt;
    }
    return r;
  }

  RankedInterpretation materialize(const std::vector<Element>& els, const std::vector<int>& ranks,
                                   const std::vector<int>& map, const Removed& rm) const {
    RankedInterpretation m;
    m.size = static_cast<int>(els.size());
    m.rank = ranks;
    for (std::size_t a = 0; a < space_.atoms().size(); ++a) {
      Mask ext = 0;
      for (std::size_t x = 0; x < els.size(); ++x) {
        if (space_.atom_true(els[x].type, a)) ext |= Mask{1} << x;
      }
      m.atoms[space_.atoms()[a]] = ext;
    }
    for (std::size_t r = 0; r < space_.roles().size(); ++r) {
      std::vector<Mask> succ(els.size(), 0);
      for (std::size_t x = 0; x < els.size(); ++x) {
        for (std::size_t y = 0; y < els.size(); ++y) {
          if (edge(els, static_cast<int>(r), static_cast<int>(x), static_cast<int>(y), rm)) succ[x] |= Mask{1} << y;
        }
      }
      m.roles[space_.roles()[r]] = std::move(succ);
    }
    for (std::size_t i = 0; i < individuals_.size(); ++i) m.individuals[individuals_[i]] = map[i];
    return m;
  }

  static std::vector<int> ranks_of(const std::vector<Element>& els) {
    std::vector<int> r;
    for (const auto& e : els) r.push_back(e.rank);
    return r;
  }

  int ind(const std::string& name) const {
    return static_cast<int>(std::lower_bound(individuals_.begin(), individuals_.end(), name) - individuals_.begin());
  }

 private:
  template <typename Visit, typename Prune>
  bool extend(std::vector<Element>& els, std::map<int, int>& seen, Visit& visit, Prune& prune) {
    check_deadline();
    if (!els.empty() && visit(els)) return true;
    if (static_cast<int>(els.size()) == bound_ || prune(els)) return false;
    const int last_rank = els.empty() ? 0 : els.back().rank;
    for (int r = last_rank; r <= (els.empty() ? 0 : last_rank + 1); ++r) {
      const std::size_t from = (!els.empty() && r == last_rank) ? els.back().type + 1 : 0;
      for (std::size_t t = from; t < space_.size(); ++t) {
        if (!prefix_ok(seen, r, t)) continue;
        std::vector<int> fresh;
        for (auto [c, d] : defaults_) {
          if (space_.val(t, c) && !seen.count(c)) {
            seen.emplace(c, r);
            fresh.push_back(c);
          }
        }
        els.push_back({r, t});
        const bool stop = extend(els, seen, visit, prune);
        els.pop_back();
        for (int c : fresh) seen.erase(c);
        if (stop) return true;
      }
    }
    return false;
  }

  /// Adding type t at rank r keeps every default satisfied: if t is among
  /// the lowest-ranked instances of a default's antecedent, it must satisfy
  /// the consequent. Elements arrive in rank order, so lower ranks are final.
  bool prefix_ok(const std::map<int, int>& seen, int r, std::size_t t) const {
    for (auto [c, d] : defaults_) {
      if (!space_.val(t, c) || space_.val(t, d)) continue;
      auto it = seen.find(c);
      if (it == seen.end() || it->second == r) return false;
    }
    return true;
  }

  const KnowledgeBase& kb_;
  const Query* q_;
  TypeSpace space_;
  int bound_;
  std::vector<std::pair<int, int>> defaults_;
  std::vector<std::string> individuals_;
};

std::vector<Concept> query_concepts(const Query& q) {
  if (const auto* inc = std::get_if<Inclusion>(&q)) return {inc->left.term, inc->right};
  if (const auto* ca = std::get_if<ConceptAssertion>(&std::get<Assertion>(q))) return {ca->left.term};
  return {};
}

Removed removal_for(Search& s, const Query& q, const std::vector<int>& map) {
  Removed rm;
  if (const auto* a = std::get_if<Assertion>(&q)) {
    if (const auto* ra = std::get_if<RoleAssertion>(a)) {
      rm.role = s.space().role_index(ra->role);
      rm.from = map[s.ind(ra->subject)];
      rm.to = map[s.ind(ra->object)];
    }
  }
  return rm;
}

void check_countermodel(const RankedInterpretation& m, const KnowledgeBase& kb, const Query& q) {
  if (!satisfies(m, kb) || satisfies_query(m, q)) {
    throw std::logic_error("oracle produced an invalid countermodel:\n" + to_table(m));
  }
}

}  // namespace

OracleResult oracle_entails(const KnowledgeBase& kb, const Query& q, const OracleOptions& opt) {
  Search s(kb, &q, query_concepts(q), opt);
  OracleResult res;
  s.run(
      [&](const std::vector<Element>& els) {
        ++res.candidates;
        const std::vector<int> ranks = Search::ranks_of(els);
        return s.each_map(els.size(), [&](const std::vector<int>& map) {
          const Removed rm = removal_for(s, q, map);
          if (!s.witnessed(els, rm) || !s.abox_holds(els, ranks, map, rm)) return false;
          if (s.query_holds(els, ranks, map, rm)) return false;
          RankedInterpretation m = s.materialize(els, ranks, map, rm);
          check_countermodel(m, kb, q);
          res.entailed = false;
          res.countermodel = std::move(m);
          return true;
        });
      },
      [](const std::vector<Element>&) { return false; });
  return res;
}

std::vector<Concept> relevant_concepts(const KnowledgeBase& kb, const Query& q) {
  std::set<Concept> out;
  auto add = [&](const Concept& c) {
    const Concept k = canonical_form(c);
    out.insert(k);
    out.insert(canonical_form(Concept::negate(k)));
  };
  for (const auto& inc : kb.strict) {
    add(inc.left.term);
    add(inc.right);
  }
  for (const auto& inc : kb.defeasible) {
    add(inc.left.term);
    add(inc.right);
  }
  for (const auto& a : kb.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) add(ca->left.term);
  }
  for (const auto& c : query_concepts(q)) add(c);
  return {out.begin(), out.end()};
}

CanonicalResult oracle_min_canonical_entails(const KnowledgeBase& kb, const Query& q, const OracleOptions& opt) {
  CanonicalResult res;
  const KnowledgeBase plain = strip_probabilities(kb);

  // One representative per complementary pair.
  std::vector<Concept> reps;
  for (const auto& c : relevant_concepts(plain, q)) {
    if (c.is(ConceptKind::Not) || c.is(ConceptKind::Bottom)) continue;
    reps.push_back(c);
  }
  std::vector<Concept> extra = query_concepts(q);
  extra.insert(extra.end(), reps.begin(), reps.end());
  Search s(plain, &q, extra, opt);

  // Combinations of the representatives consistent with the KB.
  std::set<std::vector<char>> required;
  std::vector<char> choice;
  std::vector<Concept> parts;
  auto explore = [&](auto&& self) -> void {
    check_deadline();
    if (!encoding::tr_satisfiable(plain, make_conjunction(parts))) return;
    if (choice.size() == reps.size()) {
      required.insert(choice);
      return;
    }
    const Concept& c = reps[choice.size()];
    for (char v : {1, 0}) {
      choice.push_back(v);
      parts.push_back(v ? c : Concept::negate(c));
      self(self);
      parts.pop_back();
      choice.pop_back();
    }
  };
  explore(explore);
  res.required_types = required.size();
  if (required.empty() || static_cast<int>(required.size()) > opt.domain_bound) return res;

  std::vector<int> rep_nodes;
  for (const auto& c : reps) rep_nodes.push_back(s.space().node(c));
  auto projection = [&](std::size_t type) {
    std::vector<char> p;
    for (int n : rep_nodes) p.push_back(s.space().val(type, n) ? 1 : 0);
    return p;
  };
  auto uncovered = [&](const std::vector<Element>& els) {
    std::set<std::vector<char>> have;
    for (const auto& e : els) have.insert(projection(e.type));
    std::size_t missing = 0;
    for (const auto& r : required) missing += have.count(r) ? 0 : 1;
    return missing;
  };

  struct Survivor {
    std::vector<Element> els;
    std::vector<int> map;
    std::vector<int> ind_ranks;
  };
  std::vector<Survivor> minimal;
  const Removed none;

  // Element sets in type order; the ranking of each is the least
  // admissible one, which is the only rank-minimal candidate.
  std::vector<Element> els;
  auto visit = [&]() {
    if (uncovered(els) != 0 || !s.witnessed(els, none)) return;
    s.each_map(els.size(), [&](const std::vector<int>& map) {
      std::optional<std::vector<int>> ranks = s.least_ranking(els, map);
      if (!ranks) return false;
      std::vector<Element> ranked = els;
      for (std::size_t i = 0; i < ranked.size(); ++i) ranked[i].rank = (*ranks)[i];
      if (!s.abox_holds(ranked, *ranks, map, none)) return false;
      ++res.canonical_models;
      std::vector<int> ir;
      for (int x : map) ir.push_back((*ranks)[x]);
      minimal.push_back({std::move(ranked), map, std::move(ir)});
      return false;
    });
  };
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    check_deadline();
    if (!els.empty()) visit();
    const int room = opt.domain_bound - static_cast<int>(els.size());
    if (room == 0 || static_cast<int>(uncovered(els)) > room) return;
    for (std::size_t t = from; t < s.space().size(); ++t) {
      els.push_back({0, t});
      self(self, t + 1);
      els.pop_back();
    }
  };
  dfs(dfs, 0);
  res.minimal_models = minimal.size();
  if (minimal.empty()) return res;

  auto below = [](const std::vector<int>& a, const std::vector<int>& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return false;
      strict = strict || a[i] < b[i];
    }
    return strict;
  };
  res.verdict = CanonicalVerdict::Entailed;
  for (const auto& m : minimal) {
    bool dominated = false;
    for (const auto& o : minimal) dominated = dominated || below(o.ind_ranks, m.ind_ranks);
    if (dominated) continue;
    const std::vector<int> ranks = Search::ranks_of(m.els);
    const Removed rm = removal_for(s, q, m.map);
    if (s.query_holds(m.els, ranks, m.map, rm)) continue;
    // Role queries: the maximal relation has the edge unless the KB allows
    // dropping it.
    if (rm.role >= 0 && (!s.witnessed(m.els, rm) || !s.abox_holds(m.els, ranks, m.map, rm))) continue;
    RankedInterpretation cm = s.materialize(m.els, ranks, m.map, rm);
    check_countermodel(cm, plain, q);
    res.verdict = CanonicalVerdict::NotEntailed;
    res.countermodel = std::move(cm);
    break;
  }
  return res;
}

}  // namespace typdl::models
