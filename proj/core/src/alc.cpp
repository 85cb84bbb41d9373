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

#include "typdl/alc.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <list>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>

#include "typdl/deadline.hpp"

namespace typdl::alc {

Concept nnf(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atom:
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return c;
    case ConceptKind::And:
      return Concept::conj(nnf(c.left()), nnf(c.right()));
    case ConceptKind::Or:
      return Concept::disj(nnf(c.left()), nnf(c.right()));
    case ConceptKind::Exists:
      return Concept::exists(c.name(), nnf(c.child()));
    case ConceptKind::Forall:
      return Concept::forall(c.name(), nnf(c.child()));
    case ConceptKind::Not:
      break;
  }
  const Concept& d = c.child();
  switch (d.kind()) {
    case ConceptKind::Atom:
      return c;
    case ConceptKind::Top:
      return Concept::bottom();
    case ConceptKind::Bottom:
      return Concept::top();
    case ConceptKind::Not:
      return nnf(d.child());
    case ConceptKind::And:
      return Concept::disj(nnf(Concept::negate(d.left())), nnf(Concept::negate(d.right())));
    case ConceptKind::Or:
      return Concept::conj(nnf(Concept::negate(d.left())), nnf(Concept::negate(d.right())));
    case ConceptKind::Exists:
      return Concept::forall(d.name(), nnf(Concept::negate(d.child())));
    case ConceptKind::Forall:
      return Concept::exists(d.name(), nnf(Concept::negate(d.child())));
  }
  return c;
}

namespace {

enum class K : std::uint8_t { Top, Bot, Pos, Neg, And, Or, Ex, All };

struct Term {
  K k;
  int sym;  // atom or role id
  std::vector<int> kids;
};

using Label = std::vector<int>;  // sorted concept ids

constexpr int kNoBlock = std::numeric_limits<int>::max();

}  // namespace

struct Reasoner::Impl {
  // ── interning ──
  std::vector<Term> terms;
  std::vector<int> neg_of;
  std::map<std::tuple<int, int, std::vector<int>>, int> index;
  std::map<std::string, int> atoms;
  std::map<std::string, int> roles;

  // ── TBox ──
  std::vector<int> gcis;                           // added to every node
  std::map<int, std::vector<int>> absorbed;        // atom id -> consequences
  std::string fp;

  // ── caches ──
  std::set<Label> unsat_cache;
  std::set<Label> sat_cache;
  Stats stats;

  int top_id = -1;
  int bot_id = -1;

  int sym(std::map<std::string, int>& tab, const std::string& name) {
    auto [it, fresh] = tab.emplace(name, static_cast<int>(tab.size()));
    return it->second;
  }

  int raw(K k, int s, std::vector<int> kids) {
    auto key = std::make_tuple(static_cast<int>(k), s, kids);
    if (auto it = index.find(key); it != index.end()) return it->second;
    int id = static_cast<int>(terms.size());
    terms.push_back({k, s, std::move(kids)});
    neg_of.push_back(-1);
    index.emplace(std::move(key), id);
    return id;
  }

  int junction(K k, std::vector<int> parts) {
    const int unit = k == K::And ? top_id : bot_id;
    const int zero = k == K::And ? bot_id : top_id;
    std::vector<int> flat;
    for (int p : parts) {
      if (terms[p].k == k) {
        flat.insert(flat.end(), terms[p].kids.begin(), terms[p].kids.end());
      } else {
        flat.push_back(p);
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    std::erase(flat, unit);
    if (std::binary_search(flat.begin(), flat.end(), zero)) return zero;
    if (flat.empty()) return unit;
    if (flat.size() == 1) return flat.front();
    return raw(k, -1, std::move(flat));
  }

  int intern(const Concept& c, bool positive) {
    switch (c.kind()) {
      case ConceptKind::Top:
        return positive ? top_id : bot_id;
      case ConceptKind::Bottom:
        return positive ? bot_id : top_id;
      case ConceptKind::Atom:
        return raw(positive ? K::Pos : K::Neg, sym(atoms, c.name()), {});
      case ConceptKind::Not:
        return intern(c.child(), !positive);
      case ConceptKind::And:
      case ConceptKind::Or: {
        const bool is_and = c.is(ConceptKind::And) == positive;
        return junction(is_and ? K::And : K::Or, {intern(c.left(), positive), intern(c.right(), positive)});
      }
      case ConceptKind::Exists:
      case ConceptKind::Forall: {
        const bool is_ex = c.is(ConceptKind::Exists) == positive;
        return raw(is_ex ? K::Ex : K::All, sym(roles, c.name()), {intern(c.child(), positive)});
      }
    }
    return top_id;
  }

  int negation(int id) {
    if (neg_of[id] >= 0) return neg_of[id];
    const Term t = terms[id];
    int n = -1;
    switch (t.k) {
      case K::Top:
        n = bot_id;
        break;
      case K::Bot:
        n = top_id;
        break;
      case K::Pos:
        n = raw(K::Neg, t.sym, {});
        break;
      case K::Neg:
        n = raw(K::Pos, t.sym, {});
        break;
      case K::And:
      case K::Or: {
        std::vector<int> ks;
        for (int kid : t.kids) ks.push_back(negation(kid));
        n = junction(t.k == K::And ? K::Or : K::And, std::move(ks));
        break;
      }
      case K::Ex:
        n = raw(K::All, t.sym, {negation(t.kids[0])});
        break;
      case K::All:
        n = raw(K::Ex, t.sym, {negation(t.kids[0])});
        break;
    }
    neg_of[id] = n;
    neg_of[n] = id;
    return n;
  }

  /// Every term gets its negation interned so that the search never grows
  /// the pool (node bitmaps are sized once per query).
  void close_negations() {
    for (std::size_t i = 0; i < terms.size(); ++i) negation(static_cast<int>(i));
  }

  // ── completion graph for one search level ──
  struct Graph {
    std::size_t width = 0;
    std::vector<std::vector<std::uint8_t>> in;
    std::vector<std::vector<int>> items;
    std::vector<std::tuple<int, int, int>> edges;  // role, from, to
    std::vector<std::pair<int, int>> trail;        // node, concept
    std::size_t qhead = 0;
    bool clash = false;

    int add_node() {
      in.emplace_back(width, 0);
      items.emplace_back();
      return static_cast<int>(in.size()) - 1;
    }
  };

  bool add(Graph& g, int x, int c) {
    if (g.in[x][c]) return true;
    const Term& t = terms[c];
    if (t.k == K::Bot) return false;
    if ((t.k == K::Pos || t.k == K::Neg) && g.in[x][neg_of[c]]) return false;
    g.in[x][c] = 1;
    g.items[x].push_back(c);
    g.trail.emplace_back(x, c);
    return true;
  }

  void undo(Graph& g, std::size_t mark) {
    while (g.trail.size() > mark) {
      auto [x, c] = g.trail.back();
      g.trail.pop_back();
      g.in[x][c] = 0;
      g.items[x].pop_back();
    }
    g.qhead = std::min(g.qhead, mark);
  }

  /// Deterministic rules: and-rule, universal propagation along graph
  /// edges, absorbed atomic inclusions. False on clash.
  bool propagate(Graph& g) {
    while (g.qhead < g.trail.size()) {
      auto [x, c] = g.trail[g.qhead++];
      const Term& t = terms[c];
      switch (t.k) {
        case K::And:
          for (int kid : t.kids) {
            if (!add(g, x, kid)) return false;
          }
          break;
        case K::All:
          for (const auto& [r, from, to] : g.edges) {
            if (from == x && r == t.sym && !add(g, to, t.kids[0])) return false;
          }
          break;
        case K::Pos:
          if (auto it = absorbed.find(t.sym); it != absorbed.end()) {
            for (int d : it->second) {
              if (!add(g, x, d)) return false;
            }
          }
          break;
        default:
          break;
      }
    }
    return true;
  }

  struct Ancestors {
    std::vector<const std::vector<std::uint8_t>*> labels;
  };

  /// Result of a successor check: satisfiable, plus the shallowest
  /// ancestor depth a blocking step inside the subtree relied on.
  struct Outcome {
    bool sat;
    int min_block;
  };

  Outcome search(Graph& g, Ancestors& anc) {
    check_deadline();
    if (!propagate(g)) return {false, kNoBlock};
    // Or-rule, first open disjunction in node/insertion order.
    for (std::size_t x = 0; x < g.items.size(); ++x) {
      for (std::size_t i = 0; i < g.items[x].size(); ++i) {
        const int c = g.items[x][i];
        const Term& t = terms[c];
        if (t.k != K::Or) continue;
        std::vector<int> live;
        bool done = false;
        for (int d : t.kids) {
          if (g.in[x][d]) {
            done = true;
            break;
          }
          if (!g.in[x][neg_of[d]]) live.push_back(d);
        }
        if (done) continue;
        const int node = static_cast<int>(x);
        if (live.empty()) return {false, kNoBlock};
        if (live.size() == 1) {
          const std::size_t mark = g.trail.size();
          if (!add(g, node, live[0])) {
            undo(g, mark);
            return {false, kNoBlock};
          }
          Outcome o = search(g, anc);
          undo(g, mark);
          return o;
        }
        ++stats.branches;
        int min_block = kNoBlock;
        for (std::size_t j = 0; j < live.size(); ++j) {
          const std::size_t mark = g.trail.size();
          bool ok = add(g, node, live[j]);
          for (std::size_t p = 0; ok && p < j; ++p) ok = add(g, node, neg_of[live[p]]);
          if (ok) {
            Outcome o = search(g, anc);
            if (o.sat) {
              undo(g, mark);
              return o;
            }
            min_block = std::min(min_block, o.min_block);
          }
          undo(g, mark);
        }
        return {false, min_block};
      }
    }
    // Exists-rule: one fresh successor per existential.
    int min_block = kNoBlock;
    for (std::size_t x = 0; x < g.items.size(); ++x) {
      std::set<Label> seen;
      for (int c : g.items[x]) {
        const Term& t = terms[c];
        if (t.k != K::Ex) continue;
        Label seed{t.kids[0]};
        for (int d : g.items[x]) {
          if (terms[d].k == K::All && terms[d].sym == t.sym) seed.push_back(terms[d].kids[0]);
        }
        for (int d : gcis) seed.push_back(d);
        std::sort(seed.begin(), seed.end());
        seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
        if (!seen.insert(seed).second) continue;
        anc.labels.push_back(&g.in[x]);
        Outcome o = successor(seed, anc);
        anc.labels.pop_back();
        if (!o.sat) return {false, kNoBlock};
        min_block = std::min(min_block, o.min_block);
      }
    }
    return {true, min_block};
  }

  Outcome successor(const Label& seed, Ancestors& anc) {
    const int depth = static_cast<int>(anc.labels.size());
    for (int i = 0; i < depth; ++i) {
      const auto& lab = *anc.labels[i];
      if (std::all_of(seed.begin(), seed.end(), [&](int c) { return lab[c] != 0; })) {
        ++stats.blocked;
        return {true, i};
      }
    }
    if (unsat_cache.count(seed)) {
      ++stats.cache_hits;
      return {false, kNoBlock};
    }
    if (sat_cache.count(seed)) {
      ++stats.cache_hits;
      return {true, kNoBlock};
    }
    ++stats.nodes;
    Graph g;
    g.width = terms.size();
    const int x = g.add_node();
    bool ok = true;
    for (int c : seed) ok = ok && add(g, x, c);
    Outcome o = ok ? search(g, anc) : Outcome{false, kNoBlock};
    if (!o.sat) {
      unsat_cache.insert(seed);
    } else if (o.min_block >= depth) {
      sat_cache.insert(seed);
      o.min_block = kNoBlock;
    }
    return o;
  }

  bool satisfiable(int c) {
    Label seed{c};
    for (int d : gcis) seed.push_back(d);
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    Ancestors anc;
    return successor(seed, anc).sat;
  }

  bool consistent(const std::vector<Assertion>& abox, const std::string& extra_ind, int extra_concept) {
    std::map<std::string, int> inds;
    auto ind = [&](const std::string& n) { return inds.emplace(n, 0).first; };
    std::vector<std::pair<std::string, int>> concept_assertions;
    std::vector<std::tuple<int, std::string, std::string>> role_assertions;
    for (const auto& a : abox) {
      if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
        if (ca->left.typical) throw std::invalid_argument("typicality assertion given to the ALC engine");
        ind(ca->individual);
        concept_assertions.emplace_back(ca->individual, intern(ca->left.term, true));
      } else {
        const auto& ra = std::get<RoleAssertion>(a);
        ind(ra.subject);
        ind(ra.object);
        role_assertions.emplace_back(sym(roles, ra.role), ra.subject, ra.object);
      }
    }
    if (!extra_ind.empty()) {
      ind(extra_ind);
      concept_assertions.emplace_back(extra_ind, extra_concept);
    }
    close_negations();
    Graph g;
    g.width = terms.size();
    for (auto& [name, id] : inds) id = g.add_node();
    for (const auto& [r, s, o] : role_assertions) g.edges.emplace_back(r, inds[s], inds[o]);
    for (const auto& [name, id] : inds) {
      for (int d : gcis) {
        if (!add(g, id, d)) return false;
      }
    }
    for (const auto& [name, c] : concept_assertions) {
      if (!add(g, inds[name], c)) return false;
    }
    Ancestors anc;
    return search(g, anc).sat;
  }
};

namespace {

std::string tbox_fingerprint(const std::vector<Inclusion>& strict) {
  std::vector<std::string> parts;
  parts.reserve(strict.size());
  for (const auto& inc : strict) {
    parts.push_back(to_string(canonical_form(inc.left.term)) + " <= " + to_string(canonical_form(inc.right)));
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::string out;
  for (const auto& p : parts) out += p + ";\n";
  return out;
}

}  // namespace

Reasoner::Reasoner(const std::vector<Inclusion>& strict) : impl_(std::make_unique<Impl>()) {
  Impl& m = *impl_;
  m.top_id = m.raw(K::Top, -1, {});
  m.bot_id = m.raw(K::Bot, -1, {});
  m.neg_of[m.top_id] = m.bot_id;
  m.neg_of[m.bot_id] = m.top_id;
  for (const auto& inc : strict) {
    if (inc.left.typical || inc.probability) {
      throw std::invalid_argument("non-strict inclusion given to the ALC engine: " + to_string(inc));
    }
    const Concept lhs = canonical_form(inc.left.term);
    // A <= D and A & E <= D are absorbed into a lazy rule on the atom A.
    const Concept* atom = nullptr;
    std::vector<Concept> rest;
    if (lhs.is(ConceptKind::Atom)) {
      atom = &lhs;
    } else if (lhs.is(ConceptKind::And)) {
      std::vector<Concept> parts;
      Concept cur = lhs;
      while (cur.is(ConceptKind::And)) {
        parts.push_back(cur.right());
        cur = cur.left();
      }
      parts.push_back(cur);
      for (const auto& p : parts) {
        if (!atom && p.is(ConceptKind::Atom)) {
          atom = &p;
        } else {
          rest.push_back(p);
        }
      }
      if (atom) {
        const int a = m.sym(m.atoms, atom->name());
        const int body = m.intern(Concept::disj(Concept::negate(make_conjunction(rest)), inc.right), true);
        m.absorbed[a].push_back(body);
        continue;
      }
    }
    if (atom) {
      m.absorbed[m.sym(m.atoms, atom->name())].push_back(m.intern(inc.right, true));
      continue;
    }
    const int g = m.intern(Concept::disj(Concept::negate(lhs), inc.right), true);
    if (g != m.top_id) m.gcis.push_back(g);
  }
  std::sort(m.gcis.begin(), m.gcis.end());
  m.gcis.erase(std::unique(m.gcis.begin(), m.gcis.end()), m.gcis.end());
  m.fp = tbox_fingerprint(strict);
}

Reasoner::~Reasoner() = default;
Reasoner::Reasoner(Reasoner&&) noexcept = default;
Reasoner& Reasoner::operator=(Reasoner&&) noexcept = default;

bool Reasoner::is_satisfiable(const Concept& c) {
  const int id = impl_->intern(c, true);
  impl_->close_negations();
  return impl_->satisfiable(id);
}

bool Reasoner::entails(const Concept& c, const Concept& d) {
  return !is_satisfiable(Concept::conj(c, Concept::negate(d)));
}

bool Reasoner::abox_consistent(const std::vector<Assertion>& abox) { return impl_->consistent(abox, {}, -1); }

bool Reasoner::instance_of(const std::vector<Assertion>& abox, const Concept& c, const std::string& a) {
  const int id = impl_->intern(Concept::negate(c), true);
  return !impl_->consistent(abox, a, id);
}

const Stats& Reasoner::stats() const { return impl_->stats; }

const std::string& Reasoner::fingerprint() const { return impl_->fp; }

// ── process-wide cache ─────────────────────────────────────────────────────

namespace {

std::mutex g_mutex;
std::unordered_map<std::string, bool> g_cache;
std::atomic<bool> g_enabled{true};

std::optional<bool> cache_get(const std::string& key) {
  if (!g_enabled.load(std::memory_order_relaxed)) return std::nullopt;
  std::lock_guard<std::mutex> lock(g_mutex);
  if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  return std::nullopt;
}

void cache_put(const std::string& key, bool value) {
  if (!g_enabled.load(std::memory_order_relaxed)) return;
  std::lock_guard<std::mutex> lock(g_mutex);
  g_cache.emplace(key, value);
}

// A few recently used reasoners per thread, so that repeated queries over
// the same TBox share the tableau caches.
Reasoner& reasoner_for(const std::vector<Inclusion>& strict, const std::string& fp) {
  thread_local std::list<std::pair<std::string, Reasoner>> recent;
  for (auto it = recent.begin(); it != recent.end(); ++it) {
    if (it->first == fp) {
      recent.splice(recent.begin(), recent, it);
      return recent.front().second;
    }
  }
  recent.emplace_front(fp, Reasoner(strict));
  if (recent.size() > 8) recent.pop_back();
  return recent.front().second;
}

std::string abox_key(const std::vector<Assertion>& abox) {
  std::vector<std::string> parts;
  for (const auto& a : abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      parts.push_back(ca->individual + " : " + to_string(canonical_form(ca->left.term)));
    } else {
      parts.push_back(to_string(a));
    }
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p + ";\n";
  return out;
}

}  // namespace

bool is_satisfiable(const Concept& c, const std::vector<Inclusion>& strict) {
  const std::string fp = tbox_fingerprint(strict);
  const std::string key = "S\n" + fp + "?" + to_string(canonical_form(c));
  if (auto hit = cache_get(key)) return *hit;
  const bool r = reasoner_for(strict, fp).is_satisfiable(c);
  cache_put(key, r);
  return r;
}

bool entails(const std::vector<Inclusion>& strict, const Concept& c, const Concept& d) {
  return !is_satisfiable(Concept::conj(c, Concept::negate(d)), strict);
}

bool abox_consistent(const std::vector<Inclusion>& strict, const std::vector<Assertion>& abox) {
  const std::string fp = tbox_fingerprint(strict);
  const std::string key = "A\n" + fp + "?" + abox_key(abox);
  if (auto hit = cache_get(key)) return *hit;
  const bool r = reasoner_for(strict, fp).abox_consistent(abox);
  cache_put(key, r);
  return r;
}

bool instance_of(const std::vector<Inclusion>& strict, const std::vector<Assertion>& abox, const Concept& c,
                 const std::string& a) {
  std::vector<Assertion> ext = abox;
  ext.emplace_back(ConceptAssertion{LeftConcept::plain(Concept::negate(c)), a});
  return !abox_consistent(strict, ext);
}

void set_cache_enabled(bool enabled) { g_enabled.store(enabled); }

std::size_t cache_size() {
  std::lock_guard<std::mutex> lock(g_mutex);
  return g_cache.size();
}

void clear_cache() {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_cache.clear();
}

}  // namespace typdl::alc
