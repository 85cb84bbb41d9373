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

#include "typdl/skeptical.hpp"

#include <algorithm>

#include "typdl/alc.hpp"
#include "typdl/deadline.hpp"

namespace typdl::sc {

std::vector<std::size_t> Base::defaults() const {
  std::vector<std::size_t> out;
  for (const auto& [rank, ds] : accepted) out.insert(out.end(), ds.begin(), ds.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool individually_compatible(const Inclusion& d, const Concept& b, const std::vector<Inclusion>& accepted,
                             const std::vector<Inclusion>& strict) {
  std::vector<Inclusion> all = accepted;
  all.push_back(d);
  return alc::is_satisfiable(Concept::conj(b, materialization(all)), strict);
}

Base build_base(const rc::RankingResult& r, const Concept& b) {
  Base base;
  base.target = b;
  base.target_rank = r.concept_rank(b);
  if (base.target_rank == rc::kInfinite) throw ScError(to_string(b) + " is unsatisfiable under the ranking");
  const std::vector<int> ranks = r.default_ranks();
  auto of_rank = [&](int k) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      if (ranks[i] == k) out.push_back(i);
    }
    return out;
  };
  std::vector<Inclusion> accepted;
  auto accept = [&](int k, const std::vector<std::size_t>& ds) {
    for (std::size_t d : ds) accepted.push_back(r.defaults[d]);
    base.accepted.emplace_back(k, ds);
  };
  // Defaults of rank >= rank(B) form E_rank(B), which B is consistent with.
  int top = base.target_rank;
  for (int k : ranks) {
    if (k != rc::kInfinite) top = std::max(top, k);
  }
  for (int k = top; k >= base.target_rank; --k) {
    const std::vector<std::size_t> dk = of_rank(k);
    if (!dk.empty() || k == base.target_rank) accept(k, dk);
  }
  for (int k = base.target_rank - 1; k >= 0; --k) {
    check_deadline();
    std::vector<std::size_t> dk;
    std::vector<Inclusion> candidate = accepted;
    for (std::size_t d : of_rank(k)) {
      if (individually_compatible(r.defaults[d], b, accepted, r.strict)) {
        dk.push_back(d);
        candidate.push_back(r.defaults[d]);
      }
    }
    if (!alc::is_satisfiable(Concept::conj(b, materialization(candidate)), r.strict)) {
      base.stop_rank = k;
      break;
    }
    accept(k, dk);
  }
  return base;
}

Base build_base(const KnowledgeBase& kb, const Concept& b) { return build_base(rc::compute_ranking(kb), b); }

bool sc_entails(const rc::RankingResult& r, const Inclusion& q) {
  if (!q.left.typical) return rc::rc_entails_tbox(r, q);
  if (r.concept_rank(q.left.term) == rc::kInfinite) return true;
  const Base base = build_base(r, q.left.term);
  std::vector<Inclusion> ds;
  for (std::size_t d : base.defaults()) ds.push_back(r.defaults[d]);
  return alc::entails(r.strict, Concept::conj(q.left.term, materialization(ds)), q.right);
}

bool sc_entails(const KnowledgeBase& kb, const Inclusion& q) { return sc_entails(rc::compute_ranking(kb), q); }

}  // namespace typdl::sc
