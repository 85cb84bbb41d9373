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

#ifndef TYPDL_SKEPTICAL_HPP
#define TYPDL_SKEPTICAL_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "typdl/concept.hpp"
#include "typdl/kb.hpp"
#include "typdl/rational_closure.hpp"

namespace typdl::sc {

class ScError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Base {
  Concept target;
  int target_rank = 0;
  /// (rank, default indices), highest rank first. Every default of rank
  /// >= rank(B) is accepted unconditionally.
  std::vector<std::pair<int, std::vector<std::size_t>>> accepted;
  /// Rank whose defaults conflicted; nothing at or below it is accepted.
  std::optional<int> stop_rank;

  /// All accepted default indices, ascending.
  std::vector<std::size_t> defaults() const;
};

bool individually_compatible(const Inclusion& d, const Concept& b, const std::vector<Inclusion>& accepted,
                             const std::vector<Inclusion>& strict);

/// Throws ScError when B has infinite rank.
Base build_base(const rc::RankingResult& r, const Concept& b);
Base build_base(const KnowledgeBase& kb, const Concept& b);

/// Typicality queries T(B) <= D are decided from the base of B (always
/// true when B has infinite rank). Strict
/// queries C <= D hold iff C & ~D has infinite rank; assertions are refused.
bool sc_entails(const rc::RankingResult& r, const Inclusion& q);
bool sc_entails(const KnowledgeBase& kb, const Inclusion& q);

}  // namespace typdl::sc

#endif  // TYPDL_SKEPTICAL_HPP
