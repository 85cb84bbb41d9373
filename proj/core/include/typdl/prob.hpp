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

#ifndef TYPDL_PROB_HPP
#define TYPDL_PROB_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "typdl/concept.hpp"
#include "typdl/kb.hpp"
#include "typdl/rational.hpp"

namespace typdl::prob {

class ProbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultMaxAssumptions = 20;

/// Typicality assumptions T(C_i)(a_i) that rational closure supports,
/// ordered by (individual, serialized concept), with p_i the product of
/// the probabilities of the defaults T(C_i) <=_p D.
struct AssumptionIndex {
  std::vector<std::pair<std::string, Concept>> pairs;
  std::vector<Rational> probabilities;

  std::size_t size() const { return pairs.size(); }
};

struct AboxExtension {
  /// kept[i]: assumption i is part of the extension.
  std::vector<bool> kept;
  std::vector<Assertion> assertions;
  Rational probability;
};

/// kb must be in the alctp dialect (or plain, giving an empty index).
AssumptionIndex build_index(const KnowledgeBase& kb);

/// All 2^n extensions by binary counting (bit i of the counter keeps
/// assumption i). Throws ProbError when n exceeds max_n.
std::vector<AboxExtension> enumerate_extensions(const AssumptionIndex& index,
                                                std::size_t max_n = kDefaultMaxAssumptions);

enum class RangeVerdict { Entailed, NotEntailed, Vacuous };

const char* verdict_name(RangeVerdict v);

struct RangeResult {
  RangeVerdict verdict = RangeVerdict::Vacuous;
  /// Extensions with probability in [low, high] (indices into the
  /// enumeration order); empty for TBox queries.
  std::vector<std::size_t> in_range;
  /// First in-range extension that does not entail the query.
  std::optional<std::size_t> witness;
};

/// TBox queries go to rational closure on the KB without probabilities and
/// ignore the range. ABox queries must be entailed (monotonically) from
/// every extension whose probability lies in [low, high].
RangeResult prob_entails(const KnowledgeBase& kb, const Query& q, const Rational& low, const Rational& high,
                         std::size_t max_n = kDefaultMaxAssumptions);

/// Sum of the probabilities of the extensions entailing q.
Rational query_probability(const KnowledgeBase& kb, const Assertion& q, std::size_t max_n = kDefaultMaxAssumptions);

/// KB used for each extension: probabilities dropped, extension added.
KnowledgeBase extended_kb(const KnowledgeBase& kb, const AboxExtension& ext);

}  // namespace typdl::prob

#endif  // TYPDL_PROB_HPP
