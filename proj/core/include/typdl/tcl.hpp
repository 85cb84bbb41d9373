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

#ifndef TYPDL_TCL_HPP
#define TYPDL_TCL_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "typdl/concept.hpp"
#include "typdl/kb.hpp"
#include "typdl/rational.hpp"

namespace typdl::tcl {

class CombinationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultMaxDefaults = 20;

/// One atomic choice per default: selected[i] is k_i.
struct Scenario {
  std::vector<bool> selected;
  Rational probability;

  std::vector<std::size_t> defaults() const;
};

struct Options {
  /// Add some r. Top for every role under a universal restriction.
  bool role_saturation = true;
  std::size_t max_defaults = kDefaultMaxDefaults;
};

/// Probability of a selection over the defeasible list of kb.
Rational selection_probability(const KnowledgeBase& kb, const std::vector<bool>& selected);

/// All 2^n scenarios; bit i of the counter selects default i.
std::vector<Scenario> enumerate_scenarios(const KnowledgeBase& kb, std::size_t max_n = kDefaultMaxDefaults);

bool is_consistent_scenario(const KnowledgeBase& kb, const Scenario& w, const Concept& head, const Concept& modifier,
                            const Options& opt = {});

enum class ScenarioVerdict { Trivial, ModifierConflict, Selected };

const char* verdict_name(ScenarioVerdict v);

struct TraceEntry {
  Scenario scenario;
  ScenarioVerdict verdict;
};

/// Consistent scenarios of one probability, in enumeration order.
struct Block {
  Rational probability;
  std::vector<TraceEntry> entries;
};

struct SelectionResult {
  /// Defaults whose antecedent subsumes the combined concept; the others
  /// stay unselected in every scenario considered.
  std::vector<std::size_t> applicable;
  std::size_t consistent = 0;
  std::vector<Scenario> selected;
  /// Blocks in decreasing probability, up to the one that succeeded.
  std::vector<Block> trace;
};

/// Throws CombinationError when no block has a survivor.
SelectionResult select_scenarios(const KnowledgeBase& kb, const Concept& head, const Concept& modifier,
                                 const Options& opt = {});

struct CombinationResult {
  Concept head;
  Concept modifier;
  Concept combined;
  SelectionResult selection;
  std::vector<Inclusion> additions;
  KnowledgeBase revised;
};

CombinationResult revise(const KnowledgeBase& kb, const Concept& head, const Concept& modifier,
                         const Options& opt = {});

}  // namespace typdl::tcl

#endif  // TYPDL_TCL_HPP
