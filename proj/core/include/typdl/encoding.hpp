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

#ifndef TYPDL_ENCODING_HPP
#define TYPDL_ENCODING_HPP

#include <map>
#include <string>
#include <vector>

#include "typdl/concept.hpp"
#include "typdl/kb.hpp"

namespace typdl::encoding {

// ── Typicality encoding ────────────────────────────────────────────────────
// T(C) is split as C & box_C, where box_C holds at elements that see no
// preferred C-element along the fresh role pref:
//
//   box_C  <= all pref. (~C & box_C)
//   ~box_C <= some pref. (C & box_C)
//
// The first axiom propagates box_C to every preferred element, the second
// makes any non-box element see a minimal C below it. Every ranked model of
// the source KB becomes a model of the encoding (pref read as "strictly
// preferred", box_C as "no preferred C"), so entailment from the encoding is
// sound for ranked models.
// ───────────────────────────────────────────────────────────────────────────
struct EncodedKb {
  std::vector<Inclusion> tbox;
  std::vector<Assertion> abox;
  /// canonical C -> box atom name
  std::map<Concept, std::string> box;
  std::string pref;

  const std::string& box_of(const Concept& c) const;
  /// C & box_C
  Concept typical(const Concept& c) const;
  /// As a plain KB (for printing and re-parsing).
  KnowledgeBase as_kb() const;
};

/// Probabilities are ignored. `extra` are further concepts that need a box
/// atom (typicality queries).
EncodedKb encode(const KnowledgeBase& kb, const std::vector<Concept>& extra = {});

/// kb |= q in ALC+T_R, by refutation over the encoding.
bool tr_entails(const KnowledgeBase& kb, const Query& q);

/// Some ranked model of kb exists.
bool tr_consistent(const KnowledgeBase& kb);

/// Some ranked model of kb has a C-element.
bool tr_satisfiable(const KnowledgeBase& kb, const Concept& c);

/// Fresh name not occurring in `taken`, built from `base`.
std::string fresh_name(const std::string& base, const Signature& taken);

}  // namespace typdl::encoding

#endif  // TYPDL_ENCODING_HPP
