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

#ifndef TYPDL_PARSER_HPP
#define TYPDL_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "typdl/kb.hpp"

namespace typdl {

/// Syntax or dialect error. Line and column are 1-based positions in the
/// original text.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string expected, std::string found);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int column_;
  std::string expected_;
  std::string found_;
};

// Textual KB format:
//
//   kb        := (directive | statement)* ;
//   directive := "mode" ("plain" | "alctp" | "tcl") "." ;
//   statement := [prob "::"] left "<=" concept "." | assertion "." ;
//   left      := concept | "T(" concept ")" ;
//   assertion := ident ":" left | "(" ident "," ident ")" ":" ident ;
//
// '#' starts a comment running to the end of the line. Concept syntax is
// Top, Bot, ~C, C & D, C | D, some R. C, all R. C with parentheses;
// '~' and the quantifiers bind tightest, then '&', then '|'.

/// Without a directive the dialect is plain, or alctp as soon as a
/// probability annotation appears.
KnowledgeBase parse_kb(std::string_view text);

/// One inclusion or assertion, optionally terminated by '.'.
Query parse_query(std::string_view text);

Concept parse_concept(std::string_view text);

/// Emits the grammar above; parse_kb(serialize_kb(kb)) == kb.
std::string serialize_kb(const KnowledgeBase& kb);

}  // namespace typdl

#endif  // TYPDL_PARSER_HPP
