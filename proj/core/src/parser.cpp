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

#include "typdl/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace typdl {

ParseError::ParseError(int line, int column, std::string expected, std::string found)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected +
                         ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  Comma,
  Colon,
  DoubleColon,
  Le,
  Dot,
  Tilde,
  Amp,
  Bar,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int tl = line;
    const int tc = col;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(src.substr(i, len)), tl, tc});
      advance(len);
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      push(Tok::Ident, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      push(Tok::Number, j - i);
      continue;
    }
    switch (c) {
      case '(':
        push(Tok::LParen, 1);
        continue;
      case ')':
        push(Tok::RParen, 1);
        continue;
      case ',':
        push(Tok::Comma, 1);
        continue;
      case '.':
        push(Tok::Dot, 1);
        continue;
      case '~':
        push(Tok::Tilde, 1);
        continue;
      case '&':
        push(Tok::Amp, 1);
        continue;
      case '|':
        push(Tok::Bar, 1);
        continue;
      case ':':
        if (i + 1 < src.size() && src[i + 1] == ':') {
          push(Tok::DoubleColon, 2);
        } else {
          push(Tok::Colon, 1);
        }
        continue;
      case '<':
        if (i + 1 < src.size() && src[i + 1] == '=') {
          push(Tok::Le, 2);
          continue;
        }
        break;
      default:
        break;
    }
    throw ParseError(tl, tc, "a token", "'" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct PendingProbability {
  std::size_t index;  // into defeasible
  Token token;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  KnowledgeBase kb() {
    KnowledgeBase out;
    std::optional<Dialect> directive;
    std::vector<PendingProbability> probs;
    std::vector<Token> defeasible_pos;
    std::vector<Token> typical_assertion_pos;
    while (peek().kind != Tok::End) {
      const Token start = peek();
      if (start.kind == Tok::Ident && start.text == "mode" && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Dot) {
        next();
        const Token d = next();
        Dialect parsed;
        if (d.text == "plain") {
          parsed = Dialect::Plain;
        } else if (d.text == "alctp") {
          parsed = Dialect::Alctp;
        } else if (d.text == "tcl") {
          parsed = Dialect::Tcl;
        } else {
          throw error(d, "'plain', 'alctp' or 'tcl'");
        }
        if (directive && *directive != parsed) throw error(start, "at most one mode directive");
        directive = parsed;
        expect(Tok::Dot, "'.'");
        continue;
      }
      if (start.kind == Tok::Number) {
        const Token num = next();
        expect(Tok::DoubleColon, "'::'");
        const Token left_tok = peek();
        LeftConcept left = left_concept();
        if (!left.typical) throw error(left_tok, "T(...) after a probability");
        expect(Tok::Le, "'<='");
        Concept right = concept_expr();
        expect(Tok::Dot, "'.'");
        Rational p;
        if (!parse_decimal(num.text, p)) throw error(num, "a decimal probability");
        probs.push_back({out.defeasible.size(), num});
        defeasible_pos.push_back(start);
        out.defeasible.push_back(Inclusion{std::move(left), std::move(right), std::move(p)});
        continue;
      }
      if (is_role_assertion_start()) {
        out.abox.emplace_back(role_assertion());
        expect(Tok::Dot, "'.'");
        continue;
      }
      if (start.kind == Tok::Ident && peek(1).kind == Tok::Colon) {
        ConceptAssertion ca = concept_assertion();
        expect(Tok::Dot, "'.'");
        if (ca.left.typical) typical_assertion_pos.push_back(start);
        out.abox.emplace_back(std::move(ca));
        continue;
      }
      LeftConcept left = left_concept();
      expect(Tok::Le, "'<='");
      Concept right = concept_expr();
      expect(Tok::Dot, "'.'");
      if (left.typical) {
        defeasible_pos.push_back(start);
        out.defeasible.push_back(Inclusion{std::move(left), std::move(right), {}});
      } else {
        out.strict.push_back(Inclusion{std::move(left), std::move(right), {}});
      }
    }

    out.dialect = directive.value_or(probs.empty() ? Dialect::Plain : Dialect::Alctp);
    const Rational half(1, 2);
    for (const auto& pp : probs) {
      const Rational& p = *out.defeasible[pp.index].probability;
      switch (out.dialect) {
        case Dialect::Plain:
          throw ParseError(pp.token.line, pp.token.column, "no probability annotation in mode plain",
                           describe(pp.token));
        case Dialect::Alctp:
          if (p <= 0 || p >= 1) {
            throw ParseError(pp.token.line, pp.token.column, "probability in (0, 1) for mode alctp",
                             describe(pp.token));
          }
          break;
        case Dialect::Tcl:
          if (p <= half || p >= 1) {
            throw ParseError(pp.token.line, pp.token.column, "probability in (0.5, 1) for mode tcl",
                             describe(pp.token));
          }
          break;
      }
    }
    if (out.dialect == Dialect::Tcl) {
      for (std::size_t i = 0; i < out.defeasible.size(); ++i) {
        if (!out.defeasible[i].probability) {
          const Token& t = defeasible_pos[i];
          throw ParseError(t.line, t.column, "a probability annotation in mode tcl", describe(t));
        }
      }
      if (!typical_assertion_pos.empty()) {
        const Token& t = typical_assertion_pos.front();
        throw ParseError(t.line, t.column, "no typicality assertion in mode tcl", describe(t));
      }
    }
    return out;
  }

  Query query() {
    Query q = [&]() -> Query {
      if (is_role_assertion_start()) return Assertion(role_assertion());
      if (peek().kind == Tok::Ident && peek(1).kind == Tok::Colon) return Assertion(concept_assertion());
      LeftConcept left = left_concept();
      expect(Tok::Le, "'<='");
      Concept right = concept_expr();
      return Inclusion{std::move(left), std::move(right), {}};
    }();
    if (peek().kind == Tok::Dot) next();
    expect(Tok::End, "end of query");
    return q;
  }

  Concept whole_concept() {
    Concept c = concept_expr();
    expect(Tok::End, "end of concept");
    return c;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    const std::size_t j = std::min(pos_ + k, toks_.size() - 1);
    return toks_[j];
  }

  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  ParseError error(const Token& t, const std::string& expected) const {
    return ParseError(t.line, t.column, expected, describe(t));
  }

  Token expect(Tok k, const std::string& expected) {
    if (peek().kind != k) throw error(peek(), expected);
    return next();
  }

  std::string ident(const std::string& what) {
    const Token t = expect(Tok::Ident, what);
    return t.text;
  }

  bool is_role_assertion_start() const {
    return peek().kind == Tok::LParen && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Comma;
  }

  RoleAssertion role_assertion() {
    expect(Tok::LParen, "'('");
    std::string a = ident("an individual name");
    expect(Tok::Comma, "','");
    std::string b = ident("an individual name");
    expect(Tok::RParen, "')'");
    expect(Tok::Colon, "':'");
    std::string r = ident("a role name");
    return RoleAssertion{std::move(r), std::move(a), std::move(b)};
  }

  ConceptAssertion concept_assertion() {
    std::string a = ident("an individual name");
    expect(Tok::Colon, "':'");
    return ConceptAssertion{left_concept(), std::move(a)};
  }

  LeftConcept left_concept() {
    if (peek().kind == Tok::Ident && peek().text == "T" && peek(1).kind == Tok::LParen) {
      next();
      next();
      Concept c = concept_expr();
      expect(Tok::RParen, "')'");
      return LeftConcept::typ(std::move(c));
    }
    return LeftConcept::plain(concept_expr());
  }

  Concept concept_expr() {
    Concept acc = conjunction();
    while (peek().kind == Tok::Bar) {
      next();
      acc = Concept::disj(std::move(acc), conjunction());
    }
    return acc;
  }

  Concept conjunction() {
    Concept acc = unary();
    while (peek().kind == Tok::Amp) {
      next();
      acc = Concept::conj(std::move(acc), unary());
    }
    return acc;
  }

  Concept unary() {
    const Token& t = peek();
    if (t.kind == Tok::Tilde) {
      next();
      return Concept::negate(unary());
    }
    if (t.kind == Tok::Ident && (t.text == "some" || t.text == "all") && peek(1).kind == Tok::Ident &&
        peek(2).kind == Tok::Dot) {
      const bool ex = t.text == "some";
      next();
      std::string role = next().text;
      next();
      Concept c = unary();
      return ex ? Concept::exists(std::move(role), std::move(c)) : Concept::forall(std::move(role), std::move(c));
    }
    return primary();
  }

  Concept primary() {
    const Token t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Concept c = concept_expr();
      expect(Tok::RParen, "')'");
      return c;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "Top") {
        next();
        return Concept::top();
      }
      if (t.text == "Bot") {
        next();
        return Concept::bottom();
      }
      if (t.text == "T" && peek(1).kind == Tok::LParen) {
        throw error(t, "a concept (T(...) is only allowed as a whole left-hand side or assertion)");
      }
      if (t.text == "some" || t.text == "all") throw error(peek(2), "'.' after the role name");
      next();
      return Concept::atom(t.text);
    }
    throw error(t, "a concept");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

KnowledgeBase parse_kb(std::string_view text) { return Parser(text).kb(); }

Query parse_query(std::string_view text) { return Parser(text).query(); }

Concept parse_concept(std::string_view text) { return Parser(text).whole_concept(); }

std::string serialize_kb(const KnowledgeBase& kb) {
  std::string out;
  if (kb.dialect != Dialect::Plain) {
    out += "mode ";
    out += dialect_name(kb.dialect);
    out += ".\n";
  }
  for (const auto& inc : kb.strict) out += to_string(inc) + ".\n";
  for (const auto& inc : kb.defeasible) out += to_string(inc) + ".\n";
  for (const auto& a : kb.abox) out += to_string(a) + ".\n";
  return out;
}

}  // namespace typdl
