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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "typdl/deadline.hpp"
#include "typdl/encoding.hpp"
#include "typdl/models.hpp"
#include "typdl/parser.hpp"
#include "typdl/prob.hpp"
#include "typdl/rational_closure.hpp"
#include "typdl/skeptical.hpp"
#include "typdl/tcl.hpp"

namespace typdl::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

/// Error raised by the front end itself (bad flag values, unreadable files).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Verdict {
  std::string command;
  std::string query;
  std::string mode;
  std::string result;
  std::optional<Rational> probability;
  Json trace;
  /// Extra human-readable lines printed after the verdict line.
  std::vector<std::string> lines;
  int code = 0;
};

Json rational_json(const Rational& r) {
  return Json{{"fraction", to_fraction_string(r)}, {"decimal", to_decimal_string(r)}};
}

std::string rational_text(const Rational& r) { return to_fraction_string(r) + " (" + to_decimal_string(r) + ")"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

KnowledgeBase load(const std::string& path) {
  KnowledgeBase kb = parse_kb(read_file(path));
  kb.validate();
  return kb;
}

Rational decimal_flag(const std::string& name, const std::string& text) {
  Rational r;
  if (!parse_decimal(text, r)) throw UsageError("--" + name + " expects a decimal, got '" + text + "'");
  return r;
}

std::string default_text(const KnowledgeBase& kb, std::size_t i) { return "(" + std::to_string(i + 1) + ") " + to_string(kb.defeasible[i]); }

Json ranking_json(const KnowledgeBase& kb, const rc::RankingResult& r) {
  Json defaults = Json::array();
  const auto ranks = r.default_ranks();
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    defaults.push_back({{"index", i + 1}, {"default", to_string(kb.defeasible[i])}, {"rank", rc::rank_string(ranks[i])}});
  }
  return Json{{"levels", r.levels.size()}, {"defaults", defaults}};
}

void ranking_lines(const KnowledgeBase& kb, const rc::RankingResult& r, std::vector<std::string>& lines) {
  const auto ranks = r.default_ranks();
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    lines.push_back("  rank " + rc::rank_string(ranks[i]) + "  " + default_text(kb, i));
  }
}

struct QueryOptions {
  std::string mode = "rc";
  bool trace = false;
  bool show_base = false;
  bool emit_encoding = false;
  int domain_bound = 4;
  std::optional<std::string> min;
  std::optional<std::string> max;
  bool prob = false;
};

Verdict prob_query(const KnowledgeBase& kb, const Query& q, const QueryOptions& o) {
  Verdict v;
  v.mode = "alctp";
  Rational low;
  const Rational high = o.max ? decimal_flag("max", *o.max) : Rational(1);
  if (o.min) {
    low = decimal_flag("min", *o.min);
  } else {
    // Whole range: the least extension probability, or 1 without assumptions.
    low = 1;
    if (std::holds_alternative<Assertion>(q)) {
      for (const auto& e : prob::enumerate_extensions(prob::build_index(kb))) low = std::min(low, e.probability);
    }
    low = std::min(low, high);
  }
  const prob::RangeResult res = prob::prob_entails(kb, q, low, high);
  v.result = prob::verdict_name(res.verdict);
  v.code = res.verdict == prob::RangeVerdict::Entailed ? 0 : 1;
  if (o.prob) {
    const auto* a = std::get_if<Assertion>(&q);
    if (!a) throw UsageError("--prob needs an assertion query");
    v.probability = prob::query_probability(kb, *a);
    v.lines.push_back("  P = " + rational_text(*v.probability));
  }
  if (o.trace && std::holds_alternative<Assertion>(q)) {
    const auto index = prob::build_index(kb);
    const auto exts = prob::enumerate_extensions(index);
    Json arr = Json::array();
    for (std::size_t i = 0; i < exts.size(); ++i) {
      Json kept = Json::array();
      for (const auto& a : exts[i].assertions) kept.push_back(to_string(a));
      const bool in = std::find(res.in_range.begin(), res.in_range.end(), i) != res.in_range.end();
      const bool failing = res.witness && *res.witness == i;
      arr.push_back({{"assumptions", kept}, {"probability", rational_json(exts[i].probability)}, {"in_range", in},
                     {"entails", !failing}});
      std::string line = "  extension {";
      for (std::size_t k = 0; k < kept.size(); ++k) line += (k ? ", " : "") + kept[k].get<std::string>();
      line += "}  P = " + rational_text(exts[i].probability) + (in ? "  in range" : "");
      if (failing) line += "  does not entail";
      v.lines.push_back(line);
    }
    v.trace["extensions"] = arr;
  }
  return v;
}

Verdict plain_query(const KnowledgeBase& source, const Query& q, const QueryOptions& o) {
  const KnowledgeBase kb = strip_probabilities(source);
  Verdict v;
  v.mode = o.mode;
  bool entailed = false;
  if (o.mode == "mono") {
    entailed = encoding::tr_entails(kb, q);
    if (o.emit_encoding) {
      std::vector<Concept> extra;
      if (const auto* inc = std::get_if<Inclusion>(&q); inc && inc->left.typical) extra.push_back(inc->left.term);
      if (const auto* a = std::get_if<Assertion>(&q)) {
        if (const auto* ca = std::get_if<ConceptAssertion>(a); ca && ca->left.typical) extra.push_back(ca->left.term);
      }
      const std::string text = serialize_kb(encoding::encode(kb, extra).as_kb());
      v.trace["encoding"] = text;
      std::istringstream in(text);
      for (std::string line; std::getline(in, line);) v.lines.push_back("  " + line);
    }
  } else if (o.mode == "rc") {
    const rc::RankingResult r = rc::compute_ranking(kb);
    if (const auto* inc = std::get_if<Inclusion>(&q)) {
      entailed = rc::rc_entails_tbox(r, *inc);
    } else {
      entailed = rc::rc_abox_entails(kb, r, std::get<Assertion>(q));
    }
    if (o.trace) {
      v.trace["ranking"] = ranking_json(kb, r);
      ranking_lines(kb, r, v.lines);
    }
  } else if (o.mode == "sc") {
    const auto* inc = std::get_if<Inclusion>(&q);
    if (!inc) throw UsageError("mode sc decides inclusion queries only");
    const rc::RankingResult r = rc::compute_ranking(kb);
    entailed = sc::sc_entails(r, *inc);
    if (o.show_base && inc->left.typical) {
      const sc::Base base = sc::build_base(r, inc->left.term);
      Json acc = Json::array();
      for (const auto& [rank, ds] : base.accepted) {
        Json items = Json::array();
        for (std::size_t d : ds) items.push_back(d + 1);
        acc.push_back({{"rank", rank}, {"defaults", items}});
        std::string line = "  rank " + std::to_string(rank) + ":";
        for (std::size_t d : ds) line += " " + default_text(kb, d);
        if (ds.empty()) line += " none";
        v.lines.push_back(line);
      }
      v.trace["base"] = {{"target", to_string(base.target)},
                         {"target_rank", base.target_rank},
                         {"accepted", acc},
                         {"stop_rank", base.stop_rank ? Json(*base.stop_rank) : Json(nullptr)}};
      v.lines.push_back(base.stop_rank ? "  stopped at rank " + std::to_string(*base.stop_rank) : "  no stop");
    }
  } else if (o.mode == "oracle") {
    models::OracleOptions opt;
    opt.domain_bound = o.domain_bound;
    const auto res = models::oracle_entails(kb, q, opt);
    entailed = res.entailed;
    v.mode = "oracle(bound " + std::to_string(o.domain_bound) + ")";
    if (res.countermodel) {
      v.trace["countermodel"] = models::to_table(*res.countermodel);
      std::istringstream in(models::to_table(*res.countermodel));
      for (std::string line; std::getline(in, line);) v.lines.push_back("  " + line);
    }
  } else {
    throw UsageError("unknown mode: " + o.mode);
  }
  v.result = entailed ? "entailed" : "not-entailed";
  v.code = entailed ? 0 : 1;
  return v;
}

Verdict run_query(const std::string& path, const std::string& text, const QueryOptions& o, bool force_prob) {
  const KnowledgeBase kb = load(path);
  const Query q = parse_query(text);
  Verdict v = (force_prob || kb.dialect == Dialect::Alctp) ? prob_query(kb, q, o) : plain_query(kb, q, o);
  v.query = to_string(q);
  return v;
}

Verdict run_check(const std::string& path) {
  const KnowledgeBase kb = load(path);
  Verdict v;
  v.mode = dialect_name(kb.dialect);
  const bool ok = encoding::tr_consistent(strip_probabilities(kb));
  v.result = ok ? "consistent" : "inconsistent";
  v.code = ok ? 0 : 1;
  v.trace["strict"] = kb.strict.size();
  v.trace["defeasible"] = kb.defeasible.size();
  v.trace["assertions"] = kb.abox.size();
  return v;
}

Verdict run_rank(const std::string& path, const std::vector<std::string>& concepts) {
  const KnowledgeBase kb = strip_probabilities(load(path));
  const rc::RankingResult r = rc::compute_ranking(kb);
  Verdict v;
  v.mode = "rc";
  v.result = "ok";
  v.trace["ranking"] = ranking_json(kb, r);
  ranking_lines(kb, r, v.lines);
  Json cs = Json::array();
  for (const auto& text : concepts) {
    const Concept c = parse_concept(text);
    const std::string rank = rc::rank_string(r.concept_rank(c));
    cs.push_back({{"concept", to_string(c)}, {"rank", rank}});
    v.lines.push_back("  rank " + rank + "  " + to_string(c));
  }
  if (!concepts.empty()) v.trace["concepts"] = cs;
  return v;
}

Verdict run_prob_of(const std::string& path, const std::string& text) {
  const KnowledgeBase kb = load(path);
  const Query q = parse_query(text);
  const auto* a = std::get_if<Assertion>(&q);
  if (!a) throw UsageError("prob-of expects an assertion");
  Verdict v;
  v.query = to_string(q);
  v.mode = "alctp";
  v.result = "ok";
  v.probability = prob::query_probability(kb, *a);
  return v;
}

struct CombineOptions {
  std::string head;
  std::string modifier;
  std::string emit;
  bool trace = false;
  bool no_role_saturation = false;
};

std::string scenario_text(const tcl::Scenario& w) {
  std::string s = "{";
  bool first = true;
  for (std::size_t d : w.defaults()) {
    s += (first ? "" : ",") + std::to_string(d + 1);
    first = false;
  }
  return s + "}";
}

Json scenario_json(const tcl::Scenario& w) {
  Json ds = Json::array();
  for (std::size_t d : w.defaults()) ds.push_back(d + 1);
  return Json{{"defaults", ds}, {"probability", rational_json(w.probability)}};
}

Verdict run_combine(const std::string& path, const CombineOptions& o) {
  const KnowledgeBase kb = load(path);
  tcl::Options opt;
  opt.role_saturation = !o.no_role_saturation;
  Verdict v;
  v.mode = "tcl";
  try {
    const tcl::CombinationResult res = tcl::revise(kb, parse_concept(o.head), parse_concept(o.modifier), opt);
    v.query = to_string(res.combined);
    v.result = "ok";
    Json sel = Json::array();
    for (const auto& w : res.selection.selected) {
      sel.push_back(scenario_json(w));
      v.lines.push_back("  selected " + scenario_text(w) + "  P = " + rational_text(w.probability));
    }
    Json adds = Json::array();
    for (const auto& a : res.additions) {
      adds.push_back(to_string(a));
      v.lines.push_back("  + " + to_string(a));
    }
    v.trace["selected"] = sel;
    v.trace["additions"] = adds;
    if (o.trace) {
      Json blocks = Json::array();
      for (const auto& b : res.selection.trace) {
        Json entries = Json::array();
        v.lines.push_back("  block P = " + rational_text(b.probability));
        for (const auto& e : b.entries) {
          Json j = scenario_json(e.scenario);
          j["verdict"] = tcl::verdict_name(e.verdict);
          entries.push_back(j);
          v.lines.push_back("    " + scenario_text(e.scenario) + "  " + tcl::verdict_name(e.verdict));
        }
        blocks.push_back({{"probability", rational_json(b.probability)}, {"scenarios", entries}});
      }
      v.trace["blocks"] = blocks;
    }
    if (!o.emit.empty()) {
      std::ofstream out(o.emit);
      if (!out) throw UsageError("cannot write " + o.emit);
      out << serialize_kb(res.revised);
    }
  } catch (const tcl::CombinationError& e) {
    v.query = o.modifier + " & " + o.head;
    v.result = "failure";
    v.code = 1;
    v.lines.push_back(std::string("  ") + e.what());
  }
  return v;
}

Verdict run_oracle(const std::string& path, const std::string& text, int bound, bool canonical) {
  const KnowledgeBase kb = strip_probabilities(load(path));
  const Query q = parse_query(text);
  models::OracleOptions opt;
  opt.domain_bound = bound;
  Verdict v;
  v.query = to_string(q);
  std::optional<models::RankedInterpretation> cm;
  if (canonical) {
    const auto res = models::oracle_min_canonical_entails(kb, q, opt);
    v.mode = "min-canonical(bound " + std::to_string(bound) + ")";
    v.result = models::verdict_name(res.verdict);
    v.code = res.verdict == models::CanonicalVerdict::Entailed ? 0 : 1;
    v.trace["required_types"] = res.required_types;
    v.trace["canonical_models"] = res.canonical_models;
    v.trace["minimal_models"] = res.minimal_models;
    cm = res.countermodel;
  } else {
    const auto res = models::oracle_entails(kb, q, opt);
    v.mode = "ranked(bound " + std::to_string(bound) + ")";
    v.result = res.entailed ? "entailed" : "not-entailed";
    v.code = res.entailed ? 0 : 1;
    v.trace["candidates"] = res.candidates;
    cm = res.countermodel;
  }
  if (cm) {
    v.trace["countermodel"] = models::to_table(*cm);
    std::istringstream in(models::to_table(*cm));
    for (std::string line; std::getline(in, line);) v.lines.push_back("  " + line);
  }
  return v;
}

void emit(const Verdict& v, bool json, std::ostream& out) {
  if (json) {
    Json j{{"schema", kSchema}, {"command", v.command}};
    if (!v.query.empty()) j["query"] = v.query;
    j["mode"] = v.mode;
    j["result"] = v.result;
    if (v.probability) j["probability"] = rational_json(*v.probability);
    if (!v.trace.is_null()) j["trace"] = v.trace;
    out << j.dump() << "\n";
    return;
  }
  out << v.result;
  if (!v.query.empty()) out << ": " << v.query;
  out << " [" << v.mode << "]";
  if (v.probability && v.command == "prob-of") out << " P = " << rational_text(*v.probability);
  out << "\n";
  for (const auto& l : v.lines) out << l << "\n";
}

void emit_error(const std::string& command, const std::string& kind, const std::string& message, bool json,
                std::ostream& out, std::ostream& err) {
  if (json) {
    out << Json{{"schema", kSchema}, {"command", command}, {"result", "error"}, {"error", kind}, {"message", message}}
               .dump()
        << "\n";
  }
  err << "error: " << message << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Defeasible reasoning with typicality in ALC", "typdl"};
  app.require_subcommand(1);
  bool json = false;
  double timeout = 0;
  app.add_flag("--json", json, "Print a single JSON object");
  app.add_option("--timeout", timeout, "Give up after this many seconds")->check(CLI::NonNegativeNumber);

  std::string kb_path;
  std::string query;
  QueryOptions qo;
  CombineOptions co;
  std::vector<std::string> rank_concepts;
  int bound = 4;
  bool canonical = false;

  auto* check = app.add_subcommand("check", "Parse a KB and test its consistency");
  check->add_option("kb", kb_path, "KB file")->required();

  auto add_query_args = [&](CLI::App* sub) {
    sub->add_option("kb", kb_path, "KB file")->required();
    sub->add_option("query", query, "Inclusion or assertion")->required();
  };
  auto* q = app.add_subcommand("query", "Decide a query");
  add_query_args(q);
  q->add_option("--mode", qo.mode, "mono, rc, sc or oracle")
      ->check(CLI::IsMember({"mono", "rc", "sc", "oracle"}))
      ->capture_default_str();
  q->add_flag("--trace", qo.trace, "Print the ranking or the extensions");
  q->add_flag("--show-base", qo.show_base, "Print the skeptical base (sc)");
  q->add_flag("--emit-encoding", qo.emit_encoding, "Print the encoded KB (mono)");
  q->add_option("--domain-bound", qo.domain_bound, "Domain bound (oracle)")->check(CLI::Range(1, 64));
  q->add_option("--min", qo.min, "Lower probability bound (alctp)");
  q->add_option("--max", qo.max, "Upper probability bound (alctp)");
  q->add_flag("--prob", qo.prob, "Also print the probability of the query (alctp)");

  auto* rank = app.add_subcommand("rank", "Print the rational-closure ranking");
  rank->add_option("kb", kb_path, "KB file")->required();
  rank->add_option("--concept", rank_concepts, "Also print the rank of these concepts");

  auto* pq = app.add_subcommand("prob-query", "Range-restricted entailment in an alctp KB");
  add_query_args(pq);
  pq->add_option("--min", qo.min, "Lower probability bound");
  pq->add_option("--max", qo.max, "Upper probability bound");
  pq->add_flag("--prob", qo.prob, "Also print the probability of the query");
  pq->add_flag("--trace", qo.trace, "Print every extension");

  auto* po = app.add_subcommand("prob-of", "Probability of an assertion in an alctp KB");
  add_query_args(po);

  auto* comb = app.add_subcommand("combine", "Combine HEAD and MODIFIER in a tcl KB");
  comb->add_option("kb", kb_path, "KB file")->required();
  comb->add_option("--head", co.head, "HEAD concept")->required();
  comb->add_option("--modifier", co.modifier, "MODIFIER concept")->required();
  comb->add_option("--emit", co.emit, "Write the revised KB here");
  comb->add_flag("--trace", co.trace, "Print every block with per-scenario verdicts");
  comb->add_flag("--no-role-saturation", co.no_role_saturation, "Plain satisfiability for scenario consistency");

  auto* orc = app.add_subcommand("oracle", "Brute-force model search");
  add_query_args(orc);
  orc->add_option("--domain-bound", bound, "Largest domain searched")->check(CLI::Range(1, 64))->capture_default_str();
  orc->add_flag("--canonical", canonical, "Minimal canonical models (rational closure) instead of all ranked models");

  for (auto* s : {check, q, rank, pq, po, comb, orc}) s->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (timeout > 0) {
    set_deadline(std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(timeout)));
  }
  struct Reset {
    ~Reset() { set_deadline(std::nullopt); }
  } reset;

  try {
    Verdict v;
    if (sub == check) {
      v = run_check(kb_path);
    } else if (sub == q) {
      v = run_query(kb_path, query, qo, false);
    } else if (sub == rank) {
      v = run_rank(kb_path, rank_concepts);
    } else if (sub == pq) {
      v = run_query(kb_path, query, qo, true);
    } else if (sub == po) {
      v = run_prob_of(kb_path, query);
    } else if (sub == comb) {
      v = run_combine(kb_path, co);
    } else {
      v = run_oracle(kb_path, query, bound, canonical);
    }
    v.command = command;
    emit(v, json, out);
    return v.code;
  } catch (const TimeoutError&) {
    emit_error(command, "timeout", "timeout after " + std::to_string(timeout) + " s", json, out, err);
  } catch (const ParseError& e) {
    emit_error(command, "parse", e.what(), json, out, err);
  } catch (const std::exception& e) {
    emit_error(command, "failed", e.what(), json, out, err);
  }
  return 2;
}

}  // namespace typdl::cli
