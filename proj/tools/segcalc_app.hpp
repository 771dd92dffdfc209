#pragma once

// The segcalc command line, as a function from arguments to an outcome so that
// tests can drive it without spawning processes.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "segcalc/segcalc.hpp"

namespace segcalc::app {

enum class Status { Ok, CheckFailed, ParseError, PreconditionError };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Ok: return "OK";
    case Status::CheckFailed: return "CHECK_FAILED";
    case Status::ParseError: return "PARSE_ERROR";
    case Status::PreconditionError: return "PRECONDITION_ERROR";
  }
  return "UNKNOWN";
}

struct Diagnostic {
  std::string code;
  std::string message;
  std::optional<std::size_t> column;
};

struct CommandOutcome {
  Status status = Status::Ok;
  std::string payload;
  std::vector<Diagnostic> diagnostics;

  int exit_code() const {
    switch (status) {
      case Status::Ok: return 0;
      case Status::CheckFailed: return 1;
      case Status::ParseError: return 2;
      case Status::PreconditionError: return 3;
    }
    return 3;
  }
};

namespace detail {

struct Options {
  std::string ctx_file;
  bool json = false;
  std::uint64_t seed = 7;
  std::int64_t max_deg = 6;
  std::int64_t n = 0;
  std::int64_t p = 101;
  std::size_t samples = 32;
  bool expand = false;
  bool all = false;
  bool classical = false;
  std::string word;
  std::vector<std::string> exprs;
};

using nlohmann::json;

/// The declared catalog, or one made up from the line ids the inputs mention:
/// characteristic zero by default, or a context of order n when --n is given.
inline Catalog resolve_catalog(const Options& opt, const std::vector<std::string>& line_ids) {
  if (!opt.ctx_file.empty()) {
    std::ifstream in(opt.ctx_file);
    if (!in) throw Error(ErrorCode::InvalidContext, "cannot read context file '" + opt.ctx_file + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::InvalidContext, std::string("context file is not valid JSON: ") + e.what());
    }
    try {
      return catalog_from_json(doc);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::InvalidContext, std::string("malformed context: ") + e.what());
    }
  }
  const Context ctx = opt.n > 0 ? context_with_order(opt.n) : Context::char_zero();
  std::vector<std::string> ids = line_ids;
  if (ids.empty()) ids.push_back("L");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<CuspidalLine> lines;
  for (const auto& id : ids) {
    CuspidalLine line;
    line.id = id;
    line.dual = id;
    line.twist = ctx.is_modular() ? Twist{std::int64_t{1}} : Twist{id};
    lines.push_back(std::move(line));
  }
  return Catalog(ctx, std::move(lines));
}

inline std::vector<std::string> term_lines(const std::vector<std::string>& exprs) {
  std::vector<std::string> ids;
  for (const auto& e : exprs)
    for (const auto& t : parse_terms(e)) ids.push_back(t.line);
  return ids;
}

inline std::vector<std::string> letter_lines(const std::vector<std::string>& words) {
  std::vector<std::string> ids;
  for (const auto& w : words)
    for (const auto& x : parse_letters(w)) ids.push_back(x.line);
  return ids;
}

inline json segment_json(const Catalog& cat, const Segment& s) {
  return json{{"line", cat.line(s.line).id}, {"a", s.a}, {"b", s.b()}};
}

inline json multisegment_json(const Catalog& cat, const Multisegment& m) {
  json segs = json::array();
  for (const auto& s : m) segs.push_back(segment_json(cat, s));
  return json{{"text", to_string(cat, m)}, {"segments", segs}};
}

inline json word_json(const Catalog& cat, const Word& w) {
  json letters = json::array();
  for (const auto& x : w) letters.push_back(json{{"line", cat.line(x.line).id}, {"residue", x.residue}});
  return json{{"text", to_string(cat, w)}, {"letters", letters}};
}

inline json lfactor_json(const LFactorInv& l) {
  json factors = json::array();
  for (const auto& r : l.factors()) {
    json f{{"f", r.f()}};
    if (r.is_modular()) {
      f["beta"] = r.beta();
      f["beta_power"] = r.beta_power();
    } else {
      f["twist"] = r.formal_beta().twist;
      f["q_power"] = r.formal_beta().q_power;
    }
    factors.push_back(f);
  }
  return json{{"text", l.to_string()}, {"factors", factors}};
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

/// Text and JSON renderings of a successful result.
struct Rendered {
  std::string text;
  json data;
};

inline CheckOptions check_options(const Options& opt) {
  CheckOptions c;
  if (opt.n > 0) c.orders = {opt.n};
  c.max_deg = opt.max_deg;
  c.p = opt.p;
  c.samples = opt.samples;
  c.seed = opt.seed;
  if (opt.classical) c.relations = SerreRelations::Classical;
  return c;
}

inline std::string check_table(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.suite << "  cases=" << r.cases;
    if (r.counterexample) out << "  counterexample: " << *r.counterexample;
    out << '\n';
  }
  std::string s = out.str();
  if (!s.empty()) s.pop_back();
  return s;
}

inline json check_json(const std::vector<CheckResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json j{{"suite", r.suite}, {"passed", r.passed}, {"cases", r.cases}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace detail

/// Runs one invocation. argv[0] is the program name. Check suites report
/// progress on `progress`.
inline CommandOutcome run(const std::vector<std::string>& argv, std::ostream& progress = std::cerr) {
  using detail::json;
  detail::Options opt;
  CLI::App cli{"Multisegments, generic extensions and modular L-factors", "segcalc"};
  cli.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ctx", opt.ctx_file, "JSON context and line declarations");
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--max-deg", opt.max_deg, "largest total length for check suites");
    sub->add_option("--n", opt.n, "line order / number of quiver vertices");
    sub->add_option("--p", opt.p, "prime of the oracle field");
    sub->add_option("--samples", opt.samples, "random cocycles per generic extension");
  };
  auto with_exprs = [&](const std::string& name, const std::string& help, int count) {
    CLI::App* sub = cli.add_subcommand(name, help);
    common(sub);
    sub->add_option("exprs", opt.exprs, "multisegment expressions")->expected(count)->required(count > 0);
    return sub;
  };

  CLI::App* parse = with_exprs("parse", "canonical form of a multisegment", 1);
  CLI::App* order = with_exprs("order", "whether EXPR1 <= EXPR2 in the degeneration order", 2);
  CLI::App* below = with_exprs("aperiodic-below", "maximal aperiodic multisegments below EXPR", 1);
  below->add_flag("--all", opt.all, "list every aperiodic multisegment below, not only maxima");
  CLI::App* genext = cli.add_subcommand("genext", "m_gen of a word");
  common(genext);
  genext->add_option("--word", opt.word, "letters LINE:i separated by commas")->required();
  CLI::App* word_of_cmd = with_exprs("word-of", "a word w with m_gen(w) = EXPR", 1);
  CLI::App* star_cmd = with_exprs("star", "generic-extension product of two aperiodic multisegments", 2);
  CLI::App* serre = cli.add_subcommand("serre-eq", "whether two words are related by the Serre relations");
  common(serre);
  serre->add_option("words", opt.exprs, "two words")->expected(2)->required();
  serre->add_flag("--classical", opt.classical, "use only the classical relations");
  CLI::App* lfactor = with_exprs("lfactor", "L-factor of a pair of multisegments", 2);
  lfactor->add_flag("--expand", opt.expand, "also print the expanded inverse polynomial");
  CLI::App* divides_cmd =
      with_exprs("divides", "whether L(M1,N1)^-1 divides L(M2,N2)^-1 (arguments M1 N1 M2 N2)", 4);
  CLI::App* oracle = cli.add_subcommand("oracle", "explicit quiver-representation computations");
  oracle->require_subcommand(1);
  CLI::App* oracle_genext = oracle->add_subcommand("genext", "generic extension by cocycle search");
  common(oracle_genext);
  oracle_genext->add_option("exprs", opt.exprs, "quotient and sub multisegments")->expected(2)->required();
  CLI::App* oracle_order = oracle->add_subcommand("check-order", "leq against the Hom-order");
  common(oracle_order);
  CLI::App* check = cli.add_subcommand("check", "run a named property suite, or all");
  common(check);
  std::string suite;
  check->add_option("suite", suite, "suite name")->required();
  check->add_flag("--classical", opt.classical, "Serre suite with only the classical relations");

  CommandOutcome out;
  auto fail = [&](Status status, std::string code, std::string message, std::optional<std::size_t> column = {}) {
    out.status = status;
    out.diagnostics.push_back({std::move(code), std::move(message), column});
  };

  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    cli.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out.payload = cli.help();
    return out;
  } catch (const CLI::CallForAllHelp&) {
    out.payload = cli.help("", CLI::AppFormatMode::All);
    return out;
  } catch (const CLI::ParseError& e) {
    fail(Status::ParseError, "UsageError", e.what());
    return out;
  }

  detail::Rendered result;
  try {
    auto catalog_for_exprs = [&] { return detail::resolve_catalog(opt, detail::term_lines(opt.exprs)); };
    if (parse->parsed()) {
      const Catalog cat = catalog_for_exprs();
      const Multisegment m = parse_multisegment(cat, opt.exprs[0]);
      result = {to_string(cat, m), detail::multisegment_json(cat, m)};
    } else if (order->parsed()) {
      const Catalog cat = catalog_for_exprs();
      const bool v = leq(cat, parse_multisegment(cat, opt.exprs[0]), parse_multisegment(cat, opt.exprs[1]));
      result = {detail::bool_text(v), json(v)};
    } else if (below->parsed()) {
      const Catalog cat = catalog_for_exprs();
      const auto set = aperiodic_below(cat, parse_multisegment(cat, opt.exprs[0]), opt.all);
      std::string text;
      json arr = json::array();
      for (const auto& m : set) {
        text += (text.empty() ? "" : "\n") + to_string(cat, m);
        arr.push_back(detail::multisegment_json(cat, m));
      }
      result = {text, arr};
    } else if (genext->parsed()) {
      const Catalog cat = detail::resolve_catalog(opt, detail::letter_lines({opt.word}));
      const Multisegment m = m_gen(cat, parse_word(cat, opt.word));
      result = {to_string(cat, m), detail::multisegment_json(cat, m)};
    } else if (word_of_cmd->parsed()) {
      const Catalog cat = catalog_for_exprs();
      const Word w = word_of(cat, parse_multisegment(cat, opt.exprs[0]));
      result = {to_string(cat, w), detail::word_json(cat, w)};
    } else if (star_cmd->parsed()) {
      const Catalog cat = catalog_for_exprs();
      const Multisegment m = star(cat, parse_multisegment(cat, opt.exprs[0]), parse_multisegment(cat, opt.exprs[1]));
      result = {to_string(cat, m), detail::multisegment_json(cat, m)};
    } else if (serre->parsed()) {
      const Catalog cat = detail::resolve_catalog(opt, detail::letter_lines(opt.exprs));
      const bool v = serre_equivalent(cat, parse_word(cat, opt.exprs[0]), parse_word(cat, opt.exprs[1]),
                                      opt.classical ? SerreRelations::Classical : SerreRelations::WithCycle);
      result = {detail::bool_text(v), json(v)};
    } else if (lfactor->parsed()) {
      const Catalog cat = catalog_for_exprs();
      const auto l = l_multisegment(cat, parse_multisegment(cat, opt.exprs[0]), parse_multisegment(cat, opt.exprs[1]));
      result = {l.to_string(), detail::lfactor_json(l)};
      if (opt.expand) {
        const auto poly = expand(cat, l);
        result.text += '\n' + poly.to_string();
        result.data["expanded"] = {{"text", poly.to_string()}, {"coefficients", poly.coeffs()}};
      }
    } else if (divides_cmd->parsed()) {
      const Catalog cat = catalog_for_exprs();
      auto pm = [&](std::size_t k) { return parse_multisegment(cat, opt.exprs[k]); };
      const bool v = divides(cat, l_multisegment(cat, pm(0), pm(1)), l_multisegment(cat, pm(2), pm(3)));
      result = {detail::bool_text(v), json(v)};
    } else if (oracle_genext->parsed()) {
      if (opt.n <= 0 && opt.ctx_file.empty()) throw Error(ErrorCode::PreconditionViolated, "oracle genext needs --n or --ctx");
      const Catalog cat = catalog_for_exprs();
      const Multisegment m = parse_multisegment(cat, opt.exprs[0]);
      const Multisegment n = parse_multisegment(cat, opt.exprs[1]);
      const auto lines = (m + n).lines();
      if (lines.size() > 1) throw Error(ErrorCode::DifferentLines, "the oracle works on one line");
      const LineId line = lines.empty() ? 0 : lines.front();
      const Period o = cat.period(line);
      if (!o.is_finite()) throw Error(ErrorCode::InfiniteOrder, "the cyclic quiver needs a finite line");
      Multisegment x = generic_ext_oracle(o.n, m, n, opt.p, opt.samples, opt.seed);
      std::vector<Segment> placed(x.begin(), x.end());
      for (auto& s : placed) s.line = line;
      x = Multisegment(std::move(placed));
      result = {to_string(cat, x), detail::multisegment_json(cat, x)};
      result.data["seed"] = opt.seed;
      result.data["samples"] = opt.samples;
      result.data["p"] = opt.p;
    } else if (oracle_order->parsed()) {
      CheckOptions c = detail::check_options(opt);
      if (opt.n <= 0) c.orders = {2, 3};
      progress << "running order-oracle\n";
      const std::vector<CheckResult> rs{check_order_oracle(c)};
      result = {detail::check_table(rs), detail::check_json(rs)};
      if (!rs.front().passed) out.status = Status::CheckFailed;
    } else if (check->parsed()) {
      const CheckOptions c = detail::check_options(opt);
      std::vector<CheckResult> rs;
      bool found = false;
      for (const auto& [name, fn] : check_suites()) {
        if (suite != "all" && suite != name) continue;
        found = true;
        progress << "running " << name << '\n';
        rs.push_back(fn(c));
      }
      if (!found) {
        std::string names;
        for (const auto& s : check_suites()) names += " " + s.first;
        throw Error(ErrorCode::PreconditionViolated, "unknown suite '" + suite + "'; known:" + names + " all");
      }
      result = {detail::check_table(rs), detail::check_json(rs)};
      for (const auto& r : rs)
        if (!r.passed) {
          out.status = Status::CheckFailed;
          out.diagnostics.push_back({"CheckFailed", r.suite + ": " + r.counterexample.value_or(""), std::nullopt});
        }
    }
  } catch (const ParseError& e) {
    fail(Status::ParseError, "ParseError", e.what(), e.column());
  } catch (const Error& e) {
    fail(Status::PreconditionError, std::string(to_string(e.code())), e.what());
  }

  if (opt.json) {
    json doc{{"schema", 1}, {"status", to_string(out.status)}};
    if (out.status == Status::Ok || out.status == Status::CheckFailed) doc["result"] = result.data;
    json diags = json::array();
    for (const auto& d : out.diagnostics) {
      json j{{"code", d.code}, {"message", d.message}};
      if (d.column) j["column"] = *d.column;
      diags.push_back(j);
    }
    doc["diagnostics"] = diags;
    out.payload = doc.dump(2);
  } else if (out.status == Status::Ok || out.status == Status::CheckFailed) {
    out.payload = result.text;
  }
  return out;
}

}  // namespace segcalc::app
