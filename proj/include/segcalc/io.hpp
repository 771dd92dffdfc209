#pragma once

// Text grammar for multisegments and words, and JSON catalog declarations.
//
//   expr   := "0" | term ("+" term)*
//   term   := LINEID "[" int "," int "]"
//   word   := "" | letter ("," letter)*
//   letter := LINEID ":" int
//
// Whitespace is ignored everywhere. "0" denotes the empty multisegment.

#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "segcalc/context.hpp"
#include "segcalc/multisegment.hpp"
#include "segcalc/word.hpp"

namespace segcalc {

/// A syntactically valid term before line ids are resolved.
struct RawTerm {
  std::string line;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::size_t column = 1;
};

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t column() const { return pos_ + 1; }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(column(), std::string("expected '") + c + "'" + found());
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    auto ident_char = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    };
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      throw ParseError(column(), "expected a line id" + found());
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      throw ParseError(column(), "expected an integer" + found());
    }
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      throw ParseError(start + 1, "integer out of range");
    }
  }

 private:
  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::vector<RawTerm> parse_terms(std::string_view text) {
  detail::Scanner in(text);
  std::vector<RawTerm> terms;
  if (in.peek() == '0') {
    in.expect('0');
    if (!in.at_end()) throw ParseError(in.column(), "unexpected input after empty multisegment");
    return terms;
  }
  do {
    RawTerm t;
    in.skip_space();
    t.column = in.column();
    t.line = in.identifier();
    in.expect('[');
    t.a = in.integer();
    in.expect(',');
    t.b = in.integer();
    in.expect(']');
    if (t.b < t.a) throw ParseError(t.column, "segment end precedes its start");
    terms.push_back(std::move(t));
  } while (in.accept('+'));
  if (!in.at_end()) throw ParseError(in.column(), "expected '+' or end of input");
  return terms;
}

inline Multisegment parse_multisegment(const Catalog& cat, std::string_view text) {
  std::vector<Segment> segs;
  for (const auto& t : parse_terms(text)) segs.push_back(make_segment(cat, cat.find(t.line), t.a, t.b));
  return Multisegment(std::move(segs));
}

struct RawLetter {
  std::string line;
  std::int64_t residue = 0;
};

inline std::vector<RawLetter> parse_letters(std::string_view text) {
  detail::Scanner in(text);
  std::vector<RawLetter> letters;
  if (in.at_end()) return letters;
  do {
    RawLetter x;
    x.line = in.identifier();
    in.expect(':');
    x.residue = in.integer();
    letters.push_back(std::move(x));
  } while (in.accept(','));
  if (!in.at_end()) throw ParseError(in.column(), "expected ',' or end of input");
  return letters;
}

inline Word parse_word(const Catalog& cat, std::string_view text) {
  Word w;
  for (const auto& x : parse_letters(text)) w.push_back(normalize(cat, Letter{cat.find(x.line), x.residue}));
  return w;
}

inline std::string to_string(const Catalog& cat, const Segment& s) {
  std::ostringstream out;
  out << cat.line(s.line).id << '[' << s.a << ',' << s.b() << ']';
  return out.str();
}

inline std::string to_string(const Catalog& cat, const Multisegment& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& s : m) {
    if (!out.empty()) out += '+';
    out += to_string(cat, s);
  }
  return out;
}

inline std::string to_string(const Catalog& cat, const Word& w) {
  std::string out;
  for (const auto& x : w) {
    if (!out.empty()) out += ',';
    out += cat.line(x.line).id + ':' + std::to_string(x.residue);
  }
  return out;
}

/// Reads {"mode":"modular","ell":5,"q":3,"lines":[{"id":"L","f":1,"dual":"L","twist":1,"deg":1}]}.
/// Omitted line fields default to f = 1, dual = id, deg = 1, and twist = 1
/// (modular) or the line id (characteristic zero).
inline Catalog catalog_from_json(const nlohmann::json& doc) {
  std::string mode = doc.value("mode", "modular");
  for (auto& c : mode) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  Context ctx = Context::char_zero();
  if (mode == "modular") {
    if (!doc.contains("ell") || !doc.contains("q"))
      throw Error(ErrorCode::InvalidContext, "modular mode needs integer 'ell' and 'q'");
    ctx = Context::modular(doc.at("ell").get<std::int64_t>(), doc.at("q").get<std::int64_t>());
  } else if (mode != "char0" && mode != "char_zero" && mode != "characteristic_zero") {
    throw Error(ErrorCode::InvalidContext, "unknown mode '" + mode + "'");
  }
  std::vector<CuspidalLine> lines;
  for (const auto& entry : doc.value("lines", nlohmann::json::array())) {
    CuspidalLine line;
    line.id = entry.at("id").get<std::string>();
    line.f = entry.value("f", std::int64_t{1});
    line.dual = entry.value("dual", line.id);
    line.deg = entry.value("deg", std::int64_t{1});
    if (entry.contains("twist")) {
      const auto& t = entry.at("twist");
      if (t.is_string())
        line.twist = t.get<std::string>();
      else
        line.twist = t.get<std::int64_t>();
    } else {
      line.twist = ctx.is_modular() ? Twist{std::int64_t{1}} : Twist{line.id};
    }
    lines.push_back(std::move(line));
  }
  return Catalog(ctx, std::move(lines));
}

inline nlohmann::json to_json(const Catalog& cat) {
  nlohmann::json doc;
  const Context& ctx = cat.context();
  doc["mode"] = ctx.is_modular() ? "modular" : "char0";
  if (ctx.is_modular()) {
    doc["ell"] = ctx.ell();
    doc["q"] = ctx.q();
  }
  doc["lines"] = nlohmann::json::array();
  for (const auto& line : cat.lines()) {
    nlohmann::json entry{{"id", line.id}, {"f", line.f}, {"dual", line.dual}, {"deg", line.deg}};
    std::visit([&](const auto& t) { entry["twist"] = t; }, line.twist);
    doc["lines"].push_back(entry);
  }
  return doc;
}

}  // namespace segcalc
