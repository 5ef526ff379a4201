#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "shl/rdf.hpp"

namespace shl::rdf {

namespace {

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_pn_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         static_cast<unsigned char>(c) >= 0x80;
}

class TurtleParser {
 public:
  TurtleParser(std::string_view text, GraphMode mode) : text_(text), graph_(mode) {
    prefixes_["rdf"] = std::string(ns::rdf);
    prefixes_["rdfs"] = std::string(ns::rdfs);
    prefixes_["xsd"] = std::string(ns::xsd);
    prefixes_["sh"] = std::string(ns::sh);
  }

  TripleGraph run() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
    return std::move(graph_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  TripleGraph graph_;
  std::map<std::string, std::string> prefixes_;
  std::string base_;
  std::map<std::string, std::string> blank_labels_;
  std::size_t blank_counter_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t k = 0) const { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; }

  char get() {
    if (at_end()) fail("unexpected end of input");
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  bool starts_with_keyword(std::string_view kw, bool case_insensitive = false) const {
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = text_[pos_ + i];
      char b = kw[i];
      if (case_insensitive ? std::tolower(static_cast<unsigned char>(a)) != std::tolower(static_cast<unsigned char>(b))
                           : a != b)
        return false;
    }
    char next = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : ' ';
    return !is_pn_char(next) && next != ':';
  }

  Term fresh_blank() { return Term::blank("b" + std::to_string(blank_counter_++)); }

  void statement() {
    if (peek() == '@') {
      get();
      if (starts_with_keyword("prefix")) {
        pos_ += 6, col_ += 6;
        prefix_decl();
        expect('.');
      } else if (starts_with_keyword("base")) {
        pos_ += 4, col_ += 4;
        skip_ws();
        base_ = iriref();
        expect('.');
      } else {
        fail("unknown directive");
      }
      return;
    }
    if (starts_with_keyword("PREFIX", true)) {
      pos_ += 6, col_ += 6;
      prefix_decl();
      return;
    }
    if (starts_with_keyword("BASE", true)) {
      pos_ += 4, col_ += 4;
      skip_ws();
      base_ = iriref();
      return;
    }
    triples();
    expect('.');
  }

  void prefix_decl() {
    skip_ws();
    std::string name;
    while (peek() != ':') {
      if (!is_pn_char(peek()) && peek() != '.') fail("malformed prefix name");
      name += get();
    }
    get();
    skip_ws();
    prefixes_[name] = iriref();
  }

  void triples() {
    skip_ws();
    if (peek() == '[') {
      Term subject = blank_property_list();
      skip_ws();
      if (peek() != '.') predicate_object_list(subject);
      return;
    }
    Term subject = node(/*subject_position=*/true);
    predicate_object_list(subject);
  }

  void predicate_object_list(const Term& subject) {
    for (;;) {
      skip_ws();
      Term verb = predicate();
      object_list(subject, verb);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        get();
        skip_ws();
      }
      if (peek() == '.' || peek() == ']' || at_end()) return;
    }
  }

  void object_list(const Term& subject, const Term& verb) {
    for (;;) {
      skip_ws();
      Term object = node(false);
      add(subject, verb, object);
      skip_ws();
      if (peek() != ',') return;
      get();
    }
  }

  void add(const Term& s, const Term& p, const Term& o) {
    try {
      graph_.insert(s, p, o);
    } catch (const GraphError& e) {
      fail(e.what());
    }
  }

  Term predicate() {
    skip_ws();
    if (peek() == 'a' && !is_pn_char(peek(1)) && peek(1) != ':') {
      get();
      return Term::iri(rdf_iri("type"));
    }
    if (peek() == '<' || is_pn_char(peek()) || peek() == ':') {
      Term t = node(false);
      if (!t.is_iri()) fail("predicate must be an IRI");
      return t;
    }
    fail("expected predicate");
  }

  Term node(bool subject_position) {
    skip_ws();
    char c = peek();
    std::size_t line = line_, col = col_;
    if (c == '<') return Term::iri(iriref());
    if (c == '_' && peek(1) == ':') {
      get();
      get();
      std::string label;
      while (is_pn_char(peek()) || (peek() == '.' && is_pn_char(peek(1)))) label += get();
      if (label.empty()) fail("empty blank node label");
      auto [it, inserted] = blank_labels_.try_emplace(label);
      if (inserted) it->second = "b" + std::to_string(blank_counter_++);
      return Term::blank(it->second);
    }
    if (c == '[') {
      if (subject_position) fail("unexpected '['");
      return blank_property_list();
    }
    if (c == '(') return collection();
    Term result;
    if (c == '"' || c == '\'') {
      result = string_literal();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
               (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      result = numeric_literal();
    } else if (starts_with_keyword("true")) {
      pos_ += 4, col_ += 4;
      result = Term::boolean(true);
    } else if (starts_with_keyword("false")) {
      pos_ += 5, col_ += 5;
      result = Term::boolean(false);
    } else {
      return Term::iri(prefixed_name());
    }
    if (subject_position && graph_.mode() == GraphMode::Strict)
      throw ParseError("literal in subject position", line, col);
    return result;
  }

  Term blank_property_list() {
    expect('[');
    Term subject = fresh_blank();
    skip_ws();
    if (peek() != ']') predicate_object_list(subject);
    expect(']');
    return subject;
  }

  Term collection() {
    expect('(');
    std::vector<Term> items;
    for (;;) {
      skip_ws();
      if (peek() == ')') break;
      if (at_end()) fail("unterminated collection");
      items.push_back(node(false));
    }
    get();
    Term head = Term::iri(rdf_iri("nil"));
    std::vector<Term> cells;
    for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(fresh_blank());
    for (std::size_t i = 0; i < items.size(); ++i) {
      add(cells[i], Term::iri(rdf_iri("first")), items[i]);
      add(cells[i], Term::iri(rdf_iri("rest")), i + 1 < items.size() ? cells[i + 1] : head);
    }
    return items.empty() ? head : cells.front();
  }

  std::string iriref() {
    if (peek() != '<') fail("expected IRI");
    get();
    std::string out;
    while (peek() != '>') {
      if (at_end()) fail("unterminated IRI");
      char c = get();
      if (c == '\\') {
        char e = get();
        if (e == 'u' || e == 'U') out += hex_escape(e == 'u' ? 4 : 8);
        else fail("bad escape in IRI");
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        fail("whitespace in IRI");
      } else {
        out += c;
      }
    }
    get();
    if (!base_.empty() && out.find(':') == std::string::npos) out = base_ + out;
    return out;
  }

  std::string hex_escape(int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      char h = get();
      if (!std::isxdigit(static_cast<unsigned char>(h))) fail("bad hex escape");
      cp = cp * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(h))
                                                    ? h - '0'
                                                    : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
    }
    std::string out;
    append_utf8(out, cp);
    return out;
  }

  std::string prefixed_name() {
    std::string prefix;
    while (peek() != ':') {
      if (!is_pn_char(peek()) && !(peek() == '.' && is_pn_char(peek(1)))) fail("expected term");
      prefix += get();
    }
    get();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + "'");
    std::string local;
    for (;;) {
      char c = peek();
      if (is_pn_char(c) || c == ':') {
        local += get();
      } else if (c == '.' && (is_pn_char(peek(1)) || peek(1) == ':')) {
        local += get();
      } else if (c == '%' && std::isxdigit(static_cast<unsigned char>(peek(1)))) {
        local += get();
        local += get();
        local += get();
      } else if (c == '\\') {
        get();
        local += get();
      } else {
        break;
      }
    }
    return it->second + local;
  }

  Term string_literal() {
    char quote = get();
    bool long_form = peek() == quote && peek(1) == quote;
    if (long_form) {
      get();
      get();
    }
    std::string lex;
    for (;;) {
      if (at_end()) fail("unterminated string");
      char c = peek();
      if (long_form) {
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          get();
          get();
          get();
          break;
        }
      } else {
        if (c == quote) {
          get();
          break;
        }
        if (c == '\n') fail("newline in string");
      }
      get();
      if (c == '\\') {
        char e = get();
        switch (e) {
          case 't': lex += '\t'; break;
          case 'n': lex += '\n'; break;
          case 'r': lex += '\r'; break;
          case 'b': lex += '\b'; break;
          case 'f': lex += '\f'; break;
          case '"': lex += '"'; break;
          case '\'': lex += '\''; break;
          case '\\': lex += '\\'; break;
          case 'u': lex += hex_escape(4); break;
          case 'U': lex += hex_escape(8); break;
          default: fail("bad string escape");
        }
      } else {
        lex += c;
      }
    }
    if (peek() == '@') {
      get();
      std::string tag;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-') tag += get();
      if (tag.empty()) fail("empty language tag");
      return Term::literal(lex, std::nullopt, tag);
    }
    if (peek() == '^' && peek(1) == '^') {
      get();
      get();
      std::string dt = peek() == '<' ? iriref() : prefixed_name();
      return Term::literal(lex, dt);
    }
    return Term::literal(lex);
  }

  Term numeric_literal() {
    std::string lex;
    if (peek() == '+' || peek() == '-') lex += get();
    bool digits = false, dot = false, exp = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) lex += get(), digits = true;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      dot = true;
      lex += get();
      while (std::isdigit(static_cast<unsigned char>(peek()))) lex += get(), digits = true;
    }
    if ((peek() == 'e' || peek() == 'E') && digits) {
      exp = true;
      lex += get();
      if (peek() == '+' || peek() == '-') lex += get();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
      while (std::isdigit(static_cast<unsigned char>(peek()))) lex += get();
    }
    if (!digits) fail("malformed number");
    return Term::literal(lex, xsd_iri(exp ? "double" : dot ? "decimal" : "integer"));
  }
};

struct Compactor {
  std::vector<std::pair<std::string, std::string>> prefixes = {
      {"rdf", std::string(ns::rdf)}, {"rdfs", std::string(ns::rdfs)},
      {"xsd", std::string(ns::xsd)}, {"sh", std::string(ns::sh)}};

  std::string iri(const std::string& value) const {
    for (const auto& [name, base] : prefixes) {
      if (value.size() > base.size() && value.compare(0, base.size(), base) == 0) {
        std::string_view local(value.data() + base.size(), value.size() - base.size());
        bool simple = std::all_of(local.begin(), local.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
        });
        if (simple && !std::isdigit(static_cast<unsigned char>(local.front())) && local.front() != '-')
          return name + ":" + std::string(local);
      }
    }
    return "<" + value + ">";
  }
};

}  // namespace

TripleGraph parse_turtle(std::string_view text, GraphMode mode) { return TurtleParser(text, mode).run(); }

std::string serialize_turtle(const TripleGraph& graph) {
  Compactor compact;
  std::ostringstream out;
  for (const auto& [name, base] : compact.prefixes) out << "@prefix " << name << ": <" << base << "> .\n";
  std::map<std::string, std::string> labels;
  auto term = [&](const Term& t) -> std::string {
    switch (t.kind()) {
      case TermKind::Iri: return compact.iri(t.lexical());
      case TermKind::Blank: {
        auto [it, inserted] = labels.try_emplace(t.lexical());
        if (inserted) it->second = "b" + std::to_string(labels.size() - 1);
        return "_:" + it->second;
      }
      case TermKind::Literal: {
        std::string s = "\"" + escape_string(t.lexical()) + "\"";
        if (t.language()) s += "@" + *t.language();
        else if (t.datatype()) s += "^^" + compact.iri(*t.datatype());
        return s;
      }
    }
    return {};
  };
  for (const auto& t : graph.triples()) {
    std::string s = term(t.subject);
    std::string p = term(t.predicate);
    std::string o = term(t.object);
    out << s << " " << p << " " << o << " .\n";
  }
  return out.str();
}

}  // namespace shl::rdf
