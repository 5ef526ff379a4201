#include <cctype>
#include <map>
#include <regex>

#include "shl/scl.hpp"

namespace shl::scl {

SyntaxError::SyntaxError(const std::string& what, std::size_t line_, std::size_t column_)
    : std::runtime_error(what + " at line " + std::to_string(line_) + ", column " + std::to_string(column_)),
      line(line_),
      column(column_) {}

namespace {

const std::vector<std::pair<std::string, std::string>>& known_prefixes() {
  static const std::vector<std::pair<std::string, std::string>> p = {
      {"rdf", std::string(rdf::ns::rdf)}, {"rdfs", std::string(rdf::ns::rdfs)},
      {"xsd", std::string(rdf::ns::xsd)}, {"sh", std::string(rdf::ns::sh)},
      {"", "http://example.org/"}};
  return p;
}

bool simple_local(const std::string& s) {
  static const std::regex re(R"([A-Za-z_][A-Za-z0-9_\-]*)");
  return std::regex_match(s, re);
}

std::string print_iri(const std::string& iri) {
  for (const auto& [name, base] : known_prefixes()) {
    if (iri.size() > base.size() && iri.compare(0, base.size(), base) == 0) {
      std::string local = iri.substr(base.size());
      if (simple_local(local)) return name + ":" + local;
    }
  }
  return "<" + iri + ">";
}

std::string quoted(const std::string& s) { return "\"" + rdf::escape_string(s) + "\""; }

}  // namespace

std::string print_term(const Term& term) {
  switch (term.kind()) {
    case rdf::TermKind::Iri: return print_iri(term.lexical());
    case rdf::TermKind::Blank: return "_:" + term.lexical();
    case rdf::TermKind::Literal: {
      static const std::regex integer_re(R"(-?[0-9]+)");
      if (term.datatype() && *term.datatype() == rdf::xsd_iri("integer") &&
          std::regex_match(term.lexical(), integer_re))
        return term.lexical();
      std::string out = quoted(term.lexical());
      if (term.language()) return out + "@" + *term.language();
      if (term.datatype()) return out + "^^" + print_iri(*term.datatype());
      return out;
    }
  }
  return {};
}

std::string print_filter(const FilterName& f) {
  std::string body;
  switch (f.kind) {
    case FilterKind::IsIri: body = "iri"; break;
    case FilterKind::IsLiteral: body = "literal"; break;
    case FilterKind::IsBlank: body = "blank"; break;
    case FilterKind::Datatype: body = "datatype " + print_iri(f.text); break;
    case FilterKind::LanguageTag: body = "lang " + quoted(f.text); break;
    case FilterKind::MinLength: body = "minlength " + std::to_string(f.length); break;
    case FilterKind::MaxLength: body = "maxlength " + std::to_string(f.length); break;
    case FilterKind::Pattern: body = "pattern " + quoted(f.text); break;
    case FilterKind::MinExclusive: body = "minexclusive " + print_term(f.bound); break;
    case FilterKind::MinInclusive: body = "mininclusive " + print_term(f.bound); break;
    case FilterKind::MaxExclusive: body = "maxexclusive " + print_term(f.bound); break;
    case FilterKind::MaxInclusive: body = "maxinclusive " + print_term(f.bound); break;
  }
  if (f.via_order) body += " order";
  return "(filter " + body + ")";
}

std::string print(const PathExpr& p) {
  switch (p.kind()) {
    case PathExpr::Kind::Atom: return (p.inverted() ? "(inv " : "(rel ") + print_iri(p.relation().lexical()) + ")";
    case PathExpr::Kind::Sequence: return "(seq " + print(p.left()) + " " + print(p.right()) + ")";
    case PathExpr::Kind::ZeroOrOne: return "(opt " + print(p.left()) + ")";
    case PathExpr::Kind::Alternative: return "(alt " + print(p.left()) + " " + print(p.right()) + ")";
    case PathExpr::Kind::Star: return "(star " + print(p.left()) + ")";
  }
  return {};
}

std::string print(const Formula& g) {
  using K = Formula::Kind;
  switch (g.kind()) {
    case K::Top: return "(top)";
    case K::EqConst: return "(eq " + print_term(g.constant()) + ")";
    case K::Filter: return print_filter(g.filter());
    case K::HasShape: return "(hasshape " + print_term(g.shape().term) + ")";
    case K::Not: return "(not " + print(g.operand()) + ")";
    case K::And: return "(and " + print(g.left()) + " " + print(g.right()) + ")";
    case K::Count:
      return "(count>= " + std::to_string(g.count()) + " " + print(g.path()) + " " + print(g.body()) + ")";
    case K::Disjoint: return "(disjoint " + print(g.path()) + " " + print_iri(g.relation().lexical()) + ")";
    case K::Equals: return "(equals " + print(g.path()) + " " + print_iri(g.relation().lexical()) + ")";
    case K::Order:
      return "(order " + print(g.path()) + " " + print_iri(g.relation().lexical()) +
             (g.op() == OrderOp::Less ? " lt" : " le") + (g.inverted() ? " inv)" : " fwd)");
  }
  return {};
}

namespace {

std::string print_sentence(const Sentence& s, int indent) {
  using K = Sentence::Kind;
  switch (s.kind()) {
    case K::Top: return "(top)";
    case K::And: {
      std::string pad(indent + 2, ' ');
      return "(and\n" + pad + print_sentence(s.left(), indent + 2) + "\n" + pad +
             print_sentence(s.right(), indent + 2) + ")";
    }
    case K::AtConst: return "(at " + print_term(s.constant()) + " " + print(s.body()) + ")";
    case K::ForClass: return "(for-class " + print_term(s.constant()) + " " + print(s.body()) + ")";
    case K::ForSubjects:
      return std::string(s.inverted() ? "(for-objects " : "(for-subjects ") + print_term(s.constant()) + " " +
             print(s.body()) + ")";
    case K::ShapeDef: return "(def-shape " + print_term(s.shape().term) + " " + print(s.body()) + ")";
    case K::AtMost: return "(at-most " + std::to_string(s.bound()) + " " + print(s.body()) + ")";
  }
  return {};
}

}  // namespace

std::string print(const Sentence& s) { return print_sentence(s, 0); }

// ---- parser ---------------------------------------------------------------

namespace {

struct Token {
  enum Kind { Open, Close, Word, Iri, String, End } kind;
  std::string text;
  std::size_t line = 0, column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t{Token::End, {}, line_, column_};
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (c == '(' || c == ')') {
      advance();
      t.kind = c == '(' ? Token::Open : Token::Close;
      return t;
    }
    if (c == '<') {
      advance();
      t.kind = Token::Iri;
      while (pos_ < text_.size() && text_[pos_] != '>') {
        if (std::isspace(static_cast<unsigned char>(text_[pos_]))) fail("whitespace in IRI", t);
        t.text += advance();
      }
      if (pos_ >= text_.size()) fail("unterminated IRI", t);
      advance();
      return t;
    }
    if (c == '"') {
      advance();
      t.kind = Token::String;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated string", t);
        char d = advance();
        if (d == '"') break;
        if (d == '\\') {
          if (pos_ >= text_.size()) fail("unterminated escape", t);
          char e = advance();
          switch (e) {
            case 'n': t.text += '\n'; break;
            case 't': t.text += '\t'; break;
            case 'r': t.text += '\r'; break;
            case '"': t.text += '"'; break;
            case '\\': t.text += '\\'; break;
            default: fail(std::string("unknown escape \\") + e, t);
          }
        } else {
          t.text += d;
        }
      }
      return t;
    }
    t.kind = Token::Word;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')' && text_[pos_] != '"' && text_[pos_] != ';')
      t.text += advance();
    return t;
  }

  // Literal suffixes are glued to the closing quote.
  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  [[noreturn]] static void fail(const std::string& what, const Token& t) { throw SyntaxError(what, t.line, t.column); }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { shift(); }

  Sentence sentence() {
    Token open = expect(Token::Open, "'('");
    std::string head = keyword();
    Sentence out = Sentence::top();
    if (head == "top") {
    } else if (head == "and") {
      std::vector<Sentence> items;
      while (tok_.kind == Token::Open) items.push_back(sentence());
      if (items.empty()) return close(Sentence::top());
      out = fold(items, [](Sentence a, Sentence b) { return Sentence::conjunction(std::move(a), std::move(b)); });
    } else if (head == "at") {
      Term c = term();
      out = Sentence::at(std::move(c), formula());
    } else if (head == "for-class") {
      Term c = term();
      out = Sentence::for_class(std::move(c), formula());
    } else if (head == "for-subjects" || head == "for-objects") {
      Term r = iri();
      out = Sentence::for_subjects(std::move(r), head == "for-objects", formula());
    } else if (head == "def-shape") {
      Term n = term();
      out = Sentence::define(ShapeName{std::move(n)}, formula());
    } else if (head == "at-most") {
      std::uint64_t n = natural();
      out = Sentence::at_most(n, formula());
    } else {
      Lexer::fail("unknown sentence form '" + head + "'", open);
    }
    return close(out);
  }

  Formula formula() {
    Token open = expect(Token::Open, "'('");
    std::string head = keyword();
    Formula out = Formula::top();
    if (head == "top") {
    } else if (head == "bottom") {
      out = Formula::bottom();
    } else if (head == "eq") {
      out = Formula::eq(term());
    } else if (head == "filter") {
      out = Formula::filter(filter_args(open));
    } else if (head == "hasshape") {
      out = Formula::has_shape(ShapeName{term()});
    } else if (head == "not") {
      out = Formula::negation(formula());
    } else if (head == "and" || head == "or") {
      std::vector<Formula> items;
      while (tok_.kind == Token::Open) items.push_back(formula());
      out = head == "and" ? Formula::conjunction_of(items) : Formula::disjunction_of(items);
    } else if (head == "count>=") {
      std::uint64_t n = natural();
      PathExpr p = path();
      out = Formula::count(n, std::move(p), formula());
    } else if (head == "exists" || head == "forall") {
      PathExpr p = path();
      Formula b = formula();
      out = head == "exists" ? Formula::exists(std::move(p), std::move(b)) : Formula::forall(std::move(p), std::move(b));
    } else if (head == "path-to") {
      PathExpr p = path();
      out = Formula::exists(std::move(p), Formula::eq(term()));
    } else if (head == "disjoint" || head == "equals") {
      PathExpr p = path();
      Term r = iri();
      out = head == "disjoint" ? Formula::disjoint(std::move(p), std::move(r))
                               : Formula::equals(std::move(p), std::move(r));
    } else if (head == "order") {
      PathExpr p = path();
      Term r = iri();
      Token at = tok_;
      std::string op = keyword();
      if (op != "lt" && op != "le") Lexer::fail("expected lt or le", at);
      at = tok_;
      std::string dir = keyword();
      if (dir != "fwd" && dir != "inv") Lexer::fail("expected fwd or inv", at);
      out = Formula::order(std::move(p), std::move(r), op == "lt" ? OrderOp::Less : OrderOp::LessEq, dir == "inv");
    } else {
      Lexer::fail("unknown formula form '" + head + "'", open);
    }
    return close(out);
  }

  PathExpr path() {
    Token open = expect(Token::Open, "'('");
    std::string head = keyword();
    std::optional<PathExpr> out;
    if (head == "rel" || head == "inv") {
      out = PathExpr::atom(iri(), head == "inv");
    } else if (head == "seq" || head == "alt") {
      std::vector<PathExpr> items;
      while (tok_.kind == Token::Open) items.push_back(path());
      if (items.size() < 2) Lexer::fail(head + " needs at least two paths", open);
      out = fold(items, [&](PathExpr a, PathExpr b) {
        return head == "seq" ? PathExpr::sequence(std::move(a), std::move(b))
                             : PathExpr::alternative(std::move(a), std::move(b));
      });
    } else if (head == "opt") {
      out = PathExpr::zero_or_one(path());
    } else if (head == "star") {
      out = PathExpr::star(path());
    } else {
      Lexer::fail("unknown path form '" + head + "'", open);
    }
    return close(*out);
  }

  void finish() {
    if (tok_.kind != Token::End) Lexer::fail("trailing input", tok_);
  }

 private:
  template <class T, class F>
  static T fold(std::vector<T>& items, F combine) {
    T acc = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;) acc = combine(items[i], acc);
    return acc;
  }

  template <class T>
  T close(T value) {
    expect(Token::Close, "')'");
    return value;
  }

  void shift() {
    tok_ = lex_.next();
    if (tok_.kind == Token::String) {
      // Attach @lang or ^^datatype if glued to the closing quote.
      if (lex_.at('@')) {
        lex_.advance();
        Token tag = lex_.next();
        if (tag.kind != Token::Word || tag.text.empty()) Lexer::fail("missing language tag", tag);
        suffix_lang_ = tag.text;
      } else if (lex_.at('^')) {
        lex_.advance();
        if (!lex_.at('^')) Lexer::fail("expected '^^'", tok_);
        lex_.advance();
        Token dt = lex_.next();
        suffix_type_ = resolve(dt);
      }
    }
  }

  Token expect(Token::Kind kind, const char* what) {
    if (tok_.kind != kind) Lexer::fail(std::string("expected ") + what, tok_);
    Token t = tok_;
    shift();
    return t;
  }

  std::string keyword() {
    if (tok_.kind != Token::Word) Lexer::fail("expected keyword", tok_);
    std::string w = tok_.text;
    shift();
    return w;
  }

  std::uint64_t natural() {
    if (tok_.kind != Token::Word || tok_.text.empty() ||
        tok_.text.find_first_not_of("0123456789") != std::string::npos)
      Lexer::fail("expected natural number", tok_);
    std::uint64_t n = std::stoull(tok_.text);
    shift();
    return n;
  }

  std::string resolve(const Token& t) {
    if (t.kind == Token::Iri) return t.text;
    if (t.kind != Token::Word) Lexer::fail("expected IRI", t);
    auto colon = t.text.find(':');
    if (colon == std::string::npos) Lexer::fail("expected IRI, got '" + t.text + "'", t);
    std::string prefix = t.text.substr(0, colon);
    for (const auto& [name, base] : known_prefixes())
      if (name == prefix) return base + t.text.substr(colon + 1);
    Lexer::fail("unknown prefix '" + prefix + "'", t);
  }

  Term iri() {
    Term out = Term::iri(resolve(tok_));
    shift();
    return out;
  }

  Term term() {
    Token t = tok_;
    if (t.kind == Token::String) {
      Term out = suffix_lang_   ? Term::literal(t.text, std::nullopt, suffix_lang_)
                 : suffix_type_ ? Term::literal(t.text, suffix_type_)
                                : Term::literal(t.text);
      suffix_lang_.reset();
      suffix_type_.reset();
      shift();
      return out;
    }
    if (t.kind == Token::Word) {
      static const std::regex integer_re(R"(-?[0-9]+)");
      static const std::regex decimal_re(R"(-?[0-9]*\.[0-9]+)");
      if (std::regex_match(t.text, integer_re)) {
        shift();
        return Term::literal(t.text, rdf::xsd_iri("integer"));
      }
      if (std::regex_match(t.text, decimal_re)) {
        shift();
        return Term::literal(t.text, rdf::xsd_iri("decimal"));
      }
      if (t.text == "true" || t.text == "false") {
        shift();
        return Term::literal(t.text, rdf::xsd_iri("boolean"));
      }
      if (t.text.rfind("_:", 0) == 0 && t.text.size() > 2) {
        shift();
        return Term::blank(t.text.substr(2));
      }
    }
    return iri();
  }

  std::string string_arg() {
    if (tok_.kind != Token::String || suffix_lang_ || suffix_type_) Lexer::fail("expected plain string", tok_);
    std::string s = tok_.text;
    shift();
    return s;
  }

  FilterName filter_args(const Token& open) {
    Token at = tok_;
    std::string kind = keyword();
    FilterName f;
    if (kind == "iri") f = FilterName::is_iri();
    else if (kind == "literal") f = FilterName::is_literal();
    else if (kind == "blank") f = FilterName::is_blank();
    else if (kind == "datatype") f = FilterName::datatype(iri().lexical());
    else if (kind == "lang") f = FilterName::language(string_arg());
    else if (kind == "minlength") f = FilterName::min_length(natural());
    else if (kind == "maxlength") f = FilterName::max_length(natural());
    else if (kind == "pattern") f = FilterName::pattern(string_arg());
    else {
      static const std::map<std::string, FilterKind> bounds = {{"minexclusive", FilterKind::MinExclusive},
                                                               {"mininclusive", FilterKind::MinInclusive},
                                                               {"maxexclusive", FilterKind::MaxExclusive},
                                                               {"maxinclusive", FilterKind::MaxInclusive}};
      auto it = bounds.find(kind);
      if (it == bounds.end()) Lexer::fail("unknown filter '" + kind + "'", at);
      Term b = term();
      bool via_order = false;
      if (tok_.kind == Token::Word && tok_.text == "order") {
        via_order = true;
        shift();
      }
      f = FilterName::bound_filter(it->second, std::move(b), via_order);
    }
    (void)open;
    return f;
  }

  Lexer lex_;
  Token tok_;
  std::optional<std::string> suffix_lang_;
  std::optional<std::string> suffix_type_;
};

}  // namespace

Sentence parse_sentence(std::string_view text) {
  Parser p(text);
  Sentence s = p.sentence();
  p.finish();
  return s;
}

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

PathExpr parse_path(std::string_view text) {
  Parser p(text);
  PathExpr x = p.path();
  p.finish();
  return x;
}

}  // namespace shl::scl
