#include "shl/rdf.hpp"

#include <algorithm>
#include <cctype>

namespace shl::rdf {

Term Term::iri(std::string value) {
  Term t;
  t.kind_ = TermKind::Iri;
  t.lexical_ = std::move(value);
  return t;
}

Term Term::blank(std::string label) {
  Term t;
  t.kind_ = TermKind::Blank;
  t.lexical_ = std::move(label);
  return t;
}

Term Term::literal(std::string lexical, std::optional<std::string> datatype,
                   std::optional<std::string> language) {
  Term t;
  t.kind_ = TermKind::Literal;
  t.lexical_ = std::move(lexical);
  if (language) {
    std::string tag = *language;
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char c) { return std::tolower(c); });
    t.language_ = std::move(tag);
  } else if (datatype && *datatype != xsd_iri("string")) {
    t.datatype_ = std::move(datatype);
  }
  return t;
}

Term Term::integer(long long value) { return literal(std::to_string(value), xsd_iri("integer")); }

Term Term::boolean(bool value) { return literal(value ? "true" : "false", xsd_iri("boolean")); }

std::string Term::effective_datatype() const {
  if (kind_ != TermKind::Literal) return {};
  if (language_) return rdf_iri("langString");
  return datatype_ ? *datatype_ : xsd_iri("string");
}

std::string escape_string(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string to_string(const Term& term) {
  switch (term.kind()) {
    case TermKind::Iri: return "<" + term.lexical() + ">";
    case TermKind::Blank: return "_:" + term.lexical();
    case TermKind::Literal: {
      std::string out = "\"" + escape_string(term.lexical()) + "\"";
      if (term.language()) out += "@" + *term.language();
      else if (term.datatype()) out += "^^<" + *term.datatype() + ">";
      return out;
    }
  }
  return {};
}

std::size_t utf8_length(std::string_view text) {
  std::size_t n = 0;
  for (unsigned char c : text)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::optional<std::size_t> string_length(const Term& term) {
  if (term.is_blank()) return std::nullopt;
  return utf8_length(term.lexical());
}

ParseError::ParseError(const std::string& what, std::size_t line_, std::size_t column_)
    : std::runtime_error(what + " at line " + std::to_string(line_) + ", column " + std::to_string(column_)),
      line(line_),
      column(column_) {}

bool TripleGraph::insert(Triple triple) {
  if (!triple.predicate.is_iri()) throw GraphError("predicate must be an IRI: " + to_string(triple.predicate));
  if (mode_ == GraphMode::Strict) {
    if (triple.subject.is_literal())
      throw GraphError("literal in subject position: " + to_string(triple.subject));
  }
  return triples_.insert(std::move(triple)).second;
}

std::vector<Term> TripleGraph::objects(const Term& subject, const Term& predicate) const {
  std::vector<Term> out;
  // Term{} (empty IRI, no datatype) is the least term.
  auto it = triples_.lower_bound(Triple{subject, predicate, Term{}});
  for (; it != triples_.end() && it->subject == subject && it->predicate == predicate; ++it)
    out.push_back(it->object);
  return out;
}

std::vector<Term> TripleGraph::subjects(const Term& predicate, const Term& object) const {
  std::vector<Term> out;
  for (const auto& t : triples_)
    if (t.predicate == predicate && t.object == object) out.push_back(t.subject);
  return out;
}

std::vector<Term> TripleGraph::subjects_of(const Term& predicate) const {
  std::set<Term> seen;
  for (const auto& t : triples_)
    if (t.predicate == predicate) seen.insert(t.subject);
  return {seen.begin(), seen.end()};
}

std::vector<Term> TripleGraph::objects_of(const Term& predicate) const {
  std::set<Term> seen;
  for (const auto& t : triples_)
    if (t.predicate == predicate) seen.insert(t.object);
  return {seen.begin(), seen.end()};
}

std::set<Term> TripleGraph::nodes() const {
  std::set<Term> out;
  for (const auto& t : triples_) {
    out.insert(t.subject);
    out.insert(t.object);
  }
  return out;
}

std::set<Term> TripleGraph::predicates() const {
  std::set<Term> out;
  for (const auto& t : triples_) out.insert(t.predicate);
  return out;
}

std::optional<std::vector<Term>> read_list(const TripleGraph& graph, const Term& head) {
  const Term first = Term::iri(rdf_iri("first"));
  const Term rest = Term::iri(rdf_iri("rest"));
  const Term nil = Term::iri(rdf_iri("nil"));
  std::vector<Term> items;
  std::set<Term> visited;
  Term cur = head;
  while (cur != nil) {
    if (!visited.insert(cur).second) return std::nullopt;
    auto f = graph.objects(cur, first);
    auto r = graph.objects(cur, rest);
    if (f.size() != 1 || r.size() != 1) return std::nullopt;
    items.push_back(f.front());
    cur = r.front();
  }
  return items;
}

Term write_list(TripleGraph& graph, const std::vector<Term>& items, const std::string& label_prefix) {
  Term head = Term::iri(rdf_iri("nil"));
  for (std::size_t i = items.size(); i-- > 0;) {
    Term cell = Term::blank(label_prefix + "_" + std::to_string(i));
    graph.insert(cell, Term::iri(rdf_iri("first")), items[i]);
    graph.insert(cell, Term::iri(rdf_iri("rest")), head);
    head = cell;
  }
  return head;
}

}  // namespace shl::rdf
