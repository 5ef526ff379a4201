#include <algorithm>
#include <cctype>
#include <regex>

#include <json.hpp>

#include "shl/shacl.hpp"

namespace shl::shacl {

namespace {

using rdf::Comparison;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

void step(const TripleGraph& g, const Path& p, const Term& from, bool inverted, std::set<Term>& out);

std::set<Term> eval(const TripleGraph& g, const Path& p, const Term& from, bool inverted) {
  std::set<Term> out;
  step(g, p, from, inverted, out);
  return out;
}

std::set<Term> closure(const TripleGraph& g, const Path& inner, std::set<Term> frontier, bool inverted) {
  std::set<Term> seen = frontier;
  while (!frontier.empty()) {
    std::set<Term> next;
    for (const auto& n : frontier)
      for (const auto& m : eval(g, inner, n, inverted))
        if (seen.insert(m).second) next.insert(m);
    frontier = std::move(next);
  }
  return seen;
}

void step(const TripleGraph& g, const Path& p, const Term& from, bool inverted, std::set<Term>& out) {
  switch (p.kind) {
    case Path::Kind::Predicate: {
      auto v = inverted ? g.subjects(p.iri, from) : g.objects(from, p.iri);
      out.insert(v.begin(), v.end());
      return;
    }
    case Path::Kind::Inverse: step(g, p.items.front(), from, !inverted, out); return;
    case Path::Kind::Sequence: {
      std::set<Term> cur = {from};
      const std::size_t n = p.items.size();
      for (std::size_t i = 0; i < n; ++i) {
        const Path& part = p.items[inverted ? n - 1 - i : i];
        std::set<Term> next;
        for (const auto& c : cur) step(g, part, c, inverted, next);
        cur = std::move(next);
      }
      out.insert(cur.begin(), cur.end());
      return;
    }
    case Path::Kind::Alternative:
      for (const auto& part : p.items) step(g, part, from, inverted, out);
      return;
    case Path::Kind::ZeroOrMore: {
      auto all = closure(g, p.items.front(), {from}, inverted);
      out.insert(all.begin(), all.end());
      return;
    }
    case Path::Kind::OneOrMore: {
      auto all = closure(g, p.items.front(), eval(g, p.items.front(), from, inverted), inverted);
      out.insert(all.begin(), all.end());
      return;
    }
    case Path::Kind::ZeroOrOne:
      out.insert(from);
      step(g, p.items.front(), from, inverted, out);
      return;
  }
}

bool well_formed(const Term& t) {
  const std::string dt = t.effective_datatype();
  if (rdf::is_numeric_datatype(dt) || dt == rdf::xsd_iri("boolean") || dt == rdf::xsd_iri("dateTime"))
    return rdf::comparison_type(t).has_value();
  return true;
}

bool node_kind_holds(const Term& kind, const Term& n) {
  const std::string k = kind.lexical();
  auto is = [&](const char* local) { return k == rdf::sh_iri(local); };
  if (is("IRI")) return n.is_iri();
  if (is("Literal")) return n.is_literal();
  if (is("BlankNode")) return n.is_blank();
  if (is("BlankNodeOrIRI")) return n.is_blank() || n.is_iri();
  if (is("BlankNodeOrLiteral")) return n.is_blank() || n.is_literal();
  if (is("IRIOrLiteral")) return n.is_iri() || n.is_literal();
  return true;
}

class Validator {
 public:
  Validator(const TripleGraph& g, const Document& doc) : g_(g), doc_(doc), languages_(document_languages(doc)) {}

  bool conforms(const Term& shape_name, const Term& node) {
    const Shape* s = doc_.find(shape_name);
    if (!s) return true;
    for (const auto& c : s->constraints) {
      if (!component_applies(s->is_property_shape(), c.component)) continue;
      bool ok = s->is_property_shape() ? property_holds(*s, c, node) : node_holds(*s, c, node);
      if (!ok) return false;
    }
    return true;
  }

  std::vector<Term> focus_nodes(const Target& t) const {
    static const Term type = Term::iri(rdf::rdf_iri("type"));
    switch (t.kind) {
      case Target::Kind::Node: return {t.term};
      case Target::Kind::Class: return g_.subjects(type, t.term);
      case Target::Kind::SubjectsOf: return g_.subjects_of(t.term);
      case Target::Kind::ObjectsOf: return g_.objects_of(t.term);
    }
    return {};
  }

 private:
  // Checks that read a single value node.
  bool value_holds(const Constraint& c, const Term& n) {
    switch (c.component) {
      case Component::HasValue: return n == c.terms.front();
      case Component::In: return std::find(c.terms.begin(), c.terms.end(), n) != c.terms.end();
      case Component::Class: return g_.contains({n, Term::iri(rdf::rdf_iri("type")), c.terms.front()});
      case Component::Datatype:
        return n.is_literal() && n.effective_datatype() == c.terms.front().lexical() && well_formed(n);
      case Component::NodeKind: return node_kind_holds(c.terms.front(), n);
      case Component::MinExclusive: return rdf::compare_terms(n, c.terms.front()) == Comparison::Greater;
      case Component::MinInclusive: {
        auto r = rdf::compare_terms(n, c.terms.front());
        return r == Comparison::Greater || r == Comparison::Equal;
      }
      case Component::MaxExclusive: return rdf::compare_terms(n, c.terms.front()) == Comparison::Less;
      case Component::MaxInclusive: {
        auto r = rdf::compare_terms(n, c.terms.front());
        return r == Comparison::Less || r == Comparison::Equal;
      }
      case Component::MinLength: {
        auto len = rdf::string_length(n);
        return len && *len >= c.number;
      }
      case Component::MaxLength: {
        auto len = rdf::string_length(n);
        return len && *len <= c.number;
      }
      case Component::Pattern: {
        if (n.is_blank()) return false;
        try {
          return std::regex_search(n.lexical(), std::regex(c.terms.front().lexical()));
        } catch (const std::regex_error&) {
          return false;
        }
      }
      case Component::LanguageIn:
        if (!n.is_literal() || !n.language()) return false;
        for (const auto& t : c.terms)
          if (lower(t.lexical()) == *n.language()) return true;
        return false;
      case Component::Not: return !conforms(c.shapes.front(), n);
      case Component::And:
        return std::all_of(c.shapes.begin(), c.shapes.end(), [&](const Term& s) { return conforms(s, n); });
      case Component::Or:
        return std::any_of(c.shapes.begin(), c.shapes.end(), [&](const Term& s) { return conforms(s, n); });
      case Component::Xone:
        return std::count_if(c.shapes.begin(), c.shapes.end(), [&](const Term& s) { return conforms(s, n); }) == 1;
      case Component::Node:
      case Component::Property: return conforms(c.shapes.front(), n);
      default: return true;
    }
  }

  bool closed_holds(const Shape& s, const Constraint& c, const Term& focus) {
    for (const auto& r : closed_forbidden(doc_, s, c))
      if (!g_.objects(focus, r).empty()) return false;
    return true;
  }

  bool node_holds(const Shape& s, const Constraint& c, const Term& focus) {
    if (c.component == Component::Closed) return closed_holds(s, c, focus);
    return value_holds(c, focus);
  }

  bool property_holds(const Shape& s, const Constraint& c, const Term& focus) {
    const std::set<Term> values = eval(g_, *s.path, focus, false);
    switch (c.component) {
      case Component::HasValue: return values.count(c.terms.front()) > 0;
      case Component::UniqueLang:
        for (const auto& tag : languages_) {
          auto n = std::count_if(values.begin(), values.end(),
                                 [&](const Term& v) { return v.is_literal() && v.language() == tag; });
          if (n >= 2) return false;
        }
        return true;
      case Component::MinCount: return values.size() >= c.number;
      case Component::MaxCount: return values.size() <= c.number;
      case Component::Equals: {
        auto other = g_.objects(focus, c.terms.front());
        return values == std::set<Term>(other.begin(), other.end());
      }
      case Component::Disjoint:
        for (const auto& o : g_.objects(focus, c.terms.front()))
          if (values.count(o)) return false;
        return true;
      case Component::LessThan:
      case Component::LessThanOrEquals:
        for (const auto& y : values)
          for (const auto& z : g_.objects(focus, c.terms.front())) {
            auto r = rdf::compare_terms(y, z);
            bool ok = r == Comparison::Less || (c.component == Component::LessThanOrEquals && r == Comparison::Equal);
            if (!ok) return false;
          }
        return true;
      case Component::QualifiedValueShape: {
        const Term& q = c.shapes.front();
        std::vector<Term> siblings;
        if (c.flag) siblings = qualified_siblings(doc_, s, q);
        std::uint64_t n = 0;
        for (const auto& y : values) {
          if (!conforms(q, y)) continue;
          if (std::any_of(siblings.begin(), siblings.end(), [&](const Term& sib) { return conforms(sib, y); }))
            continue;
          ++n;
        }
        if (c.qualified_min && n < *c.qualified_min) return false;
        if (c.qualified_max && n > *c.qualified_max) return false;
        return true;
      }
      case Component::Closed: return closed_holds(s, c, focus);
      default:
        return std::all_of(values.begin(), values.end(), [&](const Term& y) { return value_holds(c, y); });
    }
  }

  const TripleGraph& g_;
  const Document& doc_;
  std::set<std::string> languages_;
};

}  // namespace

std::set<Term> evaluate_path(const TripleGraph& graph, const Path& path, const Term& focus) {
  return eval(graph, path, focus, false);
}

bool conforms_to(const TripleGraph& graph, const Document& doc, const Term& shape, const Term& node) {
  return Validator(graph, doc).conforms(shape, node);
}

ValidationReport validate_direct(const TripleGraph& graph, const Document& doc) {
  Validator v(graph, doc);
  std::set<Violation> violations;
  for (const auto& s : doc.shapes)
    for (const auto& t : s.targets)
      for (const auto& focus : v.focus_nodes(t))
        if (!v.conforms(s.name, focus)) violations.insert({focus, s.origin.value_or(s.name)});
  ValidationReport report;
  report.violations.assign(violations.begin(), violations.end());
  report.conforms = report.violations.empty();
  return report;
}

std::string report_json(const ValidationReport& report) {
  nlohmann::json j;
  j["conforms"] = report.conforms;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : report.violations)
    j["violations"].push_back({{"focusNode", rdf::to_string(v.focus)}, {"shape", rdf::to_string(v.shape)}});
  return j.dump(2);
}

}  // namespace shl::shacl
