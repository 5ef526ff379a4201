#include <algorithm>

#include "shl/shacl.hpp"

namespace shl::shacl {

namespace {

Term sh(std::string_view local) { return Term::iri(rdf::sh_iri(local)); }

Term copy_name(const Term& name, std::size_t index) {
  if (name.is_blank()) return Term::blank(name.lexical() + "_t" + std::to_string(index));
  return Term::iri(name.lexical() + "#target-" + std::to_string(index));
}

}  // namespace

Document split_targets(const Document& doc) {
  std::set<Term> referenced;
  for (const auto& s : doc.shapes)
    for (const auto& c : s.constraints)
      for (const auto& r : shape_references(c)) referenced.insert(r);

  Document out;
  out.vocabulary_context = doc.vocabulary_context;
  for (const auto& s : doc.shapes) {
    const bool needs_split = s.targets.size() > 1 || (s.targets.size() == 1 && referenced.count(s.name));
    if (!needs_split) {
      out.shapes.push_back(s);
      continue;
    }
    for (std::size_t i = 0; i < s.targets.size(); ++i) {
      Shape copy = s;
      copy.name = copy_name(s.name, i);
      copy.targets = {s.targets[i]};
      copy.origin = s.origin.value_or(s.name);
      out.shapes.push_back(std::move(copy));
    }
    if (referenced.count(s.name)) {
      Shape bare = s;
      bare.targets.clear();
      out.shapes.push_back(std::move(bare));
    }
  }
  std::sort(out.shapes.begin(), out.shapes.end(), [](const Shape& a, const Shape& b) { return a.name < b.name; });
  return out;
}

namespace {

class Writer {
 public:
  TripleGraph run(const Document& doc) {
    for (const auto& s : doc.shapes) shape(s);
    return std::move(g_);
  }

 private:
  std::string fresh() { return "g" + std::to_string(counter_++); }

  Term list(const std::vector<Term>& items) { return rdf::write_list(g_, items, fresh()); }

  Term path(const Path& p) {
    if (p.kind == Path::Kind::Predicate) return p.iri;
    std::vector<Term> parts;
    for (const auto& i : p.items) parts.push_back(path(i));
    if (p.kind == Path::Kind::Sequence) return list(parts);
    Term node = Term::blank(fresh());
    switch (p.kind) {
      case Path::Kind::Inverse: g_.insert(node, sh("inversePath"), parts.front()); break;
      case Path::Kind::Alternative: g_.insert(node, sh("alternativePath"), list(parts)); break;
      case Path::Kind::ZeroOrMore: g_.insert(node, sh("zeroOrMorePath"), parts.front()); break;
      case Path::Kind::OneOrMore: g_.insert(node, sh("oneOrMorePath"), parts.front()); break;
      case Path::Kind::ZeroOrOne: g_.insert(node, sh("zeroOrOnePath"), parts.front()); break;
      default: break;
    }
    return node;
  }

  void shape(const Shape& s) {
    const Term& n = s.name;
    g_.insert(n, Term::iri(rdf::rdf_iri("type")), s.path ? sh("PropertyShape") : sh("NodeShape"));
    if (s.path) g_.insert(n, sh("path"), path(*s.path));
    static const char* target_locals[] = {"targetNode", "targetClass", "targetSubjectsOf", "targetObjectsOf"};
    for (const auto& t : s.targets) g_.insert(n, sh(target_locals[static_cast<int>(t.kind)]), t.term);
    for (const auto& c : s.constraints) constraint(n, c);
  }

  void constraint(const Term& n, const Constraint& c) {
    const Term p = sh(component_name(c.component));
    switch (c.component) {
      case Component::In:
      case Component::LanguageIn: g_.insert(n, p, list(c.terms)); break;
      case Component::And:
      case Component::Or:
      case Component::Xone: g_.insert(n, p, list(c.shapes)); break;
      case Component::Not:
      case Component::Node:
      case Component::Property: g_.insert(n, p, c.shapes.front()); break;
      case Component::MinLength:
      case Component::MaxLength:
      case Component::MinCount:
      case Component::MaxCount: g_.insert(n, p, Term::integer(static_cast<long long>(c.number))); break;
      case Component::UniqueLang: g_.insert(n, p, Term::boolean(true)); break;
      case Component::Closed:
        g_.insert(n, p, Term::boolean(true));
        if (!c.terms.empty()) g_.insert(n, sh("ignoredProperties"), list(c.terms));
        break;
      case Component::QualifiedValueShape:
        g_.insert(n, p, c.shapes.front());
        if (c.qualified_min)
          g_.insert(n, sh("qualifiedMinCount"), Term::integer(static_cast<long long>(*c.qualified_min)));
        if (c.qualified_max)
          g_.insert(n, sh("qualifiedMaxCount"), Term::integer(static_cast<long long>(*c.qualified_max)));
        if (c.flag) g_.insert(n, sh("qualifiedValueShapesDisjoint"), Term::boolean(true));
        break;
      default: g_.insert(n, p, c.terms.front()); break;
    }
  }

  TripleGraph g_{rdf::GraphMode::Generalized};
  std::size_t counter_ = 0;
};

}  // namespace

TripleGraph document_to_graph(const Document& doc) { return Writer().run(doc); }

}  // namespace shl::shacl
