#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "shl/shacl.hpp"

namespace shl::shacl {

namespace {

Term sh(std::string_view local) { return Term::iri(rdf::sh_iri(local)); }
Term rdf_type() { return Term::iri(rdf::rdf_iri("type")); }

struct ComponentInfo {
  Component component;
  const char* local;
};

constexpr ComponentInfo kComponents[] = {
    {Component::HasValue, "hasValue"},
    {Component::In, "in"},
    {Component::Class, "class"},
    {Component::Datatype, "datatype"},
    {Component::NodeKind, "nodeKind"},
    {Component::MinExclusive, "minExclusive"},
    {Component::MinInclusive, "minInclusive"},
    {Component::MaxExclusive, "maxExclusive"},
    {Component::MaxInclusive, "maxInclusive"},
    {Component::MinLength, "minLength"},
    {Component::MaxLength, "maxLength"},
    {Component::Pattern, "pattern"},
    {Component::LanguageIn, "languageIn"},
    {Component::UniqueLang, "uniqueLang"},
    {Component::Not, "not"},
    {Component::And, "and"},
    {Component::Or, "or"},
    {Component::Xone, "xone"},
    {Component::Node, "node"},
    {Component::Property, "property"},
    {Component::MinCount, "minCount"},
    {Component::MaxCount, "maxCount"},
    {Component::Equals, "equals"},
    {Component::Disjoint, "disjoint"},
    {Component::LessThan, "lessThan"},
    {Component::LessThanOrEquals, "lessThanOrEquals"},
    {Component::QualifiedValueShape, "qualifiedValueShape"},
    {Component::Closed, "closed"},
};

constexpr const char* kTargetLocals[] = {"targetNode", "targetClass", "targetSubjectsOf", "targetObjectsOf"};

// Parameters that mark their subject as a shape without being components.
constexpr const char* kAuxiliary[] = {"path", "qualifiedMinCount", "qualifiedMaxCount",
                                      "qualifiedValueShapesDisjoint", "ignoredProperties"};

std::uint64_t natural_value(const Term& t, const std::string& what) {
  auto v = rdf::numeric_value(t);
  if (!v || *v < 0 || *v != static_cast<long double>(static_cast<std::uint64_t>(*v)))
    throw ShapeError(what + " must be a non-negative integer, got " + rdf::to_string(t));
  return static_cast<std::uint64_t>(*v);
}

bool boolean_true(const Term& t) {
  return t.is_literal() && t.effective_datatype() == rdf::xsd_iri("boolean") &&
         (t.lexical() == "true" || t.lexical() == "1");
}

std::vector<Term> list_at(const TripleGraph& g, const Term& head, const std::string& what) {
  auto items = rdf::read_list(g, head);
  if (!items) throw ShapeError("malformed RDF list for " + what + " at " + rdf::to_string(head));
  return *items;
}

class Extractor {
 public:
  explicit Extractor(const TripleGraph& g) : g_(g) {}

  Document run() {
    std::set<Term> names = shape_nodes();
    Document doc;
    for (const auto& n : names) doc.shapes.push_back(shape(n));
    std::sort(doc.shapes.begin(), doc.shapes.end(), [](const Shape& a, const Shape& b) { return a.name < b.name; });
    check_acyclic(doc);
    return doc;
  }

 private:
  std::set<Term> shape_nodes() const {
    std::set<Term> out;
    std::set<Term> marking;
    for (const auto& c : kComponents) marking.insert(sh(c.local));
    for (const auto* t : kTargetLocals) marking.insert(sh(t));
    for (const auto* a : kAuxiliary) marking.insert(sh(a));
    const std::set<Term> referencing = {sh("node"), sh("property"), sh("not"), sh("qualifiedValueShape")};
    const std::set<Term> list_refs = {sh("and"), sh("or"), sh("xone")};
    for (const auto& t : g_.triples()) {
      if (t.predicate == rdf_type() && (t.object == sh("NodeShape") || t.object == sh("PropertyShape")))
        out.insert(t.subject);
      if (marking.count(t.predicate)) out.insert(t.subject);
      if (referencing.count(t.predicate)) out.insert(t.object);
      if (list_refs.count(t.predicate))
        for (const auto& m : list_at(g_, t.object, rdf::to_string(t.predicate))) out.insert(m);
    }
    return out;
  }

  Shape shape(const Term& name) {
    Shape s;
    s.name = name;
    auto paths = g_.objects(name, sh("path"));
    if (paths.size() > 1) throw ShapeError("property shape " + rdf::to_string(name) + " has several sh:path values");
    if (paths.empty() && g_.contains({name, rdf_type(), sh("PropertyShape")}))
      throw ShapeError("property shape " + rdf::to_string(name) + " has no sh:path");
    if (!paths.empty()) {
      std::set<Term> seen;
      s.path = path(paths.front(), seen);
    }
    for (int k = 0; k < 4; ++k)
      for (const auto& v : g_.objects(name, sh(kTargetLocals[k])))
        s.targets.push_back({static_cast<Target::Kind>(k), v});
    std::sort(s.targets.begin(), s.targets.end());
    for (const auto& info : kComponents)
      for (const auto& v : g_.objects(name, sh(info.local))) add_constraint(s, info.component, v);
    std::sort(s.constraints.begin(), s.constraints.end());
    s.constraints.erase(std::unique(s.constraints.begin(), s.constraints.end()), s.constraints.end());
    return s;
  }

  void add_constraint(Shape& s, Component comp, const Term& v) {
    Constraint c{comp};
    const std::string what = "sh:" + component_name(comp);
    switch (comp) {
      case Component::In:
      case Component::LanguageIn: c.terms = list_at(g_, v, what); break;
      case Component::And:
      case Component::Or:
      case Component::Xone: c.shapes = list_at(g_, v, what); break;
      case Component::Not:
      case Component::Node:
      case Component::Property: c.shapes = {v}; break;
      case Component::MinLength:
      case Component::MaxLength:
      case Component::MinCount:
      case Component::MaxCount: c.number = natural_value(v, what); break;
      case Component::UniqueLang:
        if (!boolean_true(v)) return;
        c.flag = true;
        break;
      case Component::Closed: {
        if (!boolean_true(v)) return;
        c.flag = true;
        std::set<Term> ignored;
        for (const auto& l : g_.objects(s.name, sh("ignoredProperties")))
          for (const auto& r : list_at(g_, l, "sh:ignoredProperties")) ignored.insert(r);
        c.terms.assign(ignored.begin(), ignored.end());
        break;
      }
      case Component::QualifiedValueShape: {
        c.shapes = {v};
        auto mins = g_.objects(s.name, sh("qualifiedMinCount"));
        auto maxs = g_.objects(s.name, sh("qualifiedMaxCount"));
        if (!mins.empty()) c.qualified_min = natural_value(mins.front(), "sh:qualifiedMinCount");
        if (!maxs.empty()) c.qualified_max = natural_value(maxs.front(), "sh:qualifiedMaxCount");
        for (const auto& d : g_.objects(s.name, sh("qualifiedValueShapesDisjoint")))
          if (boolean_true(d)) c.flag = true;
        break;
      }
      default: c.terms = {v}; break;
    }
    s.constraints.push_back(std::move(c));
  }

  Path path(const Term& node, std::set<Term>& seen) {
    if (node.is_iri() && node != Term::iri(rdf::rdf_iri("nil"))) return Path::predicate(node);
    if (!node.is_blank()) throw ShapeError("invalid property path " + rdf::to_string(node));
    if (!seen.insert(node).second) throw ShapeError("cyclic property path at " + rdf::to_string(node));
    auto single = [&](const char* local) -> std::optional<Term> {
      auto v = g_.objects(node, sh(local));
      if (v.empty()) return std::nullopt;
      if (v.size() > 1) throw ShapeError(std::string("several sh:") + local + " values");
      return v.front();
    };
    Path out;
    if (auto v = single("inversePath")) {
      out = Path::unary(Path::Kind::Inverse, path(*v, seen));
    } else if (auto v = single("alternativePath")) {
      out = list_path(Path::Kind::Alternative, list_at(g_, *v, "sh:alternativePath"), seen);
    } else if (auto v = single("zeroOrMorePath")) {
      out = Path::unary(Path::Kind::ZeroOrMore, path(*v, seen));
    } else if (auto v = single("oneOrMorePath")) {
      out = Path::unary(Path::Kind::OneOrMore, path(*v, seen));
    } else if (auto v = single("zeroOrOnePath")) {
      out = Path::unary(Path::Kind::ZeroOrOne, path(*v, seen));
    } else {
      out = list_path(Path::Kind::Sequence, list_at(g_, node, "sequence path"), seen);
    }
    seen.erase(node);
    return out;
  }

  Path list_path(Path::Kind kind, const std::vector<Term>& items, std::set<Term>& seen) {
    if (items.empty()) throw ShapeError("empty path list");
    std::vector<Path> parts;
    for (const auto& i : items) parts.push_back(path(i, seen));
    if (parts.size() == 1) return parts.front();
    return Path::nary(kind, std::move(parts));
  }

  static void check_acyclic(const Document& doc) {
    std::map<Term, int> state;  // 1 on stack, 2 done
    std::function<void(const Term&)> visit = [&](const Term& n) {
      int& st = state[n];
      if (st == 2) return;
      if (st == 1) throw ShapeError("recursive shape reference involving " + rdf::to_string(n));
      st = 1;
      if (const Shape* s = doc.find(n))
        for (const auto& c : s->constraints)
          for (const auto& r : shape_references(c)) visit(r);
      state[n] = 2;
    };
    for (const auto& s : doc.shapes) visit(s.name);
  }

  const TripleGraph& g_;
};

}  // namespace

std::string component_name(Component c) {
  for (const auto& info : kComponents)
    if (info.component == c) return info.local;
  return "unknown";
}

bool component_applies(bool property_shape, Component c) {
  if (property_shape) return true;
  switch (c) {
    case Component::UniqueLang:
    case Component::MinCount:
    case Component::MaxCount:
    case Component::Equals:
    case Component::Disjoint:
    case Component::LessThan:
    case Component::LessThanOrEquals:
    case Component::QualifiedValueShape: return false;
    default: return true;
  }
}

bool Path::operator<(const Path& other) const {
  if (kind != other.kind) return kind < other.kind;
  if (iri != other.iri) return iri < other.iri;
  return std::lexicographical_compare(items.begin(), items.end(), other.items.begin(), other.items.end());
}

const Shape* Document::find(const Term& name) const {
  for (const auto& s : shapes)
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<Term> shape_references(const Constraint& c) {
  switch (c.component) {
    case Component::Not:
    case Component::And:
    case Component::Or:
    case Component::Xone:
    case Component::Node:
    case Component::Property:
    case Component::QualifiedValueShape: return c.shapes;
    default: return {};
  }
}

namespace {
void path_relations(const Path& p, std::set<Term>& out) {
  if (p.kind == Path::Kind::Predicate) out.insert(p.iri);
  for (const auto& i : p.items) path_relations(i, out);
}
}  // namespace

std::set<Term> document_relations(const Document& doc) {
  std::set<Term> out = doc.vocabulary_context;
  for (const auto& s : doc.shapes) {
    if (s.path) path_relations(*s.path, out);
    for (const auto& t : s.targets) {
      if (t.kind == Target::Kind::SubjectsOf || t.kind == Target::Kind::ObjectsOf) out.insert(t.term);
      if (t.kind == Target::Kind::Class) out.insert(rdf_type());
    }
    for (const auto& c : s.constraints) {
      switch (c.component) {
        case Component::Class: out.insert(rdf_type()); break;
        case Component::Equals:
        case Component::Disjoint:
        case Component::LessThan:
        case Component::LessThanOrEquals:
          if (c.terms.front().is_iri()) out.insert(c.terms.front());
          break;
        case Component::Closed:
          for (const auto& t : c.terms)
            if (t.is_iri()) out.insert(t);
          break;
        default: break;
      }
    }
  }
  return out;
}

std::set<Term> closed_forbidden(const Document& doc, const Shape& shape, const Constraint& closed) {
  std::set<Term> out = document_relations(doc);
  for (const auto& c : shape.constraints) {
    if (c.component != Component::Property) continue;
    const Shape* p = doc.find(c.shapes.front());
    if (p && p->path && p->path->kind == Path::Kind::Predicate) out.erase(p->path->iri);
  }
  for (const auto& t : closed.terms) out.erase(t);
  return out;
}

std::vector<Term> qualified_siblings(const Document& doc, const Shape& shape, const Term& qualified) {
  const Term self = shape.origin.value_or(shape.name);
  std::set<Term> out;
  for (const auto& parent : doc.shapes) {
    bool is_parent = false;
    for (const auto& c : parent.constraints)
      if (c.component == Component::Property && c.shapes.front() == self) is_parent = true;
    if (!is_parent) continue;
    for (const auto& c : parent.constraints) {
      if (c.component != Component::Property) continue;
      const Shape* sibling = doc.find(c.shapes.front());
      if (!sibling) continue;
      for (const auto& q : sibling->constraints)
        if (q.component == Component::QualifiedValueShape) out.insert(q.shapes.front());
    }
  }
  out.erase(qualified);
  return {out.begin(), out.end()};
}

std::set<std::string> document_languages(const Document& doc) {
  std::set<std::string> out;
  for (const auto& s : doc.shapes)
    for (const auto& c : s.constraints)
      if (c.component == Component::LanguageIn)
        for (const auto& t : c.terms) {
          std::string tag = t.lexical();
          std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::tolower(ch); });
          out.insert(tag);
        }
  return out;
}

Document extract_document(const TripleGraph& graph) { return Extractor(graph).run(); }

}  // namespace shl::shacl
