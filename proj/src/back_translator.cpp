#include <algorithm>
#include <cstdio>
#include <map>

#include "shl/translator.hpp"

namespace shl::translate {

using scl::Formula;
using scl::PathExpr;
using scl::Sentence;
using shacl::Component;
using shacl::Constraint;
using shacl::Shape;

namespace {

std::string fnv_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

rdf::Term shape_iri(const std::string& canonical, const char* suffix = "") {
  return rdf::Term::iri("urn:scl:shape:" + fnv_hex(canonical) + suffix);
}

shacl::Path path_of(const PathExpr& p) {
  using K = PathExpr::Kind;
  switch (p.kind()) {
    case K::Atom: {
      auto base = shacl::Path::predicate(p.relation());
      return p.inverted() ? shacl::Path::unary(shacl::Path::Kind::Inverse, base) : base;
    }
    case K::Sequence: return shacl::Path::nary(shacl::Path::Kind::Sequence, {path_of(p.left()), path_of(p.right())});
    case K::Alternative:
      return shacl::Path::nary(shacl::Path::Kind::Alternative, {path_of(p.left()), path_of(p.right())});
    case K::ZeroOrOne: return shacl::Path::unary(shacl::Path::Kind::ZeroOrOne, path_of(p.left()));
    case K::Star: return shacl::Path::unary(shacl::Path::Kind::ZeroOrMore, path_of(p.left()));
  }
  return shacl::Path::predicate(p.relation());
}

Constraint single(Component c, rdf::Term t) { return Constraint{c, {std::move(t)}}; }

class Builder {
 public:
  rdf::Term formula(const Formula& g) {
    const rdf::Term name = formula_shape_iri(g);
    if (shapes_.count(name)) return name;
    Shape s{name};
    switch (g.kind()) {
      case Formula::Kind::Top: break;
      case Formula::Kind::EqConst: s.constraints.push_back(single(Component::HasValue, g.constant())); break;
      case Formula::Kind::Filter: s.constraints.push_back(filter(g.filter())); break;
      case Formula::Kind::HasShape: s.constraints.push_back(Constraint{Component::Node, {}, {g.shape().term}}); break;
      case Formula::Kind::Not: s.constraints.push_back(Constraint{Component::Not, {}, {formula(g.operand())}}); break;
      case Formula::Kind::And:
        s.constraints.push_back(Constraint{Component::And, {}, {formula(g.left()), formula(g.right())}});
        break;
      case Formula::Kind::Count: {
        Constraint q{Component::QualifiedValueShape, {}, {formula(g.body())}};
        q.qualified_min = g.count();
        s.constraints.push_back(property(name, g.path(), q));
        break;
      }
      case Formula::Kind::Disjoint:
        s.constraints.push_back(property(name, g.path(), single(Component::Disjoint, g.relation())));
        break;
      case Formula::Kind::Equals:
        s.constraints.push_back(property(name, g.path(), single(Component::Equals, g.relation())));
        break;
      case Formula::Kind::Order: {
        if (g.inverted()) throw NotShaclExpressible("inverted order atom has no SHACL counterpart: " + scl::print(g));
        Component c = g.op() == scl::OrderOp::Less ? Component::LessThan : Component::LessThanOrEquals;
        s.constraints.push_back(property(name, g.path(), single(c, g.relation())));
        break;
      }
    }
    shapes_[name] = std::move(s);
    return name;
  }

  void sentence(const Sentence& s) {
    switch (s.kind()) {
      case Sentence::Kind::Top: formula(Formula::top()); return;
      case Sentence::Kind::And:
        sentence(s.left());
        sentence(s.right());
        return;
      case Sentence::Kind::AtConst: targeted(s, shacl::Target::Kind::Node); return;
      case Sentence::Kind::ForClass: targeted(s, shacl::Target::Kind::Class); return;
      case Sentence::Kind::ForSubjects:
        targeted(s, s.inverted() ? shacl::Target::Kind::ObjectsOf : shacl::Target::Kind::SubjectsOf);
        return;
      case Sentence::Kind::ShapeDef: {
        Shape def{s.shape().term};
        def.constraints.push_back(Constraint{Component::Node, {}, {formula(s.body())}});
        add(std::move(def));
        return;
      }
      case Sentence::Kind::AtMost:
        throw NotShaclExpressible("global cardinality sentence has no SHACL counterpart");
    }
  }

  shacl::Document document() {
    shacl::Document doc;
    for (auto& [_, s] : shapes_) {
      std::sort(s.constraints.begin(), s.constraints.end());
      doc.shapes.push_back(s);
    }
    return doc;
  }

 private:
  static Constraint filter(const scl::FilterName& f) {
    using FK = scl::FilterKind;
    auto kind = [](const char* local) { return rdf::Term::iri(rdf::sh_iri(local)); };
    switch (f.kind) {
      case FK::IsIri: return single(Component::NodeKind, kind("IRI"));
      case FK::IsLiteral: return single(Component::NodeKind, kind("Literal"));
      case FK::IsBlank: return single(Component::NodeKind, kind("BlankNode"));
      case FK::Datatype: return single(Component::Datatype, rdf::Term::iri(f.text));
      case FK::LanguageTag: return single(Component::LanguageIn, rdf::Term::literal(f.text));
      case FK::MinLength: return Constraint{Component::MinLength, {}, {}, f.length};
      case FK::MaxLength: return Constraint{Component::MaxLength, {}, {}, f.length};
      case FK::Pattern: return single(Component::Pattern, rdf::Term::literal(f.text));
      case FK::MinExclusive: return single(Component::MinExclusive, f.bound);
      case FK::MinInclusive: return single(Component::MinInclusive, f.bound);
      case FK::MaxExclusive: return single(Component::MaxExclusive, f.bound);
      case FK::MaxInclusive: return single(Component::MaxInclusive, f.bound);
    }
    return Constraint{Component::HasValue};
  }

  Constraint property(const rdf::Term& owner, const PathExpr& path, Constraint c) {
    Shape p{rdf::Term::iri(owner.lexical() + "-p")};
    p.path = path_of(path);
    p.constraints.push_back(std::move(c));
    rdf::Term name = p.name;
    add(std::move(p));
    return Constraint{Component::Property, {}, {name}};
  }

  void targeted(const Sentence& s, shacl::Target::Kind kind) {
    Shape t{shape_iri(scl::print(s), "-target")};
    t.targets.push_back({kind, s.constant()});
    t.constraints.push_back(Constraint{Component::Node, {}, {formula(s.body())}});
    add(std::move(t));
  }

  void add(Shape s) {
    auto [it, fresh] = shapes_.emplace(s.name, s);
    if (!fresh && !(it->second == s)) {
      // A repeated definition merges its constraints.
      for (auto& c : s.constraints)
        if (std::find(it->second.constraints.begin(), it->second.constraints.end(), c) ==
            it->second.constraints.end())
          it->second.constraints.push_back(c);
    }
  }

  std::map<rdf::Term, Shape> shapes_;
};

}  // namespace

rdf::Term formula_shape_iri(const Formula& formula) { return shape_iri(scl::print(formula)); }

shacl::Document back_translate(const Sentence& sentence) {
  Builder b;
  b.sentence(sentence);
  return b.document();
}

}  // namespace shl::translate
