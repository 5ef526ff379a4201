#include "shl/translator.hpp"

namespace shl::translate {

using scl::Formula;
using scl::PathExpr;
using scl::Sentence;
using scl::ShapeName;
using shacl::Component;
using shacl::Constraint;

namespace {

PathExpr path_of(const shacl::Path& p, bool inverted) {
  using K = shacl::Path::Kind;
  switch (p.kind) {
    case K::Predicate: return PathExpr::atom(p.iri, inverted);
    case K::Inverse: return path_of(p.items.front(), !inverted);
    case K::Sequence:
    case K::Alternative: {
      std::vector<PathExpr> parts;
      for (const auto& i : p.items) parts.push_back(path_of(i, inverted));
      if (inverted && p.kind == K::Sequence) std::reverse(parts.begin(), parts.end());
      PathExpr acc = parts.back();
      for (std::size_t i = parts.size() - 1; i-- > 0;)
        acc = p.kind == K::Sequence ? PathExpr::sequence(parts[i], acc) : PathExpr::alternative(parts[i], acc);
      return acc;
    }
    case K::ZeroOrMore: return PathExpr::star(path_of(p.items.front(), inverted));
    case K::OneOrMore: {
      PathExpr inner = path_of(p.items.front(), inverted);
      return PathExpr::sequence(inner, PathExpr::star(inner));
    }
    case K::ZeroOrOne: return PathExpr::zero_or_one(path_of(p.items.front(), inverted));
  }
  return PathExpr::atom(p.iri, inverted);
}

Formula hs(const rdf::Term& name) { return Formula::has_shape(ShapeName{name}); }

Formula filter(scl::FilterName f) { return Formula::filter(std::move(f)); }

Formula node_kind(const rdf::Term& kind) {
  const std::string k = kind.lexical();
  auto is = [&](const char* local) { return k == rdf::sh_iri(local); };
  Formula iri = filter(scl::FilterName::is_iri());
  Formula lit = filter(scl::FilterName::is_literal());
  Formula blank = filter(scl::FilterName::is_blank());
  if (is("IRI")) return iri;
  if (is("Literal")) return lit;
  if (is("BlankNode")) return blank;
  // Two-kind combinations hold when either filter does.
  if (is("BlankNodeOrIRI")) return Formula::disjunction(blank, iri);
  if (is("BlankNodeOrLiteral")) return Formula::disjunction(blank, lit);
  if (is("IRIOrLiteral")) return Formula::disjunction(iri, lit);
  return Formula::top();
}

scl::FilterKind bound_kind(Component c) {
  switch (c) {
    case Component::MinExclusive: return scl::FilterKind::MinExclusive;
    case Component::MinInclusive: return scl::FilterKind::MinInclusive;
    case Component::MaxExclusive: return scl::FilterKind::MaxExclusive;
    default: return scl::FilterKind::MaxInclusive;
  }
}

Formula closed_formula(const shacl::Document& doc, const shacl::Shape& shape, const Constraint& c) {
  std::vector<Formula> parts;
  for (const auto& r : shacl::closed_forbidden(doc, shape, c))
    parts.push_back(Formula::negation(Formula::exists(PathExpr::atom(r), Formula::top())));
  return Formula::conjunction_of(parts);
}

}  // namespace

PathExpr translate_path(const shacl::Path& path) { return path_of(path, false); }

Formula translate_node_constraint(const shacl::Document& doc, const shacl::Shape& shape, const Constraint& c,
                                  const Options& options) {
  switch (c.component) {
    case Component::HasValue: return Formula::eq(c.terms.front());
    case Component::In: {
      std::vector<Formula> parts;
      for (const auto& t : c.terms) parts.push_back(Formula::eq(t));
      return Formula::disjunction_of(parts);
    }
    case Component::Class:
      return Formula::exists(PathExpr::atom(rdf::Term::iri(rdf::rdf_iri("type"))), Formula::eq(c.terms.front()));
    case Component::Datatype: return filter(scl::FilterName::datatype(c.terms.front().lexical()));
    case Component::NodeKind: return node_kind(c.terms.front());
    case Component::MinExclusive:
    case Component::MinInclusive:
    case Component::MaxExclusive:
    case Component::MaxInclusive:
      return filter(scl::FilterName::bound_filter(bound_kind(c.component), c.terms.front(), options.interpreted_order));
    case Component::MinLength: return filter(scl::FilterName::min_length(c.number));
    case Component::MaxLength: return filter(scl::FilterName::max_length(c.number));
    case Component::Pattern: return filter(scl::FilterName::pattern(c.terms.front().lexical()));
    case Component::LanguageIn: {
      std::vector<Formula> parts;
      for (const auto& t : c.terms) parts.push_back(filter(scl::FilterName::language(t.lexical())));
      return Formula::disjunction_of(parts);
    }
    case Component::Not: return Formula::negation(hs(c.shapes.front()));
    case Component::And: {
      std::vector<Formula> parts;
      for (const auto& s : c.shapes) parts.push_back(hs(s));
      return Formula::conjunction_of(parts);
    }
    case Component::Or: {
      std::vector<Formula> parts;
      for (const auto& s : c.shapes) parts.push_back(hs(s));
      return Formula::disjunction_of(parts);
    }
    case Component::Xone: {
      std::vector<Formula> options_list;
      for (std::size_t i = 0; i < c.shapes.size(); ++i) {
        std::vector<Formula> parts = {hs(c.shapes[i])};
        for (std::size_t j = 0; j < c.shapes.size(); ++j)
          if (j != i) parts.push_back(Formula::negation(hs(c.shapes[j])));
        options_list.push_back(Formula::conjunction_of(parts));
      }
      return Formula::disjunction_of(options_list);
    }
    case Component::Node:
    case Component::Property: return hs(c.shapes.front());
    case Component::Closed: return closed_formula(doc, shape, c);
    default: return Formula::top();
  }
}

Formula translate_property_constraint(const shacl::Document& doc, const shacl::Shape& shape, const Constraint& c,
                                      const PathExpr& path, const Options& options) {
  switch (c.component) {
    case Component::HasValue: return Formula::exists(path, Formula::eq(c.terms.front()));
    case Component::UniqueLang: {
      std::vector<Formula> parts;
      for (const auto& tag : shacl::document_languages(doc))
        parts.push_back(Formula::negation(Formula::count(2, path, filter(scl::FilterName::language(tag)))));
      return Formula::conjunction_of(parts);
    }
    case Component::MinCount: return Formula::count(c.number, path, Formula::top());
    case Component::MaxCount: return Formula::negation(Formula::count(c.number + 1, path, Formula::top()));
    case Component::Equals: return Formula::equals(path, c.terms.front());
    case Component::Disjoint: return Formula::disjoint(path, c.terms.front());
    case Component::LessThan: return Formula::order(path, c.terms.front(), scl::OrderOp::Less);
    case Component::LessThanOrEquals: return Formula::order(path, c.terms.front(), scl::OrderOp::LessEq);
    case Component::QualifiedValueShape: {
      const rdf::Term& q = c.shapes.front();
      std::vector<Formula> nu = {hs(q)};
      if (c.flag)
        for (const auto& sib : shacl::qualified_siblings(doc, shape, q)) nu.push_back(Formula::negation(hs(sib)));
      Formula value = Formula::conjunction_of(nu);
      Formula alpha = c.qualified_min ? Formula::count(*c.qualified_min, path, value) : Formula::top();
      Formula beta =
          c.qualified_max ? Formula::negation(Formula::count(*c.qualified_max + 1, path, value)) : Formula::top();
      if (alpha.kind() == Formula::Kind::Top) return beta;
      if (beta.kind() == Formula::Kind::Top) return alpha;
      return Formula::conjunction(alpha, beta);
    }
    case Component::Closed: return closed_formula(doc, shape, c);
    default: {
      Formula inner = translate_node_constraint(doc, shape, c, options);
      if (inner.kind() == Formula::Kind::Top) return inner;
      return Formula::forall(path, inner);
    }
  }
}

Formula shape_body(const shacl::Document& doc, const shacl::Shape& shape, const Options& options) {
  std::vector<Formula> parts;
  std::optional<PathExpr> path;
  if (shape.path) path = translate_path(*shape.path);
  for (const auto& c : shape.constraints) {
    if (!shacl::component_applies(shape.is_property_shape(), c.component)) continue;
    Formula f = path ? translate_property_constraint(doc, shape, c, *path, options)
                     : translate_node_constraint(doc, shape, c, options);
    if (f.kind() != Formula::Kind::Top) parts.push_back(f);
  }
  return Formula::conjunction_of(parts);
}

Sentence translate(const shacl::Document& input, const Options& options) {
  shacl::Document doc = shacl::split_targets(input);
  std::set<rdf::Term> known;
  for (const auto& s : doc.shapes) known.insert(s.name);
  std::set<rdf::Term> missing;
  for (const auto& s : doc.shapes)
    for (const auto& c : s.constraints)
      for (const auto& r : shacl::shape_references(c))
        if (!known.count(r)) missing.insert(r);
  for (const auto& m : missing) doc.shapes.push_back(shacl::Shape{m});

  std::vector<Sentence> targeted, definitions;
  for (const auto& s : doc.shapes) {
    Formula body = shape_body(doc, s, options);
    if (s.targets.empty()) {
      definitions.push_back(Sentence::define(ShapeName{s.name}, body));
      continue;
    }
    const shacl::Target& t = s.targets.front();
    switch (t.kind) {
      case shacl::Target::Kind::Node: targeted.push_back(Sentence::at(t.term, body)); break;
      case shacl::Target::Kind::Class: targeted.push_back(Sentence::for_class(t.term, body)); break;
      case shacl::Target::Kind::SubjectsOf: targeted.push_back(Sentence::for_subjects(t.term, false, body)); break;
      case shacl::Target::Kind::ObjectsOf: targeted.push_back(Sentence::for_subjects(t.term, true, body)); break;
    }
  }
  targeted.insert(targeted.end(), definitions.begin(), definitions.end());
  return Sentence::conjunction_of(targeted);
}

Sentence extract_definitions(const Sentence& sentence) {
  std::vector<Sentence> defs;
  for (const auto& c : scl::conjuncts(sentence))
    if (c.kind() == Sentence::Kind::ShapeDef) defs.push_back(c);
  return Sentence::conjunction_of(defs);
}

}  // namespace shl::translate
