#include <algorithm>

#include "shl/engine.hpp"
#include "shl/translator.hpp"

namespace shl::engine {

std::string ContainmentResult::outcome_name() const {
  switch (outcome) {
    case Outcome::NotContained: return "NotContained";
    case Outcome::NoCounterexampleUpTo: return "NoCounterexampleUpTo";
    case Outcome::Aborted: return "Aborted";
  }
  return "Aborted";
}

namespace {

using Renaming = std::map<ShapeName, ShapeName>;

Formula rename(const Formula& g, const Renaming& m) {
  using K = Formula::Kind;
  switch (g.kind()) {
    case K::HasShape: {
      auto it = m.find(g.shape());
      return it == m.end() ? g : Formula::has_shape(it->second);
    }
    case K::Not: return Formula::negation(rename(g.operand(), m));
    case K::And: return Formula::conjunction(rename(g.left(), m), rename(g.right(), m));
    case K::Count: return Formula::count(g.count(), g.path(), rename(g.body(), m));
    default: return g;
  }
}

Sentence rename(const Sentence& s, const Renaming& m) {
  std::vector<Sentence> parts;
  for (const auto& c : scl::conjuncts(s)) {
    if (c.kind() == Sentence::Kind::ShapeDef) {
      auto it = m.find(c.shape());
      parts.push_back(Sentence::define(it == m.end() ? c.shape() : it->second, rename(c.body(), m)));
    } else {
      parts.push_back(scl::map_formulas(c, [&](const Formula& g) { return rename(g, m); }));
    }
  }
  return Sentence::conjunction_of(parts);
}

// Shape names of the second sentence that also occur in the first get a
// suffix until they are unused.
Sentence separate(const Sentence& first, const Sentence& second) {
  std::set<ShapeName> taken = scl::defined_shapes(first);
  for (const auto& s : scl::defined_shapes(second)) taken.insert(s);
  Renaming m;
  for (const auto& s : scl::defined_shapes(second)) {
    if (!scl::defined_shapes(first).count(s)) continue;
    std::string base = s.term.is_iri() ? s.term.lexical() : "urn:scl:shape:" + s.term.lexical();
    for (int k = 2;; ++k) {
      ShapeName fresh{Term::iri(base + "#doc2-" + std::to_string(k))};
      if (taken.insert(fresh).second) {
        m.emplace(s, fresh);
        break;
      }
    }
  }
  return m.empty() ? second : rename(second, m);
}

shacl::Document candidate(const shacl::Document& doc, const Term& target, std::vector<shacl::Constraint> body) {
  shacl::Document out = doc;
  for (auto& s : out.shapes) s.targets.clear();
  shacl::Shape wrapper;
  wrapper.name = Term::iri("urn:scl:reduction:shape");
  wrapper.targets.push_back({shacl::Target::Kind::Node, target});
  wrapper.constraints = std::move(body);
  out.shapes.push_back(std::move(wrapper));
  std::sort(out.shapes.begin(), out.shapes.end(),
            [](const shacl::Shape& a, const shacl::Shape& b) { return a.name < b.name; });
  return out;
}

std::set<Term> constraint_constants(const shacl::Document& doc, const Term& shape) {
  const shacl::Shape* s = doc.find(shape);
  if (!s) throw EngineError("unknown shape " + rdf::to_string(shape));
  return scl::node_constants(translate::shape_body(doc, *s));
}

std::vector<shacl::Document> candidates(const shacl::Document& doc, std::set<Term> constants,
                                        const std::vector<shacl::Constraint>& body) {
  std::vector<shacl::Document> out;
  for (const auto& c : constants) out.push_back(candidate(doc, c, body));
  out.push_back(candidate(doc, Term::iri(kFreshTarget), body));
  return out;
}

}  // namespace

ContainmentResult check_containment(const shacl::Document& doc1, const shacl::Document& doc2,
                                    const SearchOptions& options) {
  const Sentence first = translate::translate(doc1);
  const Sentence second = separate(first, translate::translate(doc2));
  std::vector<Sentence> targeted;
  for (const auto& c : scl::conjuncts(second))
    if (c.kind() != Sentence::Kind::ShapeDef) targeted.push_back(c);
  const Sentence require = Sentence::conjunction(first, translate::extract_definitions(second));

  SearchOptions o = options;
  o.canonical_filters = true;
  SatVerdict v = find_violation(require, targeted, o);
  ContainmentResult r;
  r.bound = v.bound;
  r.reason = v.reason;
  switch (v.outcome) {
    case SatVerdict::Outcome::Sat: {
      r.outcome = ContainmentResult::Outcome::NotContained;
      rdf::TripleGraph g = graph_of(*v.model);
      r.confirmed = shacl::validate_direct(g, doc1).conforms && !shacl::validate_direct(g, doc2).conforms;
      r.counterexample = std::move(g);
      break;
    }
    case SatVerdict::Outcome::UnsatUpTo: r.outcome = ContainmentResult::Outcome::NoCounterexampleUpTo; break;
    case SatVerdict::Outcome::Aborted: r.outcome = ContainmentResult::Outcome::Aborted; break;
  }
  return r;
}

std::vector<shacl::Document> reduce_constraint_sat(const shacl::Document& doc, const Term& shape) {
  shacl::Constraint node{};
  node.component = shacl::Component::Node;
  node.shapes = {shape};
  return candidates(doc, constraint_constants(doc, shape), {node});
}

std::vector<shacl::Document> reduce_constraint_containment(const shacl::Document& doc, const Term& first,
                                                           const Term& second) {
  std::set<Term> constants = constraint_constants(doc, first);
  for (const auto& c : constraint_constants(doc, second)) constants.insert(c);
  shacl::Constraint node{};
  node.component = shacl::Component::Node;
  node.shapes = {first};
  shacl::Constraint negated{};
  negated.component = shacl::Component::Not;
  negated.shapes = {second};
  return candidates(doc, constants, {node, negated});
}

}  // namespace shl::engine
