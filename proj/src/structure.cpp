#include <algorithm>

#include "shl/engine.hpp"
#include "shl/translator.hpp"

namespace shl::engine {

bool FiniteStructure::contains(const Term& t) const {
  return std::find(domain.begin(), domain.end(), t) != domain.end();
}

void FiniteStructure::add_element(const Term& t) {
  if (!contains(t)) domain.push_back(t);
}

std::optional<rdf::Comparison> FiniteStructure::compare(const Term& a, const Term& b) const {
  for (const auto& block : order_blocks) {
    std::optional<std::size_t> ra, rb;
    for (std::size_t r = 0; r < block.ranks.size(); ++r) {
      const auto& cls = block.ranks[r];
      if (std::find(cls.begin(), cls.end(), a) != cls.end()) ra = r;
      if (std::find(cls.begin(), cls.end(), b) != cls.end()) rb = r;
    }
    if (ra && rb) return *ra < *rb ? rdf::Comparison::Less : *ra > *rb ? rdf::Comparison::Greater : rdf::Comparison::Equal;
    if (ra || rb) return std::nullopt;
  }
  return std::nullopt;
}

void canonical_orders(FiniteStructure& s) {
  s.order_blocks.clear();
  for (auto type : {rdf::ComparisonType::Numeric, rdf::ComparisonType::String, rdf::ComparisonType::Boolean,
                    rdf::ComparisonType::DateTime}) {
    std::vector<Term> members;
    for (const auto& t : s.domain)
      if (rdf::comparison_type(t) == type) members.push_back(t);
    if (members.empty()) continue;
    std::stable_sort(members.begin(), members.end(), [](const Term& a, const Term& b) {
      return rdf::compare_terms(a, b) == rdf::Comparison::Less;
    });
    OrderBlock block{type, {}};
    for (const auto& t : members) {
      if (!block.ranks.empty() && rdf::compare_terms(block.ranks.back().front(), t) == rdf::Comparison::Equal)
        block.ranks.back().push_back(t);
      else
        block.ranks.push_back({t});
    }
    s.order_blocks.push_back(std::move(block));
  }
}

FiniteStructure canonical_structure(const rdf::TripleGraph& graph) {
  FiniteStructure s;
  for (const auto& n : graph.nodes()) s.domain.push_back(n);
  for (const auto& t : graph.triples()) s.relations[t.predicate].insert({t.subject, t.object});
  if (s.domain.empty()) s.domain.push_back(Term::blank("inert"));
  canonical_orders(s);
  return s;
}

FiniteStructure compute_shape_assignment(FiniteStructure structure, const Sentence& definitions) {
  for (const auto& d : scl::check_well_formed(definitions))
    if (d.kind == scl::Defect::Kind::RecursiveDefinition) throw EngineError(d.message());
  std::map<ShapeName, Formula> bodies;
  for (const auto& c : scl::conjuncts(definitions))
    if (c.kind() == Sentence::Kind::ShapeDef) bodies.emplace(c.shape(), c.body());

  std::vector<ShapeName> order;
  std::set<ShapeName> done;
  std::function<void(const ShapeName&)> visit = [&](const ShapeName& n) {
    if (done.count(n)) return;
    done.insert(n);
    auto it = bodies.find(n);
    if (it == bodies.end()) return;
    for (const auto& dep : scl::referenced_shapes(it->second)) visit(dep);
    order.push_back(n);
  };
  for (const auto& [name, body] : bodies) visit(name);

  for (const auto& name : order) {
    // A fresh evaluator per definition: earlier shapes are already in place.
    Evaluator ev(structure);
    const auto& ext = ev.extension(bodies.at(name));
    std::vector<Term> members;
    for (std::size_t i = 0; i < structure.domain.size(); ++i)
      if (ext[i]) members.push_back(structure.domain[i]);
    for (const auto& m : members) structure.has_shape.insert({m, name});
  }
  return structure;
}

rdf::TripleGraph graph_of(const FiniteStructure& s) {
  rdf::TripleGraph g;
  for (const auto& [rel, pairs] : s.relations)
    for (const auto& [a, b] : pairs) g.insert(a, rel, b);
  return g;
}

shacl::ValidationReport validate(const rdf::TripleGraph& graph, const shacl::Document& doc) {
  const Sentence sentence = translate::translate(doc);
  FiniteStructure s = canonical_structure(graph);
  for (const auto& c : scl::node_constants(sentence)) s.add_element(c);
  canonical_orders(s);
  s = compute_shape_assignment(std::move(s), translate::extract_definitions(sentence));

  // Targeted conjuncts come out in the order of the split document's
  // targeted shapes.
  std::vector<Term> names;
  for (const auto& shape : shacl::split_targets(doc).shapes)
    if (!shape.targets.empty()) names.push_back(shape.origin.value_or(shape.name));

  Evaluator ev(s);
  shacl::ValidationReport report;
  std::size_t next = 0;
  const auto& rdf_type = Term::iri(rdf::rdf_iri("type"));
  for (const auto& c : scl::conjuncts(sentence)) {
    if (c.kind() == Sentence::Kind::ShapeDef) continue;
    if (next >= names.size()) throw EngineError("translation produced an unexpected targeted conjunct");
    const Term& shape = names[next++];
    const auto& ext = ev.extension(c.body());
    auto check = [&](const Term& focus) {
      auto it = std::find(s.domain.begin(), s.domain.end(), focus);
      if (!ext[it - s.domain.begin()]) report.violations.push_back({focus, shape});
    };
    switch (c.kind()) {
      case Sentence::Kind::AtConst: check(c.constant()); break;
      case Sentence::Kind::ForClass: {
        auto it = s.relations.find(rdf_type);
        if (it == s.relations.end()) break;
        for (const auto& [x, cls] : it->second)
          if (cls == c.constant()) check(x);
        break;
      }
      case Sentence::Kind::ForSubjects: {
        auto it = s.relations.find(c.constant());
        if (it == s.relations.end()) break;
        for (const auto& [x, y] : it->second) check(c.inverted() ? y : x);
        break;
      }
      default: throw EngineError("unexpected conjunct in a translated document");
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.violations.erase(std::unique(report.violations.begin(), report.violations.end()), report.violations.end());
  report.conforms = report.violations.empty();
  return report;
}

}  // namespace shl::engine
