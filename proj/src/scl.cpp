#include "shl/scl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>

namespace shl::scl {

FilterName FilterName::language(std::string tag) {
  std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char c) { return std::tolower(c); });
  return {FilterKind::LanguageTag, std::move(tag)};
}

namespace {

bool well_formed_literal(const Term& term) {
  const std::string dt = term.effective_datatype();
  if (rdf::is_numeric_datatype(dt) || dt == rdf::xsd_iri("boolean") || dt == rdf::xsd_iri("dateTime"))
    return rdf::comparison_type(term).has_value();
  return true;
}

}  // namespace

bool filter_holds(const FilterName& filter, const Term& term) {
  switch (filter.kind) {
    case FilterKind::IsIri: return term.is_iri();
    case FilterKind::IsLiteral: return term.is_literal();
    case FilterKind::IsBlank: return term.is_blank();
    case FilterKind::Datatype:
      return term.is_literal() && term.effective_datatype() == filter.text && well_formed_literal(term);
    case FilterKind::LanguageTag: return term.is_literal() && term.language() && *term.language() == filter.text;
    case FilterKind::MinLength: {
      auto n = rdf::string_length(term);
      return n && *n >= filter.length;
    }
    case FilterKind::MaxLength: {
      auto n = rdf::string_length(term);
      return n && *n <= filter.length;
    }
    case FilterKind::Pattern: {
      if (term.is_blank()) return false;
      try {
        return std::regex_search(term.lexical(), std::regex(filter.text));
      } catch (const std::regex_error&) {
        return false;
      }
    }
    case FilterKind::MinExclusive: return rdf::compare_terms(term, filter.bound) == rdf::Comparison::Greater;
    case FilterKind::MinInclusive: {
      auto c = rdf::compare_terms(term, filter.bound);
      return c == rdf::Comparison::Greater || c == rdf::Comparison::Equal;
    }
    case FilterKind::MaxExclusive: return rdf::compare_terms(term, filter.bound) == rdf::Comparison::Less;
    case FilterKind::MaxInclusive: {
      auto c = rdf::compare_terms(term, filter.bound);
      return c == rdf::Comparison::Less || c == rdf::Comparison::Equal;
    }
  }
  return false;
}

// ---- paths ----------------------------------------------------------------

struct PathExpr::Node {
  Kind kind;
  Term relation;
  bool inverted = false;
  std::vector<PathExpr> children;
};

PathExpr PathExpr::atom(Term relation, bool inverted) {
  return PathExpr(std::make_shared<const Node>(Node{Kind::Atom, std::move(relation), inverted, {}}));
}
PathExpr PathExpr::sequence(PathExpr first, PathExpr second) {
  return PathExpr(std::make_shared<const Node>(Node{Kind::Sequence, {}, false, {std::move(first), std::move(second)}}));
}
PathExpr PathExpr::zero_or_one(PathExpr inner) {
  return PathExpr(std::make_shared<const Node>(Node{Kind::ZeroOrOne, {}, false, {std::move(inner)}}));
}
PathExpr PathExpr::alternative(PathExpr left, PathExpr right) {
  return PathExpr(
      std::make_shared<const Node>(Node{Kind::Alternative, {}, false, {std::move(left), std::move(right)}}));
}
PathExpr PathExpr::star(PathExpr inner) {
  return PathExpr(std::make_shared<const Node>(Node{Kind::Star, {}, false, {std::move(inner)}}));
}

PathExpr::Kind PathExpr::kind() const { return node_->kind; }
const Term& PathExpr::relation() const { return node_->relation; }
bool PathExpr::inverted() const { return node_->inverted; }
const PathExpr& PathExpr::left() const { return node_->children.at(0); }
const PathExpr& PathExpr::right() const { return node_->children.at(1); }

bool operator==(const PathExpr& a, const PathExpr& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->relation == b.node_->relation &&
         a.node_->inverted == b.node_->inverted && a.node_->children == b.node_->children;
}

// ---- formulas -------------------------------------------------------------

struct Formula::Node {
  Kind kind;
  Term term;  // constant or relation
  FilterName filter;
  ShapeName shape;
  std::uint64_t n = 0;
  std::optional<PathExpr> path;
  OrderOp op = OrderOp::Less;
  bool inverted = false;
  std::vector<Formula> children;
};

namespace {
template <class N>
std::shared_ptr<const N> make_node(N n) {
  return std::make_shared<const N>(std::move(n));
}
}  // namespace

Formula Formula::top() {
  static const Formula t(make_node(Node{Kind::Top}));
  return t;
}
Formula Formula::eq(Term constant) {
  Node n{Kind::EqConst};
  n.term = std::move(constant);
  return Formula(make_node(std::move(n)));
}
Formula Formula::filter(FilterName name) {
  Node n{Kind::Filter};
  n.filter = std::move(name);
  return Formula(make_node(std::move(n)));
}
Formula Formula::has_shape(ShapeName shape) {
  Node n{Kind::HasShape};
  n.shape = std::move(shape);
  return Formula(make_node(std::move(n)));
}
Formula Formula::negation(Formula inner) {
  Node n{Kind::Not};
  n.children = {std::move(inner)};
  return Formula(make_node(std::move(n)));
}
Formula Formula::conjunction(Formula left, Formula right) {
  Node n{Kind::And};
  n.children = {std::move(left), std::move(right)};
  return Formula(make_node(std::move(n)));
}
Formula Formula::count(std::uint64_t count, PathExpr path, Formula body) {
  if (count == 0) return top();
  Node n{Kind::Count};
  n.n = count;
  n.path = std::move(path);
  n.children = {std::move(body)};
  return Formula(make_node(std::move(n)));
}
Formula Formula::disjoint(PathExpr path, Term relation) {
  Node n{Kind::Disjoint};
  n.path = std::move(path);
  n.term = std::move(relation);
  return Formula(make_node(std::move(n)));
}
Formula Formula::equals(PathExpr path, Term relation) {
  Node n{Kind::Equals};
  n.path = std::move(path);
  n.term = std::move(relation);
  return Formula(make_node(std::move(n)));
}
Formula Formula::order(PathExpr path, Term relation, OrderOp op, bool inverted) {
  Node n{Kind::Order};
  n.path = std::move(path);
  n.term = std::move(relation);
  n.op = op;
  n.inverted = inverted;
  return Formula(make_node(std::move(n)));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return negation(conjunction(negation(std::move(left)), negation(std::move(right))));
}
Formula Formula::forall(PathExpr path, Formula body) {
  return negation(exists(std::move(path), negation(std::move(body))));
}
Formula Formula::conjunction_of(const std::vector<Formula>& items) {
  if (items.empty()) return top();
  Formula acc = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) acc = conjunction(items[i], acc);
  return acc;
}
Formula Formula::disjunction_of(const std::vector<Formula>& items) {
  if (items.empty()) return bottom();
  Formula acc = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) acc = disjunction(items[i], acc);
  return acc;
}

Formula::Kind Formula::kind() const { return node_->kind; }
const Term& Formula::constant() const { return node_->term; }
const FilterName& Formula::filter() const { return node_->filter; }
const ShapeName& Formula::shape() const { return node_->shape; }
const Formula& Formula::operand() const { return node_->children.at(0); }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }
std::uint64_t Formula::count() const { return node_->n; }
const PathExpr& Formula::path() const { return *node_->path; }
const Formula& Formula::body() const { return node_->children.at(0); }
const Term& Formula::relation() const { return node_->term; }
OrderOp Formula::op() const { return node_->op; }
bool Formula::inverted() const { return node_->inverted; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.term == y.term && x.filter == y.filter && x.shape == y.shape && x.n == y.n &&
         x.path == y.path && x.op == y.op && x.inverted == y.inverted && x.children == y.children;
}

// ---- sentences ------------------------------------------------------------

struct Sentence::Node {
  Kind kind;
  Term term;
  bool inverted = false;
  std::optional<Formula> body;
  ShapeName shape;
  std::uint64_t bound = 0;
  std::vector<Sentence> children;
};

Sentence Sentence::top() {
  static const Sentence t(make_node(Node{Kind::Top}));
  return t;
}
Sentence Sentence::at(Term constant, Formula body) {
  Node n{Kind::AtConst};
  n.term = std::move(constant);
  n.body = std::move(body);
  return Sentence(make_node(std::move(n)));
}
Sentence Sentence::for_class(Term cls, Formula body) {
  Node n{Kind::ForClass};
  n.term = std::move(cls);
  n.body = std::move(body);
  return Sentence(make_node(std::move(n)));
}
Sentence Sentence::for_subjects(Term relation, bool inverted, Formula body) {
  Node n{Kind::ForSubjects};
  n.term = std::move(relation);
  n.inverted = inverted;
  n.body = std::move(body);
  return Sentence(make_node(std::move(n)));
}
Sentence Sentence::conjunction(Sentence left, Sentence right) {
  Node n{Kind::And};
  n.children = {std::move(left), std::move(right)};
  return Sentence(make_node(std::move(n)));
}
Sentence Sentence::conjunction_of(const std::vector<Sentence>& items) {
  if (items.empty()) return top();
  Sentence acc = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) acc = conjunction(items[i], acc);
  return acc;
}
Sentence Sentence::define(ShapeName shape, Formula body) {
  Node n{Kind::ShapeDef};
  n.shape = std::move(shape);
  n.body = std::move(body);
  return Sentence(make_node(std::move(n)));
}
Sentence Sentence::at_most(std::uint64_t bound, Formula body) {
  Node n{Kind::AtMost};
  n.bound = bound;
  n.body = std::move(body);
  return Sentence(make_node(std::move(n)));
}

Sentence::Kind Sentence::kind() const { return node_->kind; }
const Term& Sentence::constant() const { return node_->term; }
bool Sentence::inverted() const { return node_->inverted; }
const Formula& Sentence::body() const { return *node_->body; }
const Sentence& Sentence::left() const { return node_->children.at(0); }
const Sentence& Sentence::right() const { return node_->children.at(1); }
const ShapeName& Sentence::shape() const { return node_->shape; }
std::uint64_t Sentence::bound() const { return node_->bound; }

bool operator==(const Sentence& a, const Sentence& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.term == y.term && x.inverted == y.inverted && x.body == y.body &&
         x.shape == y.shape && x.bound == y.bound && x.children == y.children;
}

std::vector<Sentence> conjuncts(const Sentence& sentence) {
  std::vector<Sentence> out;
  std::function<void(const Sentence&)> walk = [&](const Sentence& s) {
    if (s.kind() == Sentence::Kind::Top) return;
    if (s.kind() == Sentence::Kind::And) {
      walk(s.left());
      walk(s.right());
      return;
    }
    out.push_back(s);
  };
  walk(sentence);
  return out;
}

Sentence map_formulas(const Sentence& s, const std::function<Formula(const Formula&)>& fn) {
  switch (s.kind()) {
    case Sentence::Kind::Top: return s;
    case Sentence::Kind::And: return Sentence::conjunction(map_formulas(s.left(), fn), map_formulas(s.right(), fn));
    case Sentence::Kind::AtConst: return Sentence::at(s.constant(), fn(s.body()));
    case Sentence::Kind::ForClass: return Sentence::for_class(s.constant(), fn(s.body()));
    case Sentence::Kind::ForSubjects: return Sentence::for_subjects(s.constant(), s.inverted(), fn(s.body()));
    case Sentence::Kind::ShapeDef: return Sentence::define(s.shape(), fn(s.body()));
    case Sentence::Kind::AtMost: return Sentence::at_most(s.bound(), fn(s.body()));
  }
  return s;
}

// ---- features -------------------------------------------------------------

FeatureSet::FeatureSet(std::initializer_list<Feature> features) {
  for (Feature f : features) insert(f);
}

std::string feature_name(Feature f) {
  static const char* names[] = {"S", "Z", "A", "T", "D", "E", "O", "O'", "C"};
  return names[static_cast<int>(f)];
}

std::vector<std::string> FeatureSet::names() const {
  std::vector<std::string> out;
  for (int i = 0; i < kFeatureCount; ++i)
    if (has(static_cast<Feature>(i))) out.push_back(feature_name(static_cast<Feature>(i)));
  return out;
}

std::string FeatureSet::to_string() const {
  std::string out = "{";
  for (const auto& n : names()) out += (out.size() > 1 ? "," : "") + n;
  return out + "}";
}

namespace {

void collect_path_features(const PathExpr& p, FeatureSet& f) {
  switch (p.kind()) {
    case PathExpr::Kind::Atom: return;
    case PathExpr::Kind::Sequence: f.insert(Feature::S); break;
    case PathExpr::Kind::ZeroOrOne: f.insert(Feature::Z); break;
    case PathExpr::Kind::Alternative: f.insert(Feature::A); break;
    case PathExpr::Kind::Star: f.insert(Feature::T); break;
  }
  collect_path_features(p.left(), f);
  if (p.kind() == PathExpr::Kind::Sequence || p.kind() == PathExpr::Kind::Alternative)
    collect_path_features(p.right(), f);
}

struct OrderSeen {
  bool any = false;
  bool inverted = false;
};

void collect_formula_features(const Formula& g, FeatureSet& f, OrderSeen& order) {
  switch (g.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::EqConst:
    case Formula::Kind::Filter:
    case Formula::Kind::HasShape: return;
    case Formula::Kind::Not: collect_formula_features(g.operand(), f, order); return;
    case Formula::Kind::And:
      collect_formula_features(g.left(), f, order);
      collect_formula_features(g.right(), f, order);
      return;
    case Formula::Kind::Count:
      if (g.count() != 1) f.insert(Feature::C);
      collect_path_features(g.path(), f);
      collect_formula_features(g.body(), f, order);
      return;
    case Formula::Kind::Disjoint:
      f.insert(Feature::D);
      collect_path_features(g.path(), f);
      return;
    case Formula::Kind::Equals:
      f.insert(Feature::E);
      collect_path_features(g.path(), f);
      return;
    case Formula::Kind::Order:
      order.any = true;
      order.inverted = order.inverted || g.inverted();
      collect_path_features(g.path(), f);
      return;
  }
}

void apply_order(FeatureSet& f, const OrderSeen& order) {
  if (!order.any) return;
  f.insert(order.inverted ? Feature::O : Feature::Oprime);
}

void walk_sentence(const Sentence& s, const std::function<void(const Sentence&)>& fn) {
  if (s.kind() == Sentence::Kind::And) {
    walk_sentence(s.left(), fn);
    walk_sentence(s.right(), fn);
  } else {
    fn(s);
  }
}

void walk_formula(const Formula& g, const std::function<void(const Formula&)>& fn) {
  fn(g);
  switch (g.kind()) {
    case Formula::Kind::Not: walk_formula(g.operand(), fn); break;
    case Formula::Kind::And:
      walk_formula(g.left(), fn);
      walk_formula(g.right(), fn);
      break;
    case Formula::Kind::Count: walk_formula(g.body(), fn); break;
    default: break;
  }
}

void walk_path(const PathExpr& p, const std::function<void(const PathExpr&)>& fn) {
  fn(p);
  if (p.kind() == PathExpr::Kind::Atom) return;
  walk_path(p.left(), fn);
  if (p.kind() == PathExpr::Kind::Sequence || p.kind() == PathExpr::Kind::Alternative) walk_path(p.right(), fn);
}

bool has_body(const Sentence& s) { return s.kind() != Sentence::Kind::Top && s.kind() != Sentence::Kind::And; }

}  // namespace

FeatureSet features_of(const PathExpr& path) {
  FeatureSet f;
  collect_path_features(path, f);
  return f;
}

FeatureSet features_of(const Formula& formula) {
  FeatureSet f;
  OrderSeen order;
  collect_formula_features(formula, f, order);
  apply_order(f, order);
  return f;
}

FeatureSet features_of(const Sentence& sentence) {
  FeatureSet f;
  OrderSeen order;
  walk_sentence(sentence, [&](const Sentence& s) {
    if (has_body(s)) collect_formula_features(s.body(), f, order);
  });
  apply_order(f, order);
  return f;
}

// ---- well-formedness ------------------------------------------------------

std::string Defect::message() const {
  const std::string name = rdf::to_string(shape.term);
  switch (kind) {
    case Kind::MissingDefinition: return "shape name " + name + " has no definition";
    case Kind::DuplicateDefinition: return "shape name " + name + " is defined more than once";
    case Kind::RecursiveDefinition: return "shape name " + name + " is defined recursively";
  }
  return {};
}

std::vector<Defect> check_well_formed(const Sentence& sentence) {
  std::vector<Defect> defects;
  std::map<ShapeName, std::vector<Formula>> definitions;
  std::set<ShapeName> used;
  walk_sentence(sentence, [&](const Sentence& s) {
    if (s.kind() == Sentence::Kind::ShapeDef) definitions[s.shape()].push_back(s.body());
    if (has_body(s))
      for (const auto& n : referenced_shapes(s.body())) used.insert(n);
  });
  for (const auto& n : used)
    if (!definitions.count(n)) defects.push_back({Defect::Kind::MissingDefinition, n});
  for (const auto& [n, bodies] : definitions)
    if (bodies.size() > 1) defects.push_back({Defect::Kind::DuplicateDefinition, n});

  // Shapes on a cycle of the definition dependency graph.
  std::map<ShapeName, std::set<ShapeName>> deps;
  for (const auto& [n, bodies] : definitions)
    for (const auto& b : bodies)
      for (const auto& r : referenced_shapes(b))
        if (definitions.count(r)) deps[n].insert(r);
  for (const auto& [start, _] : definitions) {
    std::set<ShapeName> seen;
    std::vector<ShapeName> stack(deps[start].begin(), deps[start].end());
    bool cyclic = false;
    while (!stack.empty() && !cyclic) {
      ShapeName cur = stack.back();
      stack.pop_back();
      if (cur == start) cyclic = true;
      if (!seen.insert(cur).second) continue;
      for (const auto& next : deps[cur]) stack.push_back(next);
    }
    if (cyclic) defects.push_back({Defect::Kind::RecursiveDefinition, start});
  }
  return defects;
}

// ---- traversal helpers ----------------------------------------------------

std::size_t node_count(const PathExpr& path) {
  std::size_t n = 0;
  walk_path(path, [&](const PathExpr&) { ++n; });
  return n;
}

std::size_t node_count(const Formula& formula) {
  std::size_t n = 0;
  walk_formula(formula, [&](const Formula& g) {
    ++n;
    if (g.kind() == Formula::Kind::Count || g.kind() == Formula::Kind::Disjoint ||
        g.kind() == Formula::Kind::Equals || g.kind() == Formula::Kind::Order)
      n += node_count(g.path());
  });
  return n;
}

std::size_t node_count(const Sentence& sentence) {
  std::size_t n = 0;
  std::function<void(const Sentence&)> walk = [&](const Sentence& s) {
    ++n;
    if (s.kind() == Sentence::Kind::And) {
      walk(s.left());
      walk(s.right());
    } else if (has_body(s)) {
      n += node_count(s.body());
    }
  };
  walk(sentence);
  return n;
}

std::set<Term> node_constants(const Formula& formula) {
  std::set<Term> out;
  walk_formula(formula, [&](const Formula& g) {
    if (g.kind() == Formula::Kind::EqConst) out.insert(g.constant());
    if (g.kind() == Formula::Kind::Filter && g.filter().via_order) out.insert(g.filter().bound);
  });
  return out;
}

std::set<Term> node_constants(const Sentence& sentence) {
  std::set<Term> out;
  walk_sentence(sentence, [&](const Sentence& s) {
    if (s.kind() == Sentence::Kind::AtConst || s.kind() == Sentence::Kind::ForClass) out.insert(s.constant());
    if (has_body(s))
      for (const auto& c : node_constants(s.body())) out.insert(c);
  });
  return out;
}

std::set<Term> relations(const Sentence& sentence) {
  std::set<Term> out;
  walk_sentence(sentence, [&](const Sentence& s) {
    if (s.kind() == Sentence::Kind::ForClass) out.insert(Term::iri(rdf::rdf_iri("type")));
    if (s.kind() == Sentence::Kind::ForSubjects) out.insert(s.constant());
    if (!has_body(s)) return;
    walk_formula(s.body(), [&](const Formula& g) {
      switch (g.kind()) {
        case Formula::Kind::Disjoint:
        case Formula::Kind::Equals:
        case Formula::Kind::Order: out.insert(g.relation()); [[fallthrough]];
        case Formula::Kind::Count:
          walk_path(g.path(), [&](const PathExpr& p) {
            if (p.kind() == PathExpr::Kind::Atom) out.insert(p.relation());
          });
          break;
        default: break;
      }
    });
  });
  return out;
}

std::set<FilterName> filters(const Formula& formula) {
  std::set<FilterName> out;
  walk_formula(formula, [&](const Formula& g) {
    if (g.kind() == Formula::Kind::Filter) out.insert(g.filter());
  });
  return out;
}

std::set<FilterName> filters(const Sentence& sentence) {
  std::set<FilterName> out;
  walk_sentence(sentence, [&](const Sentence& s) {
    if (has_body(s))
      for (const auto& f : filters(s.body())) out.insert(f);
  });
  return out;
}

std::set<ShapeName> referenced_shapes(const Formula& formula) {
  std::set<ShapeName> out;
  walk_formula(formula, [&](const Formula& g) {
    if (g.kind() == Formula::Kind::HasShape) out.insert(g.shape());
  });
  return out;
}

std::set<ShapeName> defined_shapes(const Sentence& sentence) {
  std::set<ShapeName> out;
  walk_sentence(sentence, [&](const Sentence& s) {
    if (s.kind() == Sentence::Kind::ShapeDef) out.insert(s.shape());
  });
  return out;
}

bool has_order_atoms(const Sentence& sentence) {
  bool found = false;
  walk_sentence(sentence, [&](const Sentence& s) {
    if (!has_body(s)) return;
    walk_formula(s.body(), [&](const Formula& g) {
      if (g.kind() == Formula::Kind::Order || (g.kind() == Formula::Kind::Filter && g.filter().via_order))
        found = true;
    });
  });
  return found;
}

}  // namespace shl::scl
