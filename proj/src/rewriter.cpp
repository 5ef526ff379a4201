#include "shl/rewriter.hpp"

#include <optional>

namespace shl::rewrite {

using scl::Feature;
using scl::FeatureSet;
using scl::Formula;
using scl::PathExpr;
using scl::Sentence;

namespace {

bool enabled_inside(const PathExpr& p, const FeatureSet& on) {
  FeatureSet f = scl::features_of(p);
  return (on.has(Feature::S) && f.has(Feature::S)) || (on.has(Feature::Z) && f.has(Feature::Z)) ||
         (on.has(Feature::A) && f.has(Feature::A));
}

// Alternative-free paths whose union equals p, or nullopt when an
// alternative sits under a closure.
std::optional<std::vector<PathExpr>> lift_alternatives(const PathExpr& p) {
  using K = PathExpr::Kind;
  switch (p.kind()) {
    case K::Atom: return std::vector<PathExpr>{p};
    case K::Alternative: {
      auto l = lift_alternatives(p.left());
      auto r = lift_alternatives(p.right());
      if (!l || !r) return std::nullopt;
      l->insert(l->end(), r->begin(), r->end());
      return l;
    }
    case K::Sequence: {
      auto l = lift_alternatives(p.left());
      auto r = lift_alternatives(p.right());
      if (!l || !r) return std::nullopt;
      std::vector<PathExpr> out;
      for (const auto& a : *l)
        for (const auto& b : *r) out.push_back(PathExpr::sequence(a, b));
      return out;
    }
    case K::ZeroOrOne: {
      auto in = lift_alternatives(p.left());
      if (!in) return std::nullopt;
      for (auto& x : *in) x = PathExpr::zero_or_one(x);
      return in;
    }
    case K::Star:
      if (scl::features_of(p.left()).has(Feature::A)) return std::nullopt;
      return std::vector<PathExpr>{p};
  }
  return std::nullopt;
}

class Eliminator {
 public:
  explicit Eliminator(FeatureSet on) : on_(on) {}

  Formula run(const Formula& g) {
    using K = Formula::Kind;
    switch (g.kind()) {
      case K::Not: return Formula::negation(run(g.operand()));
      case K::And: return Formula::conjunction(run(g.left()), run(g.right()));
      case K::Count: {
        Formula body = run(g.body());
        if (g.count() == 1) return exists(g.path(), body);
        if (enabled_inside(g.path(), on_)) refuse(g, "count>=" + std::to_string(g.count()));
        return Formula::count(g.count(), g.path(), body);
      }
      case K::Disjoint:
      case K::Order: {
        const bool order = g.kind() == K::Order;
        const char* where = order ? "order" : "disjoint";
        FeatureSet f = scl::features_of(g.path());
        if ((on_.has(Feature::Z) && f.has(Feature::Z)) || (on_.has(Feature::S) && f.has(Feature::S))) {
          refuse(g, where);
          return g;
        }
        if (on_.has(Feature::A) && f.has(Feature::A)) {
          auto parts = lift_alternatives(g.path());
          if (!parts) {
            refuse(g, where);
            return g;
          }
          std::vector<Formula> atoms;
          for (const auto& p : *parts)
            atoms.push_back(order ? Formula::order(p, g.relation(), g.op(), g.inverted())
                                  : Formula::disjoint(p, g.relation()));
          return Formula::conjunction_of(atoms);
        }
        return g;
      }
      case K::Equals:
        if (enabled_inside(g.path(), on_)) refuse(g, "equals");
        return g;
      default: return g;
    }
  }

  std::vector<std::string> defects;

 private:
  Formula exists(const PathExpr& p, const Formula& body) {
    using K = PathExpr::Kind;
    switch (p.kind()) {
      case K::Atom: return Formula::exists(p, body);
      case K::Sequence:
        if (on_.has(Feature::S) || enabled_inside(p, on_)) return exists(p.left(), exists(p.right(), body));
        return Formula::exists(p, body);
      case K::ZeroOrOne:
        if (on_.has(Feature::Z)) return Formula::disjunction(body, exists(p.left(), body));
        if (enabled_inside(p, on_)) refuse(Formula::exists(p, body), "zero-or-one");
        return Formula::exists(p, body);
      case K::Alternative:
        if (on_.has(Feature::A)) return Formula::disjunction(exists(p.left(), body), exists(p.right(), body));
        if (enabled_inside(p, on_)) refuse(Formula::exists(p, body), "alternative");
        return Formula::exists(p, body);
      case K::Star:
        if (enabled_inside(p, on_)) refuse(Formula::exists(p, body), "transitive closure");
        return Formula::exists(p, body);
    }
    return Formula::exists(p, body);
  }

  void refuse(const Formula& g, const std::string& where) {
    std::string which;
    FeatureSet present = scl::features_of(g.path());
    if (on_.has(Feature::S) && present.has(Feature::S)) which += "S";
    if (on_.has(Feature::Z) && present.has(Feature::Z)) which += "Z";
    if (on_.has(Feature::A) && present.has(Feature::A)) which += "A";
    defects.push_back(which + " not eliminable under " + where + ": " + scl::print(g));
  }

  FeatureSet on_;
};

Result<Formula> run_with(const Formula& g, FeatureSet on) {
  Eliminator e(on);
  Formula out = e.run(g);
  return {out, std::move(e.defects)};
}

}  // namespace

Result<Formula> eliminate_sequence(const Formula& g) { return run_with(g, {Feature::S}); }
Result<Formula> eliminate_zero_or_one(const Formula& g) { return run_with(g, {Feature::Z}); }
Result<Formula> eliminate_alternative(const Formula& g) { return run_with(g, {Feature::A}); }

Result<Sentence> eliminate(const Sentence& sentence, FeatureSet which) {
  Sentence input = sentence;
  if (which.has(Feature::Z) || which.has(Feature::A)) input = name_subformulas(sentence);
  std::vector<std::string> defects;
  Sentence out = scl::map_formulas(input, [&](const Formula& g) {
    Eliminator e(which);
    Formula r = e.run(g);
    defects.insert(defects.end(), e.defects.begin(), e.defects.end());
    return r;
  });
  return {out, defects};
}

namespace {

class Namer {
 public:
  explicit Namer(const Sentence& s) {
    for (const auto& n : scl::defined_shapes(s)) taken_.insert(n.term.lexical());
  }

  Formula run(const Formula& g) {
    using K = Formula::Kind;
    switch (g.kind()) {
      case K::Not: return Formula::negation(run(g.operand()));
      case K::And: return Formula::conjunction(run(g.left()), run(g.right()));
      case K::Count: {
        const Formula& body = g.body();
        if (body.kind() == K::Top || body.kind() == K::HasShape) return g;
        Formula inner = run(body);
        scl::ShapeName name{fresh()};
        definitions.push_back(Sentence::define(name, inner));
        return Formula::count(g.count(), g.path(), Formula::has_shape(name));
      }
      default: return g;
    }
  }

  std::vector<Sentence> definitions;

 private:
  rdf::Term fresh() {
    while (true) {
      std::string iri = "urn:scl:named:" + std::to_string(++counter_);
      if (!taken_.count(iri)) return rdf::Term::iri(iri);
    }
  }

  std::set<std::string> taken_;
  std::size_t counter_ = 0;
};

}  // namespace

Sentence name_subformulas(const Sentence& sentence) {
  Namer namer(sentence);
  Sentence main = scl::map_formulas(sentence, [&](const Formula& g) { return namer.run(g); });
  if (namer.definitions.empty()) return sentence;
  std::vector<Sentence> parts = scl::conjuncts(main);
  parts.insert(parts.end(), namer.definitions.begin(), namer.definitions.end());
  return Sentence::conjunction_of(parts);
}

FeatureSet normalize_fragment(FeatureSet f) {
  const FeatureSet sza{Feature::S, Feature::Z, Feature::A};
  if (f.subset_of(sza)) return {};
  if (f.has(Feature::A)) {
    FeatureSet rest = f;
    rest.erase(Feature::A);
    if (rest == FeatureSet{Feature::D} || rest == FeatureSet{Feature::O} ||
        rest == FeatureSet{Feature::D, Feature::O})
      return rest;
  }
  return f;
}

}  // namespace shl::rewrite
