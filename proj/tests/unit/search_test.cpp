#include <doctest.h>

#include "shl/translator.hpp"
#include "testkit.hpp"

using namespace shl;
using rdf::Term;
using engine::SatVerdict;
using engine::SearchOptions;
using Outcome = SatVerdict::Outcome;

namespace {

shacl::Document doc(const std::string& body) {
  return shacl::extract_document(rdf::parse_turtle(std::string(testkit::kPrefixes) + body));
}

SearchOptions opts(std::size_t max_domain, unsigned threads = 2) {
  SearchOptions o;
  o.max_domain = max_domain;
  o.threads = threads;
  return o;
}

bool same_model(const engine::FiniteStructure& a, const engine::FiniteStructure& b) {
  auto drop_empty = [](const engine::FiniteStructure& s) {
    auto r = s.relations;
    std::erase_if(r, [](const auto& kv) { return kv.second.empty(); });
    return r;
  };
  return a.domain == b.domain && drop_empty(a) == drop_empty(b) && a.filter_ext == b.filter_ext &&
         a.has_shape == b.has_shape;
}

}  // namespace

TEST_CASE("search: returned models satisfy the sentence") {
  std::mt19937 rng(5);
  auto gen = testkit::default_generator();
  gen.max_depth = 2;
  int sat = 0;
  for (int i = 0; i < 40; ++i) {
    const auto s = gen.sentence(rng);
    const auto v = engine::bounded_sat(s, opts(3));
    CAPTURE(scl::print(s));
    REQUIRE(v.outcome != Outcome::Aborted);
    if (v.outcome != Outcome::Sat) continue;
    ++sat;
    REQUIRE(v.model);
    CHECK(engine::evaluate(*v.model, s));
    CHECK(v.model->domain.size() == v.bound);
  }
  CHECK(sat > 10);
}

TEST_CASE("search: the least model does not depend on the worker count") {
  std::mt19937 rng(6);
  auto gen = testkit::default_generator();
  gen.max_depth = 2;
  for (int i = 0; i < 25; ++i) {
    const auto s = gen.sentence(rng);
    const auto a = engine::bounded_sat(s, opts(3, 1)), b = engine::bounded_sat(s, opts(3, 4));
    CAPTURE(scl::print(s));
    REQUIRE(a.outcome == b.outcome);
    if (a.outcome == Outcome::Sat) CHECK(same_model(*a.model, *b.model));
  }
}

TEST_CASE("search: unsatisfiable up to k means unsatisfiable up to every smaller bound") {
  const auto s = scl::parse_sentence("(at :a (and (count>= 3 (rel :p) (top)) (not (count>= 1 (rel :p) (eq :a)))))");
  CHECK(engine::bounded_sat(s, opts(3)).outcome == Outcome::UnsatUpTo);
  CHECK(engine::bounded_sat(s, opts(2)).outcome == Outcome::UnsatUpTo);
  const auto v = engine::bounded_sat(s, opts(4));
  CHECK(v.outcome == Outcome::Sat);
  CHECK(v.bound == 4);
}

TEST_CASE("search: contradictory cardinalities") {
  const auto d = doc(":s a sh:NodeShape ; sh:targetNode :a ; sh:property [ sh:path :p ; sh:minCount 1 ; sh:maxCount 0 ] .");
  const auto v = engine::bounded_sat(translate::translate(d), opts(4));
  CHECK(v.outcome == Outcome::UnsatUpTo);
  CHECK(v.bound == 4);
}

TEST_CASE("search: a domain bound below the constant count aborts") {
  const auto s = scl::parse_sentence("(and (at :a (top)) (at :b (top)) (at :c (top)))");
  const auto v = engine::bounded_sat(s, opts(2));
  CHECK(v.outcome == Outcome::Aborted);
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("search: containment of minimum counts") {
  const auto two = doc(":s a sh:NodeShape ; sh:targetClass :C ; sh:property [ sh:path :p ; sh:minCount 2 ] .");
  const auto one = doc(":s a sh:NodeShape ; sh:targetClass :C ; sh:property [ sh:path :p ; sh:minCount 1 ] .");
  const auto forward = engine::check_containment(two, one, opts(4));
  CHECK(forward.outcome == engine::ContainmentResult::Outcome::NoCounterexampleUpTo);
  CHECK(forward.bound == 4);

  const auto back = engine::check_containment(one, two, opts(4));
  REQUIRE(back.outcome == engine::ContainmentResult::Outcome::NotContained);
  CHECK(back.confirmed);
  REQUIRE(back.counterexample);
  CHECK(shacl::validate_direct(*back.counterexample, one).conforms);
  CHECK_FALSE(shacl::validate_direct(*back.counterexample, two).conforms);
}

TEST_CASE("search: constraint reductions") {
  const auto d = doc(":s1 a sh:NodeShape ; sh:property [ sh:path :p ; sh:minCount 1 ] .\n"
                     ":s2 a sh:NodeShape ; sh:property [ sh:path :p ; sh:minCount 2 ] .\n"
                     ":s3 a sh:NodeShape ; sh:in ( :a ) .\n"
                     ":s4 a sh:NodeShape ; sh:in ( :a :b ) .");
  auto sat_any = [](const std::vector<shacl::Document>& cands) {
    bool any = false;
    for (const auto& c : cands) any = any || engine::bounded_sat(translate::translate(c), opts(4)).outcome == Outcome::Sat;
    return any;
  };
  auto ex = [](const char* l) { return Term::iri(std::string("http://example.org/") + l); };
  const auto single = engine::reduce_constraint_sat(d, ex("s1"));
  CHECK(single.size() == 1);
  CHECK(sat_any(single));
  CHECK(sat_any(engine::reduce_constraint_containment(d, ex("s1"), ex("s2"))));
  const auto in = engine::reduce_constraint_containment(d, ex("s3"), ex("s4"));
  CHECK(in.size() == 3);
  CHECK_FALSE(sat_any(in));
}

TEST_CASE("search: tiling gadgets at small sizes") {
  using engine::DominoVariant;
  const engine::TilingSystem one{{"t"}, {{"t", "t"}}, {{"t", "t"}}};
  const engine::TilingSystem no_h{{"t"}, {}, {{"t", "t"}}};
  SearchOptions o = opts(1);
  o.canonical_filters = false;
  o.unique_names = false;
  const auto sac = engine::bounded_sat(engine::gadget_domino(DominoVariant::SAC, one), o);
  CHECK(sac.outcome == Outcome::Sat);
  CHECK(sac.bound == 1);
  o.max_domain = 3;
  CHECK(engine::bounded_sat(engine::gadget_domino(DominoVariant::SO, no_h), o).outcome == Outcome::UnsatUpTo);
}

TEST_CASE("search: the C gadget has no small model") {
  SearchOptions o = opts(4);
  o.canonical_filters = false;
  const auto v = engine::bounded_sat(engine::gadget_infinity(engine::InfinityKind::C), o);
  CHECK(v.outcome == Outcome::UnsatUpTo);
}

TEST_CASE("search: identifying constants") {
  const auto s = scl::parse_sentence("(at :a (eq :b))");
  CHECK(engine::bounded_sat(s, opts(3)).outcome == Outcome::UnsatUpTo);
  SearchOptions o = opts(3);
  o.canonical_filters = false;
  CHECK(engine::bounded_sat(s, o).outcome == Outcome::UnsatUpTo);
  o.unique_names = false;
  const auto v = engine::bounded_sat(s, o);
  REQUIRE(v.outcome == Outcome::Sat);
  CHECK(v.bound == 1);
  CHECK(v.reason.find("identified") != std::string::npos);

  SearchOptions canonical = opts(3);
  canonical.unique_names = false;
  CHECK_THROWS_AS(engine::bounded_sat(s, canonical), engine::EngineError);
}

TEST_CASE("search: strict orders are irreflexive") {
  // Every p-successor would have to be strictly below itself.
  const auto s = scl::parse_sentence("(at :a (and (count>= 1 (rel :p) (top)) (order (rel :p) :p lt fwd)))");
  SearchOptions o = opts(3);
  o.canonical_filters = false;
  CHECK(engine::bounded_sat(s, o).outcome == Outcome::UnsatUpTo);
  const auto weak = scl::parse_sentence("(at :a (and (count>= 1 (rel :p) (top)) (order (rel :p) :p le fwd)))");
  CHECK(engine::bounded_sat(weak, o).outcome == Outcome::Sat);
}
