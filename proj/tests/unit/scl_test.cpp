#include <doctest.h>

#include "testkit.hpp"

using namespace shl;
using scl::Feature;
using scl::FeatureSet;
using scl::Formula;
using scl::PathExpr;
using scl::Sentence;

namespace {

rdf::Term ex(const std::string& l) { return rdf::Term::iri("http://example.org/" + l); }

const char* kStudentSentence = R"((and
  (for-class :Student (not (hasshape :disjFacultyShape)))
  (def-shape :disjFacultyShape (disjoint (seq (rel :hasSupervisor) (rel :hasFaculty)) :hasFaculty))))";

}  // namespace

TEST_CASE("syntax: the student sentence parses and prints back identically") {
  auto s = scl::parse_sentence(kStudentSentence);
  CHECK(scl::print(s) == kStudentSentence);
  CHECK(scl::features_of(s) == FeatureSet{Feature::S, Feature::D});
  CHECK(scl::check_well_formed(s).empty());
}

TEST_CASE("syntax: random sentences survive print and parse") {
  std::mt19937 rng(7);
  auto gen = testkit::default_generator();
  gen.use_orders = true;
  for (int i = 0; i < 300; ++i) {
    auto s = gen.sentence(rng);
    auto text = scl::print(s);
    CHECK(scl::print(scl::parse_sentence(text)) == text);
  }
}

TEST_CASE("syntax: errors report line and column") {
  try {
    scl::parse_sentence("(and\n  (at :a (frob)))");
    FAIL("expected a syntax error");
  } catch (const scl::SyntaxError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("features: each construct maps to its letter") {
  auto p = PathExpr::atom(ex("p")), q = PathExpr::atom(ex("q"));
  auto at = [](const Formula& f) { return scl::features_of(Sentence::at(ex("a"), f)); };
  CHECK(at(Formula::exists(PathExpr::sequence(p, q), Formula::top())) == FeatureSet{Feature::S});
  CHECK(at(Formula::exists(PathExpr::zero_or_one(p), Formula::top())) == FeatureSet{Feature::Z});
  CHECK(at(Formula::exists(PathExpr::alternative(p, q), Formula::top())) == FeatureSet{Feature::A});
  CHECK(at(Formula::exists(PathExpr::star(p), Formula::top())) == FeatureSet{Feature::T});
  CHECK(at(Formula::disjoint(p, ex("q"))) == FeatureSet{Feature::D});
  CHECK(at(Formula::equals(p, ex("q"))) == FeatureSet{Feature::E});
  CHECK(at(Formula::order(p, ex("q"), scl::OrderOp::Less, true)) == FeatureSet{Feature::O});
  CHECK(at(Formula::order(p, ex("q"), scl::OrderOp::Less)) == FeatureSet{Feature::Oprime});
  CHECK(at(Formula::count(2, p, Formula::top())) == FeatureSet{Feature::C});
  CHECK(at(Formula::exists(PathExpr::atom(ex("p"), true), Formula::eq(ex("b")))).empty());
}

TEST_CASE("well-formedness: missing and recursive definitions") {
  auto missing = scl::parse_sentence("(at :a (hasshape :s))");
  auto defects = scl::check_well_formed(missing);
  REQUIRE(defects.size() == 1);
  CHECK(defects[0].kind == scl::Defect::Kind::MissingDefinition);

  auto loop = scl::parse_sentence("(and (def-shape :s (count>= 1 (rel :p) (hasshape :t))) (def-shape :t (hasshape :s)))");
  bool recursive = false;
  for (const auto& d : scl::check_well_formed(loop)) recursive |= d.kind == scl::Defect::Kind::RecursiveDefinition;
  CHECK(recursive);
}

TEST_CASE("filters: canonical interpretation") {
  using scl::FilterName;
  using rdf::Term;
  CHECK(scl::filter_holds(FilterName::is_iri(), ex("a")));
  CHECK_FALSE(scl::filter_holds(FilterName::is_iri(), Term::literal("a")));
  CHECK(scl::filter_holds(FilterName::min_length(2), Term::literal("ab")));
  CHECK_FALSE(scl::filter_holds(FilterName::min_length(2), Term::blank("ab")));
  CHECK(scl::filter_holds(FilterName::datatype(rdf::xsd_iri("integer")), Term::integer(3)));
  CHECK(scl::filter_holds(FilterName::language("en"), Term::literal("x", std::nullopt, "EN")));
  CHECK(scl::filter_holds(FilterName::bound_filter(scl::FilterKind::MinExclusive, Term::integer(0)), Term::integer(1)));
  CHECK_FALSE(
      scl::filter_holds(FilterName::bound_filter(scl::FilterKind::MinExclusive, Term::integer(0)), Term::literal("1")));
  CHECK(scl::filter_holds(FilterName::pattern("^a"), Term::literal("abc")));
}
