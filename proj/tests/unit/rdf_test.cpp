#include <doctest.h>

#include "testkit.hpp"

using namespace shl;
using rdf::Term;

namespace {

Term ex(const std::string& l) { return Term::iri("http://example.org/" + l); }

const char* kStudentGraph = R"(@prefix : <http://example.org/> .
:Alex a :Student ; :hasFaculty :CS ; :hasSupervisor :Jane .
:Jane :hasFaculty :CS .
)";

}  // namespace

TEST_CASE("turtle: the student graph has four triples") {
  auto g = rdf::parse_turtle(kStudentGraph);
  CHECK(g.size() == 4);
  CHECK(g.contains({ex("Alex"), Term::iri(rdf::rdf_iri("type")), ex("Student")}));
  CHECK(g.contains({ex("Jane"), ex("hasFaculty"), ex("CS")}));
}

TEST_CASE("turtle: serialization re-parses to the same graph") {
  auto g = rdf::parse_turtle(std::string(kStudentGraph) +
                             ":Alex :name \"Alex \\\"A\\\"\"@EN ; :age 23 ; :gpa 3.5 ; :ok true ; :knows [ :p ( :a :b ) ] .\n");
  CHECK(rdf::parse_turtle(rdf::serialize_turtle(g)) == g);
}

TEST_CASE("turtle: syntax errors carry a location") {
  try {
    rdf::parse_turtle("@prefix : <http://example.org/> .\n:a :b\n");
    FAIL("expected a parse error");
  } catch (const rdf::ParseError& e) {
    CHECK(e.line >= 2);
  }
}

TEST_CASE("terms: plain literals equal xsd:string literals, tags are lower-cased") {
  CHECK(Term::literal("a") == Term::literal("a", rdf::xsd_iri("string")));
  CHECK(Term::literal("a", std::nullopt, "EN") == Term::literal("a", std::nullopt, "en"));
  CHECK(rdf::string_length(Term::literal("h\xC3\xA9")) == 2u);
  CHECK_FALSE(rdf::string_length(Term::blank("x")).has_value());
}

TEST_CASE("comparison: SPARQL operator semantics per type") {
  using rdf::Comparison;
  CHECK(rdf::compare_terms(Term::integer(2), Term::literal("2.5", rdf::xsd_iri("decimal"))) == Comparison::Less);
  CHECK(rdf::compare_terms(Term::integer(1), Term::literal("1.0", rdf::xsd_iri("decimal"))) == Comparison::Equal);
  CHECK(rdf::compare_terms(Term::literal("b"), Term::literal("a")) == Comparison::Greater);
  CHECK(rdf::compare_terms(Term::literal("b"), Term::integer(1)) == Comparison::Incomparable);
  CHECK(rdf::compare_terms(ex("a"), ex("b")) == Comparison::Incomparable);
}

TEST_CASE("strict mode rejects literal subjects") {
  rdf::TripleGraph g(rdf::GraphMode::Strict);
  CHECK_THROWS_AS(g.insert(Term::literal("x"), ex("p"), ex("o")), rdf::GraphError);
  rdf::TripleGraph h;
  CHECK(h.insert(Term::literal("x"), ex("p"), ex("o")));
}
