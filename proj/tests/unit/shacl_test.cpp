#include <doctest.h>

#include "testkit.hpp"

using namespace shl;
using rdf::Term;

namespace {

Term ex(const std::string& l) { return Term::iri("http://example.org/" + l); }

shacl::Document student_document() { return testkit::corpus().front().document(); }

rdf::TripleGraph graph(const std::string& body) { return rdf::parse_turtle(std::string(testkit::kPrefixes) + body); }

}  // namespace

TEST_CASE("extract: the student document has a node shape and a property shape") {
  auto doc = student_document();
  REQUIRE(doc.shapes.size() == 2);
  const auto* student = doc.find(ex("studentShape"));
  const auto* disj = doc.find(ex("disjFacultyShape"));
  REQUIRE(student);
  REQUIRE(disj);
  CHECK_FALSE(student->is_property_shape());
  REQUIRE(student->targets.size() == 1);
  CHECK(student->targets[0].kind == shacl::Target::Kind::Class);
  REQUIRE(student->constraints.size() == 1);
  CHECK(student->constraints[0].component == shacl::Component::Not);
  REQUIRE(disj->path);
  CHECK(disj->path->kind == shacl::Path::Kind::Sequence);
  REQUIRE(disj->constraints.size() == 1);
  CHECK(disj->constraints[0].component == shacl::Component::Disjoint);
}

TEST_CASE("validate_direct: student graph conforms, empty graph conforms") {
  auto doc = student_document();
  CHECK(shacl::validate_direct(graph(":Alex a :Student ; :hasFaculty :CS ; :hasSupervisor :Jane . :Jane :hasFaculty :CS ."),
                               doc)
            .conforms);
  CHECK(shacl::validate_direct(rdf::TripleGraph{}, doc).conforms);
}

TEST_CASE("validate_direct: changing the supervisor's faculty violates at Alex") {
  auto r = shacl::validate_direct(
      graph(":Alex a :Student ; :hasFaculty :CS ; :hasSupervisor :Jane . :Jane :hasFaculty :Math ."), student_document());
  CHECK_FALSE(r.conforms);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].focus == ex("Alex"));
  CHECK(r.violations[0].shape == ex("studentShape"));
}

TEST_CASE("validate_direct: counts, values and paths") {
  auto doc = shacl::extract_document(graph(R"(
:s a sh:NodeShape ; sh:targetClass :C ; sh:property [ sh:path [ sh:oneOrMorePath :p ] ; sh:minCount 2 ; sh:maxCount 3 ] .
)"));
  CHECK(shacl::validate_direct(graph(":a a :C ; :p :b . :b :p :c ."), doc).conforms);
  CHECK_FALSE(shacl::validate_direct(graph(":a a :C ; :p :b ."), doc).conforms);
  CHECK_FALSE(shacl::validate_direct(graph(":a a :C ; :p :b . :b :p :c . :c :p :d . :d :p :e ."), doc).conforms);
  CHECK(shacl::validate_direct(graph(":a a :C ; :p :b . :b :p :a ."), doc).conforms);
}

TEST_CASE("path evaluation: zero-or-more includes the focus") {
  auto g = graph(":a :p :b . :b :p :c .");
  auto reach = shacl::evaluate_path(
      g, shacl::Path::unary(shacl::Path::Kind::ZeroOrMore, shacl::Path::predicate(ex("p"))), ex("a"));
  CHECK(reach == std::set<Term>{ex("a"), ex("b"), ex("c")});
}

TEST_CASE("split_targets keeps one target per copy") {
  auto doc = testkit::corpus().front().document();
  for (const auto& c : testkit::corpus())
    if (c.label == "multiple-targets") doc = c.document();
  auto split = shacl::split_targets(doc);
  std::size_t targeted = 0;
  for (const auto& s : split.shapes) {
    CHECK(s.targets.size() <= 1);
    targeted += s.targets.size();
  }
  CHECK(targeted == 3);
}
