#include "testkit.hpp"

namespace shl::testkit {

namespace {

std::vector<CorpusDocument> build() {
  return {
      {"student", R"(
:studentShape a sh:NodeShape ; sh:targetClass :Student ; sh:not :disjFacultyShape .
:disjFacultyShape a sh:PropertyShape ; sh:path ( :hasSupervisor :hasFaculty ) ; sh:disjoint :hasFaculty .
)"},
      {"node-hasValue", R"(
:s a sh:NodeShape ; sh:targetNode :a, :b ; sh:hasValue :a .
)"},
      {"node-in", R"(
:s a sh:NodeShape ; sh:targetClass :C ; sh:in ( :a :b "x" ) .
)"},
      {"node-class", R"(
:s a sh:NodeShape ; sh:targetSubjectsOf :p ; sh:class :C .
)"},
      {"node-datatype", R"(
:s a sh:NodeShape ; sh:targetObjectsOf :p ; sh:datatype xsd:integer .
)"},
      {"node-nodeKind-iri", R"(
:s a sh:NodeShape ; sh:targetObjectsOf :p ; sh:nodeKind sh:IRI .
)"},
      {"node-nodeKind-pairs", R"(
:s a sh:NodeShape ; sh:targetObjectsOf :p ; sh:or ( :s1 :s2 ) .
:s1 a sh:NodeShape ; sh:nodeKind sh:BlankNodeOrLiteral .
:s2 a sh:NodeShape ; sh:nodeKind sh:IRIOrLiteral .
)"},
      {"node-range-int", R"(
:s a sh:NodeShape ; sh:targetObjectsOf :age ; sh:minExclusive 0 ; sh:maxInclusive 5 .
)"},
      {"node-range-decimal", R"(
:s a sh:NodeShape ; sh:targetObjectsOf :p ; sh:minInclusive 2.5 ; sh:maxExclusive 7 .
)"},
      {"node-length", R"(
:s a sh:NodeShape ; sh:targetObjectsOf :name ; sh:minLength 2 ; sh:maxLength 3 .
)"},
      {"node-pattern", R"(
:s a sh:NodeShape ; sh:targetObjectsOf :name ; sh:pattern "^a" .
)"},
      {"node-languageIn", R"(
:s a sh:NodeShape ; sh:targetObjectsOf :label ; sh:languageIn ( "en" "fr" ) .
)"},
      {"node-logic", R"(
:s a sh:NodeShape ; sh:targetClass :C ; sh:and ( :k1 :k2 ) ; sh:xone ( :k3 :k4 ) .
:k1 a sh:NodeShape ; sh:nodeKind sh:IRI .
:k2 a sh:NodeShape ; sh:not :k3 .
:k3 a sh:NodeShape ; sh:class :D .
:k4 a sh:NodeShape ; sh:hasValue :a .
)"},
      {"node-node", R"(
:s a sh:NodeShape ; sh:targetNode :a ; sh:node :t .
:t a sh:NodeShape ; sh:property [ sh:path :p ; sh:minCount 1 ] .
)"},
      {"property-counts", R"(
:s a sh:NodeShape ; sh:targetClass :C ; sh:property [ sh:path :p ; sh:minCount 1 ; sh:maxCount 2 ] .
)"},
      {"property-class", R"(
:s a sh:NodeShape ; sh:targetSubjectsOf :p ; sh:property [ sh:path :p ; sh:class :C ] .
)"},
      {"property-values", R"(
:s a sh:NodeShape ; sh:targetClass :C ;
  sh:property [ sh:path :p ; sh:hasValue :a ] ;
  sh:property [ sh:path :q ; sh:in ( :a :b ) ] .
)"},
      {"property-equals-disjoint", R"(
:s a sh:NodeShape ; sh:targetSubjectsOf :p ;
  sh:property [ sh:path :p ; sh:equals :q ] ;
  sh:property [ sh:path :p ; sh:disjoint :r ] .
)"},
      {"property-order", R"(
:s a sh:NodeShape ; sh:targetSubjectsOf :start ;
  sh:property [ sh:path :start ; sh:lessThan :end ] ;
  sh:property [ sh:path :start ; sh:lessThanOrEquals :limit ] .
)"},
      {"property-uniqueLang", R"(
:s a sh:NodeShape ; sh:targetSubjectsOf :label ; sh:property [ sh:path :label ; sh:uniqueLang true ] .
)"},
      {"property-qualified", R"(
:s a sh:NodeShape ; sh:targetClass :C ;
  sh:property :q1 , :q2 .
:q1 a sh:PropertyShape ; sh:path :p ; sh:qualifiedValueShape :k ; sh:qualifiedMinCount 1 ; sh:qualifiedMaxCount 2 ;
  sh:qualifiedValueShapesDisjoint true .
:q2 a sh:PropertyShape ; sh:path :p ; sh:qualifiedValueShape :m ; sh:qualifiedMinCount 1 .
:k a sh:NodeShape ; sh:class :D .
:m a sh:NodeShape ; sh:nodeKind sh:IRI .
)"},
      {"node-closed", R"(
:s a sh:NodeShape ; sh:targetClass :C ; sh:closed true ; sh:ignoredProperties ( rdf:type ) ;
  sh:property [ sh:path :p ] .
)"},
      {"path-inverse", R"(
:s a sh:NodeShape ; sh:targetNode :a ; sh:property [ sh:path [ sh:inversePath :p ] ; sh:minCount 1 ] .
)"},
      {"path-sequence", R"(
:s a sh:NodeShape ; sh:targetSubjectsOf :p ; sh:property [ sh:path ( :p :q ) ; sh:maxCount 1 ] .
)"},
      {"path-alternative", R"(
:s a sh:NodeShape ; sh:targetClass :C ;
  sh:property [ sh:path [ sh:alternativePath ( :p :q ) ] ; sh:minCount 2 ] .
)"},
      {"path-zeroOrMore", R"(
:s a sh:NodeShape ; sh:targetNode :a ; sh:property [ sh:path [ sh:zeroOrMorePath :p ] ; sh:class :C ] .
)"},
      {"path-oneOrMore", R"(
:s a sh:NodeShape ; sh:targetNode :a ; sh:property [ sh:path [ sh:oneOrMorePath :p ] ; sh:hasValue :b ] .
)"},
      {"path-zeroOrOne", R"(
:s a sh:NodeShape ; sh:targetSubjectsOf :q ; sh:property [ sh:path [ sh:zeroOrOnePath :q ] ; sh:maxCount 1 ] .
)"},
      {"property-nested-shapes", R"(
:s a sh:NodeShape ; sh:targetClass :C ;
  sh:property [ sh:path :p ; sh:node :t ; sh:not :u ] .
:t a sh:NodeShape ; sh:class :D .
:u a sh:NodeShape ; sh:hasValue :b .
)"},
      {"property-literal-checks", R"(
:s a sh:NodeShape ; sh:targetSubjectsOf :name ;
  sh:property [ sh:path :name ; sh:nodeKind sh:Literal ; sh:minLength 1 ; sh:pattern "b" ] .
)"},
      {"property-ranges", R"(
:s a sh:NodeShape ; sh:targetSubjectsOf :age ;
  sh:property [ sh:path :age ; sh:minInclusive 3 ; sh:maxExclusive 8 ; sh:datatype xsd:integer ] .
)"},
      {"property-languageIn", R"(
:s a sh:NodeShape ; sh:targetSubjectsOf :label ; sh:property [ sh:path :label ; sh:languageIn ( "en" ) ] .
)"},
      {"property-logic", R"(
:s a sh:NodeShape ; sh:targetClass :C ;
  sh:property [ sh:path :p ; sh:or ( :k1 :k2 ) ; sh:and ( :k1 ) ; sh:xone ( :k1 :k2 ) ] .
:k1 a sh:NodeShape ; sh:class :D .
:k2 a sh:NodeShape ; sh:nodeKind sh:Literal .
)"},
      {"multiple-targets", R"(
:s a sh:NodeShape ; sh:targetNode :a ; sh:targetClass :C ; sh:targetObjectsOf :p ; sh:class :D .
)"},
      {"property-maxLength", R"(
:s a sh:NodeShape ; sh:targetSubjectsOf :name ;
  sh:property [ sh:path :name ; sh:datatype xsd:string ; sh:maxLength 2 ; sh:maxExclusive "m" ] .
)"},
      {"targeted-property-shape", R"(
:ps a sh:PropertyShape ; sh:targetClass :C ; sh:path :p ; sh:minCount 1 ; sh:datatype xsd:integer .
)"},
      {"property-zero-max", R"(
:s a sh:NodeShape ; sh:targetClass :C ; sh:property [ sh:path :r ; sh:maxCount 0 ] ;
  sh:property [ sh:path :label ; sh:uniqueLang false ] .
)"},
      {"property-equals-inverse", R"(
:s a sh:NodeShape ; sh:targetObjectsOf :p ;
  sh:property [ sh:path [ sh:inversePath :p ] ; sh:equals :q ] .
)"},
      {"property-disjoint-sequence", R"(
:s a sh:NodeShape ; sh:targetClass :C ;
  sh:property [ sh:path ( :p [ sh:zeroOrMorePath :q ] ) ; sh:disjoint :r ; sh:lessThan :q ] .
)"},
      {"node-closed-bare", R"(
:s a sh:NodeShape ; sh:targetNode :a, :b ; sh:closed true ; sh:ignoredProperties ( :q ) .
)"},
      {"node-order-compare", R"(
:s a sh:NodeShape ; sh:targetObjectsOf :p ; sh:minInclusive "b" ; sh:maxInclusive "2021-01-01T00:00:00Z"^^xsd:dateTime .
)"},
      {"property-nested-property", R"(
:s a sh:NodeShape ; sh:targetSubjectsOf :p ;
  sh:property [ sh:path :p ; sh:minExclusive 1 ; sh:maxInclusive 9 ; sh:closed true ;
                sh:property [ sh:path :q ; sh:minCount 1 ] ] .
)"},
      {"node-datatype-langString", R"(
:s a sh:NodeShape ; sh:targetObjectsOf :label ; sh:datatype rdf:langString ; sh:minLength 3 .
)"},
  };
}

}  // namespace

shacl::Document CorpusDocument::document() const {
  return shacl::extract_document(rdf::parse_turtle(std::string(kPrefixes) + turtle));
}

const std::vector<CorpusDocument>& corpus() {
  static const std::vector<CorpusDocument> docs = build();
  return docs;
}

}  // namespace shl::testkit
