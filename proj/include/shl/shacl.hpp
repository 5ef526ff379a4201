// SHACL core documents: the shape AST read from RDF, target splitting,
// serialization back to RDF and a direct validator over graphs.

#ifndef SHL_SHACL_HPP
#define SHL_SHACL_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shl/rdf.hpp"

namespace shl::shacl {

using rdf::Term;
using rdf::TripleGraph;

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Path {
  enum class Kind : std::uint8_t { Predicate, Inverse, Sequence, Alternative, ZeroOrMore, OneOrMore, ZeroOrOne };
  Kind kind = Kind::Predicate;
  Term iri;                 // Predicate
  std::vector<Path> items;  // one operand for the unary kinds

  static Path predicate(Term iri) { return {Kind::Predicate, std::move(iri), {}}; }
  static Path unary(Kind kind, Path inner) { return {kind, {}, {std::move(inner)}}; }
  static Path nary(Kind kind, std::vector<Path> items) { return {kind, {}, std::move(items)}; }

  bool operator==(const Path&) const = default;
  bool operator<(const Path& other) const;
};

struct Target {
  enum class Kind : std::uint8_t { Node, Class, SubjectsOf, ObjectsOf };
  Kind kind;
  Term term;
  auto operator<=>(const Target&) const = default;
};

enum class Component : std::uint8_t {
  HasValue,
  In,
  Class,
  Datatype,
  NodeKind,
  MinExclusive,
  MinInclusive,
  MaxExclusive,
  MaxInclusive,
  MinLength,
  MaxLength,
  Pattern,
  LanguageIn,
  UniqueLang,
  Not,
  And,
  Or,
  Xone,
  Node,
  Property,
  MinCount,
  MaxCount,
  Equals,
  Disjoint,
  LessThan,
  LessThanOrEquals,
  QualifiedValueShape,
  Closed,
};

std::string component_name(Component c);

// Components outside a shape kind's case table are ignored (read as true).
bool component_applies(bool property_shape, Component c);

// One constraint parameter. Which fields are meaningful depends on the
// component: terms holds values, lists and ignored properties; shapes holds
// shape references; number holds counts and lengths.
struct Constraint {
  Component component;
  std::vector<Term> terms;
  std::vector<Term> shapes;
  std::uint64_t number = 0;
  std::optional<std::uint64_t> qualified_min;
  std::optional<std::uint64_t> qualified_max;
  bool flag = false;  // uniqueLang, closed, qualifiedValueShapesDisjoint

  auto operator<=>(const Constraint&) const = default;
};

struct Shape {
  Term name;
  std::optional<Path> path;  // set for property shapes
  std::vector<Target> targets;
  std::vector<Constraint> constraints;
  // Name of the user-facing shape a targeted copy was split from.
  std::optional<Term> origin;

  bool is_property_shape() const { return path.has_value(); }
  bool operator==(const Shape&) const = default;
};

struct Document {
  std::vector<Shape> shapes;
  std::set<Term> vocabulary_context;

  const Shape* find(const Term& name) const;
  bool operator==(const Document&) const = default;
};

// Shapes referenced by a constraint (not, and, or, xone, node, property,
// qualifiedValueShape).
std::vector<Term> shape_references(const Constraint& c);

// Relation names that occur anywhere in the document, plus its vocabulary
// context; the base set for sh:closed.
std::set<Term> document_relations(const Document& doc);

// Relations sh:closed forbids on a shape.
std::set<Term> closed_forbidden(const Document& doc, const Shape& shape, const Constraint& closed);

// Sibling shapes for sh:qualifiedValueShapesDisjoint: qualified value shapes
// of the other property shapes attached to the same parent.
std::vector<Term> qualified_siblings(const Document& doc, const Shape& shape, const Term& qualified);

// Language tags listed in any sh:languageIn of the document.
std::set<std::string> document_languages(const Document& doc);

Document extract_document(const TripleGraph& graph);
Document split_targets(const Document& doc);
TripleGraph document_to_graph(const Document& doc);

struct Violation {
  Term focus;
  Term shape;
  auto operator<=>(const Violation&) const = default;
};

struct ValidationReport {
  bool conforms = true;
  std::vector<Violation> violations;
};

ValidationReport validate_direct(const TripleGraph& graph, const Document& doc);

// Whether `node` satisfies the constraints of `shape` in `graph`.
bool conforms_to(const TripleGraph& graph, const Document& doc, const Term& shape, const Term& node);

// Nodes reached from `focus` along `path`.
std::set<Term> evaluate_path(const TripleGraph& graph, const Path& path, const Term& focus);

std::string report_json(const ValidationReport& report);

}  // namespace shl::shacl

#endif
