// Abstract syntax of the SHACL first-order language: path expressions,
// one-variable formulas and sentences, plus feature detection and the
// well-formedness check for shape-name definitions.

#ifndef SHL_SCL_HPP
#define SHL_SCL_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shl/rdf.hpp"

namespace shl::scl {

using rdf::Term;

// Shape names live apart from node constants; the wrapper keeps the two
// domains from mixing.
struct ShapeName {
  Term term;
  auto operator<=>(const ShapeName&) const = default;
  bool operator==(const ShapeName&) const = default;
};

enum class FilterKind : std::uint8_t {
  IsIri,
  IsLiteral,
  IsBlank,
  Datatype,
  LanguageTag,
  MinLength,
  MaxLength,
  Pattern,
  MinExclusive,
  MinInclusive,
  MaxExclusive,
  MaxInclusive,
};

// A monadic filter relation. Bound filters carry an RDF term whose
// comparison type determines which values can satisfy them. A bound with
// via_order set is read through the interpreted order rather than as an
// opaque monadic relation.
struct FilterName {
  FilterKind kind = FilterKind::IsIri;
  std::string text;  // datatype IRI, language tag or pattern
  std::uint64_t length = 0;
  Term bound;
  bool via_order = false;

  static FilterName is_iri() { return {FilterKind::IsIri, {}, 0, {}, false}; }
  static FilterName is_literal() { return {FilterKind::IsLiteral, {}, 0, {}, false}; }
  static FilterName is_blank() { return {FilterKind::IsBlank, {}, 0, {}, false}; }
  static FilterName datatype(std::string iri) { return {FilterKind::Datatype, std::move(iri), 0, {}, false}; }
  static FilterName language(std::string tag);
  static FilterName min_length(std::uint64_t n) { return {FilterKind::MinLength, {}, n, {}, false}; }
  static FilterName max_length(std::uint64_t n) { return {FilterKind::MaxLength, {}, n, {}, false}; }
  static FilterName pattern(std::string regex) { return {FilterKind::Pattern, std::move(regex), 0, {}, false}; }
  static FilterName bound_filter(FilterKind kind, Term bound, bool via_order = false) {
    return {kind, {}, 0, std::move(bound), via_order};
  }

  bool is_bound() const { return kind >= FilterKind::MinExclusive; }
  bool is_lower_bound() const { return kind == FilterKind::MinExclusive || kind == FilterKind::MinInclusive; }
  bool is_strict_bound() const { return kind == FilterKind::MinExclusive || kind == FilterKind::MaxExclusive; }

  auto operator<=>(const FilterName&) const = default;
  bool operator==(const FilterName&) const = default;
};

// Canonical interpretation of a filter on an RDF term.
bool filter_holds(const FilterName& filter, const Term& term);

class PathExpr {
 public:
  enum class Kind : std::uint8_t { Atom, Sequence, ZeroOrOne, Alternative, Star };

  static PathExpr atom(Term relation, bool inverted = false);
  static PathExpr sequence(PathExpr first, PathExpr second);
  static PathExpr zero_or_one(PathExpr inner);
  static PathExpr alternative(PathExpr left, PathExpr right);
  static PathExpr star(PathExpr inner);

  Kind kind() const;
  const Term& relation() const;
  bool inverted() const;
  // Sequence/Alternative operands; ZeroOrOne and Star expose theirs as left().
  const PathExpr& left() const;
  const PathExpr& right() const;

  const void* identity() const { return node_.get(); }
  friend bool operator==(const PathExpr& a, const PathExpr& b);

 private:
  struct Node;
  explicit PathExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class OrderOp : std::uint8_t { Less, LessEq };

class Formula {
 public:
  enum class Kind : std::uint8_t { Top, EqConst, Filter, HasShape, Not, And, Count, Disjoint, Equals, Order };

  static Formula top();
  static Formula eq(Term constant);
  static Formula filter(FilterName name);
  static Formula has_shape(ShapeName shape);
  static Formula negation(Formula inner);
  static Formula conjunction(Formula left, Formula right);
  // n = 0 collapses to Top.
  static Formula count(std::uint64_t n, PathExpr path, Formula body);
  static Formula exists(PathExpr path, Formula body) { return count(1, std::move(path), std::move(body)); }
  static Formula disjoint(PathExpr path, Term relation);
  static Formula equals(PathExpr path, Term relation);
  static Formula order(PathExpr path, Term relation, OrderOp op, bool inverted = false);

  // Syntactic shortcuts, expanded into the core constructors.
  static Formula bottom() { return negation(top()); }
  static Formula disjunction(Formula left, Formula right);
  static Formula forall(PathExpr path, Formula body);
  static Formula conjunction_of(const std::vector<Formula>& items);
  static Formula disjunction_of(const std::vector<Formula>& items);

  Kind kind() const;
  const Term& constant() const;      // EqConst
  const FilterName& filter() const;  // Filter
  const ShapeName& shape() const;    // HasShape
  const Formula& operand() const;    // Not
  const Formula& left() const;       // And
  const Formula& right() const;      // And
  std::uint64_t count() const;       // Count
  const PathExpr& path() const;      // Count, Disjoint, Equals, Order
  const Formula& body() const;       // Count
  const Term& relation() const;      // Disjoint, Equals, Order
  OrderOp op() const;                // Order
  bool inverted() const;             // Order

  const void* identity() const { return node_.get(); }
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class Sentence {
 public:
  // AtMost is the extended global form ∃^{≤n}x.ψ(x) used by filter axioms.
  enum class Kind : std::uint8_t { Top, AtConst, ForClass, ForSubjects, And, ShapeDef, AtMost };

  static Sentence top();
  static Sentence at(Term constant, Formula body);
  static Sentence for_class(Term cls, Formula body);
  static Sentence for_subjects(Term relation, bool inverted, Formula body);
  static Sentence conjunction(Sentence left, Sentence right);
  static Sentence conjunction_of(const std::vector<Sentence>& items);
  static Sentence define(ShapeName shape, Formula body);
  static Sentence at_most(std::uint64_t n, Formula body);

  Kind kind() const;
  const Term& constant() const;  // AtConst constant, ForClass class, ForSubjects relation
  bool inverted() const;         // ForSubjects: objects-of when set
  const Formula& body() const;   // all but Top/And
  const Sentence& left() const;
  const Sentence& right() const;
  const ShapeName& shape() const;  // ShapeDef
  std::uint64_t bound() const;     // AtMost

  const void* identity() const { return node_.get(); }
  friend bool operator==(const Sentence& a, const Sentence& b);

 private:
  struct Node;
  explicit Sentence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Flattens nested conjunctions, dropping Top.
std::vector<Sentence> conjuncts(const Sentence& sentence);

// ---- features -----------------------------------------------------------

enum class Feature : std::uint8_t { S, Z, A, T, D, E, O, Oprime, C };
inline constexpr int kFeatureCount = 9;

class FeatureSet {
 public:
  FeatureSet() = default;
  FeatureSet(std::initializer_list<Feature> features);
  static FeatureSet from_bits(std::uint32_t bits) { FeatureSet f; f.bits_ = bits & 0x1FF; return f; }

  bool has(Feature f) const { return bits_ & bit(f); }
  void insert(Feature f) { bits_ |= bit(f); }
  void erase(Feature f) { bits_ &= ~bit(f); }
  bool empty() const { return bits_ == 0; }
  bool subset_of(const FeatureSet& other) const { return (bits_ & ~other.bits_) == 0; }
  bool contains(const FeatureSet& other) const { return other.subset_of(*this); }
  std::uint32_t bits() const { return bits_; }
  std::vector<std::string> names() const;
  std::string to_string() const;

  bool operator==(const FeatureSet&) const = default;

 private:
  static std::uint32_t bit(Feature f) { return 1u << static_cast<unsigned>(f); }
  std::uint32_t bits_ = 0;
};

std::string feature_name(Feature f);
FeatureSet features_of(const PathExpr& path);
FeatureSet features_of(const Formula& formula);
FeatureSet features_of(const Sentence& sentence);

// ---- well-formedness ----------------------------------------------------

struct Defect {
  enum class Kind { MissingDefinition, DuplicateDefinition, RecursiveDefinition };
  Kind kind;
  ShapeName shape;
  std::string message() const;
  bool operator==(const Defect&) const = default;
};

std::vector<Defect> check_well_formed(const Sentence& sentence);

// ---- traversal helpers --------------------------------------------------

std::size_t node_count(const PathExpr& path);
std::size_t node_count(const Formula& formula);
std::size_t node_count(const Sentence& sentence);

std::set<Term> node_constants(const Sentence& sentence);
std::set<Term> node_constants(const Formula& formula);
std::set<Term> relations(const Sentence& sentence);
std::set<FilterName> filters(const Sentence& sentence);
std::set<FilterName> filters(const Formula& formula);
std::set<ShapeName> referenced_shapes(const Formula& formula);
std::set<ShapeName> defined_shapes(const Sentence& sentence);
bool has_order_atoms(const Sentence& sentence);

// Rebuilds a sentence with every top-level formula replaced by fn(formula).
Sentence map_formulas(const Sentence& sentence, const std::function<Formula(const Formula&)>& fn);

// ---- concrete syntax ----------------------------------------------------

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line;
  std::size_t column;
};

std::string print(const PathExpr& path);
std::string print(const Formula& formula);
std::string print(const Sentence& sentence);
std::string print_term(const Term& term);
std::string print_filter(const FilterName& filter);

Sentence parse_sentence(std::string_view text);
Formula parse_formula(std::string_view text);
PathExpr parse_path(std::string_view text);

}  // namespace shl::scl

#endif
