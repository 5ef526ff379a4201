// Finite structures, the sentence evaluator, bounded model search,
// containment, fragment classification and the infinity / tiling gadgets.

#ifndef SHL_ENGINE_HPP
#define SHL_ENGINE_HPP

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shl/rdf.hpp"
#include "shl/scl.hpp"
#include "shl/shacl.hpp"

namespace shl::engine {

using rdf::Term;
using scl::FeatureSet;
using scl::FilterName;
using scl::Formula;
using scl::PathExpr;
using scl::Sentence;
using scl::ShapeName;

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One comparison type's total preorder: classes of equal values, ascending.
struct OrderBlock {
  rdf::ComparisonType type;
  std::vector<std::vector<Term>> ranks;
};

struct FiniteStructure {
  std::vector<Term> domain;
  std::map<Term, std::set<std::pair<Term, Term>>> relations;
  std::set<std::pair<Term, ShapeName>> has_shape;
  // Filters are read through filter_holds when canonical_filters is set,
  // otherwise through filter_ext.
  bool canonical_filters = true;
  std::map<FilterName, std::set<Term>> filter_ext;
  std::vector<OrderBlock> order_blocks;

  bool contains(const Term& t) const;
  void add_element(const Term& t);
  // Order on domain elements; nullopt when they sit in different blocks or
  // outside every block.
  std::optional<rdf::Comparison> compare(const Term& a, const Term& b) const;
};

// Structure of a graph with canonical filters and orders. An empty graph
// gets one inert element.
FiniteStructure canonical_structure(const rdf::TripleGraph& graph);

// Rebuilds order_blocks from compare_terms over the literal elements.
void canonical_orders(FiniteStructure& structure);

// Fills has_shape from the shape definitions among the conjuncts, in
// dependency order. Throws EngineError on recursive definitions.
FiniteStructure compute_shape_assignment(FiniteStructure structure, const Sentence& definitions);

// The RDF graph of a structure: its binary relations, has_shape dropped.
rdf::TripleGraph graph_of(const FiniteStructure& structure);

// ---- evaluation ---------------------------------------------------------

class Evaluator {
 public:
  explicit Evaluator(const FiniteStructure& structure);

  bool holds(const Sentence& sentence);
  bool holds(const Formula& formula, const Term& element);
  // Elements (by domain position) satisfying the formula.
  const std::vector<bool>& extension(const Formula& formula);
  // Pairs (by domain position) related by the path.
  const std::vector<std::vector<bool>>& pairs(const PathExpr& path);

 private:
  std::size_t index(const Term& t) const;
  const std::vector<std::vector<bool>>& relation(const Term& name);
  bool order_holds(std::size_t y, std::size_t z, scl::OrderOp op) const;

  const FiniteStructure& s_;
  std::map<Term, std::size_t> index_;
  std::map<Term, std::vector<std::vector<bool>>> relations_;
  // Keyed by node identity; the stored handle keeps the node alive.
  std::map<const void*, std::pair<Formula, std::vector<bool>>> formulas_;
  std::map<const void*, std::pair<PathExpr, std::vector<std::vector<bool>>>> paths_;
};

bool evaluate(const FiniteStructure& structure, const Sentence& sentence);
bool evaluate(const FiniteStructure& structure, const Formula& formula, const Term& element);

// Validation through the translation: the graph's structure with the shape
// assignment of the document's definitions, checked conjunct by conjunct.
shacl::ValidationReport validate(const rdf::TripleGraph& graph, const shacl::Document& doc);

// ---- bounded model search -----------------------------------------------

struct SatVerdict {
  enum class Outcome { Sat, UnsatUpTo, Aborted };
  Outcome outcome = Outcome::Aborted;
  std::optional<FiniteStructure> model;
  std::size_t bound = 0;
  std::string reason;

  std::string outcome_name() const;
};

struct SearchOptions {
  std::size_t max_domain = 4;
  std::chrono::milliseconds budget{10000};
  // Canonical filters range over concrete RDF terms; otherwise filters are
  // free monadic relations and orders are free preorders per type.
  bool canonical_filters = true;
  bool symmetry_breaking = true;
  // Worker cap; 0 reads SHACL_LOGIC_THREADS, then the hardware count.
  unsigned threads = 0;
  // Sizes tried start here (raised to the constant count).
  std::size_t min_domain = 1;
  // When false, distinct constants may denote the same element (plain
  // first-order semantics). Only meaningful with uninterpreted filters.
  bool unique_names = true;
};

SatVerdict bounded_sat(const Sentence& sentence, const SearchOptions& options = {});

// Searches for a structure satisfying `require` in which at least one of
// `violate` fails. Shape definitions in either are available to both.
SatVerdict find_violation(const Sentence& require, const std::vector<Sentence>& violate,
                          const SearchOptions& options = {});

unsigned worker_count(unsigned requested);

// ---- containment --------------------------------------------------------

struct ContainmentResult {
  enum class Outcome { NotContained, NoCounterexampleUpTo, Aborted };
  Outcome outcome = Outcome::Aborted;
  std::optional<rdf::TripleGraph> counterexample;
  // validate_direct agrees: the witness conforms to the first document and
  // violates the second.
  bool confirmed = false;
  std::size_t bound = 0;
  std::string reason;

  std::string outcome_name() const;
};

ContainmentResult check_containment(const shacl::Document& doc1, const shacl::Document& doc2,
                                    const SearchOptions& options = {});

// Candidate documents for satisfiability of the constraint of `shape`: one
// node target per constant of the constraint plus a fresh one.
std::vector<shacl::Document> reduce_constraint_sat(const shacl::Document& doc, const Term& shape);

// Candidates for non-containment of the constraint of `first` in that of
// `second`.
std::vector<shacl::Document> reduce_constraint_containment(const shacl::Document& doc, const Term& first,
                                                           const Term& second);

inline const char* kFreshTarget = "urn:scl:fresh-target";

// ---- classification -----------------------------------------------------

struct ClassificationResult {
  enum class Status { Decidable, Undecidable, Open };
  enum class Fmp { Holds, Fails, Unknown };
  FeatureSet raw_features;
  FeatureSet normalized_features;
  Status status = Status::Open;
  std::string complexity;
  Fmp fmp = Fmp::Unknown;
  bool generalized_rdf_only = false;
  std::string witness;

  std::string status_name() const;
  std::string fmp_name() const;
};

ClassificationResult classify_features(FeatureSet raw);
ClassificationResult classify(const Sentence& sentence);

// ---- gadgets ------------------------------------------------------------

enum class InfinityKind { C, STD, O, EOprime };
enum class DominoVariant { SO, SAC, SEC, SEOprime, SZAE };

std::optional<InfinityKind> infinity_kind(std::string_view name);
std::optional<DominoVariant> domino_variant(std::string_view name);

struct TilingSystem {
  std::vector<std::string> tiles;
  std::set<std::pair<std::string, std::string>> horizontal;
  std::set<std::pair<std::string, std::string>> vertical;

  // Throws EngineError when a pair mentions an unknown tile or no tile exists.
  void check() const;
};

Sentence gadget_infinity(InfinityKind kind);
Sentence gadget_domino(DominoVariant variant, const TilingSystem& system);

}  // namespace shl::engine

#endif
