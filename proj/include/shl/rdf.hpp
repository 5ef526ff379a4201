// RDF terms, triples, graphs and a Turtle subset reader/writer.

#ifndef SHL_RDF_HPP
#define SHL_RDF_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shl::rdf {

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view sh = "http://www.w3.org/ns/shacl#";
}  // namespace ns

inline std::string rdf_iri(std::string_view local) { return std::string(ns::rdf) + std::string(local); }
inline std::string xsd_iri(std::string_view local) { return std::string(ns::xsd) + std::string(local); }
inline std::string sh_iri(std::string_view local) { return std::string(ns::sh) + std::string(local); }

enum class TermKind : std::uint8_t { Iri, Literal, Blank };

// An RDF term. Literals typed xsd:string are stored without a datatype, so
// "a" and "a"^^xsd:string compare equal; language tags are lower-cased.
class Term {
 public:
  Term() = default;

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::optional<std::string> datatype = std::nullopt,
                      std::optional<std::string> language = std::nullopt);
  static Term integer(long long value);
  static Term boolean(bool value);

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_literal() const { return kind_ == TermKind::Literal; }
  bool is_blank() const { return kind_ == TermKind::Blank; }

  const std::string& lexical() const { return lexical_; }
  const std::optional<std::string>& datatype() const { return datatype_; }
  const std::optional<std::string>& language() const { return language_; }

  // xsd:string for plain literals, rdf:langString for tagged ones.
  std::string effective_datatype() const;

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

 private:
  TermKind kind_ = TermKind::Iri;
  std::string lexical_;
  std::optional<std::string> datatype_;
  std::optional<std::string> language_;
};

// N-Triples style rendering: <iri>, _:label, "lex"^^<dt>, "lex"@tag.
std::string to_string(const Term& term);
std::string escape_string(std::string_view text);

// Number of Unicode code points in the string form (IRI or lexical form);
// blank nodes have no string form.
std::optional<std::size_t> string_length(const Term& term);
std::size_t utf8_length(std::string_view text);

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

enum class GraphMode { Strict, Generalized };

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line;
  std::size_t column;
};

// Rejects triples that violate the graph mode.
struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class TripleGraph {
 public:
  explicit TripleGraph(GraphMode mode = GraphMode::Generalized) : mode_(mode) {}

  GraphMode mode() const { return mode_; }
  bool insert(Triple triple);
  bool insert(Term s, Term p, Term o) { return insert(Triple{std::move(s), std::move(p), std::move(o)}); }
  bool erase(const Triple& triple) { return triples_.erase(triple) > 0; }
  bool contains(const Triple& triple) const { return triples_.count(triple) > 0; }

  const std::set<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  std::vector<Term> objects(const Term& subject, const Term& predicate) const;
  std::vector<Term> subjects(const Term& predicate, const Term& object) const;
  std::vector<Term> subjects_of(const Term& predicate) const;
  std::vector<Term> objects_of(const Term& predicate) const;
  // Every subject and object, ordered.
  std::set<Term> nodes() const;
  std::set<Term> predicates() const;

  bool operator==(const TripleGraph& other) const { return triples_ == other.triples_; }

 private:
  GraphMode mode_;
  std::set<Triple> triples_;
};

TripleGraph parse_turtle(std::string_view text, GraphMode mode = GraphMode::Generalized);
std::string serialize_turtle(const TripleGraph& graph);

// Reads an RDF collection starting at head; nullopt when malformed.
std::optional<std::vector<Term>> read_list(const TripleGraph& graph, const Term& head);
// Appends a collection for items and returns its head (rdf:nil when empty).
Term write_list(TripleGraph& graph, const std::vector<Term>& items, const std::string& label_prefix);

// ---- interpreted comparisons -------------------------------------------

enum class Comparison { Less, Equal, Greater, Incomparable };
enum class ComparisonType { Numeric, String, Boolean, DateTime };

bool is_numeric_datatype(std::string_view datatype);
bool is_integer_datatype(std::string_view datatype);
// Value range of an integer datatype, when bounded on that side.
struct IntegerRange {
  std::optional<long double> min;
  std::optional<long double> max;
};
IntegerRange integer_datatype_range(std::string_view datatype);

// The comparison type of a well-formed literal; nullopt for IRIs, blank
// nodes, language-tagged strings, other datatypes and malformed lexicals.
std::optional<ComparisonType> comparison_type(const Term& term);
std::optional<long double> numeric_value(const Term& term);

Comparison compare_terms(const Term& a, const Term& b, std::vector<std::string>* diagnostics = nullptr);

}  // namespace shl::rdf

#endif
