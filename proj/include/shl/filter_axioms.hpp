// Filter combinations over the monadic atoms of a sentence, the exact count
// of RDF terms satisfying a combination, and the resulting upper-bound axioms.

#ifndef SHL_FILTER_AXIOMS_HPP
#define SHL_FILTER_AXIOMS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "shl/scl.hpp"

namespace shl::filters {

using rdf::Term;
using scl::FilterName;

struct Combination {
  std::set<Term> positive_eq;
  std::set<Term> negative_eq;
  std::set<FilterName> positive_filters;
  std::set<FilterName> negative_filters;
  // Set on the minimal unsatisfiable combinations reported by
  // collect_combinations.
  bool unsatisfiable = false;

  std::size_t size() const {
    return positive_eq.size() + negative_eq.size() + positive_filters.size() + negative_filters.size();
  }
  scl::Formula formula() const;
  bool operator==(const Combination&) const = default;
};

// Natural number or infinity; values at or above 2^64 saturate to infinity.
class Cardinality {
 public:
  Cardinality() = default;
  explicit Cardinality(std::uint64_t v) : value_(v) {}
  static Cardinality infinite() {
    Cardinality c;
    c.value_.reset();
    return c;
  }
  bool is_infinite() const { return !value_; }
  std::uint64_t value() const { return *value_; }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }
  bool operator==(const Cardinality&) const = default;

 private:
  std::optional<std::uint64_t> value_ = 0;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Atoms the combinations range over: the sentence's filters (pattern and
// order-read bounds excluded) and its node constants.
struct Alphabet {
  std::vector<Term> constants;
  std::vector<FilterName> filters;
  std::size_t size() const { return constants.size() + filters.size(); }
};
Alphabet alphabet_of(const scl::Sentence& sentence);

// Satisfiable combinations and minimal unsatisfiable ones, by increasing
// size; supersets of an unsatisfiable combination are skipped.
std::vector<Combination> collect_combinations(const scl::Sentence& sentence, std::size_t cap = 4096);

Cardinality gamma(const Combination& combination);

struct Axiomatization {
  scl::Sentence axioms = scl::Sentence::top();  // conjunction of at-most sentences
  std::size_t combinations = 0;
  bool pattern_incomplete = false;
};

Axiomatization axiomatize(const scl::Sentence& sentence, std::size_t cap = 4096);

// Number of Unicode scalar values, the alphabet strings are counted over.
inline constexpr std::uint64_t kUnicodeScalars = 1112064;

}  // namespace shl::filters

#endif
