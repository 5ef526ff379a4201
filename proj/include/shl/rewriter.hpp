// Equivalence-preserving elimination of sequence, zero-or-one and
// alternative paths, and the subformula naming transform.

#ifndef SHL_REWRITER_HPP
#define SHL_REWRITER_HPP

#include <string>
#include <vector>

#include "shl/scl.hpp"

namespace shl::rewrite {

template <class T>
struct Result {
  T value;
  // Places where a requested elimination has no sound rule and the input was
  // left as it was.
  std::vector<std::string> defects;
};

Result<scl::Formula> eliminate_sequence(const scl::Formula& formula);
Result<scl::Formula> eliminate_zero_or_one(const scl::Formula& formula);
Result<scl::Formula> eliminate_alternative(const scl::Formula& formula);

// Eliminates the features among S, Z and A present in `which`. With Z or A
// requested, quantifier bodies are named first so duplication stays linear.
Result<scl::Sentence> eliminate(const scl::Sentence& sentence, scl::FeatureSet which);

// Replaces every quantifier body that is not a shape atom or top by a fresh
// shape name and conjoins its definition (inner bodies first).
scl::Sentence name_subformulas(const scl::Sentence& sentence);

// Collapses fragments that the elimination laws show equivalent.
scl::FeatureSet normalize_fragment(scl::FeatureSet features);

}  // namespace shl::rewrite

#endif
