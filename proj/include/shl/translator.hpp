// Translation between SHACL documents and constraint-language sentences.

#ifndef SHL_TRANSLATOR_HPP
#define SHL_TRANSLATOR_HPP

#include <stdexcept>

#include "shl/scl.hpp"
#include "shl/shacl.hpp"

namespace shl::translate {

struct Options {
  // Emit range bounds as order comparisons against a constant instead of
  // opaque monadic filters.
  bool interpreted_order = false;
};

// Splits targets, materializes missing shape definitions and emits targeted
// shapes first, then shape-name definitions.
scl::Sentence translate(const shacl::Document& doc, const Options& options = {});

scl::PathExpr translate_path(const shacl::Path& path);

// Body of one shape as a formula in the focus variable.
scl::Formula shape_body(const shacl::Document& doc, const shacl::Shape& shape, const Options& options = {});

// A constraint read on the focus node itself (node shapes).
scl::Formula translate_node_constraint(const shacl::Document& doc, const shacl::Shape& shape,
                                       const shacl::Constraint& constraint, const Options& options = {});

// A constraint read through the property path of a property shape.
scl::Formula translate_property_constraint(const shacl::Document& doc, const shacl::Shape& shape,
                                           const shacl::Constraint& constraint, const scl::PathExpr& path,
                                           const Options& options = {});

// The conjunction of the shape-name definitions of a sentence, in order.
scl::Sentence extract_definitions(const scl::Sentence& sentence);

struct NotShaclExpressible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

shacl::Document back_translate(const scl::Sentence& sentence);

// Deterministic shape IRI for a formula.
rdf::Term formula_shape_iri(const scl::Formula& formula);

}  // namespace shl::translate

#endif
