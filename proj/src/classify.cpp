#include "shl/engine.hpp"
#include "shl/rewriter.hpp"

namespace shl::engine {

using scl::Feature;

std::string ClassificationResult::status_name() const {
  switch (status) {
    case Status::Decidable: return "Decidable";
    case Status::Undecidable: return "Undecidable";
    case Status::Open: return "Open";
  }
  return "Open";
}

std::string ClassificationResult::fmp_name() const {
  switch (fmp) {
    case Fmp::Holds: return "Holds";
    case Fmp::Fails: return "Fails";
    case Fmp::Unknown: return "Unknown";
  }
  return "Unknown";
}

ClassificationResult classify_features(FeatureSet raw) {
  using St = ClassificationResult::Status;
  using M = ClassificationResult::Fmp;
  ClassificationResult r;
  r.raw_features = raw;
  const FeatureSet f = rewrite::normalize_fragment(raw);
  r.normalized_features = f;
  auto has = [&](std::initializer_list<Feature> fs) { return f.contains(FeatureSet(fs)); };
  auto within = [&](std::initializer_list<Feature> fs) { return f.subset_of(FeatureSet(fs)); };
  using enum Feature;

  auto undecidable = [&](std::string why, bool generalized) {
    r.status = St::Undecidable;
    r.fmp = M::Unknown;
    r.generalized_rdf_only = generalized;
    r.witness = std::move(why);
    return r;
  };
  auto decidable = [&](std::string complexity, M fmp, std::string why) {
    r.status = St::Decidable;
    r.complexity = std::move(complexity);
    r.fmp = fmp;
    r.witness = std::move(why);
    return r;
  };

  if (has({S, O})) return undecidable("domino reduction with an order-functional diagonal (S O)", true);
  if (has({S, A, C})) return undecidable("domino reduction counting the union of square paths (S A C)", false);
  if (has({S, E, C})) return undecidable("domino reduction with a counted, path-equal diagonal (S E C)", false);
  if (has({S, E}) && (f.has(O) || f.has(Oprime)))
    return undecidable("domino reduction with an order-functional, path-equal diagonal (S E O')", true);
  if (has({S, Z, A, E})) return undecidable("domino reduction through reflexive symmetric closures (S Z A E)", false);

  if (within({S, Z, A}))
    return decidable("ExpTime-complete", M::Holds, "embeds into ALC with inverse roles and nominals");
  if (within({Z, A, D, E}))
    return decidable("in NExpTime", M::Holds, "embeds into the two-variable fragment");
  if (within({Z, A, D, E, C}))
    return decidable("NExpTime-complete", f.has(C) ? M::Fails : M::Holds,
                     "embeds into the two-variable fragment with counting quantifiers");
  if (within({S, Z, A, D}))
    return decidable("in 2ExpTime", M::Holds, "embeds into the unary-negation fragment");
  if (within({S, Z, A, T, D}))
    return decidable("in 2ExpTime", has({S, T, D}) ? M::Fails : M::Holds,
                     "embeds into the unary-negation fragment with regular path expressions");

  r.status = St::Open;
  if (has({O}) || has({E, Oprime})) {
    r.fmp = M::Fails;
    r.witness = "order constructs force an injective non-surjective function";
  } else {
    r.fmp = M::Unknown;
    r.witness = "no decidability result covers this combination";
  }
  return r;
}

ClassificationResult classify(const Sentence& sentence) { return classify_features(scl::features_of(sentence)); }

}  // namespace shl::engine
