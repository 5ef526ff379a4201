#include <doctest.h>

#include "shl/rewriter.hpp"
#include "shl/translator.hpp"
#include "testkit.hpp"

using namespace shl;
using engine::ClassificationResult;
using scl::Feature;
using scl::FeatureSet;
using St = ClassificationResult::Status;
using Fmp = ClassificationResult::Fmp;

TEST_CASE("classification anchors") {
  auto sza = engine::classify_features({Feature::S, Feature::Z, Feature::A});
  CHECK(sza.status == St::Decidable);
  CHECK(sza.fmp == Fmp::Holds);
  CHECK(sza.complexity == "ExpTime-complete");
  CHECK(sza.normalized_features == FeatureSet{});

  auto so = engine::classify_features({Feature::S, Feature::O});
  CHECK(so.status == St::Undecidable);
  CHECK(so.generalized_rdf_only);

  auto o = engine::classify_features({Feature::O});
  CHECK(o.status == St::Open);
  CHECK(o.fmp == Fmp::Fails);

  auto zadec = engine::classify_features({Feature::Z, Feature::A, Feature::D, Feature::E, Feature::C});
  CHECK(zadec.status == St::Decidable);
  CHECK(zadec.fmp == Fmp::Fails);
  CHECK(zadec.complexity == "NExpTime-complete");

  auto sd = engine::classify_features({Feature::S, Feature::D});
  CHECK(sd.status == St::Decidable);
  CHECK(sd.complexity == "in 2ExpTime");
  CHECK(sd.fmp == Fmp::Holds);

  CHECK(rewrite::normalize_fragment({Feature::A, Feature::D}) == FeatureSet{Feature::D});
  CHECK(rewrite::normalize_fragment({Feature::S, Feature::E}) == FeatureSet{Feature::S, Feature::E});
}

TEST_CASE("classification of every feature subset") {
  int decidable = 0, undecidable = 0, open = 0;
  for (unsigned bits = 0; bits < (1u << scl::kFeatureCount); ++bits) {
    const auto r = engine::classify_features(FeatureSet::from_bits(bits));
    const auto e = testkit::expected_classification(bits);
    CAPTURE(FeatureSet::from_bits(bits).to_string());
    CHECK(r.status == e.status);
    CHECK(r.fmp == e.fmp);
    CHECK(r.generalized_rdf_only == e.generalized);
    CHECK(r.normalized_features == e.normalized);
    CHECK_FALSE(r.witness.empty());
    CHECK(r.complexity.empty() == (r.status != St::Decidable));
    decidable += r.status == St::Decidable;
    undecidable += r.status == St::Undecidable;
    open += r.status == St::Open;
  }
  CHECK(decidable + undecidable + open == 512);
  CHECK(decidable > 0);
  CHECK(undecidable > 0);
  CHECK(open > 0);
}

TEST_CASE("classification is stable under the path rewrites") {
  const FeatureSet sza{Feature::S, Feature::Z, Feature::A};
  int compared = 0;
  for (const auto& c : testkit::corpus()) {
    const auto sentence = translate::translate(c.document());
    for (const FeatureSet which : {sza, FeatureSet{Feature::Z}, FeatureSet{Feature::A}}) {
      const auto r = rewrite::eliminate(sentence, which);
      if (!r.defects.empty()) continue;
      CAPTURE(c.label);
      CHECK(engine::classify(sentence).status == engine::classify(r.value).status);
      ++compared;
    }
  }
  CHECK(compared >= 30);
}

TEST_CASE("gadget sentences land in their fragments") {
  using engine::InfinityKind;
  CHECK(scl::features_of(engine::gadget_infinity(InfinityKind::C)).subset_of({Feature::C}));
  CHECK(scl::features_of(engine::gadget_infinity(InfinityKind::STD)).subset_of({Feature::S, Feature::T, Feature::D}));
  CHECK(scl::features_of(engine::gadget_infinity(InfinityKind::O)).subset_of({Feature::O, Feature::Oprime}));
  CHECK(scl::features_of(engine::gadget_infinity(InfinityKind::EOprime)).subset_of({Feature::E, Feature::Oprime}));

  engine::TilingSystem one{{"t"}, {{"t", "t"}}, {{"t", "t"}}};
  using engine::DominoVariant;
  CHECK(scl::features_of(engine::gadget_domino(DominoVariant::SZAE, one)) ==
        FeatureSet{Feature::S, Feature::Z, Feature::A, Feature::E});
  CHECK(engine::classify(engine::gadget_domino(DominoVariant::SAC, one)).status == St::Undecidable);
  CHECK(engine::infinity_kind("EO'") == InfinityKind::EOprime);
  CHECK_FALSE(engine::domino_variant("XY"));
  CHECK_THROWS_AS(engine::gadget_domino(DominoVariant::SO, {{"t"}, {{"t", "u"}}, {}}), engine::EngineError);
}
