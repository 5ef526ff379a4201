#include <doctest.h>

#include "shl/rewriter.hpp"
#include "shl/translator.hpp"
#include "testkit.hpp"

using namespace shl;
using rdf::Term;
using scl::Feature;
using scl::FeatureSet;
using scl::Formula;
using scl::Sentence;

namespace {

using Eliminator = rewrite::Result<Formula> (*)(const Formula&);

// Checks pointwise equivalence on `rounds` random formula/structure pairs and
// returns how many rewrites removed the letter completely.
int check_formula_rewrite(Eliminator fn, Feature letter, unsigned seed, int rounds) {
  std::mt19937 rng(seed);
  auto gen = testkit::default_generator();
  gen.use_orders = true;
  int clean = 0;
  for (int i = 0; i < rounds; ++i) {
    const Formula f = gen.formula(rng, 3);
    const auto r = fn(f);
    if (r.defects.empty()) {
      CHECK_FALSE(scl::features_of(r.value).has(letter));
      ++clean;
    }
    const auto s = testkit::random_structure(gen, rng, 3);
    for (const auto& e : s.domain) {
      CAPTURE(scl::print(f));
      CHECK(engine::evaluate(s, f, e) == engine::evaluate(s, r.value, e));
    }
  }
  return clean;
}

bool holds(const engine::FiniteStructure& s, const Sentence& sentence) {
  return engine::evaluate(engine::compute_shape_assignment(s, translate::extract_definitions(sentence)), sentence);
}

}  // namespace

TEST_CASE("eliminating sequence paths preserves meaning") {
  CHECK(check_formula_rewrite(rewrite::eliminate_sequence, Feature::S, 11, 500) > 250);
}

TEST_CASE("eliminating zero-or-one paths preserves meaning") {
  CHECK(check_formula_rewrite(rewrite::eliminate_zero_or_one, Feature::Z, 12, 500) > 250);
}

TEST_CASE("eliminating alternative paths preserves meaning") {
  CHECK(check_formula_rewrite(rewrite::eliminate_alternative, Feature::A, 13, 500) > 250);
}

TEST_CASE("known rewrites") {
  const auto ex = [](const char* l) { return Term::iri(std::string("http://example.org/") + l); };
  const auto p = scl::PathExpr::atom(ex("p")), q = scl::PathExpr::atom(ex("q"));
  const auto b = Formula::eq(ex("b"));
  auto r = rewrite::eliminate_sequence(Formula::exists(scl::PathExpr::sequence(p, q), b));
  CHECK(r.defects.empty());
  CHECK(r.value == Formula::exists(p, Formula::exists(q, b)));

  r = rewrite::eliminate_zero_or_one(Formula::exists(scl::PathExpr::zero_or_one(p), b));
  CHECK(r.defects.empty());
  CHECK(scl::features_of(r.value) == FeatureSet{});

  // Counting two successors along a sequence has no sequence-free rewrite.
  r = rewrite::eliminate_sequence(Formula::count(2, scl::PathExpr::sequence(p, q), Formula::top()));
  CHECK_FALSE(r.defects.empty());
}

TEST_CASE("sentence-level elimination with named bodies") {
  std::mt19937 rng(21);
  auto gen = testkit::default_generator();
  const FeatureSet which{Feature::S, Feature::Z, Feature::A};
  for (int i = 0; i < 150; ++i) {
    const Sentence s = gen.sentence(rng);
    const auto r = rewrite::eliminate(s, which);
    if (r.defects.empty()) CHECK((scl::features_of(r.value).bits() & which.bits()) == 0u);
    for (int k = 0; k < 3; ++k) {
      const auto m = testkit::random_structure(gen, rng, 2);
      CAPTURE(scl::print(s));
      CHECK(holds(m, s) == holds(m, r.value));
    }
  }
}

TEST_CASE("subformula naming stays linear and keeps meaning") {
  std::mt19937 rng(31);
  auto gen = testkit::default_generator();
  for (int i = 0; i < 200; ++i) {
    const Sentence s = gen.sentence(rng);
    const Sentence named = rewrite::name_subformulas(s);
    CAPTURE(scl::print(s));
    CHECK(scl::node_count(named) <= 3 * scl::node_count(s));
    const auto m = testkit::random_structure(gen, rng, 2);
    CHECK(holds(m, s) == holds(m, named));
  }
}

TEST_CASE("subformula naming keeps the bounded satisfiability verdict") {
  std::mt19937 rng(41);
  auto gen = testkit::default_generator();
  gen.max_depth = 2;
  engine::SearchOptions o;
  o.max_domain = 3;
  o.threads = 2;
  int decided = 0;
  for (int i = 0; i < 30; ++i) {
    const Sentence s = gen.sentence(rng);
    const auto a = engine::bounded_sat(s, o), b = engine::bounded_sat(rewrite::name_subformulas(s), o);
    if (a.outcome == engine::SatVerdict::Outcome::Aborted || b.outcome == engine::SatVerdict::Outcome::Aborted)
      continue;
    ++decided;
    CAPTURE(scl::print(s));
    CHECK(a.outcome == b.outcome);
    if (a.outcome == engine::SatVerdict::Outcome::Sat) CHECK(a.bound == b.bound);
  }
  CHECK(decided >= 25);
}
