#include <random>

#include "harness.hpp"
#include "shl/rewriter.hpp"
#include "shl/translator.hpp"
#include "testkit.hpp"

namespace acceptance {

namespace {

using namespace shl;
using rdf::Term;
using engine::SatVerdict;

const char* kFilterSentences[] = {
    "(at :a (count>= 3 (rel :p) (filter datatype xsd:boolean)))",
    "(at :a (count>= 2 (rel :p) (filter datatype xsd:boolean)))",
    "(at :a (filter literal))",
    "(at :a (filter iri))",
    "(at :a (count>= 2 (rel :p) (and (filter datatype xsd:integer) (and (filter mininclusive 1) (filter maxinclusive 1)))))",
    "(at :a (count>= 2 (rel :p) (and (filter datatype xsd:integer) (and (filter mininclusive 1) (filter maxinclusive 2)))))",
    "(at :a (count>= 2 (rel :p) (and (filter datatype xsd:string) (filter maxlength 0))))",
    "(at :a (count>= 3 (rel :p) (filter blank)))",
    "(at :a (count>= 1 (rel :p) (and (filter iri) (filter literal))))",
    "(at :a (count>= 1 (rel :p) (and (filter blank) (eq :b))))",
    "(for-subjects :p (filter literal))",
    "(and (at :a (count>= 1 (rel :p) (top))) (for-subjects :p (filter literal)))",
    "(at :a (count>= 2 (rel :p) (and (filter datatype xsd:boolean) (not (eq true)))))",
    "(at :a (count>= 1 (rel :p) (and (filter datatype xsd:boolean) (not (eq true)))))",
    "(at :a (count>= 3 (rel :p) (and (filter mininclusive 0) (filter maxexclusive 2))))",
    "(at :a (count>= 2 (rel :p) (and (filter datatype xsd:unsignedByte) (filter minexclusive 254))))",
    "(at 5 (filter datatype xsd:integer))",
    "(at 5 (filter iri))",
    "(at :a (count>= 2 (rel :p) (and (filter minlength 3) (filter maxlength 3))))",
    "(at :a (and (count>= 1 (rel :p) (filter datatype xsd:boolean))"
    " (count>= 1 (rel :q) (and (filter datatype xsd:boolean) (not (eq true))))))",
    "(for-class :C (count>= 3 (rel :p) (filter datatype xsd:boolean)))",
    "(and (at :a (count>= 1 (rel rdf:type) (eq :C))) (for-class :C (count>= 3 (rel :p) (filter datatype xsd:boolean))))",
    "(at :a (not (count>= 1 (rel :p) (filter literal))))",
};

bool same_verdict(const SatVerdict& a, const SatVerdict& b) {
  if (a.outcome != b.outcome || a.outcome == SatVerdict::Outcome::Aborted) return false;
  return a.outcome != SatVerdict::Outcome::Sat || a.bound == b.bound;
}

bool holds(const engine::FiniteStructure& s, const scl::Sentence& sentence) {
  return engine::evaluate(engine::compute_shape_assignment(s, translate::extract_definitions(sentence)), sentence);
}

}  // namespace

Outcome gamma_values(const Context&) {
  using filters::Cardinality;
  auto only = [](scl::FilterName f) {
    filters::Combination c;
    c.positive_filters.insert(std::move(f));
    return c;
  };
  filters::Combination small = only(scl::FilterName::datatype(rdf::xsd_iri("integer")));
  small.positive_filters.insert(scl::FilterName::bound_filter(scl::FilterKind::MinExclusive, Term::integer(0)));
  small.positive_filters.insert(scl::FilterName::bound_filter(scl::FilterKind::MaxExclusive, Term::integer(5)));
  const bool anchors = filters::gamma(only(scl::FilterName::datatype(rdf::xsd_iri("boolean")))) == Cardinality(2) &&
                       filters::gamma(small) == Cardinality(4) &&
                       filters::gamma(only(scl::FilterName::is_literal())).is_infinite();
  std::size_t cases = 0, exact = 0;
  std::string first_failure;
  for (const auto& c : testkit::gamma_cases()) {
    ++cases;
    const auto g = filters::gamma(c.combination);
    const bool ok = !g.is_infinite() &&
                    g.value() == testkit::count_in_universe(c.combination, testkit::gamma_universe(c.strings));
    exact += ok;
    if (!ok && first_failure.empty()) first_failure = c.label;
  }
  return {anchors && cases >= 20 && exact == cases,
          std::string("anchors ") + (anchors ? "exact" : "wrong") + ", " + std::to_string(exact) + "/" +
              std::to_string(cases) + " enumerated combinations exact" +
              (first_failure.empty() ? "" : ", first mismatch: " + first_failure)};
}

Outcome filter_axioms(const Context&) {
  std::vector<scl::Sentence> sentences;
  for (const char* text : kFilterSentences) sentences.push_back(scl::parse_sentence(text));
  std::mt19937 rng(303);
  auto gen = testkit::default_generator();
  gen.max_depth = 2;
  while (sentences.size() < std::size(kFilterSentences) + 12) {
    auto s = gen.sentence(rng);
    if (!scl::filters(s).empty()) sentences.push_back(std::move(s));
  }
  std::size_t agree = 0, sat = 0;
  std::string first_failure;
  for (const auto& s : sentences) {
    engine::SearchOptions canonical;
    canonical.max_domain = 4;
    canonical.budget = std::chrono::seconds(60);
    engine::SearchOptions free = canonical;
    free.canonical_filters = false;
    const auto a = engine::bounded_sat(s, canonical);
    const auto b = engine::bounded_sat(scl::Sentence::conjunction(s, filters::axiomatize(s).axioms), free);
    const bool ok = same_verdict(a, b);
    agree += ok;
    sat += a.outcome == SatVerdict::Outcome::Sat;
    if (!ok && first_failure.empty())
      first_failure = scl::print(s) + " (" + a.outcome_name() + " vs " + b.outcome_name() + ")";
  }
  return {sentences.size() >= 20 && agree == sentences.size(),
          std::to_string(agree) + "/" + std::to_string(sentences.size()) + " sentences agree (" + std::to_string(sat) +
              " satisfiable)" + (first_failure.empty() ? "" : ", first mismatch: " + first_failure)};
}

Outcome path_rewrites(const Context&) {
  std::mt19937 rng(606);
  auto gen = testkit::default_generator();
  gen.use_orders = true;
  using Rewrite = rewrite::Result<scl::Formula> (*)(const scl::Formula&);
  const std::pair<const char*, Rewrite> rewrites[] = {{"sequence", rewrite::eliminate_sequence},
                                                      {"zero-or-one", rewrite::eliminate_zero_or_one},
                                                      {"alternative", rewrite::eliminate_alternative}};
  std::size_t pairs = 0, disagreements = 0;
  for (const auto& [name, fn] : rewrites) {
    for (int i = 0; i < 500; ++i) {
      const auto f = gen.formula(rng, 3);
      const auto r = fn(f);
      const auto s = testkit::random_structure(gen, rng, static_cast<std::size_t>(i % 3));
      ++pairs;
      bool same = true;
      for (const auto& e : s.domain) same = same && engine::evaluate(s, f, e) == engine::evaluate(s, r.value, e);
      disagreements += !same;
    }
  }

  // Subformula naming on a family of nested quantifiers and on random sentences.
  double worst = 0;
  std::vector<scl::Sentence> family;
  scl::Formula nested = scl::Formula::filter(scl::FilterName::is_iri());
  for (int depth = 1; depth <= 8; ++depth) {
    nested = scl::Formula::conjunction(
        scl::Formula::exists(scl::PathExpr::atom(Term::iri("http://example.org/p")), nested),
        scl::Formula::negation(scl::Formula::eq(Term::iri("http://example.org/a"))));
    family.push_back(scl::Sentence::at(Term::iri("http://example.org/a"), nested));
  }
  auto plain = testkit::default_generator();
  for (int i = 0; i < 100; ++i) family.push_back(plain.sentence(rng));
  for (const auto& s : family) {
    const auto named = rewrite::name_subformulas(s);
    worst = std::max(worst, static_cast<double>(scl::node_count(named)) / static_cast<double>(scl::node_count(s)));
    auto m = testkit::random_structure(plain, rng, 2);
    disagreements += holds(m, s) != holds(m, named);
  }

  std::size_t verdicts = 0, kept = 0;
  plain.max_depth = 2;
  engine::SearchOptions o;
  o.max_domain = 4;
  o.budget = std::chrono::seconds(60);
  for (int i = 0; i < 20; ++i) {
    const auto s = plain.sentence(rng);
    ++verdicts;
    kept += same_verdict(engine::bounded_sat(s, o), engine::bounded_sat(rewrite::name_subformulas(s), o));
  }
  return {disagreements == 0 && worst <= 3.0 && kept == verdicts,
          std::to_string(pairs) + " formula/structure pairs, " + std::to_string(disagreements) +
              " disagreements, naming growth at most " + std::to_string(worst).substr(0, 4) + "x, " +
              std::to_string(kept) + "/" + std::to_string(verdicts) + " bounded verdicts kept"};
}

}  // namespace acceptance
