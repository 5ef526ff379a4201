#include <doctest.h>

#include "shl/filter_axioms.hpp"
#include "testkit.hpp"

using namespace shl;
using rdf::Term;
using filters::Cardinality;
using filters::Combination;
using scl::FilterKind;
using scl::FilterName;

namespace {

Combination with(std::initializer_list<FilterName> fs) {
  Combination c;
  for (const auto& f : fs) c.positive_filters.insert(f);
  return c;
}

FilterName dt(const char* local) { return FilterName::datatype(rdf::xsd_iri(local)); }

}  // namespace

TEST_CASE("gamma of anchored combinations") {
  CHECK(filters::gamma(with({dt("boolean")})) == Cardinality(2));
  CHECK(filters::gamma(with({dt("integer"), FilterName::bound_filter(FilterKind::MinExclusive, Term::integer(0)),
                             FilterName::bound_filter(FilterKind::MaxExclusive, Term::integer(5))})) ==
        Cardinality(4));
  CHECK(filters::gamma(with({FilterName::is_literal()})).is_infinite());
  CHECK(filters::gamma(with({FilterName::is_iri()})).is_infinite());
  CHECK(filters::gamma(with({dt("string")})).is_infinite());
  CHECK(filters::gamma(with({dt("decimal"), FilterName::bound_filter(FilterKind::MinInclusive, Term::integer(0)),
                             FilterName::bound_filter(FilterKind::MaxInclusive, Term::integer(1))}))
            .is_infinite());
  CHECK(filters::gamma(with({dt("string"), FilterName::max_length(1)})) ==
        Cardinality(filters::kUnicodeScalars + 1));
  CHECK(filters::gamma(Combination{}).is_infinite());
}

TEST_CASE("gamma agrees with enumeration over a finite universe") {
  const auto cases = testkit::gamma_cases();
  REQUIRE(cases.size() >= 20);
  for (const auto& c : cases) {
    CAPTURE(c.label);
    const Cardinality g = filters::gamma(c.combination);
    REQUIRE_FALSE(g.is_infinite());
    CHECK(g.value() == testkit::count_in_universe(c.combination, testkit::gamma_universe(c.strings)));
  }
}

TEST_CASE("adding a conjunct never increases gamma") {
  for (const auto& c : testkit::gamma_cases()) {
    CAPTURE(c.label);
    Combination tighter = c.combination;
    tighter.negative_eq.insert(Term::integer(1));
    const Cardinality a = filters::gamma(c.combination), b = filters::gamma(tighter);
    REQUIRE_FALSE(b.is_infinite());
    CHECK(b.value() <= a.value());
  }
}

TEST_CASE("collected combinations of a sentence") {
  const auto s = scl::parse_sentence(
      "(at :a (and (filter datatype xsd:boolean) (not (eq :b))))");
  const auto combos = filters::collect_combinations(s);
  CHECK_FALSE(combos.empty());
  for (const auto& c : combos) {
    if (c.unsatisfiable) CHECK(filters::gamma(c) == Cardinality(0));
    else CHECK(filters::gamma(c) != Cardinality(0));
  }
  CHECK_THROWS_AS(filters::collect_combinations(s, 1), filters::CapExceeded);
}
