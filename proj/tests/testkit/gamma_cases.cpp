#include "testkit.hpp"

namespace shl::testkit {

namespace {

using scl::FilterKind;
using scl::FilterName;

Term ex(const std::string& l) { return Term::iri("http://example.org/" + l); }
Term typed(long long v, const char* dt) { return Term::literal(std::to_string(v), rdf::xsd_iri(dt)); }
FilterName dt(const char* local) { return FilterName::datatype(rdf::xsd_iri(local)); }
FilterName bound(FilterKind k, Term t) { return FilterName::bound_filter(k, std::move(t)); }

struct Builder {
  GammaCase g;
  Builder(std::string label, bool strings = false) {
    g.label = std::move(label);
    g.strings = strings;
  }
  Builder& is(FilterName f) { g.combination.positive_filters.insert(std::move(f)); return *this; }
  Builder& is_not(FilterName f) { g.combination.negative_filters.insert(std::move(f)); return *this; }
  Builder& eq(Term t) { g.combination.positive_eq.insert(std::move(t)); return *this; }
  Builder& ne(Term t) { g.combination.negative_eq.insert(std::move(t)); return *this; }
};

}  // namespace

std::vector<GammaCase> gamma_cases() {
  const Term yes = Term::boolean(true), no = Term::boolean(false);
  std::vector<Builder> b{
      Builder("boolean ∧ ¬=true").is(dt("boolean")).ne(yes),
      Builder("boolean ∧ ¬=true ∧ ¬=false").is(dt("boolean")).ne(yes).ne(no),
      Builder("boolean ∧ minLength 5").is(dt("boolean")).is(FilterName::min_length(5)),
      Builder("integer in [-3, 4) minus 0, 1")
          .is(dt("integer")).is(bound(FilterKind::MinInclusive, Term::integer(-3)))
          .is(bound(FilterKind::MaxExclusive, Term::integer(4))).ne(Term::integer(0)).ne(Term::integer(1)),
      Builder("byte > 100").is(dt("byte")).is(bound(FilterKind::MinExclusive, Term::integer(100))),
      Builder("unsignedByte <= 10").is(dt("unsignedByte")).is(bound(FilterKind::MaxInclusive, Term::integer(10))),
      Builder("nonNegativeInteger < 3").is(dt("nonNegativeInteger")).is(bound(FilterKind::MaxExclusive, Term::integer(3))),
      Builder("negativeInteger >= -4").is(dt("negativeInteger")).is(bound(FilterKind::MinInclusive, Term::integer(-4))),
      Builder("integer ∧ maxLength 1").is(dt("integer")).is(FilterName::max_length(1)),
      Builder("integer of length 2 in [-50, 50]")
          .is(dt("integer")).is(FilterName::min_length(2)).is(FilterName::max_length(2))
          .is(bound(FilterKind::MinInclusive, Term::integer(-50))).is(bound(FilterKind::MaxInclusive, Term::integer(50))),
      Builder("byte ∧ ¬(>= 0)").is(dt("byte")).is_not(bound(FilterKind::MinInclusive, Term::integer(0))),
      Builder("string ∧ maxLength 1 ∧ < \"b\"", true)
          .is(dt("string")).is(FilterName::max_length(1)).is(bound(FilterKind::MaxExclusive, Term::literal("b"))),
      Builder("string in [\"a\", \"c\"] of length <= 1", true)
          .is(dt("string")).is(FilterName::max_length(1)).is(bound(FilterKind::MinInclusive, Term::literal("a")))
          .is(bound(FilterKind::MaxInclusive, Term::literal("c"))),
      Builder("=:a ∧ iri").eq(ex("a")).is(FilterName::is_iri()),
      Builder("=\"x\" ∧ iri").eq(Term::literal("x")).is(FilterName::is_iri()),
      Builder("=5 ∧ integer ∧ > 0").eq(Term::integer(5)).is(dt("integer")).is(bound(FilterKind::MinExclusive, Term::integer(0))),
      Builder("short in [250, 260] minus 255")
          .is(dt("short")).is(bound(FilterKind::MinInclusive, Term::integer(250)))
          .is(bound(FilterKind::MaxInclusive, Term::integer(260))).ne(typed(255, "short")),
      Builder("integer ∧ ¬maxLength 1 ∧ maxLength 2 ∧ >= 0")
          .is(dt("integer")).is_not(FilterName::max_length(1)).is(FilterName::max_length(2))
          .is(bound(FilterKind::MinInclusive, Term::integer(0))),
      Builder("string ∧ maxLength 0", true).is(dt("string")).is(FilterName::max_length(0)),
      Builder("literal ∧ unsignedByte ∧ ¬=0 ∧ <= 3")
          .is(FilterName::is_literal()).is(dt("unsignedByte")).ne(typed(0, "unsignedByte"))
          .is(bound(FilterKind::MaxInclusive, Term::integer(3))),
      Builder("iri ∧ literal").is(FilterName::is_iri()).is(FilterName::is_literal()),
      Builder("boolean ∧ ¬literal").is(dt("boolean")).is_not(FilterName::is_literal()),
  };
  std::vector<GammaCase> out;
  for (auto& x : b) out.push_back(std::move(x.g));
  return out;
}

const std::vector<Term>& gamma_universe(bool strings) {
  static const std::vector<Term> base = [] {
    std::vector<Term> u{Term::boolean(true), Term::boolean(false), ex("a"), ex("b"), Term::blank("z"), Term::literal("x")};
    for (const char* d : {"integer", "byte", "unsignedByte", "nonNegativeInteger", "negativeInteger", "short", "int"}) {
      const auto range = rdf::integer_datatype_range(rdf::xsd_iri(d));
      for (long long v = -300; v <= 300; ++v) {
        if ((range.min && v < *range.min) || (range.max && v > *range.max)) continue;
        u.push_back(std::string(d) == "integer" ? Term::integer(v) : typed(v, d));
      }
    }
    return u;
  }();
  static const std::vector<Term> text = [] {
    std::vector<Term> u{Term::literal("")};
    for (std::uint32_t cp = 0; cp <= 0x10FFFF; ++cp) {
      if (cp >= 0xD800 && cp <= 0xDFFF) continue;
      std::string s;
      if (cp < 0x80) {
        s += static_cast<char>(cp);
      } else if (cp < 0x800) {
        s += static_cast<char>(0xC0 | (cp >> 6));
        s += static_cast<char>(0x80 | (cp & 0x3F));
      } else if (cp < 0x10000) {
        s += static_cast<char>(0xE0 | (cp >> 12));
        s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        s += static_cast<char>(0x80 | (cp & 0x3F));
      } else {
        s += static_cast<char>(0xF0 | (cp >> 18));
        s += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        s += static_cast<char>(0x80 | (cp & 0x3F));
      }
      u.push_back(Term::literal(s));
    }
    return u;
  }();
  return strings ? text : base;
}

}  // namespace shl::testkit
