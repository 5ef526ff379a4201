// Counting RDF terms that satisfy a filter combination. Literals of the
// built-in datatypes are counted by canonical lexical form; strings range over
// all Unicode scalar values.

#include <algorithm>
#include <cmath>
#include <regex>

#include "shl/filter_axioms.hpp"

namespace shl::filters {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;
using scl::FilterKind;

constexpr u128 kSat = static_cast<u128>(1) << 64;
constexpr std::uint64_t N = kUnicodeScalars;
constexpr std::uint64_t kUnbounded = UINT64_MAX;

u128 add(u128 a, u128 b) { return std::min(a + b, kSat); }
u128 mul(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kSat || b >= kSat) return kSat;
  return std::min(a * b, kSat);
}

struct Window {
  std::uint64_t lo = 0, hi = kUnbounded;
  bool empty() const { return lo > hi; }
};

std::vector<std::uint32_t> code_points(const std::string& s) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < s.size();) {
    unsigned char c = s[i];
    int extra = c < 0x80 ? 0 : c < 0xE0 ? 1 : c < 0xF0 ? 2 : 3;
    std::uint32_t cp = extra == 0 ? c : extra == 1 ? (c & 0x1F) : extra == 2 ? (c & 0x0F) : (c & 0x07);
    for (int k = 1; k <= extra && i + k < s.size(); ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

// Scalar values below cp (surrogates are not scalars).
std::uint64_t rank(std::uint32_t cp) {
  std::uint64_t surrogates = cp <= 0xD800 ? 0 : std::min<std::uint64_t>(cp - 0xD800, 2048);
  return cp - surrogates;
}

// Σ N^L over the window.
u128 strings_in_window(const Window& w) {
  if (w.empty()) return 0;
  if (w.hi == kUnbounded || w.lo >= 4) return kSat;
  u128 total = 0;
  for (std::uint64_t L = w.lo; L <= w.hi; ++L) {
    u128 p = 1;
    for (std::uint64_t i = 0; i < L; ++i) p = mul(p, N);
    total = add(total, p);
  }
  return total;
}

// Fixed-width base-N numbers, most significant digit first.
struct BaseN {
  std::vector<std::uint64_t> d;

  void add_small(std::uint64_t k) {
    for (std::size_t i = d.size(); i-- > 0 && k;) {
      std::uint64_t s = d[i] + k;
      d[i] = s % N;
      k = s / N;
    }
  }
  bool greater(const BaseN& o) const { return d > o.d; }
  BaseN minus(const BaseN& o) const {
    BaseN r = *this;
    std::int64_t borrow = 0;
    for (std::size_t i = r.d.size(); i-- > 0;) {
      std::int64_t v = static_cast<std::int64_t>(r.d[i]) - static_cast<std::int64_t>(o.d[i]) - borrow;
      borrow = v < 0;
      r.d[i] = static_cast<std::uint64_t>(v + (borrow ? static_cast<std::int64_t>(N) : 0));
    }
    return r;
  }
  u128 value() const {
    u128 v = 0;
    for (auto digit : d) v = add(mul(v, N), digit);
    return v;
  }
};

// Strings of length L ordered before `bound` (as a base-N number plus the
// prefix adjustment); `or_equal` also counts the bound itself.
BaseN count_before(const std::vector<std::uint32_t>& bound, std::size_t L, bool or_equal) {
  BaseN x{std::vector<std::uint64_t>(L + 1, 0)};
  for (std::size_t i = 0; i < std::min(L, bound.size()); ++i) x.d[1 + i] = rank(bound[i]);
  if (L < bound.size()) x.add_small(1);
  if (or_equal && L == bound.size()) x.add_small(1);
  return x;
}

struct StringBounds {
  std::optional<std::vector<std::uint32_t>> lo, hi;
  bool lo_strict = false, hi_strict = false;
};

u128 strings_of_length(const StringBounds& b, std::size_t L) {
  BaseN upper{std::vector<std::uint64_t>(L + 1, 0)};
  if (b.hi) upper = count_before(*b.hi, L, !b.hi_strict);
  else upper.d[0] = 1;
  BaseN lower{std::vector<std::uint64_t>(L + 1, 0)};
  if (b.lo) lower = count_before(*b.lo, L, b.lo_strict);
  if (!upper.greater(lower)) return 0;
  return upper.minus(lower).value();
}

u128 count_strings(const Window& w, const StringBounds& b) {
  if (w.empty()) return 0;
  if (!b.lo && !b.hi) return strings_in_window(w);
  std::size_t m = std::max(b.lo ? b.lo->size() : 0, b.hi ? b.hi->size() : 0);
  // Past the longest bound a position is free, so nonzero counts keep
  // growing by factors of N.
  const std::uint64_t lmax = m + 4;
  if (w.lo > lmax) return strings_of_length(b, lmax) > 0 ? kSat : 0;
  u128 total = 0;
  for (std::uint64_t L = w.lo; L <= std::min(w.hi, lmax); ++L) total = add(total, strings_of_length(b, L));
  if (w.hi > lmax && strings_of_length(b, lmax) > 0) return kSat;
  return total;
}

constexpr i128 kBig = static_cast<i128>(1) << 100;

i128 clamp_i128(long double v) {
  if (v >= static_cast<long double>(kBig)) return kBig;
  if (v <= -static_cast<long double>(kBig)) return -kBig;
  return static_cast<i128>(v);
}

i128 pow10(int e) {
  i128 p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

u128 integers_in(i128 lo, i128 hi, i128 band_lo, i128 band_hi) {
  i128 a = std::max(lo, band_lo), b = std::min(hi, band_hi);
  if (a > b) return 0;
  i128 n = b - a + 1;
  return n >= static_cast<i128>(kSat) ? kSat : static_cast<u128>(n);
}

// Canonical integers in [lo, hi] whose lexical length lies in the window.
u128 count_integers(i128 lo, i128 hi, const Window& w) {
  if (lo > hi || w.empty()) return 0;
  const bool unbounded = lo <= -kBig || hi >= kBig;
  if (w.lo == 0 && w.hi == kUnbounded) return unbounded ? kSat : integers_in(lo, hi, lo, hi);
  if (unbounded && w.hi > 32) return kSat;
  u128 total = 0;
  for (std::uint64_t L = std::max<std::uint64_t>(1, w.lo); L <= std::min<std::uint64_t>(w.hi, 34); ++L) {
    const int l = static_cast<int>(L);
    total = add(total, integers_in(lo, hi, l == 1 ? 0 : pow10(l - 1), pow10(l) - 1));
    if (l >= 2) total = add(total, integers_in(lo, hi, -(pow10(l - 1) - 1), l == 2 ? -1 : -pow10(l - 2)));
  }
  return total;
}

struct Bound {
  Term term;
  bool strict;
};

void tighten(std::optional<Bound>& slot, Bound b, rdf::Comparison better) {
  if (!slot) {
    slot = b;
    return;
  }
  auto c = rdf::compare_terms(b.term, slot->term);
  if (c == better || (c == rdf::Comparison::Equal && b.strict)) slot = b;
}

std::optional<rdf::ComparisonType> datatype_type(const std::string& dt) {
  if (dt == rdf::xsd_iri("string")) return rdf::ComparisonType::String;
  if (dt == rdf::xsd_iri("boolean")) return rdf::ComparisonType::Boolean;
  if (dt == rdf::xsd_iri("dateTime")) return rdf::ComparisonType::DateTime;
  if (rdf::is_numeric_datatype(dt)) return rdf::ComparisonType::Numeric;
  return std::nullopt;
}

class Counter {
 public:
  explicit Counter(const Combination& c) : c_(c) {
    for (const auto& f : c.positive_filters) {
      if (f.kind == FilterKind::MinLength) w_.lo = std::max(w_.lo, f.length);
      if (f.kind == FilterKind::MaxLength) w_.hi = std::min(w_.hi, f.length);
    }
    for (const auto& f : c.negative_filters) {
      if (f.kind == FilterKind::MinLength) {
        if (f.length == 0) w_.lo = 1, w_.hi = 0;
        else w_.hi = std::min(w_.hi, f.length - 1);
      }
      if (f.kind == FilterKind::MaxLength && f.length != kUnbounded) w_.lo = std::max(w_.lo, f.length + 1);
    }
  }

  bool holds(const Term& t) const {
    for (const auto& f : c_.positive_filters)
      if (!scl::filter_holds(f, t)) return false;
    for (const auto& f : c_.negative_filters)
      if (scl::filter_holds(f, t)) return false;
    return true;
  }

  u128 total() const {
    bool iri = true, blank = true, literal = true;
    for (const auto& f : c_.positive_filters) {
      switch (f.kind) {
        case FilterKind::IsIri: blank = literal = false; break;
        case FilterKind::IsLiteral: iri = blank = false; break;
        case FilterKind::IsBlank: iri = literal = false; break;
        case FilterKind::MinLength:
        case FilterKind::MaxLength: blank = false; break;
        default: iri = blank = false; break;
      }
    }
    for (const auto& f : c_.negative_filters) {
      if (f.kind == FilterKind::IsIri) iri = false;
      if (f.kind == FilterKind::IsLiteral) literal = false;
      if (f.kind == FilterKind::IsBlank) blank = false;
    }
    u128 sum = 0;
    if (iri) sum = add(sum, strings_in_window(w_));
    if (blank) sum = kSat;
    if (literal) sum = add(sum, literals());
    return sum;
  }

  // Whether t is one of the terms the region counts enumerate.
  static bool counted(const Term& t) {
    if (!t.is_literal()) return true;
    const std::string dt = t.effective_datatype();
    if (dt == rdf::xsd_iri("boolean")) return t.lexical() == "true" || t.lexical() == "false";
    if (rdf::is_integer_datatype(dt)) {
      static const std::regex canonical(R"(0|-?[1-9][0-9]*)");
      return std::regex_match(t.lexical(), canonical) && rdf::numeric_value(t).has_value();
    }
    return !datatype_type(dt).has_value() || dt == rdf::xsd_iri("string");
  }

 private:
  u128 literals() const {
    std::optional<std::string> pos_dt, pos_lang;
    std::set<std::string> dts = {rdf::xsd_iri("string"),  rdf::xsd_iri("boolean"), rdf::xsd_iri("integer"),
                                 rdf::xsd_iri("decimal"), rdf::xsd_iri("float"),   rdf::xsd_iri("double"),
                                 rdf::xsd_iri("dateTime")};
    std::set<std::string> neg_dt, neg_lang;
    bool pos_bound = false;
    for (const auto& f : c_.positive_filters) {
      if (f.kind == FilterKind::Datatype) {
        if (pos_dt && *pos_dt != f.text) return 0;
        pos_dt = f.text;
      }
      if (f.kind == FilterKind::LanguageTag) {
        if (pos_lang && *pos_lang != f.text) return 0;
        pos_lang = f.text;
      }
      if (f.is_bound()) pos_bound = true;
    }
    for (const auto& f : c_.negative_filters) {
      if (f.kind == FilterKind::Datatype) neg_dt.insert(f.text);
      if (f.kind == FilterKind::LanguageTag) neg_lang.insert(f.text);
    }
    for (const auto* set : {&c_.positive_filters, &c_.negative_filters})
      for (const auto& f : *set) {
        if (f.kind == FilterKind::Datatype) dts.insert(f.text);
        if (f.is_bound() && f.bound.is_literal()) dts.insert(f.bound.effective_datatype());
      }
    const std::string lang_string = rdf::rdf_iri("langString");
    dts.erase(lang_string);

    u128 sum = 0;
    if (!pos_lang)
      for (const auto& d : dts)
        if ((!pos_dt || *pos_dt == d) && !neg_dt.count(d)) sum = add(sum, region(d));
    const bool lang_ok = (!pos_dt || *pos_dt == lang_string) && !neg_dt.count(lang_string) && !pos_bound;
    if (lang_ok) {
      if (pos_lang) {
        if (!neg_lang.count(*pos_lang)) sum = add(sum, strings_in_window(w_));
      } else if (!w_.empty()) {
        sum = kSat;  // unboundedly many tags
      }
    }
    if (!pos_dt && !pos_lang && !pos_bound && !w_.empty()) sum = kSat;  // unnamed datatypes
    return sum;
  }

  u128 region(const std::string& dt) const {
    if (dt == rdf::xsd_iri("boolean")) {
      u128 n = 0;
      for (const char* lex : {"false", "true"})
        if (holds(Term::literal(lex, dt))) ++n;
      return n;
    }
    const auto type = datatype_type(dt);
    std::optional<Bound> lower, upper;
    for (const auto& f : c_.positive_filters) {
      if (!f.is_bound()) continue;
      auto tb = rdf::comparison_type(f.bound);
      if (!type || !tb || *tb != *type) return 0;
      Bound b{f.bound, f.is_strict_bound()};
      if (f.is_lower_bound()) tighten(lower, b, rdf::Comparison::Greater);
      else tighten(upper, b, rdf::Comparison::Less);
    }
    for (const auto& f : c_.negative_filters) {
      if (!f.is_bound()) continue;
      auto tb = rdf::comparison_type(f.bound);
      if (!type || !tb || *tb != *type) continue;
      // Within one comparison type the order is total, so the complement
      // of a bound is the opposite bound.
      Bound b{f.bound, !f.is_strict_bound()};
      if (f.is_lower_bound()) tighten(upper, b, rdf::Comparison::Less);
      else tighten(lower, b, rdf::Comparison::Greater);
    }
    if (!type) return strings_in_window(w_);
    if (*type == rdf::ComparisonType::String) {
      StringBounds sb;
      if (lower) sb.lo = code_points(lower->term.lexical()), sb.lo_strict = lower->strict;
      if (upper) sb.hi = code_points(upper->term.lexical()), sb.hi_strict = upper->strict;
      return count_strings(w_, sb);
    }
    if (rdf::is_integer_datatype(dt)) {
      auto range = rdf::integer_datatype_range(dt);
      i128 lo = range.min ? clamp_i128(*range.min) : -kBig;
      i128 hi = range.max ? clamp_i128(*range.max) : kBig;
      if (lower) {
        long double v = *rdf::numeric_value(lower->term);
        lo = std::max(lo, clamp_i128(lower->strict ? std::floor(v) + 1 : std::ceil(v)));
      }
      if (upper) {
        long double v = *rdf::numeric_value(upper->term);
        hi = std::min(hi, clamp_i128(upper->strict ? std::ceil(v) - 1 : std::floor(v)));
      }
      return count_integers(lo, hi, w_);
    }
    // decimal, float, double, dateTime: dense value spaces.
    if (w_.empty() || w_.hi == 0) return 0;
    if (lower && upper) {
      auto c = rdf::compare_terms(lower->term, upper->term);
      if (c == rdf::Comparison::Greater) return 0;
      if (c == rdf::Comparison::Equal) return (lower->strict || upper->strict) ? 0 : 1;
    }
    return kSat;
  }

  const Combination& c_;
  Window w_;
};

}  // namespace

Cardinality gamma(const Combination& c) {
  Counter counter(c);
  if (!c.positive_eq.empty()) {
    if (c.positive_eq.size() > 1) return Cardinality(0);
    const Term& t = *c.positive_eq.begin();
    return Cardinality(!c.negative_eq.count(t) && counter.holds(t) ? 1 : 0);
  }
  u128 total = counter.total();
  if (total >= kSat) return Cardinality::infinite();
  for (const auto& t : c.negative_eq)
    if (total > 0 && Counter::counted(t) && counter.holds(t)) --total;
  return Cardinality(static_cast<std::uint64_t>(total));
}

}  // namespace shl::filters
