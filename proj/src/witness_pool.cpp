// Concrete RDF terms standing in for fresh elements under canonical filters.
// Candidates are drawn around the constants, bounds and lengths the filters
// mention, then grouped by their truth values on those filters.

#include <cctype>
#include <cmath>
#include <cstdio>

#include "grounder.hpp"

namespace shl::engine::detail {

namespace {

class Candidates {
 public:
  void add(Term t) {
    if (seen_.insert(t).second) list.push_back(std::move(t));
  }
  std::vector<Term> list;

 private:
  std::set<Term> seen_;
};

// A string of length L; j varies the last character.
std::string text(std::size_t length, std::size_t j) {
  if (length == 0) return "";
  std::string s(length - 1, 'a');
  s.push_back(static_cast<char>('a' + j % 26));
  if (j >= 26 && length > 1) s[0] = static_cast<char>('a' + (j / 26) % 26);
  return s;
}

std::string decimal_lexical(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", v);
  std::string s = buf;
  while (s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  if (s == "-0.0") s = "0.0";
  return s;
}

std::string pattern_sample(const std::string& regex) {
  std::string out;
  bool escaped = false;
  for (char c : regex) {
    if (escaped) {
      if (std::isalnum(static_cast<unsigned char>(c)) == 0) out.push_back(c);
      escaped = false;
    } else if (c == '\\') {
      escaped = true;
    } else if (std::string("^$.*+?()[]{}|").find(c) == std::string::npos) {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::vector<PoolClass> witness_pool(const std::set<FilterName>& filters, const std::set<Term>& constants,
                                    std::size_t per_class, bool singletons) {
  const std::size_t k = std::max<std::size_t>(per_class, 1) + 2;
  std::set<std::size_t> lengths{0, 1, 2, 3};
  std::set<std::string> langs, datatypes = {rdf::xsd_iri("string"),  rdf::xsd_iri("boolean"),
                                            rdf::xsd_iri("integer"), rdf::xsd_iri("decimal"),
                                            rdf::xsd_iri("double"),  rdf::xsd_iri("dateTime")};
  std::vector<long double> numbers{0, 1, -1, 2};
  std::vector<std::string> strings, samples, years{"2000"};
  auto note_term = [&](const Term& t) {
    if (auto n = rdf::string_length(t)) lengths.insert({*n, *n + 1, *n ? *n - 1 : 0});
    if (!t.is_literal()) return;
    datatypes.insert(t.effective_datatype());
    if (t.language()) langs.insert(*t.language());
    if (auto v = rdf::numeric_value(t)) numbers.push_back(*v);
    if (rdf::comparison_type(t) == rdf::ComparisonType::String) strings.push_back(t.lexical());
    if (rdf::comparison_type(t) == rdf::ComparisonType::DateTime) years.push_back(t.lexical().substr(0, 4));
  };
  for (const auto& f : filters) {
    using FK = scl::FilterKind;
    if (f.kind == FK::MinLength || f.kind == FK::MaxLength)
      lengths.insert({f.length, f.length + 1, f.length ? f.length - 1 : 0});
    if (f.kind == FK::Datatype) datatypes.insert(f.text);
    if (f.kind == FK::LanguageTag) langs.insert(f.text);
    if (f.kind == FK::Pattern) samples.push_back(pattern_sample(f.text));
    if (f.is_bound()) note_term(f.bound);
  }
  for (const auto& c : constants) note_term(c);
  for (auto it = lengths.begin(); it != lengths.end();) it = *it > 64 ? lengths.erase(it) : std::next(it);
  std::string other_tag = "zz";
  while (langs.count(other_tag)) other_tag[1]--;
  langs.insert(other_tag);

  Candidates c;
  for (std::size_t j = 1; j <= k; ++j) c.add(Term::iri("http://example.org/n" + std::to_string(j)));
  for (std::size_t j = 1; j <= k; ++j) c.add(Term::blank("b" + std::to_string(j)));
  for (auto L : lengths)
    for (std::size_t j = 0; j < k; ++j) {
      c.add(Term::iri(text(L, j)));
      c.add(Term::literal(text(L, j)));
    }
  for (const auto& s : samples)
    for (std::size_t j = 0; j < k; ++j) {
      c.add(Term::literal(s + text(j, j)));
      c.add(Term::iri(s + text(j, j)));
    }
  for (const auto& s : strings) {
    c.add(Term::literal(s));
    c.add(Term::literal(s + "a"));
    if (!s.empty()) {
      c.add(Term::literal(s.substr(0, s.size() - 1)));
      std::string up = s, down = s;
      up.back()++;
      down.back()--;
      c.add(Term::literal(up));
      c.add(Term::literal(down));
    }
  }
  for (const auto& tag : langs)
    for (auto L : lengths)
      for (std::size_t j = 0; j < k; ++j) c.add(Term::literal(text(L, j), std::nullopt, tag));

  for (const auto& dt : datatypes) {
    if (dt == rdf::xsd_iri("string") || dt == rdf::rdf_iri("langString")) continue;
    if (dt == rdf::xsd_iri("boolean")) {
      c.add(Term::boolean(false));
      c.add(Term::boolean(true));
    } else if (rdf::is_integer_datatype(dt)) {
      auto range = rdf::integer_datatype_range(dt);
      std::vector<long double> values;
      for (auto v : numbers)
        for (long double d = -static_cast<long double>(k); d <= static_cast<long double>(k); ++d)
          values.push_back(std::floor(v) + d), values.push_back(std::ceil(v) + d);
      for (auto L : lengths) {
        if (L == 0 || L > 18) continue;
        const long double p = std::pow(10.0L, static_cast<long double>(L - 1));
        for (std::size_t j = 0; j < k; ++j) {
          values.push_back((L == 1 ? 0 : p) + j);
          values.push_back(p * 10 - 1 - j);
          if (L >= 2) values.push_back(-(L == 2 ? 1 : p / 10) - j), values.push_back(-(p - 1) + j);
        }
      }
      for (auto v : values) {
        if ((range.min && v < *range.min) || (range.max && v > *range.max)) continue;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0Lf", v);
        c.add(Term::literal(buf, dt));
      }
    } else if (rdf::is_numeric_datatype(dt)) {
      for (auto v : numbers)
        for (long double d : {0.0L, 0.5L, -0.5L, 1.0L, -1.0L, 0.25L, -0.25L, 2.0L, -2.0L, 1.5L, -1.5L})
          c.add(Term::literal(decimal_lexical(v + d), dt));
    } else if (dt == rdf::xsd_iri("dateTime")) {
      for (const auto& y : years) {
        if (y.size() != 4) continue;
        const int year = std::atoi(y.c_str());
        for (int dy : {0, -1, 1})
          for (std::size_t j = 0; j < k; ++j) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%04d-06-15T12:00:%02zuZ", year + dy, j);
            c.add(Term::literal(buf, dt));
          }
      }
      for (const auto& t : constants)
        if (t.is_literal() && t.effective_datatype() == dt) c.add(t);
    } else {
      for (auto L : lengths)
        for (std::size_t j = 0; j < k; ++j) c.add(Term::literal(text(L, j), dt));
    }
  }
  for (std::size_t j = 0; j < k; ++j) c.add(Term::literal(text(1, j), std::string("urn:scl:other-datatype")));

  std::vector<FilterName> fs(filters.begin(), filters.end());
  // With order atoms the datatype joins the profile so that every
  // comparison type keeps representatives.
  std::map<std::pair<std::vector<bool>, std::string>, std::size_t> by_profile;
  std::vector<PoolClass> classes;
  for (const auto& t : c.list) {
    if (constants.count(t)) continue;
    std::vector<bool> profile;
    for (const auto& f : fs) profile.push_back(scl::filter_holds(f, t));
    std::string kind = singletons && t.is_literal() ? t.effective_datatype() : "";
    auto [it, added] = by_profile.emplace(std::make_pair(profile, kind), classes.size());
    if (added) classes.emplace_back();
    auto& members = classes[it->second].members;
    if (members.size() < per_class) members.push_back(t);
  }
  if (!singletons) return classes;
  std::vector<PoolClass> out;
  for (const auto& cls : classes)
    for (const auto& t : cls.members) out.push_back({{t}});
  return out;
}

}  // namespace shl::engine::detail
