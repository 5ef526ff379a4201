#include <array>
#include <cmath>
#include <cstdlib>
#include <regex>

#include "shl/rdf.hpp"

namespace shl::rdf {

namespace {

constexpr std::array<std::string_view, 13> kIntegerTypes = {
    "integer", "nonNegativeInteger", "positiveInteger", "nonPositiveInteger", "negativeInteger",
    "long", "int", "short", "byte", "unsignedLong", "unsignedInt", "unsignedShort", "unsignedByte"};

std::optional<std::string_view> xsd_local(std::string_view datatype) {
  if (datatype.size() <= ns::xsd.size() || datatype.substr(0, ns::xsd.size()) != ns::xsd) return std::nullopt;
  return datatype.substr(ns::xsd.size());
}

bool parse_decimal(const std::string& lex, bool allow_exponent, bool integer_only, long double& out) {
  static const std::regex integer_re(R"([+-]?[0-9]+)");
  static const std::regex decimal_re(R"([+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+))");
  static const std::regex double_re(R"([+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?|[+-]?INF|NaN)");
  const std::regex& re = integer_only ? integer_re : allow_exponent ? double_re : decimal_re;
  if (!std::regex_match(lex, re)) return false;
  if (lex == "INF" || lex == "+INF") out = HUGE_VALL;
  else if (lex == "-INF") out = -HUGE_VALL;
  else if (lex == "NaN") return false;
  else out = std::strtold(lex.c_str(), nullptr);
  return true;
}

// Seconds since 0000-01-01 on a proleptic calendar, timezone-adjusted;
// timezone-less values are read as UTC.
std::optional<long double> parse_datetime(const std::string& lex) {
  static const std::regex re(
      R"((-?[0-9]{4,})-([0-9]{2})-([0-9]{2})T([0-9]{2}):([0-9]{2}):([0-9]{2}(\.[0-9]+)?)(Z|[+-][0-9]{2}:[0-9]{2})?)");
  std::smatch m;
  if (!std::regex_match(lex, m, re)) return std::nullopt;
  long long year = std::stoll(m[1]);
  int month = std::stoi(m[2]);
  int day = std::stoi(m[3]);
  int hour = std::stoi(m[4]);
  int minute = std::stoi(m[5]);
  long double second = std::strtold(m[6].str().c_str(), nullptr);
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 24 || minute > 59 || second >= 61) return std::nullopt;
  // days from civil (Howard Hinnant's algorithm)
  long long y = year - (month <= 2 ? 1 : 0);
  long long era = (y >= 0 ? y : y - 399) / 400;
  long long yoe = y - era * 400;
  long long doy = (153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
  long long doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  long long days = era * 146097 + doe;
  long double total = static_cast<long double>(days) * 86400.0L + hour * 3600.0L + minute * 60.0L + second;
  if (m[8].matched && m[8].str() != "Z") {
    std::string tz = m[8].str();
    int sign = tz[0] == '-' ? -1 : 1;
    int offset = std::stoi(tz.substr(1, 2)) * 3600 + std::stoi(tz.substr(4, 2)) * 60;
    total -= sign * offset;
  }
  return total;
}

struct Value {
  ComparisonType type;
  long double number = 0;
  std::string text;
};

std::optional<Value> value_of(const Term& term, bool& malformed) {
  malformed = false;
  auto type = comparison_type(term);
  if (!type) {
    if (term.is_literal() && !term.language()) {
      // A known datatype whose lexical form did not parse.
      auto local = xsd_local(term.effective_datatype());
      if (local && (is_numeric_datatype(term.effective_datatype()) || *local == "boolean" || *local == "dateTime"))
        malformed = true;
    }
    return std::nullopt;
  }
  Value v{*type};
  switch (*type) {
    case ComparisonType::Numeric: v.number = *numeric_value(term); break;
    case ComparisonType::Boolean: v.number = (term.lexical() == "true" || term.lexical() == "1") ? 1 : 0; break;
    case ComparisonType::DateTime: v.number = *parse_datetime(term.lexical()); break;
    case ComparisonType::String: v.text = term.lexical(); break;
  }
  return v;
}

}  // namespace

bool is_integer_datatype(std::string_view datatype) {
  auto local = xsd_local(datatype);
  if (!local) return false;
  for (auto t : kIntegerTypes)
    if (*local == t) return true;
  return false;
}

bool is_numeric_datatype(std::string_view datatype) {
  if (is_integer_datatype(datatype)) return true;
  auto local = xsd_local(datatype);
  return local && (*local == "decimal" || *local == "float" || *local == "double");
}

IntegerRange integer_datatype_range(std::string_view datatype) {
  auto local = xsd_local(datatype).value_or("");
  auto pow2 = [](int n) { return std::ldexp(1.0L, n); };
  if (local == "nonNegativeInteger") return {0.0L, std::nullopt};
  if (local == "positiveInteger") return {1.0L, std::nullopt};
  if (local == "nonPositiveInteger") return {std::nullopt, 0.0L};
  if (local == "negativeInteger") return {std::nullopt, -1.0L};
  if (local == "long") return {-pow2(63), pow2(63) - 1};
  if (local == "int") return {-pow2(31), pow2(31) - 1};
  if (local == "short") return {-32768.0L, 32767.0L};
  if (local == "byte") return {-128.0L, 127.0L};
  if (local == "unsignedLong") return {0.0L, pow2(64) - 1};
  if (local == "unsignedInt") return {0.0L, pow2(32) - 1};
  if (local == "unsignedShort") return {0.0L, 65535.0L};
  if (local == "unsignedByte") return {0.0L, 255.0L};
  return {};
}

std::optional<long double> numeric_value(const Term& term) {
  if (!term.is_literal() || term.language()) return std::nullopt;
  const std::string dt = term.effective_datatype();
  if (!is_numeric_datatype(dt)) return std::nullopt;
  long double v = 0;
  auto local = *xsd_local(dt);
  bool integer = is_integer_datatype(dt);
  bool floating = local == "float" || local == "double";
  if (!parse_decimal(term.lexical(), floating, integer, v)) return std::nullopt;
  if (integer) {
    auto range = integer_datatype_range(dt);
    if ((range.min && v < *range.min) || (range.max && v > *range.max)) return std::nullopt;
  }
  return v;
}

std::optional<ComparisonType> comparison_type(const Term& term) {
  if (!term.is_literal() || term.language()) return std::nullopt;
  const std::string dt = term.effective_datatype();
  if (dt == xsd_iri("string")) return ComparisonType::String;
  if (is_numeric_datatype(dt)) {
    if (!numeric_value(term)) return std::nullopt;
    return ComparisonType::Numeric;
  }
  if (dt == xsd_iri("boolean")) {
    const auto& l = term.lexical();
    if (l == "true" || l == "false" || l == "1" || l == "0") return ComparisonType::Boolean;
    return std::nullopt;
  }
  if (dt == xsd_iri("dateTime")) {
    if (!parse_datetime(term.lexical())) return std::nullopt;
    return ComparisonType::DateTime;
  }
  return std::nullopt;
}

Comparison compare_terms(const Term& a, const Term& b, std::vector<std::string>* diagnostics) {
  bool bad_a = false, bad_b = false;
  auto va = value_of(a, bad_a);
  auto vb = value_of(b, bad_b);
  if (diagnostics) {
    if (bad_a) diagnostics->push_back("malformed lexical form: " + to_string(a));
    if (bad_b) diagnostics->push_back("malformed lexical form: " + to_string(b));
  }
  if (!va || !vb || va->type != vb->type) return Comparison::Incomparable;
  if (va->type == ComparisonType::String) {
    int c = va->text.compare(vb->text);
    return c < 0 ? Comparison::Less : c > 0 ? Comparison::Greater : Comparison::Equal;
  }
  if (va->number < vb->number) return Comparison::Less;
  if (va->number > vb->number) return Comparison::Greater;
  return Comparison::Equal;
}

}  // namespace shl::rdf
