#include "shl/filter_axioms.hpp"

#include <algorithm>

namespace shl::filters {

using scl::Formula;
using scl::Sentence;

Formula Combination::formula() const {
  std::vector<Formula> parts;
  for (const auto& c : positive_eq) parts.push_back(Formula::eq(c));
  for (const auto& c : negative_eq) parts.push_back(Formula::negation(Formula::eq(c)));
  for (const auto& f : positive_filters) parts.push_back(Formula::filter(f));
  for (const auto& f : negative_filters) parts.push_back(Formula::negation(Formula::filter(f)));
  return Formula::conjunction_of(parts);
}

Alphabet alphabet_of(const Sentence& sentence) {
  Alphabet a;
  for (const auto& c : scl::node_constants(sentence)) a.constants.push_back(c);
  for (const auto& f : scl::filters(sentence)) {
    if (f.kind == scl::FilterKind::Pattern || f.via_order) continue;
    a.filters.push_back(f);
  }
  return a;
}

namespace {

// A literal is atom * 2 + (negated ? 1 : 0); combinations are sorted lists.
using Literals = std::vector<int>;

Combination build(const Alphabet& a, const Literals& lits) {
  Combination c;
  const int nc = static_cast<int>(a.constants.size());
  for (int l : lits) {
    int atom = l / 2;
    bool neg = l % 2;
    if (atom < nc) (neg ? c.negative_eq : c.positive_eq).insert(a.constants[atom]);
    else (neg ? c.negative_filters : c.positive_filters).insert(a.filters[atom - nc]);
  }
  return c;
}

bool next_subset(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Combination> collect_combinations(const Sentence& sentence, std::size_t cap) {
  const Alphabet a = alphabet_of(sentence);
  const int n = static_cast<int>(a.size());
  std::vector<Combination> out;
  std::vector<Literals> unsat;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        Literals lits(k);
        for (int i = 0; i < k; ++i) lits[i] = idx[i] * 2 + ((mask >> i) & 1);
        bool pruned = std::any_of(unsat.begin(), unsat.end(), [&](const Literals& u) {
          return std::includes(lits.begin(), lits.end(), u.begin(), u.end());
        });
        if (pruned) continue;
        Combination c = build(a, lits);
        Cardinality g = gamma(c);
        if (!g.is_infinite() && g.value() == 0) {
          c.unsatisfiable = true;
          unsat.push_back(lits);
        }
        out.push_back(std::move(c));
        if (out.size() > cap)
          throw CapExceeded("more than " + std::to_string(cap) + " filter combinations");
      }
    } while (next_subset(idx, n));
  }
  return out;
}

Axiomatization axiomatize(const Sentence& sentence, std::size_t cap) {
  Axiomatization result;
  for (const auto& f : scl::filters(sentence))
    if (f.kind == scl::FilterKind::Pattern) result.pattern_incomplete = true;
  auto combos = collect_combinations(sentence, cap);
  result.combinations = combos.size();
  std::vector<Sentence> parts;
  for (const auto& c : combos) {
    Cardinality g = c.unsatisfiable ? Cardinality(0) : gamma(c);
    if (g.is_infinite()) continue;
    parts.push_back(Sentence::at_most(g.value(), c.formula()));
  }
  result.axioms = Sentence::conjunction_of(parts);
  return result;
}

}  // namespace shl::filters
