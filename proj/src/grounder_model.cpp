#include <algorithm>

#include "grounder.hpp"

namespace shl::engine::detail {

namespace {

constexpr int kTypes = 4;

}  // namespace

void Grounder::finish(bool symmetry_breaking) {
  const std::size_t nc = u_.constants.size(), n = u_.size();
  if (u_.canonical) {
    for (std::size_t x = nc; x < n; ++x) {
      std::vector<Lit> some;
      for (std::size_t c = 0; c < u_.pool.size(); ++c) some.push_back(select(x, c));
      solver_.add_clause(some);
      for (std::size_t c = 0; c < u_.pool.size(); ++c)
        for (std::size_t d = c + 1; d < u_.pool.size(); ++d) solver_.add_clause({-select(x, c), -select(x, d)});
    }
    // Classes are chosen in nondecreasing order, so the elements sharing a
    // class are consecutive and take its members in turn.
    for (std::size_t x = nc; x + 1 < n; ++x)
      for (std::size_t c = 0; c < u_.pool.size(); ++c) {
        std::vector<Lit> clause{-select(x + 1, c)};
        for (std::size_t d = 0; d <= c; ++d) clause.push_back(select(x, d));
        solver_.add_clause(clause);
      }
    for (std::size_t c = 0; c < u_.pool.size(); ++c) {
      const std::size_t m = u_.pool[c].members.size();
      for (std::size_t x = nc; x + m < n; ++x) solver_.add_clause({-select(x, c), -select(x + m, c)});
    }
  } else if (orders_used_) {
    for (std::size_t x = nc; x < n; ++x)
      for (int s = 0; s < kTypes; ++s)
        for (int t = s + 1; t < kTypes; ++t) solver_.add_clause({-in_block(x, s), -in_block(x, t)});
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        std::vector<Lit> same;
        for (int t = 0; t < kTypes; ++t) same.push_back(land({in_block(a, t), in_block(b, t)}));
        solver_.add_clause({-less_eq(a, b), lor(same)});
        // Antisymmetric: distinct fresh elements never tie.
        if (a < b && b >= nc) solver_.add_clause({-less_eq(a, b), -less_eq(b, a)});
        if (a < b)
          for (int t = 0; t < kTypes; ++t)
            solver_.add_clause({-in_block(a, t), -in_block(b, t), less_eq(a, b), less_eq(b, a)});
        for (std::size_t c = 0; c < n; ++c)
          if (c != a && c != b) solver_.add_clause({-less_eq(a, b), -less_eq(b, c), less_eq(a, c)});
      }
  }
  if (!symmetry_breaking) return;
  for (std::size_t x = nc; x + 1 < n; ++x) {
    Lit gate = yes();
    if (u_.canonical) {
      std::vector<Lit> same;
      for (std::size_t c = 0; c < u_.pool.size(); ++c) same.push_back(land({select(x, c), select(x + 1, c)}));
      gate = lor(same);
      // Distinct terms of one class differ only by name when the sentence
      // has no order atoms; otherwise classes are singletons.
    }
    lex_leader(x, gate);
  }
}

// Under `gate`, the assignment is lexicographically no larger than its image
// under swapping elements x and x + 1.
void Grounder::lex_leader(std::size_t x, Lit gate) {
  const int e = static_cast<int>(x), f = e + 1;
  auto swap = [&](int v) { return v == e ? f : v == f ? e : v; };
  std::vector<std::pair<Key, int>> snapshot(vars_.begin(), vars_.end());
  Lit prefix = gate;
  for (const auto& [key, v] : snapshot) {
    auto [kind, id, a, b] = key;
    if (kind == kSelect) continue;
    Key image = kind == kBlock || kind == kFilter ? Key{kind, id, swap(a), b} : Key{kind, id, swap(a), swap(b)};
    if (image == key) continue;
    const Lit w = var(image);
    solver_.add_clause({-prefix, -v, w});
    prefix = land({prefix, iff(v, w)});
    if (prefix == no()) break;
  }
}

std::vector<int> Grounder::primaries() const {
  std::vector<int> out;
  for (const auto& [key, v] : vars_) out.push_back(v);
  return out;
}

FiniteStructure Grounder::decode() const {
  auto value = [&](Lit l) { return l > 0 ? solver_.model_value(l) : !solver_.model_value(-l); };
  auto lookup = [&](const Key& k) {
    auto it = vars_.find(k);
    return it != vars_.end() && value(it->second);
  };
  const std::size_t nc = u_.constants.size(), n = u_.size();
  FiniteStructure s;
  s.domain = u_.constants;
  if (u_.canonical) {
    std::map<std::size_t, std::size_t> used;
    for (std::size_t x = nc; x < n; ++x)
      for (std::size_t c = 0; c < u_.pool.size(); ++c)
        if (lookup({kSelect, static_cast<int>(x), static_cast<int>(c), 0})) {
          s.domain.push_back(u_.pool[c].members.at(used[c]++));
          break;
        }
    if (s.domain.size() != n) throw EngineError("model without a term choice for a fresh element");
  } else {
    std::size_t k = 0;
    for (std::size_t x = nc; x < n; ++x) {
      Term t;
      do t = Term::iri("urn:scl:element:" + std::to_string(++k));
      while (std::find(u_.constants.begin(), u_.constants.end(), t) != u_.constants.end());
      s.domain.push_back(t);
    }
  }
  for (const auto& [key, v] : vars_) {
    auto [kind, id, a, b] = key;
    if (kind == kRelation && value(v)) s.relations[relations_[id]].insert({s.domain[a], s.domain[b]});
  }
  if (u_.canonical) {
    s.canonical_filters = true;
    canonical_orders(s);
    return s;
  }
  s.canonical_filters = false;
  std::map<int, FilterName> names;
  for (const auto& [f, id] : filter_ids_) {
    names.emplace(id, f);
    s.filter_ext[f];
  }
  for (const auto& [key, v] : vars_) {
    auto [kind, id, a, b] = key;
    if (kind == kFilter && value(v)) s.filter_ext[names.at(id)].insert(s.domain[a]);
  }
  if (!orders_used_) {
    canonical_orders(s);
    return s;
  }
  auto type_of = [&](std::size_t x) -> int {
    if (x < nc) {
      auto t = rdf::comparison_type(u_.constants[x]);
      return t ? static_cast<int>(*t) : -1;
    }
    for (int t = 0; t < kTypes; ++t)
      if (lookup({kBlock, t, static_cast<int>(x), 0})) return t;
    return -1;
  };
  auto le = [&](std::size_t a, std::size_t b) {
    if (a == b) return true;
    if (a < nc && b < nc) {
      auto c = rdf::compare_terms(u_.constants[a], u_.constants[b]);
      return c == rdf::Comparison::Less || c == rdf::Comparison::Equal;
    }
    return lookup({kLessEq, 0, static_cast<int>(a), static_cast<int>(b)});
  };
  for (int t = 0; t < kTypes; ++t) {
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < n; ++x)
      if (type_of(x) == t) members.push_back(x);
    if (members.empty()) continue;
    // Position in the preorder: the number of members at or below.
    auto below = [&](std::size_t x) {
      std::size_t k = 0;
      for (auto m : members) k += le(m, x);
      return k;
    };
    std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return below(a) < below(b); });
    OrderBlock block{static_cast<rdf::ComparisonType>(t), {}};
    std::size_t previous = SIZE_MAX;
    for (auto m : members) {
      if (previous != SIZE_MAX && below(m) == below(previous)) block.ranks.back().push_back(s.domain[m]);
      else block.ranks.push_back({s.domain[m]});
      previous = m;
    }
    s.order_blocks.push_back(std::move(block));
  }
  return s;
}

}  // namespace shl::engine::detail
