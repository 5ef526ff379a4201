#include "grounder.hpp"

#include <algorithm>

namespace shl::engine::detail {

namespace {

constexpr int kTypes = 4;  // rdf::ComparisonType values

}  // namespace

Grounder::Grounder(sat::Solver& solver, Universe universe, const std::set<Term>& relations,
                   std::map<ShapeName, Formula> definitions)
    : solver_(solver), u_(std::move(universe)), relations_(relations.begin(), relations.end()),
      definitions_(std::move(definitions)) {
  true_ = solver_.new_var();
  solver_.add_clause({true_});
}

int Grounder::var(const Key& key) {
  auto it = vars_.find(key);
  if (it != vars_.end()) return it->second;
  int v = solver_.new_var();
  vars_.emplace(key, v);
  return v;
}

Lit Grounder::land(std::vector<Lit> lits) {
  std::vector<Lit> kept;
  for (Lit l : lits) {
    if (l == no()) return no();
    if (l != yes()) kept.push_back(l);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (Lit l : kept)
    if (std::binary_search(kept.begin(), kept.end(), -l)) return no();
  if (kept.empty()) return yes();
  if (kept.size() == 1) return kept[0];
  auto it = ands_.find(kept);
  if (it != ands_.end()) return it->second;
  const Lit g = solver_.new_var();
  std::vector<Lit> back{g};
  for (Lit l : kept) {
    solver_.add_clause({-g, l});
    back.push_back(-l);
  }
  solver_.add_clause(back);
  ands_.emplace(kept, g);
  return g;
}

Lit Grounder::lor(std::vector<Lit> lits) {
  for (auto& l : lits) l = -l;
  return -land(std::move(lits));
}

Lit Grounder::iff(Lit a, Lit b) {
  if (a == b) return yes();
  if (a == -b) return no();
  if (a == yes()) return b;
  if (a == no()) return -b;
  if (b == yes()) return a;
  if (b == no()) return -a;
  return lor({land({a, b}), land({-a, -b})});
}

Lit Grounder::at_least(std::uint64_t k, const std::vector<Lit>& lits) {
  if (k == 0) return yes();
  if (k > lits.size()) return no();
  // reached[j]: at least j of the literals seen so far hold.
  std::vector<Lit> reached(k + 1, no());
  reached[0] = yes();
  for (Lit l : lits)
    for (std::size_t j = k; j >= 1; --j) reached[j] = lor({reached[j], land({l, reached[j - 1]})});
  return reached[k];
}

std::size_t Grounder::element_of(const Term& c) const {
  auto it = std::find(u_.constants.begin(), u_.constants.end(), c);
  return it == u_.constants.end() ? SIZE_MAX : static_cast<std::size_t>(it - u_.constants.begin());
}

Lit Grounder::relation(const Term& r, std::size_t a, std::size_t b) {
  auto it = std::find(relations_.begin(), relations_.end(), r);
  if (it == relations_.end()) {
    relations_.push_back(r);
    it = relations_.end() - 1;
  }
  return var({kRelation, static_cast<int>(it - relations_.begin()), static_cast<int>(a), static_cast<int>(b)});
}

Lit Grounder::path(const PathExpr& p, std::size_t a, std::size_t b) {
  auto key = std::make_tuple(p.identity(), a, b);
  auto it = paths_.find(key);
  if (it != paths_.end()) return it->second.second;
  Lit out = no();
  using K = PathExpr::Kind;
  switch (p.kind()) {
    case K::Atom: out = p.inverted() ? relation(p.relation(), b, a) : relation(p.relation(), a, b); break;
    case K::Sequence: {
      std::vector<Lit> ways;
      for (std::size_t c = 0; c < u_.size(); ++c) ways.push_back(land({path(p.left(), a, c), path(p.right(), c, b)}));
      out = lor(ways);
      break;
    }
    case K::ZeroOrOne: out = a == b ? yes() : path(p.left(), a, b); break;
    case K::Alternative: out = lor({path(p.left(), a, b), path(p.right(), a, b)}); break;
    case K::Star: out = star(p)[a][b]; break;
  }
  paths_.emplace(key, std::make_pair(p, out));
  return out;
}

const std::vector<std::vector<Lit>>& Grounder::star(const PathExpr& p) {
  auto it = stars_.find(p.identity());
  if (it != stars_.end()) return it->second.second;
  const std::size_t n = u_.size();
  std::vector<std::vector<Lit>> m(n, std::vector<Lit>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m[a][b] = a == b ? yes() : path(p.left(), a, b);
  // Squaring a reflexive relation doubles the path length covered.
  for (std::size_t covered = 1; covered + 1 < n; covered *= 2) {
    auto next = m;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<Lit> ways;
        for (std::size_t c = 0; c < n; ++c) ways.push_back(land({m[a][c], m[c][b]}));
        next[a][b] = lor(ways);
      }
    m = std::move(next);
  }
  return stars_.emplace(p.identity(), std::make_pair(p, std::move(m))).first->second.second;
}

Lit Grounder::select(std::size_t x, std::size_t cls) {
  return var({kSelect, static_cast<int>(x), static_cast<int>(cls), 0});
}

Lit Grounder::filter(const FilterName& f, std::size_t x) {
  if (u_.canonical) {
    if (!is_fresh(x)) return scl::filter_holds(f, u_.constants[x]) ? yes() : no();
    std::vector<Lit> ways;
    for (std::size_t c = 0; c < u_.pool.size(); ++c)
      if (scl::filter_holds(f, u_.pool[c].members.front())) ways.push_back(select(x, c));
    return lor(ways);
  }
  if (f.via_order) {
    const std::size_t cb = element_of(f.bound);
    if (cb == SIZE_MAX) throw EngineError("order bound outside the domain: " + rdf::to_string(f.bound));
    switch (f.kind) {
      case scl::FilterKind::MinExclusive: return less(cb, x);
      case scl::FilterKind::MinInclusive: return less_eq(cb, x);
      case scl::FilterKind::MaxExclusive: return less(x, cb);
      default: return less_eq(x, cb);
    }
  }
  auto [it, fresh_id] = filter_ids_.emplace(f, static_cast<int>(filter_ids_.size()));
  (void)fresh_id;
  return var({kFilter, it->second, static_cast<int>(x), 0});
}

Lit Grounder::in_block(std::size_t x, int type) {
  if (!is_fresh(x)) {
    auto t = rdf::comparison_type(u_.constants[x]);
    return t && static_cast<int>(*t) == type ? yes() : no();
  }
  return var({kBlock, type, static_cast<int>(x), 0});
}

Lit Grounder::compare_canonical(std::size_t a, std::size_t b, bool strict) {
  auto candidates = [&](std::size_t x) {
    std::vector<std::pair<Term, Lit>> out;
    if (!is_fresh(x)) out.emplace_back(u_.constants[x], yes());
    else
      for (std::size_t c = 0; c < u_.pool.size(); ++c) out.emplace_back(u_.pool[c].members.front(), select(x, c));
    return out;
  };
  std::vector<Lit> ways;
  if (a == b) {
    if (strict) return no();
    for (const auto& [t, l] : candidates(a))
      if (rdf::comparison_type(t)) ways.push_back(l);
    return lor(ways);
  }
  for (const auto& [ta, la] : candidates(a))
    for (const auto& [tb, lb] : candidates(b)) {
      auto c = rdf::compare_terms(ta, tb);
      if (c == rdf::Comparison::Less || (!strict && c == rdf::Comparison::Equal)) ways.push_back(land({la, lb}));
    }
  return lor(ways);
}

Lit Grounder::less_eq(std::size_t a, std::size_t b) {
  if (u_.canonical) return compare_canonical(a, b, false);
  orders_used_ = true;
  if (a == b) {
    std::vector<Lit> ways;
    for (int t = 0; t < kTypes; ++t) ways.push_back(in_block(a, t));
    return lor(ways);
  }
  if (!is_fresh(a) && !is_fresh(b)) {
    const Term &ta = u_.constants[a], &tb = u_.constants[b];
    auto ca = rdf::comparison_type(ta), cb = rdf::comparison_type(tb);
    if (!ca || ca != cb) return no();
    auto c = rdf::compare_terms(ta, tb);
    return c == rdf::Comparison::Less || c == rdf::Comparison::Equal ? yes() : no();
  }
  return var({kLessEq, 0, static_cast<int>(a), static_cast<int>(b)});
}

Lit Grounder::less(std::size_t a, std::size_t b) {
  if (u_.canonical) return compare_canonical(a, b, true);
  if (a == b) return no();
  return land({less_eq(a, b), -less_eq(b, a)});
}

Lit Grounder::formula(const Formula& g, std::size_t x) {
  auto key = std::make_pair(g.identity(), x);
  auto it = formulas_.find(key);
  if (it != formulas_.end()) return it->second.second;
  const std::size_t n = u_.size();
  Lit out = no();
  using K = Formula::Kind;
  switch (g.kind()) {
    case K::Top: out = yes(); break;
    case K::EqConst: out = element_of(g.constant()) == x ? yes() : no(); break;
    case K::Filter: out = filter(g.filter(), x); break;
    case K::HasShape: {
      auto def = definitions_.find(g.shape());
      if (def == definitions_.end())
        throw EngineError("no definition for shape " + scl::print_term(g.shape().term));
      if (!expanding_.insert(g.shape()).second)
        throw EngineError("recursive definition of shape " + scl::print_term(g.shape().term));
      out = formula(def->second, x);
      expanding_.erase(g.shape());
      break;
    }
    case K::Not: out = -formula(g.operand(), x); break;
    case K::And: out = land({formula(g.left(), x), formula(g.right(), x)}); break;
    case K::Count: {
      std::vector<Lit> items;
      for (std::size_t y = 0; y < n; ++y) items.push_back(land({path(g.path(), x, y), formula(g.body(), y)}));
      out = at_least(g.count(), items);
      break;
    }
    case K::Disjoint: {
      std::vector<Lit> clash;
      for (std::size_t y = 0; y < n; ++y) clash.push_back(land({path(g.path(), x, y), relation(g.relation(), x, y)}));
      out = -lor(clash);
      break;
    }
    case K::Equals: {
      std::vector<Lit> same;
      for (std::size_t y = 0; y < n; ++y) same.push_back(iff(path(g.path(), x, y), relation(g.relation(), x, y)));
      out = land(same);
      break;
    }
    case K::Order: {
      std::vector<Lit> cases;
      for (std::size_t y = 0; y < n; ++y) {
        const Lit py = path(g.path(), x, y);
        if (py == no()) continue;
        for (std::size_t z = 0; z < n; ++z) {
          const std::size_t lo = g.inverted() ? z : y, hi = g.inverted() ? y : z;
          const Lit sigma = g.op() == scl::OrderOp::Less ? less(lo, hi) : less_eq(lo, hi);
          cases.push_back(lor({-py, -relation(g.relation(), x, z), sigma}));
        }
      }
      out = land(cases);
      break;
    }
  }
  formulas_.emplace(key, std::make_pair(g, out));
  return out;
}

Lit Grounder::sentence(const Sentence& s) {
  const std::size_t n = u_.size();
  using K = Sentence::Kind;
  switch (s.kind()) {
    case K::Top:
    case K::ShapeDef: return yes();
    case K::And: return land({sentence(s.left()), sentence(s.right())});
    case K::AtConst: {
      const std::size_t c = element_of(s.constant());
      if (c == SIZE_MAX) throw EngineError("constant outside the domain: " + rdf::to_string(s.constant()));
      return formula(s.body(), c);
    }
    case K::ForClass: {
      const std::size_t c = element_of(s.constant());
      if (c == SIZE_MAX) return yes();
      std::vector<Lit> all;
      const Term type = Term::iri(rdf::rdf_iri("type"));
      for (std::size_t x = 0; x < n; ++x) all.push_back(lor({-relation(type, x, c), formula(s.body(), x)}));
      return land(all);
    }
    case K::ForSubjects: {
      std::vector<Lit> all;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          all.push_back(lor({-relation(s.constant(), x, y), formula(s.body(), s.inverted() ? y : x)}));
      return land(all);
    }
    case K::AtMost: {
      std::vector<Lit> items;
      for (std::size_t x = 0; x < n; ++x) items.push_back(formula(s.body(), x));
      return -at_least(s.bound() + 1, items);
    }
  }
  return no();
}

}  // namespace shl::engine::detail
