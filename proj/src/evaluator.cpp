#include "shl/engine.hpp"

namespace shl::engine {

using Matrix = std::vector<std::vector<bool>>;

Evaluator::Evaluator(const FiniteStructure& structure) : s_(structure) {
  for (std::size_t i = 0; i < s_.domain.size(); ++i) index_.emplace(s_.domain[i], i);
}

std::size_t Evaluator::index(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw EngineError("term outside the domain: " + rdf::to_string(t));
  return it->second;
}

const Matrix& Evaluator::relation(const Term& name) {
  auto it = relations_.find(name);
  if (it != relations_.end()) return it->second;
  const std::size_t n = s_.domain.size();
  Matrix m(n, std::vector<bool>(n, false));
  auto rel = s_.relations.find(name);
  if (rel != s_.relations.end())
    for (const auto& [a, b] : rel->second) {
      auto ia = index_.find(a), ib = index_.find(b);
      if (ia != index_.end() && ib != index_.end()) m[ia->second][ib->second] = true;
    }
  return relations_.emplace(name, std::move(m)).first->second;
}

const Matrix& Evaluator::pairs(const PathExpr& p) {
  auto it = paths_.find(p.identity());
  if (it != paths_.end()) return it->second.second;
  const std::size_t n = s_.domain.size();
  Matrix m(n, std::vector<bool>(n, false));
  using K = PathExpr::Kind;
  switch (p.kind()) {
    case K::Atom: {
      const Matrix& r = relation(p.relation());
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m[a][b] = p.inverted() ? r[b][a] : r[a][b];
      break;
    }
    case K::Sequence: {
      const Matrix& l = pairs(p.left());
      const Matrix& r = pairs(p.right());
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
          if (l[a][c])
            for (std::size_t b = 0; b < n; ++b)
              if (r[c][b]) m[a][b] = true;
      break;
    }
    case K::ZeroOrOne: {
      m = pairs(p.left());
      for (std::size_t a = 0; a < n; ++a) m[a][a] = true;
      break;
    }
    case K::Alternative: {
      const Matrix& l = pairs(p.left());
      const Matrix& r = pairs(p.right());
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m[a][b] = l[a][b] || r[a][b];
      break;
    }
    case K::Star: {
      const Matrix& step = pairs(p.left());
      // Reachability from each source by a worklist.
      for (std::size_t a = 0; a < n; ++a) {
        std::vector<std::size_t> work{a};
        m[a][a] = true;
        while (!work.empty()) {
          std::size_t c = work.back();
          work.pop_back();
          for (std::size_t b = 0; b < n; ++b)
            if (step[c][b] && !m[a][b]) {
              m[a][b] = true;
              work.push_back(b);
            }
        }
      }
      break;
    }
  }
  return paths_.emplace(p.identity(), std::make_pair(p, std::move(m))).first->second.second;
}

bool Evaluator::order_holds(std::size_t y, std::size_t z, scl::OrderOp op) const {
  auto c = s_.compare(s_.domain[y], s_.domain[z]);
  if (!c) return false;
  return *c == rdf::Comparison::Less || (op == scl::OrderOp::LessEq && *c == rdf::Comparison::Equal);
}

const std::vector<bool>& Evaluator::extension(const Formula& g) {
  auto it = formulas_.find(g.identity());
  if (it != formulas_.end()) return it->second.second;
  const std::size_t n = s_.domain.size();
  std::vector<bool> ext(n, false);
  using K = Formula::Kind;
  switch (g.kind()) {
    case K::Top: ext.assign(n, true); break;
    case K::EqConst: {
      auto i = index_.find(g.constant());
      if (i != index_.end()) ext[i->second] = true;
      break;
    }
    case K::Filter: {
      const FilterName& f = g.filter();
      for (std::size_t x = 0; x < n; ++x) {
        if (s_.canonical_filters) {
          ext[x] = scl::filter_holds(f, s_.domain[x]);
        } else if (f.via_order) {
          auto c = s_.compare(s_.domain[x], f.bound);
          if (!c) continue;
          switch (f.kind) {
            case scl::FilterKind::MinExclusive: ext[x] = *c == rdf::Comparison::Greater; break;
            case scl::FilterKind::MinInclusive: ext[x] = *c != rdf::Comparison::Less; break;
            case scl::FilterKind::MaxExclusive: ext[x] = *c == rdf::Comparison::Less; break;
            default: ext[x] = *c != rdf::Comparison::Greater; break;
          }
        } else {
          auto e = s_.filter_ext.find(f);
          ext[x] = e != s_.filter_ext.end() && e->second.count(s_.domain[x]);
        }
      }
      break;
    }
    case K::HasShape:
      for (std::size_t x = 0; x < n; ++x) ext[x] = s_.has_shape.count({s_.domain[x], g.shape()}) > 0;
      break;
    case K::Not: {
      const auto& in = extension(g.operand());
      for (std::size_t x = 0; x < n; ++x) ext[x] = !in[x];
      break;
    }
    case K::And: {
      const auto& l = extension(g.left());
      const auto& r = extension(g.right());
      for (std::size_t x = 0; x < n; ++x) ext[x] = l[x] && r[x];
      break;
    }
    case K::Count: {
      const Matrix& p = pairs(g.path());
      const auto& body = extension(g.body());
      for (std::size_t x = 0; x < n; ++x) {
        std::uint64_t k = 0;
        for (std::size_t y = 0; y < n; ++y) k += p[x][y] && body[y];
        ext[x] = k >= g.count();
      }
      break;
    }
    case K::Disjoint:
    case K::Equals: {
      const Matrix& p = pairs(g.path());
      const Matrix& r = relation(g.relation());
      const bool equals = g.kind() == K::Equals;
      for (std::size_t x = 0; x < n; ++x) {
        bool ok = true;
        for (std::size_t y = 0; y < n && ok; ++y) ok = equals ? p[x][y] == r[x][y] : !(p[x][y] && r[x][y]);
        ext[x] = ok;
      }
      break;
    }
    case K::Order: {
      const Matrix& p = pairs(g.path());
      const Matrix& r = relation(g.relation());
      for (std::size_t x = 0; x < n; ++x) {
        bool ok = true;
        for (std::size_t y = 0; y < n && ok; ++y) {
          if (!p[x][y]) continue;
          for (std::size_t z = 0; z < n && ok; ++z)
            if (r[x][z]) ok = g.inverted() ? order_holds(z, y, g.op()) : order_holds(y, z, g.op());
        }
        ext[x] = ok;
      }
      break;
    }
  }
  return formulas_.emplace(g.identity(), std::make_pair(g, std::move(ext))).first->second.second;
}

bool Evaluator::holds(const Formula& g, const Term& element) { return extension(g)[index(element)]; }

bool Evaluator::holds(const Sentence& s) {
  using K = Sentence::Kind;
  const std::size_t n = s_.domain.size();
  switch (s.kind()) {
    case K::Top: return true;
    case K::And: return holds(s.left()) && holds(s.right());
    case K::AtConst: return holds(s.body(), s.constant());
    case K::ForClass: {
      const Matrix& type = relation(Term::iri(rdf::rdf_iri("type")));
      auto c = index_.find(s.constant());
      if (c == index_.end()) return true;
      const auto& ext = extension(s.body());
      for (std::size_t x = 0; x < n; ++x)
        if (type[x][c->second] && !ext[x]) return false;
      return true;
    }
    case K::ForSubjects: {
      const Matrix& r = relation(s.constant());
      const auto& ext = extension(s.body());
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (r[x][y] && !ext[s.inverted() ? y : x]) return false;
      return true;
    }
    case K::ShapeDef: {
      const auto& ext = extension(s.body());
      for (std::size_t x = 0; x < n; ++x)
        if (ext[x] != (s_.has_shape.count({s_.domain[x], s.shape()}) > 0)) return false;
      return true;
    }
    case K::AtMost: {
      const auto& ext = extension(s.body());
      std::uint64_t k = 0;
      for (std::size_t x = 0; x < n; ++x) k += ext[x];
      return k <= s.bound();
    }
  }
  return false;
}

bool evaluate(const FiniteStructure& structure, const Sentence& sentence) {
  Evaluator ev(structure);
  return ev.holds(sentence);
}

bool evaluate(const FiniteStructure& structure, const Formula& formula, const Term& element) {
  Evaluator ev(structure);
  return ev.holds(formula, element);
}

}  // namespace shl::engine
