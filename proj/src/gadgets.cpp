// Sentences without finite models and the tiling reductions.

#include "shl/engine.hpp"

namespace shl::engine {

namespace {

using P = PathExpr;
using F = Formula;
using scl::OrderOp;

Term name(const std::string& local) { return Term::iri("urn:scl:gadget:" + local); }

// The origin and the labels are literals so that the order constructs can
// compare them (generalized RDF).
Term label(const std::string& text) { return Term::literal(text); }

const Term& is_a() {
  static const Term t = Term::iri(rdf::rdf_iri("type"));
  return t;
}

P atom(const std::string& r, bool inverted = false) { return P::atom(name(r), inverted); }

// isA(x, c)
F member(const Term& c) { return F::exists(P::atom(is_a()), F::eq(c)); }

F some(const P& p) { return F::exists(p, F::top()); }

F no(const P& p) { return F::negation(some(p)); }

// forall y, z. path(x, y) and r(x, z) -> y <= z, or z <= y when flipped.
F leq(const P& path, const std::string& r, bool flipped = false) {
  return F::order(path, name(r), OrderOp::LessEq, flipped);
}

F same(const P& path, const std::string& r) { return F::equals(path, name(r)); }

Sentence infinity(const Term& zero, const Term& c, const F& origin, const F& psi) {
  return Sentence::conjunction_of({Sentence::at(zero, F::conjunction(member(c), origin)), Sentence::for_class(c, psi)});
}

Term tile(const std::string& t) { return label("tile " + t); }

}  // namespace

std::optional<InfinityKind> infinity_kind(std::string_view n) {
  if (n == "C") return InfinityKind::C;
  if (n == "STD") return InfinityKind::STD;
  if (n == "O") return InfinityKind::O;
  if (n == "EOprime" || n == "EO'") return InfinityKind::EOprime;
  return std::nullopt;
}

std::optional<DominoVariant> domino_variant(std::string_view n) {
  if (n == "SO") return DominoVariant::SO;
  if (n == "SAC") return DominoVariant::SAC;
  if (n == "SEC") return DominoVariant::SEC;
  if (n == "SEOprime" || n == "SEO'") return DominoVariant::SEOprime;
  if (n == "SZAE") return DominoVariant::SZAE;
  return std::nullopt;
}

void TilingSystem::check() const {
  if (tiles.empty()) throw EngineError("tiling system without tiles");
  std::set<std::string> known(tiles.begin(), tiles.end());
  if (known.size() != tiles.size()) throw EngineError("tiling system repeats a tile");
  for (const auto* rel : {&horizontal, &vertical})
    for (const auto& [a, b] : *rel)
      if (!known.count(a) || !known.count(b)) throw EngineError("tiling pair mentions unknown tile " + (known.count(a) ? b : a));
}

Sentence gadget_infinity(InfinityKind kind) {
  const Term zero = Term::literal("0", rdf::xsd_iri("integer")), c = label("c");
  switch (kind) {
    case InfinityKind::C: {
      const F one = F::conjunction(F::count(1, atom("R"), member(c)),
                                   F::negation(F::count(2, atom("R"), member(c))));
      const F psi = F::conjunction(one, F::negation(F::count(2, atom("R", true), F::top())));
      return infinity(zero, c, no(atom("R", true)), psi);
    }
    case InfinityKind::STD: {
      const P pi = P::sequence(atom("R", true), P::star(atom("R", true)));
      const F psi = F::disjoint(pi, name("R"));
      return infinity(zero, c, F::top(), F::conjunction(psi, F::exists(atom("R"), member(c))));
    }
    case InfinityKind::O:
    case InfinityKind::EOprime: {
      std::vector<F> psi{F::exists(atom("F"), member(c)), leq(atom("F"), "F"), leq(atom("G"), "G")};
      if (kind == InfinityKind::O) {
        psi.push_back(leq(atom("F", true), "G"));
        psi.push_back(leq(atom("F", true), "G", true));
      } else {
        psi.push_back(same(atom("F", true), "G"));
      }
      return infinity(zero, c, no(atom("F", true)), F::conjunction_of(psi));
    }
  }
  throw EngineError("unknown infinity gadget");
}

Sentence gadget_domino(DominoVariant variant, const TilingSystem& system) {
  system.check();
  const P h = atom("H"), v = atom("V"), d = atom("D");
  const P hv = P::sequence(h, v), vh = P::sequence(v, h);
  const P diagonal = P::alternative(hv, vh);

  F gamma = F::top();
  switch (variant) {
    case DominoVariant::SO:
      gamma = F::conjunction_of({some(d), leq(hv, "D"), leq(hv, "D", true), leq(vh, "D"), leq(vh, "D", true)});
      break;
    case DominoVariant::SAC:
      gamma = F::negation(F::count(2, diagonal, F::top()));
      break;
    case DominoVariant::SEC:
      gamma = F::conjunction_of({F::negation(F::count(2, d, F::top())), same(hv, "D"), same(vh, "D")});
      break;
    case DominoVariant::SEOprime:
      gamma = F::conjunction_of({leq(d, "D"), same(hv, "D"), same(vh, "D")});
      break;
    case DominoVariant::SZAE: {
      const P d0 = atom("D0"), d1 = atom("D1");
      std::vector<F> parts;
      parts.push_back(same(P::alternative(d0, d1), "D"));
      parts.push_back(F::disjunction(no(d0), no(d1)));
      parts.push_back(F::forall(d0, some(d1)));
      parts.push_back(F::forall(d1, some(d0)));
      for (const auto& [di, ci] : {std::pair{"D0", "C0"}, std::pair{"D1", "C1"}}) {
        parts.push_back(same(P::zero_or_one(P::alternative(atom(di), atom(di, true))), ci));
        parts.push_back(same(P::sequence(atom(ci), atom(ci)), ci));
      }
      parts.push_back(same(diagonal, "D"));
      gamma = F::conjunction_of(parts);
      break;
    }
  }
  const F grid = F::conjunction_of({some(h), some(v), gamma});

  std::vector<F> origin;
  for (const auto& t : system.tiles) origin.push_back(member(tile(t)));
  std::vector<Sentence> parts{Sentence::at(Term::literal("0", rdf::xsd_iri("integer")), F::disjunction_of(origin))};
  for (const auto& t : system.tiles) {
    std::vector<F> psi;
    for (const auto& other : system.tiles)
      if (other != t) psi.push_back(F::negation(member(tile(other))));
    for (const auto& [rel, path] : {std::pair{&system.horizontal, h}, std::pair{&system.vertical, v}}) {
      std::vector<F> allowed;
      for (const auto& [a, b] : *rel)
        if (a == t) allowed.push_back(member(tile(b)));
      psi.push_back(F::forall(path, F::disjunction_of(allowed)));
    }
    psi.push_back(grid);
    parts.push_back(Sentence::for_class(tile(t), F::conjunction_of(psi)));
  }
  return Sentence::conjunction_of(parts);
}

}  // namespace shl::engine
