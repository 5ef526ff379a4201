// Propositional encoding of sentences over a fixed finite domain.

#ifndef SHL_GROUNDER_HPP
#define SHL_GROUNDER_HPP

#include <map>
#include <tuple>
#include <vector>

#include "sat_solver.hpp"
#include "shl/engine.hpp"

namespace shl::engine::detail {

using sat::Lit;

// Interchangeable candidate terms for fresh elements: same truth value on
// every filter of the sentence.
struct PoolClass {
  std::vector<Term> members;
};

std::vector<PoolClass> witness_pool(const std::set<FilterName>& filters, const std::set<Term>& constants,
                                    std::size_t per_class, bool singletons);

struct Universe {
  std::vector<Term> constants;
  std::size_t fresh = 0;
  bool canonical = true;
  std::vector<PoolClass> pool;

  std::size_t size() const { return constants.size() + fresh; }
};

class Grounder {
 public:
  Grounder(sat::Solver& solver, Universe universe, const std::set<Term>& relations,
           std::map<ShapeName, Formula> definitions);

  Lit yes() const { return true_; }
  Lit no() const { return -true_; }

  Lit sentence(const Sentence& s);
  Lit formula(const Formula& g, std::size_t x);
  void require(Lit l) { solver_.add_clause({l}); }

  // Adds the well-formedness clauses of orders and fresh-element choices.
  void finish(bool symmetry_breaking);

  // Decision variables in canonical order.
  std::vector<int> primaries() const;
  FiniteStructure decode() const;

 private:
  using Key = std::tuple<int, int, int, int>;  // kind, id, a, b
  enum : int { kSelect = 0, kRelation = 1, kFilter = 2, kBlock = 3, kLessEq = 4 };

  int var(const Key& key);
  Lit land(std::vector<Lit> lits);
  Lit lor(std::vector<Lit> lits);
  Lit iff(Lit a, Lit b);
  Lit at_least(std::uint64_t k, const std::vector<Lit>& lits);

  Lit relation(const Term& r, std::size_t a, std::size_t b);
  Lit path(const PathExpr& p, std::size_t a, std::size_t b);
  const std::vector<std::vector<Lit>>& star(const PathExpr& p);
  Lit filter(const FilterName& f, std::size_t x);
  Lit select(std::size_t x, std::size_t cls);
  Lit in_block(std::size_t x, int type);
  Lit less_eq(std::size_t a, std::size_t b);
  Lit less(std::size_t a, std::size_t b);
  Lit compare_canonical(std::size_t a, std::size_t b, bool strict);
  std::size_t element_of(const Term& constant) const;
  bool is_fresh(std::size_t x) const { return x >= u_.constants.size(); }
  void lex_leader(std::size_t i, Lit gate);

  sat::Solver& solver_;
  Universe u_;
  std::vector<Term> relations_;
  std::map<ShapeName, Formula> definitions_;
  std::map<FilterName, int> filter_ids_;
  Lit true_ = 0;
  bool orders_used_ = false;
  std::map<Key, int> vars_;
  std::map<std::vector<Lit>, Lit> ands_;
  std::map<std::pair<const void*, std::size_t>, std::pair<Formula, Lit>> formulas_;
  std::map<std::tuple<const void*, std::size_t, std::size_t>, std::pair<PathExpr, Lit>> paths_;
  std::map<const void*, std::pair<PathExpr, std::vector<std::vector<Lit>>>> stars_;
  std::set<ShapeName> expanding_;
};

}  // namespace shl::engine::detail

#endif
