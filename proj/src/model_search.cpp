#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "grounder.hpp"

namespace shl::engine {

std::string SatVerdict::outcome_name() const {
  switch (outcome) {
    case Outcome::Sat: return "Sat";
    case Outcome::UnsatUpTo: return "UnsatUpTo";
    case Outcome::Aborted: return "Aborted";
  }
  return "Aborted";
}

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SHACL_LOGIC_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using detail::Grounder;
using detail::Universe;
using sat::Lit;
using Clock = std::chrono::steady_clock;

struct Problem {
  Sentence require = Sentence::top();
  std::vector<Sentence> violate;
  Sentence definitions = Sentence::top();
  std::map<ShapeName, Formula> bodies;
  std::set<Term> constants;
  std::set<Term> relations;
  std::set<FilterName> filters;
  bool orders = false;
};

Problem make_problem(const Sentence& require, const std::vector<Sentence>& violate) {
  Problem p;
  p.require = require;
  p.violate = violate;
  std::vector<Sentence> all{require};
  all.insert(all.end(), violate.begin(), violate.end());
  std::vector<Sentence> defs;
  for (const auto& s : all) {
    for (const auto& c : scl::conjuncts(s))
      if (c.kind() == Sentence::Kind::ShapeDef && p.bodies.emplace(c.shape(), c.body()).second) defs.push_back(c);
    for (const auto& c : scl::node_constants(s)) p.constants.insert(c);
    for (const auto& r : scl::relations(s)) p.relations.insert(r);
    for (const auto& f : scl::filters(s)) p.filters.insert(f);
    p.orders = p.orders || scl::has_order_atoms(s);
  }
  p.definitions = Sentence::conjunction_of(defs);
  for (const auto& d : scl::check_well_formed(p.definitions))
    if (d.kind == scl::Defect::Kind::RecursiveDefinition) throw EngineError(d.message());
  return p;
}

enum class Answer { Sat, Unsat, Unknown };

struct Attempt {
  Answer answer = Answer::Unknown;
  std::optional<FiniteStructure> model;
};

Attempt attempt(const Problem& p, std::size_t size, const SearchOptions& o, Clock::time_point deadline,
                const std::atomic<bool>* stop) {
  Universe u;
  u.constants.assign(p.constants.begin(), p.constants.end());
  u.fresh = size - u.constants.size();
  u.canonical = o.canonical_filters;
  if (u.canonical && u.fresh > 0) {
    u.pool = detail::witness_pool(p.filters, p.constants, u.fresh, p.orders);
    if (u.pool.empty()) return {Answer::Unsat, {}};
  }
  sat::Solver solver;
  solver.set_deadline(deadline);
  solver.set_stop_flag(stop);
  Grounder g(solver, u, p.relations, p.bodies);
  g.require(g.sentence(p.require));
  if (!p.violate.empty()) {
    std::vector<Lit> fails;
    for (const auto& v : p.violate) fails.push_back(-g.sentence(v));
    solver.add_clause(fails);
  }
  g.finish(o.symmetry_breaking);

  auto r = solver.solve();
  if (r == sat::Solver::Result::Unknown) return {};
  if (r == sat::Solver::Result::Unsat) return {Answer::Unsat, {}};
  // Least model: each decision variable false whenever possible, in order.
  std::vector<Lit> fixed;
  for (int v : g.primaries()) {
    if (!solver.model_value(v)) {
      fixed.push_back(-v);
      continue;
    }
    fixed.push_back(-v);
    r = solver.solve(fixed);
    if (r == sat::Solver::Result::Unknown) return {};
    if (r == sat::Solver::Result::Unsat) {
      fixed.back() = v;
      if (solver.solve(fixed) != sat::Solver::Result::Sat) return {};
    }
  }
  FiniteStructure m = compute_shape_assignment(g.decode(), p.definitions);
  bool ok = evaluate(m, p.require);
  if (ok && !p.violate.empty()) {
    ok = false;
    for (const auto& v : p.violate) ok = ok || !evaluate(m, v);
  }
  if (!ok) throw EngineError("model search returned a structure the evaluator rejects");
  return {Answer::Sat, std::move(m)};
}

SatVerdict search(const Problem& p, const SearchOptions& o) {
  const auto deadline = Clock::now() + o.budget;
  const std::size_t first = std::max({o.min_domain, p.constants.size(), std::size_t{1}});
  SatVerdict verdict;
  if (first > o.max_domain) {
    verdict.reason = "domain bound " + std::to_string(o.max_domain) + " is below the " +
                     std::to_string(p.constants.size()) + " constants of the sentence";
    return verdict;
  }
  std::vector<std::size_t> sizes;
  for (std::size_t n = first; n <= o.max_domain; ++n) sizes.push_back(n);
  std::vector<Attempt> results(sizes.size());
  std::vector<std::atomic<bool>> stops(sizes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;

  auto work = [&] {
    while (true) {
      const std::size_t i = next++;
      if (i >= sizes.size()) return;
      if (stops[i]) continue;
      try {
        results[i] = attempt(p, sizes[i], o, deadline, &stops[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_lock);
        if (!failure) failure = std::current_exception();
        for (auto& s : stops) s = true;
        return;
      }
      if (results[i].answer == Answer::Sat)
        for (std::size_t j = i + 1; j < sizes.size(); ++j) stops[j] = true;
    }
  };
  const unsigned workers = std::min<unsigned>(worker_count(o.threads), static_cast<unsigned>(sizes.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (results[i].answer == Answer::Unsat) continue;
    if (results[i].answer == Answer::Sat) {
      verdict.outcome = SatVerdict::Outcome::Sat;
      verdict.model = std::move(results[i].model);
      verdict.bound = sizes[i];
      return verdict;
    }
    verdict.reason = "budget exhausted at domain size " + std::to_string(sizes[i]);
    verdict.bound = sizes[i];
    return verdict;
  }
  verdict.outcome = SatVerdict::Outcome::UnsatUpTo;
  verdict.bound = o.max_domain;
  return verdict;
}

Formula identify(const Formula& g, const std::map<Term, Term>& m) {
  using K = Formula::Kind;
  switch (g.kind()) {
    case K::EqConst: {
      auto it = m.find(g.constant());
      return it == m.end() ? g : Formula::eq(it->second);
    }
    case K::Not: return Formula::negation(identify(g.operand(), m));
    case K::And: return Formula::conjunction(identify(g.left(), m), identify(g.right(), m));
    case K::Count: return Formula::count(g.count(), g.path(), identify(g.body(), m));
    default: return g;
  }
}

Sentence identify(const Sentence& s, const std::map<Term, Term>& m) {
  std::vector<Sentence> parts;
  for (const auto& c : scl::conjuncts(s)) {
    Sentence d = scl::map_formulas(c, [&](const Formula& g) { return identify(g, m); });
    auto it = m.find(c.kind() == Sentence::Kind::AtConst || c.kind() == Sentence::Kind::ForClass ? c.constant()
                                                                                                  : Term{});
    if (it != m.end())
      d = c.kind() == Sentence::Kind::AtConst ? Sentence::at(it->second, d.body())
                                              : Sentence::for_class(it->second, d.body());
    parts.push_back(d);
  }
  return Sentence::conjunction_of(parts);
}

// Advances a restricted growth string; false after the last one.
bool next_partition(std::vector<std::size_t>& block) {
  for (std::size_t i = block.size(); i-- > 1;) {
    std::size_t top = 0;
    for (std::size_t j = 0; j < i; ++j) top = std::max(top, block[j] + 1);
    if (block[i] < top) {
      ++block[i];
      std::fill(block.begin() + static_cast<std::ptrdiff_t>(i) + 1, block.end(), 0);
      return true;
    }
  }
  return false;
}

// Without unique names every partition of the constants is a separate
// problem over its representatives. Partitions are visited in the order of
// their restricted growth strings; the smallest model wins, ties by order.
SatVerdict search_identified(const Sentence& require, const std::vector<Sentence>& violate, const SearchOptions& o) {
  if (o.canonical_filters) throw EngineError("constants can only be identified under uninterpreted filters");
  std::set<Term> constants, bounds;
  std::vector<Sentence> all{require};
  all.insert(all.end(), violate.begin(), violate.end());
  for (const auto& s : all) {
    for (const auto& c : scl::node_constants(s)) constants.insert(c);
    for (const auto& f : scl::filters(s))
      if (f.via_order) bounds.insert(f.bound);
  }
  std::vector<Term> free;
  for (const auto& c : constants)
    if (!bounds.count(c)) free.push_back(c);
  if (free.size() > 8) throw EngineError("too many constants to identify (" + std::to_string(free.size()) + ")");

  std::optional<SatVerdict> best, aborted;
  std::vector<std::size_t> block(free.size(), 0);
  while (true) {
    std::map<Term, Term> m;
    std::vector<Term> reps;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (block[i] == reps.size()) reps.push_back(free[i]);
      else m.emplace(free[i], reps[block[i]]);
    }
    if (constants.size() - m.size() <= o.max_domain) {
      std::vector<Sentence> v;
      for (const auto& s : violate) v.push_back(identify(s, m));
      SatVerdict r = search(make_problem(identify(require, m), v), o);
      if (r.outcome == SatVerdict::Outcome::Sat && (!best || r.bound < best->bound)) {
        for (const auto& [from, to] : m)
          r.reason += (r.reason.empty() ? "identified " : ", ") + rdf::to_string(from) + " = " + rdf::to_string(to);
        best = std::move(r);
      } else if (r.outcome == SatVerdict::Outcome::Aborted && (!aborted || r.bound < aborted->bound)) {
        aborted = std::move(r);
      }
    }
    if (!next_partition(block)) break;
  }
  if (aborted && (!best || aborted->bound <= best->bound)) return *aborted;
  if (best) return *best;
  SatVerdict v;
  v.outcome = SatVerdict::Outcome::UnsatUpTo;
  v.bound = o.max_domain;
  return v;
}

SatVerdict run(const Sentence& require, const std::vector<Sentence>& violate, const SearchOptions& o) {
  if (!o.unique_names) return search_identified(require, violate, o);
  return search(make_problem(require, violate), o);
}

}  // namespace

SatVerdict bounded_sat(const Sentence& sentence, const SearchOptions& options) {
  return run(sentence, {}, options);
}

SatVerdict find_violation(const Sentence& require, const std::vector<Sentence>& violate,
                          const SearchOptions& options) {
  if (violate.empty()) {
    SatVerdict v;
    v.outcome = SatVerdict::Outcome::UnsatUpTo;
    v.bound = options.max_domain;
    return v;
  }
  return run(require, violate, options);
}

}  // namespace shl::engine
