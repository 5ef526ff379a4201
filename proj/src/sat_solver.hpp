// Small CDCL solver used by the bounded model search. Literals are
// DIMACS-style signed integers over variables numbered from 1.

#ifndef SHL_SAT_SOLVER_HPP
#define SHL_SAT_SOLVER_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace shl::sat {

using Lit = int;

class Solver {
 public:
  enum class Result { Sat, Unsat, Unknown };

  int new_var();
  int num_vars() const { return static_cast<int>(assign_.size()); }
  // Returns false once the clause set is known to be unsatisfiable.
  bool add_clause(std::vector<Lit> clause);

  void set_deadline(std::chrono::steady_clock::time_point deadline) { deadline_ = deadline; }
  void set_stop_flag(const std::atomic<bool>* stop) { stop_ = stop; }

  Result solve(const std::vector<Lit>& assumptions = {});
  // Model of the last Sat answer.
  bool model_value(int var) const { return model_[var - 1]; }
  std::uint64_t conflicts() const { return conflicts_; }

 private:
  struct Clause {
    std::vector<int> lits;  // internal encoding 2 * var + negated
  };

  static int encode(Lit l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }
  int value(int lit) const {
    int a = assign_[lit >> 1];
    return a < 0 ? -1 : (a ^ (lit & 1));
  }
  int level() const { return static_cast<int>(trail_lim_.size()); }

  void enqueue(int lit, int reason);
  int propagate();
  void analyze(int conflict, std::vector<int>& learnt, int& back_level);
  void backtrack(int level);
  void bump(int var);
  int pick_branch();
  bool out_of_time();

  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> assign_;
  std::vector<int> levels_;
  std::vector<int> reasons_;
  std::vector<bool> phase_;
  std::vector<double> activity_;
  std::vector<char> seen_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  double increment_ = 1.0;
  bool ok_ = true;
  std::uint64_t conflicts_ = 0;
  std::uint64_t ticks_ = 0;
  std::vector<bool> model_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  const std::atomic<bool>* stop_ = nullptr;
};

}  // namespace shl::sat

#endif
