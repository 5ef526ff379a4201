#include "sat_solver.hpp"

#include <algorithm>

namespace shl::sat {

namespace {

std::uint64_t luby(std::uint64_t i) {
  // i is 1-based.
  std::uint64_t k = 1;
  while (((std::uint64_t{1} << k) - 1) < i) ++k;
  while (true) {
    if (i == (std::uint64_t{1} << k) - 1) return std::uint64_t{1} << (k - 1);
    i -= (std::uint64_t{1} << (k - 1)) - 1;
    k = 1;
    while (((std::uint64_t{1} << k) - 1) < i) ++k;
  }
}

}  // namespace

int Solver::new_var() {
  assign_.push_back(-1);
  levels_.push_back(0);
  reasons_.push_back(-1);
  phase_.push_back(false);
  activity_.push_back(0.0);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  return num_vars();
}

bool Solver::add_clause(std::vector<Lit> input) {
  if (!ok_) return false;
  backtrack(0);
  std::vector<int> c;
  for (Lit l : input) c.push_back(encode(l));
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::vector<int> kept;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i + 1 < c.size() && (c[i] ^ 1) == c[i + 1]) return true;  // tautology
    int v = value(c[i]);
    if (v == 1) return true;
    if (v == 0) continue;
    kept.push_back(c[i]);
  }
  if (kept.empty()) return ok_ = false;
  if (kept.size() == 1) {
    enqueue(kept[0], -1);
    if (propagate() >= 0) ok_ = false;
    return ok_;
  }
  clauses_.push_back({kept});
  const int ci = static_cast<int>(clauses_.size()) - 1;
  watches_[kept[0]].push_back(ci);
  watches_[kept[1]].push_back(ci);
  return true;
}

void Solver::enqueue(int lit, int reason) {
  const int v = lit >> 1;
  assign_[v] = (lit & 1) ? 0 : 1;
  levels_[v] = level();
  reasons_[v] = reason;
  trail_.push_back(lit);
}

int Solver::propagate() {
  while (qhead_ < trail_.size()) {
    const int falsified = trail_[qhead_++] ^ 1;
    auto& ws = watches_[falsified];
    std::size_t i = 0, j = 0;
    while (i < ws.size()) {
      ++ticks_;
      const int ci = ws[i];
      auto& c = clauses_[ci].lits;
      if (c[0] == falsified) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        ws[j++] = ws[i++];
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back(ci);
          moved = true;
          break;
        }
      }
      ++i;
      if (moved) continue;
      ws[j++] = ci;
      if (value(c[0]) == 0) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return ci;
      }
      enqueue(c[0], ci);
    }
    ws.resize(j);
  }
  return -1;
}

void Solver::bump(int var) {
  activity_[var] += increment_;
  if (activity_[var] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    increment_ *= 1e-100;
  }
}

void Solver::analyze(int conflict, std::vector<int>& learnt, int& back_level) {
  learnt.assign(1, 0);
  int pending = 0;
  int p = -1;
  std::size_t idx = trail_.size();
  int ci = conflict;
  do {
    const auto& c = clauses_[ci].lits;
    for (std::size_t k = (p == -1 ? 0 : 1); k < c.size(); ++k) {
      const int q = c[k];
      const int v = q >> 1;
      if (seen_[v] || levels_[v] == 0) continue;
      seen_[v] = 1;
      bump(v);
      if (levels_[v] >= level()) ++pending;
      else learnt.push_back(q);
    }
    while (!seen_[trail_[idx - 1] >> 1]) --idx;
    p = trail_[--idx];
    ci = reasons_[p >> 1];
    seen_[p >> 1] = 0;
    --pending;
  } while (pending > 0);
  learnt[0] = p ^ 1;
  back_level = 0;
  std::size_t max_i = 1;
  for (std::size_t k = 1; k < learnt.size(); ++k) {
    seen_[learnt[k] >> 1] = 0;
    if (levels_[learnt[k] >> 1] > back_level) {
      back_level = levels_[learnt[k] >> 1];
      max_i = k;
    }
  }
  if (learnt.size() > 1) std::swap(learnt[1], learnt[max_i]);
}

void Solver::backtrack(int target) {
  if (level() <= target) return;
  for (std::size_t i = trail_.size(); i-- > static_cast<std::size_t>(trail_lim_[target]);) {
    const int v = trail_[i] >> 1;
    phase_[v] = assign_[v] == 1;
    assign_[v] = -1;
    reasons_[v] = -1;
  }
  trail_.resize(trail_lim_[target]);
  trail_lim_.resize(target);
  qhead_ = trail_.size();
}

int Solver::pick_branch() {
  int best = -1;
  for (int v = 0; v < num_vars(); ++v)
    if (assign_[v] < 0 && (best < 0 || activity_[v] > activity_[best])) best = v;
  if (best < 0) return -1;
  return 2 * best + (phase_[best] ? 0 : 1);
}

bool Solver::out_of_time() {
  if (stop_ && stop_->load(std::memory_order_relaxed)) return true;
  return deadline_ && std::chrono::steady_clock::now() > *deadline_;
}

Solver::Result Solver::solve(const std::vector<Lit>& assumptions) {
  if (!ok_) return Result::Unsat;
  backtrack(0);
  if (propagate() >= 0) {
    ok_ = false;
    return Result::Unsat;
  }
  std::vector<int> assumed;
  for (Lit l : assumptions) assumed.push_back(encode(l));

  std::uint64_t restart_index = 1;
  std::uint64_t restart_limit = 64 * luby(restart_index);
  std::uint64_t since_restart = 0;
  std::uint64_t last_check = ticks_;
  std::vector<int> learnt;
  while (true) {
    const int conflict = propagate();
    if (conflict >= 0) {
      ++conflicts_;
      ++since_restart;
      if (level() == 0) {
        ok_ = false;
        return Result::Unsat;
      }
      int back_level = 0;
      analyze(conflict, learnt, back_level);
      backtrack(back_level);
      if (learnt.size() == 1) {
        enqueue(learnt[0], -1);
      } else {
        clauses_.push_back({learnt});
        const int ci = static_cast<int>(clauses_.size()) - 1;
        watches_[learnt[0]].push_back(ci);
        watches_[learnt[1]].push_back(ci);
        enqueue(learnt[0], ci);
      }
      increment_ *= 1.0 / 0.95;
      if ((conflicts_ & 255) == 0 && out_of_time()) return Result::Unknown;
      continue;
    }
    if (ticks_ - last_check > (1u << 16)) {
      last_check = ticks_;
      if (out_of_time()) return Result::Unknown;
    }
    if (since_restart >= restart_limit) {
      since_restart = 0;
      restart_limit = 64 * luby(++restart_index);
      backtrack(0);
      continue;
    }
    int next = -1;
    while (level() < static_cast<int>(assumed.size())) {
      const int a = assumed[level()];
      const int v = value(a);
      if (v == 1) {
        trail_lim_.push_back(static_cast<int>(trail_.size()));
      } else if (v == 0) {
        backtrack(0);
        return Result::Unsat;
      } else {
        next = a;
        break;
      }
    }
    if (next < 0) {
      next = pick_branch();
      if (next < 0) {
        model_.assign(num_vars(), false);
        for (int v = 0; v < num_vars(); ++v) model_[v] = assign_[v] == 1;
        backtrack(0);
        return Result::Sat;
      }
    }
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(next, -1);
  }
}

}  // namespace shl::sat
