#include "ramsey/cdcl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ramsey {

namespace {

/// Luby sequence scaled so that luby(y, i) for y = 2 is 1 1 2 1 1 2 4 ...
double luby(double y, std::uint64_t x) {
  std::uint64_t size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

constexpr double kVarDecay = 0.95;
constexpr float kClauseDecay = 0.999F;
constexpr std::uint64_t kRestartBase = 100;

} // namespace

CdclSolver::CdclSolver(int vars, std::uint64_t seed) {
  for (int i = 0; i < vars; ++i)
    new_var();
  set_seed(seed);
}

void CdclSolver::set_seed(std::uint64_t seed) {
  rng_ = seed * 0x9E3779B97F4A7C15ULL + 1;
  randomize_ = seed != 0;
  if (!randomize_)
    return;
  for (std::size_t v = 0; v < activity_.size(); ++v) {
    activity_[v] = static_cast<double>(next_random() % 1000) * 1e-5;
    phase_[v] = next_random() & 1U;
  }
  std::make_heap(heap_.begin(), heap_.end(),
                 [&](int a, int b) { return activity_[a] < activity_[b]; });
  for (std::size_t i = 0; i < heap_.size(); ++i)
    heap_index_[heap_[i]] = static_cast<int>(i);
}

std::uint64_t CdclSolver::next_random() {
  rng_ ^= rng_ << 13;
  rng_ ^= rng_ >> 7;
  rng_ ^= rng_ << 17;
  return rng_;
}

int CdclSolver::new_var() {
  const int v = vars();
  assigns_.push_back(0);
  level_.push_back(0);
  reason_.push_back(kNoReason);
  phase_.push_back(1);
  seen_.push_back(0);
  activity_.push_back(0.0);
  heap_index_.push_back(-1);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_insert(v);
  return v + 1;
}

bool CdclSolver::add_clause(std::span<const int> dimacs) {
  if (!ok_)
    return false;
  std::vector<Lit> lits;
  lits.reserve(dimacs.size());
  for (int d : dimacs)
    lits.push_back(make_lit(d));
  std::sort(lits.begin(), lits.end());
  std::vector<Lit> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    const Lit l = lits[i];
    if (i > 0 && l == lits[i - 1])
      continue;
    if (i > 0 && l == (lits[i - 1] ^ 1U))
      return true; // tautology
    if (value(l) == 1)
      return true;
    if (value(l) == -1)
      continue;
    kept.push_back(l);
  }
  if (kept.empty())
    return ok_ = false;
  if (kept.size() == 1) {
    enqueue(kept[0], kNoReason);
    return ok_ = propagate() == kNoReason;
  }
  const CRef c = alloc(kept, false);
  originals_.push_back(c);
  attach(c);
  return true;
}

CdclSolver::CRef CdclSolver::alloc(const std::vector<Lit> &lits, bool learnt) {
  const CRef c = static_cast<CRef>(arena_.size());
  arena_.push_back(static_cast<Lit>(lits.size()));
  arena_.push_back(learnt ? 1U : 0U);
  arena_.push_back(std::bit_cast<Lit>(0.0F));
  arena_.insert(arena_.end(), lits.begin(), lits.end());
  return c;
}

void CdclSolver::attach(CRef c) {
  const Lit *lits = clause_lits(c);
  watches_[lits[0]].push_back({c, lits[1]});
  watches_[lits[1]].push_back({c, lits[0]});
}

void CdclSolver::enqueue(Lit l, CRef reason) {
  const int v = var_of(l);
  assigns_[v] = (l & 1U) ? -1 : 1;
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(l);
}

CdclSolver::CRef CdclSolver::propagate() {
  CRef conflict = kNoReason;
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    const Lit false_lit = p ^ 1U;
    std::vector<Watcher> &ws = watches_[false_lit];
    std::size_t i = 0, j = 0;
    const std::size_t n = ws.size();
    while (i < n) {
      const Watcher w = ws[i];
      if (value(w.blocker) == 1) {
        ws[j++] = ws[i++];
        continue;
      }
      Lit *c = clause_lits(w.cref);
      if (c[0] == false_lit)
        std::swap(c[0], c[1]);
      ++i;
      const Lit first = c[0];
      if (first != w.blocker && value(first) == 1) {
        ws[j++] = {w.cref, first};
        continue;
      }
      const std::uint32_t size = clause_size(w.cref);
      bool moved = false;
      for (std::uint32_t k = 2; k < size; ++k) {
        if (value(c[k]) != -1) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back({w.cref, first});
          moved = true;
          break;
        }
      }
      if (moved)
        continue;
      ws[j++] = {w.cref, first};
      if (value(first) == -1) {
        conflict = w.cref;
        qhead_ = trail_.size();
        while (i < n)
          ws[j++] = ws[i++];
      } else {
        enqueue(first, w.cref);
      }
    }
    ws.resize(j);
    if (conflict != kNoReason)
      return conflict;
  }
  return kNoReason;
}

void CdclSolver::analyze(CRef conflict, std::vector<Lit> &learnt,
                         int &backtrack) {
  learnt.clear();
  learnt.push_back(0);
  int path = 0;
  Lit p = 0;
  bool have_p = false;
  std::size_t index = trail_.size();
  do {
    if (clause_learnt(conflict))
      bump_clause(conflict);
    const Lit *c = clause_lits(conflict);
    const std::uint32_t size = clause_size(conflict);
    for (std::uint32_t k = have_p ? 1 : 0; k < size; ++k) {
      const Lit q = c[k];
      const int v = var_of(q);
      if (seen_[v] || level_[v] == 0)
        continue;
      bump_var(v);
      seen_[v] = 1;
      if (level_[v] >= decision_level())
        ++path;
      else
        learnt.push_back(q);
    }
    while (!seen_[var_of(trail_[--index])]) {
    }
    p = trail_[index];
    have_p = true;
    conflict = reason_[var_of(p)];
    seen_[var_of(p)] = 0;
    --path;
  } while (path > 0);
  learnt[0] = p ^ 1U;

  // Drop literals implied by the rest of the clause.
  std::vector<Lit> all(learnt.begin(), learnt.end());
  std::size_t keep = 1;
  for (std::size_t k = 1; k < learnt.size(); ++k) {
    const CRef r = reason_[var_of(learnt[k])];
    bool redundant = r != kNoReason;
    if (redundant) {
      const Lit *c = clause_lits(r);
      for (std::uint32_t m = 1; m < clause_size(r); ++m) {
        const int v = var_of(c[m]);
        if (!seen_[v] && level_[v] > 0) {
          redundant = false;
          break;
        }
      }
    }
    if (!redundant)
      learnt[keep++] = learnt[k];
  }
  learnt.resize(keep);
  for (Lit l : all)
    seen_[var_of(l)] = 0;

  backtrack = 0;
  if (learnt.size() > 1) {
    std::size_t best = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k)
      if (level_[var_of(learnt[k])] > level_[var_of(learnt[best])])
        best = k;
    std::swap(learnt[1], learnt[best]);
    backtrack = level_[var_of(learnt[1])];
  }
}

void CdclSolver::cancel_until(int level) {
  if (decision_level() <= level)
    return;
  for (std::size_t k = trail_.size(); k > trail_lim_[level]; --k) {
    const Lit l = trail_[k - 1];
    const int v = var_of(l);
    assigns_[v] = 0;
    reason_[v] = kNoReason;
    phase_[v] = (l & 1U) ? 0 : 1;
    heap_insert(v);
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(static_cast<std::size_t>(level));
  qhead_ = trail_.size();
}

bool CdclSolver::locked(CRef c) {
  const Lit first = clause_lits(c)[0];
  return value(first) == 1 && reason_[var_of(first)] == c;
}

void CdclSolver::reduce_db() {
  std::vector<CRef> sorted = learnts_;
  std::sort(sorted.begin(), sorted.end(), [&](CRef a, CRef b) {
    const bool a_bin = clause_size(a) == 2, b_bin = clause_size(b) == 2;
    if (a_bin != b_bin)
      return !a_bin;
    return clause_activity(a) < clause_activity(b);
  });
  std::vector<CRef> keep;
  const std::size_t half = sorted.size() / 2;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const CRef c = sorted[k];
    if (k >= half || clause_size(c) == 2 || locked(c))
      keep.push_back(c);
  }
  rebuild(keep);
}

void CdclSolver::rebuild(const std::vector<CRef> &keep_learnts) {
  std::vector<Lit> fresh;
  fresh.reserve(arena_.size());
  std::vector<CRef> forward(arena_.size(), kNoReason);
  const auto move = [&](CRef c) {
    const CRef to = static_cast<CRef>(fresh.size());
    forward[c] = to;
    fresh.insert(fresh.end(), arena_.begin() + c,
                 arena_.begin() + c + kHeader + clause_size(c));
    return to;
  };
  for (CRef &c : originals_)
    c = move(c);
  learnts_.clear();
  for (CRef c : keep_learnts)
    learnts_.push_back(move(c));
  for (CRef &r : reason_)
    if (r != kNoReason)
      r = forward[r];
  arena_.swap(fresh);
  for (auto &ws : watches_)
    ws.clear();
  for (CRef c : originals_)
    attach(c);
  for (CRef c : learnts_)
    attach(c);
}

void CdclSolver::bump_var(int v) {
  if ((activity_[v] += var_inc_) > 1e100) {
    for (double &a : activity_)
      a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_index_[v] >= 0)
    heap_up(static_cast<std::size_t>(heap_index_[v]));
}

void CdclSolver::bump_clause(CRef c) {
  set_clause_activity(c, clause_activity(c) + cla_inc_);
  if (clause_activity(c) > 1e20F) {
    for (CRef l : learnts_)
      set_clause_activity(l, clause_activity(l) * 1e-20F);
    cla_inc_ *= 1e-20F;
  }
}

void CdclSolver::heap_insert(int v) {
  if (heap_index_[v] >= 0)
    return;
  heap_index_[v] = static_cast<int>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_.size() - 1);
}

int CdclSolver::heap_pop() {
  const int top = heap_[0];
  heap_[0] = heap_.back();
  heap_index_[heap_[0]] = 0;
  heap_.pop_back();
  heap_index_[top] = -1;
  if (!heap_.empty())
    heap_down(0);
  return top;
}

void CdclSolver::heap_up(std::size_t i) {
  const int v = heap_[i];
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!heap_less(v, heap_[parent]))
      break;
    heap_[i] = heap_[parent];
    heap_index_[heap_[i]] = static_cast<int>(i);
    i = parent;
  }
  heap_[i] = v;
  heap_index_[v] = static_cast<int>(i);
}

void CdclSolver::heap_down(std::size_t i) {
  const int v = heap_[i];
  for (;;) {
    std::size_t child = 2 * i + 1;
    if (child >= heap_.size())
      break;
    if (child + 1 < heap_.size() && heap_less(heap_[child + 1], heap_[child]))
      ++child;
    if (!heap_less(heap_[child], v))
      break;
    heap_[i] = heap_[child];
    heap_index_[heap_[i]] = static_cast<int>(i);
    i = child;
  }
  heap_[i] = v;
  heap_index_[v] = static_cast<int>(i);
}

CdclSolver::Result CdclSolver::solve(const SolveLimits &limits) {
  if (!ok_ || propagate() != kNoReason)
    return Result::Unsat;
  max_learnts_ = std::max(5000.0, static_cast<double>(originals_.size()) / 3);
  std::uint64_t restarts = 0;
  std::uint64_t pending = 0;
  std::vector<Lit> learnt;
  const auto finish = [&](Result r) {
    if (limits.counter)
      *limits.counter += pending;
    return r;
  };

  for (;;) {
    const std::uint64_t restart_at =
        static_cast<std::uint64_t>(luby(2, restarts) * kRestartBase);
    std::uint64_t local_conflicts = 0;
    for (;;) {
      const CRef conflict = propagate();
      if (conflict != kNoReason) {
        ++conflicts_;
        ++local_conflicts;
        if (decision_level() == 0)
          return finish(Result::Unsat);
        int backtrack = 0;
        analyze(conflict, learnt, backtrack);
        cancel_until(backtrack);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          const CRef c = alloc(learnt, true);
          learnts_.push_back(c);
          attach(c);
          bump_clause(c);
          enqueue(learnt[0], c);
        }
        var_inc_ /= kVarDecay;
        cla_inc_ /= kClauseDecay;
        continue;
      }
      if (local_conflicts >= restart_at) {
        cancel_until(0);
        break;
      }
      if (static_cast<double>(learnts_.size()) >=
          max_learnts_ + static_cast<double>(trail_.size())) {
        reduce_db();
        max_learnts_ *= 1.05;
      }

      int next = -1;
      if (randomize_ && !heap_.empty() && next_random() % 50 == 0) {
        const int v = heap_[next_random() % heap_.size()];
        if (assigns_[v] == 0)
          next = v;
      }
      while (next < 0 && !heap_.empty()) {
        const int v = heap_pop();
        if (assigns_[v] == 0)
          next = v;
      }
      if (next < 0) {
        model_.assign(assigns_.size(), false);
        for (std::size_t v = 0; v < assigns_.size(); ++v)
          model_[v] = assigns_[v] > 0;
        cancel_until(0);
        return finish(Result::Sat);
      }

      ++decisions_;
      if (++pending >= 256 || decisions_ >= limits.decisions) {
        std::uint64_t total = decisions_;
        if (limits.counter)
          total = (*limits.counter += pending);
        pending = 0;
        if (total >= limits.decisions || (limits.stop && *limits.stop)) {
          cancel_until(0);
          return Result::Unknown;
        }
      }
      trail_lim_.push_back(trail_.size());
      enqueue(2 * static_cast<Lit>(next) + (phase_[next] ? 0U : 1U),
              kNoReason);
    }
    ++restarts;
  }
}

} // namespace ramsey
