#pragma once

// Conflict-driven clause learning: two watched literals with blockers,
// first-UIP learning with local minimization, VSIDS, phase saving, Luby
// restarts and activity-based learnt clause deletion.

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstdint>
#include <span>
#include <vector>

namespace ramsey {

struct SolveLimits {
  /// Decisions across every solver sharing `counter`.
  std::uint64_t decisions = UINT64_MAX;
  std::atomic<std::uint64_t> *counter = nullptr;
  const std::atomic<bool> *stop = nullptr;
};

class CdclSolver {
public:
  enum class Result { Sat, Unsat, Unknown };

  /// Variables are 1..vars. A nonzero seed perturbs initial activities and
  /// makes a small share of decisions random.
  explicit CdclSolver(int vars = 0, std::uint64_t seed = 0);

  int new_var();
  int vars() const { return static_cast<int>(assigns_.size()); }
  void set_seed(std::uint64_t seed);

  /// DIMACS literals (+v / -v). Only before solve(). False once the formula
  /// is known unsatisfiable.
  bool add_clause(std::span<const int> lits);

  Result solve(const SolveLimits &limits = {});

  /// Model value after Sat.
  bool model_value(int var) const { return model_[var - 1]; }

  std::uint64_t decisions() const { return decisions_; }
  std::uint64_t conflicts() const { return conflicts_; }

private:
  using Lit = std::uint32_t;
  using CRef = std::uint32_t;
  static constexpr CRef kNoReason = UINT32_MAX;
  static constexpr std::size_t kHeader = 3;

  struct Watcher {
    CRef cref;
    Lit blocker;
  };

  static Lit make_lit(int dimacs) {
    return 2 * static_cast<Lit>(std::abs(dimacs) - 1) + (dimacs < 0 ? 1 : 0);
  }
  static int var_of(Lit l) { return static_cast<int>(l >> 1); }

  /// 1 true, -1 false, 0 unassigned.
  int value(Lit l) const {
    const int v = assigns_[l >> 1];
    return (l & 1U) ? -v : v;
  }

  std::uint32_t clause_size(CRef c) const { return arena_[c]; }
  bool clause_learnt(CRef c) const { return arena_[c + 1] & 1U; }
  float clause_activity(CRef c) const {
    return std::bit_cast<float>(arena_[c + 2]);
  }
  void set_clause_activity(CRef c, float a) {
    arena_[c + 2] = std::bit_cast<Lit>(a);
  }
  Lit *clause_lits(CRef c) { return arena_.data() + c + kHeader; }

  CRef alloc(const std::vector<Lit> &lits, bool learnt);
  void attach(CRef c);
  void enqueue(Lit l, CRef reason);
  CRef propagate();
  void analyze(CRef conflict, std::vector<Lit> &learnt, int &backtrack);
  void cancel_until(int level);
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  bool locked(CRef c);
  void reduce_db();
  void rebuild(const std::vector<CRef> &keep_learnts);

  void bump_var(int v);
  void bump_clause(CRef c);
  void heap_insert(int v);
  int heap_pop();
  void heap_up(std::size_t i);
  void heap_down(std::size_t i);
  bool heap_less(int a, int b) const { return activity_[a] > activity_[b]; }

  std::uint64_t next_random();

  std::vector<Lit> arena_;
  std::vector<CRef> originals_;
  std::vector<CRef> learnts_;
  std::vector<std::vector<Watcher>> watches_;

  std::vector<int> assigns_;
  std::vector<int> level_;
  std::vector<CRef> reason_;
  std::vector<std::uint8_t> phase_;
  std::vector<std::uint8_t> seen_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<double> activity_;
  double var_inc_ = 1.0;
  float cla_inc_ = 1.0F;
  std::vector<int> heap_;
  std::vector<int> heap_index_;

  std::vector<bool> model_;
  bool ok_ = true;
  std::uint64_t decisions_ = 0;
  std::uint64_t conflicts_ = 0;
  double max_learnts_ = 0;
  std::uint64_t rng_ = 0;
  bool randomize_ = false;
};

} // namespace ramsey
