#include "ramsey/arrowing.hpp"

#include "ramsey/cdcl.hpp"
#include "ramsey/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>

namespace ramsey {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Arrows:
    return "arrows";
  case Verdict::Counterexample:
    return "counterexample";
  case Verdict::Indeterminate:
    return "indeterminate";
  }
  return "?";
}

std::string to_string(PropagationMode m) {
  switch (m) {
  case PropagationMode::Full:
    return "full";
  case PropagationMode::Partial:
    return "partial";
  case PropagationMode::PruneOnly:
    return "prune-only";
  }
  return "?";
}

std::string to_string(SearchEngine e) {
  switch (e) {
  case SearchEngine::Auto:
    return "auto";
  case SearchEngine::Dfs:
    return "dfs";
  case SearchEngine::Cdcl:
    return "cdcl";
  }
  return "?";
}

SearchEngine parse_engine(const std::string &name) {
  if (name == "auto")
    return SearchEngine::Auto;
  if (name == "dfs")
    return SearchEngine::Dfs;
  if (name == "cdcl")
    return SearchEngine::Cdcl;
  throw std::invalid_argument("unknown search engine: " + name);
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint8_t kRed = 0, kBlue = 1, kFree = 2;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

/// Copy constraints as clauses. Every clause asks for at least one of its
/// edges to take `want`: Blue for red copies, Red for blue copies.
/// Immutable once built; workers keep their own watch state.
struct ClauseDb {
  std::vector<std::uint16_t> edges;
  std::vector<std::uint32_t> start{0};
  std::vector<std::uint8_t> want;

  std::size_t size() const { return want.size(); }
  std::uint32_t length(std::size_t c) const { return start[c + 1] - start[c]; }
  const std::uint16_t *begin(std::size_t c) const {
    return edges.data() + start[c];
  }

  void add(const CopySet &copies, std::uint8_t wanted) {
    for (std::size_t i = 0; i < copies.size(); ++i) {
      auto span = copies.copy(i);
      edges.insert(edges.end(), span.begin(), span.end());
      start.push_back(static_cast<std::uint32_t>(edges.size()));
      want.push_back(wanted);
    }
  }
};

/// Everything shared read-only between workers.
struct Problem {
  Graph host;
  EdgeIndex index;
  const Target *red = nullptr;
  const Target *blue = nullptr;
  ClauseDb clauses;
  bool check_red = false;  // red side verified by containment
  bool check_blue = false; // blue side verified by containment
  bool symmetric = false;
  std::vector<int> branch_order;
};

enum class Outcome { Unsat, Sat, Budget, Stopped };

struct SharedCounters {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::uint64_t budget = 0;
};

/// One worker's private search state: assignment, trail, watches.
class Worker {
public:
  Worker(const Problem &p, SharedCounters &shared)
      : p_(p), shared_(shared),
        color_(static_cast<std::size_t>(p.index.size()), kFree),
        watches_(static_cast<std::size_t>(2 * p.index.size())),
        watch_(p.clauses.size() * 2, 0), red_(p.host.order()),
        blue_(p.host.order()) {
    trail_.reserve(static_cast<std::size_t>(p.index.size()));
  }

  /// Sets up watches and applies unit/empty clauses. False on conflict.
  bool init() {
    for (std::size_t c = 0; c < p_.clauses.size(); ++c) {
      const std::uint32_t len = p_.clauses.length(c);
      if (len == 0)
        return false;
      const std::uint8_t falsify = 1 - p_.clauses.want[c];
      const std::uint16_t *lits = p_.clauses.begin(c);
      if (len == 1) {
        if (!enqueue(lits[0], p_.clauses.want[c]))
          return false;
        continue;
      }
      watch_[2 * c] = 0;
      watch_[2 * c + 1] = 1;
      watches_[2 * lits[0] + falsify].push_back(static_cast<std::uint32_t>(c));
      watches_[2 * lits[1] + falsify].push_back(static_cast<std::uint32_t>(c));
    }
    return propagate();
  }

  /// Assigns `color` to `edge` as an external assumption and propagates.
  bool assume(int edge, std::uint8_t color) {
    if (color_[edge] != kFree)
      return color_[edge] == color;
    return enqueue(edge, color) && propagate();
  }

  /// Depth-first search below the current state. Backtracking never goes
  /// beneath the state at entry.
  Outcome solve() {
    const std::size_t base = trail_.size();
    struct Frame {
      int edge;
      std::size_t trail_pos;
      std::size_t order_pos;
      bool last;
    };
    std::vector<Frame> frames;
    std::size_t order_pos = 0;
    bool first_decision = true;

    for (;;) {
      while (order_pos < p_.branch_order.size() &&
             color_[p_.branch_order[order_pos]] != kFree)
        ++order_pos;
      if (order_pos == p_.branch_order.size())
        return Outcome::Sat;
      if (!count_node())
        return shared_.stop ? Outcome::Stopped : Outcome::Budget;

      const int e = p_.branch_order[order_pos];
      // Color-swap symmetry: with identical targets the first branch edge
      // can be fixed Red.
      const bool last = first_decision && p_.symmetric && base == 0;
      first_decision = false;
      frames.push_back({e, trail_.size(), order_pos, last});
      bool ok = enqueue(e, kRed) && propagate();
      while (!ok) {
        for (;;) {
          if (frames.empty()) {
            undo_to(base);
            return Outcome::Unsat;
          }
          Frame &f = frames.back();
          undo_to(f.trail_pos);
          if (f.last) {
            frames.pop_back();
            continue;
          }
          f.last = true;
          order_pos = f.order_pos;
          if (!count_node())
            return shared_.stop ? Outcome::Stopped : Outcome::Budget;
          break;
        }
        ok = enqueue(frames.back().edge, kBlue) && propagate();
      }
    }
  }

  std::vector<EdgeColor> colors() const {
    std::vector<EdgeColor> out(color_.size());
    for (std::size_t i = 0; i < color_.size(); ++i)
      out[i] = color_[i] == kRed    ? EdgeColor::Red
               : color_[i] == kBlue ? EdgeColor::Blue
                                    : EdgeColor::Unassigned;
    return out;
  }

  std::size_t trail_size() const { return trail_.size(); }
  std::uint64_t local_nodes() const { return local_nodes_; }

  /// Next free edges in branch order, for splitting work.
  std::vector<int> free_prefix(std::size_t count) const {
    std::vector<int> out;
    for (int e : p_.branch_order) {
      if (out.size() == count)
        break;
      if (color_[e] == kFree)
        out.push_back(e);
    }
    return out;
  }

  void flush_nodes() {
    shared_.nodes += pending_;
    pending_ = 0;
  }

private:
  bool count_node() {
    ++local_nodes_;
    if (++pending_ >= 1024) {
      const std::uint64_t total = shared_.nodes += pending_;
      pending_ = 0;
      if (total > shared_.budget || shared_.stop)
        return false;
    }
    return true;
  }

  bool enqueue(int edge, std::uint8_t color) {
    if (color_[edge] != kFree)
      return color_[edge] == color;
    color_[edge] = color;
    trail_.push_back(static_cast<std::uint16_t>(edge));
    const auto [u, v] = p_.index.edge(edge);
    if (color == kRed) {
      red_.add_edge(u, v);
      if (p_.check_red && contains_target(red_.build(), *p_.red))
        return false;
    } else {
      blue_.add_edge(u, v);
      if (p_.check_blue && contains_target(blue_.build(), *p_.blue))
        return false;
    }
    return true;
  }

  void undo_to(std::size_t pos) {
    while (trail_.size() > pos) {
      const int e = trail_.back();
      trail_.pop_back();
      const auto [u, v] = p_.index.edge(e);
      (color_[e] == kRed ? red_ : blue_).remove_edge(u, v);
      color_[e] = kFree;
    }
    head_ = std::min(head_, pos);
  }

  /// Two-watched-literal unit propagation over the trail.
  bool propagate() {
    while (head_ < trail_.size()) {
      const int e = trail_[head_++];
      auto &list = watches_[2 * static_cast<std::size_t>(e) + color_[e]];
      std::size_t keep = 0;
      bool conflict = false;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::uint32_t c = list[i];
        if (conflict) {
          list[keep++] = c;
          continue;
        }
        const std::uint16_t *lits = p_.clauses.begin(c);
        const std::uint32_t len = p_.clauses.length(c);
        const std::uint8_t want = p_.clauses.want[c];
        const std::uint8_t falsify = 1 - want;
        // Make slot 0 the watch that just went false.
        std::uint32_t &w0 = watch_[2 * c];
        std::uint32_t &w1 = watch_[2 * c + 1];
        if (lits[w0] != e)
          std::swap(w0, w1);
        const int other = lits[w1];
        if (color_[other] == want) {
          list[keep++] = c;
          continue;
        }
        bool moved = false;
        for (std::uint32_t k = 0; k < len; ++k) {
          if (k == w0 || k == w1)
            continue;
          if (color_[lits[k]] != falsify) {
            w0 = k;
            watches_[2 * static_cast<std::size_t>(lits[k]) + falsify]
                .push_back(c);
            moved = true;
            break;
          }
        }
        if (moved)
          continue;
        list[keep++] = c;
        if (color_[other] == kFree) {
          if (!enqueue(other, want))
            conflict = true;
        } else {
          conflict = true;
        }
      }
      list.resize(keep);
      if (conflict) {
        head_ = trail_.size();
        return false;
      }
    }
    return true;
  }

  const Problem &p_;
  SharedCounters &shared_;
  std::vector<std::uint8_t> color_;
  std::vector<std::uint16_t> trail_;
  std::size_t head_ = 0;
  std::vector<std::vector<std::uint32_t>> watches_;
  std::vector<std::uint32_t> watch_;
  GraphBuilder red_;
  GraphBuilder blue_;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t pending_ = 0;
};

std::vector<int> heuristic_order(const Problem &p) {
  std::vector<int> order(static_cast<std::size_t>(p.index.size()));
  std::iota(order.begin(), order.end(), 0);
  const auto weight = [&](int e) {
    auto [u, v] = p.index.edge(e);
    return p.host.degree(u) + p.host.degree(v);
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int wa = weight(a), wb = weight(b);
    return wa != wb ? wa > wb : a > b;
  });
  return order;
}

/// Vertices u < v with N(u) - v = N(v) - u, grouped into classes.
std::vector<std::vector<Vertex>> twin_classes(const Graph &g) {
  std::vector<std::vector<Vertex>> classes;
  std::vector<bool> placed(static_cast<std::size_t>(g.order()), false);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (placed[u])
      continue;
    std::vector<Vertex> cls{u};
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!placed[v] &&
          (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u))) {
        cls.push_back(v);
        placed[v] = true;
      }
    if (cls.size() > 1)
      classes.push_back(std::move(cls));
  }
  return classes;
}

/// Copy clauses over one variable per edge (true = Red), plus lex-leader
/// constraints x <= sigma(x) (false < true, variables in edge order) for
/// each transposition of consecutive twins and, with equal targets, for
/// the color swap. The lexicographically least member of every symmetry
/// orbit satisfies all of them, so satisfiability is unchanged.
CdclSolver learning_solver(const Problem &p) {
  CdclSolver s(p.index.size());
  std::vector<int> lits;
  for (std::size_t c = 0; c < p.clauses.size(); ++c) {
    lits.clear();
    const std::uint16_t *e = p.clauses.begin(c);
    const int sign = p.clauses.want[c] == kRed ? 1 : -1;
    for (std::uint32_t k = 0; k < p.clauses.length(c); ++k)
      lits.push_back(sign * (e[k] + 1));
    s.add_clause(lits);
  }

  if (p.symmetric && p.index.size() > 0) {
    const int first = -1;
    s.add_clause(std::span(&first, 1));
  }

  for (const auto &cls : twin_classes(p.host)) {
    for (std::size_t t = 0; t + 1 < cls.size(); ++t) {
      const Vertex a = cls[t], b = cls[t + 1];
      std::vector<std::pair<int, int>> pairs;
      for (Vertex c = 0; c < p.host.order(); ++c) {
        if (c == a || c == b || !p.host.has_edge(a, c))
          continue;
        const int i = p.index.index(std::min(a, c), std::max(a, c)) + 1;
        const int j = p.index.index(std::min(b, c), std::max(b, c)) + 1;
        pairs.emplace_back(std::min(i, j), std::max(i, j));
      }
      std::sort(pairs.begin(), pairs.end());
      // equal: "every earlier pair agrees"; 0 stands for true.
      int equal = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [u, v] = pairs[k];
        const auto guarded = [&](std::vector<int> clause) {
          if (equal != 0)
            clause.push_back(-equal);
          s.add_clause(clause);
        };
        guarded({-u, v});
        if (k + 1 == pairs.size())
          break;
        const int next = s.new_var();
        guarded({-u, -v, next});
        guarded({u, v, next});
        equal = next;
      }
    }
  }
  return s;
}

void verify_counterexample(const Coloring &c, const Target &red,
                           const Target &blue) {
  if (!c.is_complete())
    throw VerificationError("arrows: counterexample is incomplete");
  if (contains_target(c.monochromatic_subgraph(EdgeColor::Red), red))
    throw VerificationError("arrows: counterexample has a red " + red.name());
  if (contains_target(c.monochromatic_subgraph(EdgeColor::Blue), blue))
    throw VerificationError("arrows: counterexample has a blue " +
                            blue.name());
}

/// Portfolio: every worker runs its own solver with a different seed; the
/// first definite answer stops the rest.
Verdict solve_with_learning(const Problem &p, int jobs, SharedCounters &shared,
                            ArrowingResult &result) {
  const CdclSolver base = learning_solver(p);
  std::mutex mutex;
  std::optional<CdclSolver::Result> answer;
  std::vector<EdgeColor> model;
  std::uint64_t conflicts = 0;

  const auto work = [&](int id) {
    CdclSolver s = base;
    s.set_seed(static_cast<std::uint64_t>(id));
    SolveLimits limits;
    limits.decisions = shared.budget;
    limits.counter = &shared.nodes;
    limits.stop = &shared.stop;
    const CdclSolver::Result r = s.solve(limits);
    std::lock_guard lock(mutex);
    conflicts += s.conflicts();
    if (r == CdclSolver::Result::Unknown || answer)
      return;
    answer = r;
    shared.stop = true;
    if (r == CdclSolver::Result::Sat) {
      model.resize(static_cast<std::size_t>(p.index.size()));
      for (int e = 0; e < p.index.size(); ++e)
        model[e] = s.model_value(e + 1) ? EdgeColor::Red : EdgeColor::Blue;
    }
  };
  result.stats.workers = jobs;
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < jobs; ++i)
      pool.emplace_back(work, i);
  }
  result.stats.conflicts = conflicts;
  if (!answer)
    return Verdict::Indeterminate;
  if (*answer == CdclSolver::Result::Unsat)
    return Verdict::Arrows;
  result.counterexample.emplace(p.host, std::move(model));
  return Verdict::Counterexample;
}

} // namespace

ArrowingResult arrows(const Graph &host, const Target &red, const Target &blue,
                      const SearchOptions &options) {
  const auto started = Clock::now();
  ArrowingResult result;

  Problem p;
  p.host = host;
  p.index = EdgeIndex(host);
  p.red = &red;
  p.blue = &blue;
  p.symmetric = red == blue;
  if (p.index.size() > 0xFFFF)
    throw LimitError("arrows: too many host edges");

  const CopySet red_copies =
      enumerate_copies(host, p.index, red, options.copy_cap);
  const CopySet blue_copies =
      enumerate_copies(host, p.index, blue, options.copy_cap);
  result.stats.red_copies = red_copies.size();
  result.stats.blue_copies = blue_copies.size();
  p.check_red = red_copies.overflow;
  p.check_blue = blue_copies.overflow;
  if (!p.check_red)
    p.clauses.add(red_copies, kBlue);
  if (!p.check_blue)
    p.clauses.add(blue_copies, kRed);
  result.stats.mode = p.check_red && p.check_blue ? PropagationMode::PruneOnly
                      : p.check_red || p.check_blue ? PropagationMode::Partial
                                                    : PropagationMode::Full;

  if (options.deterministic) {
    p.branch_order.resize(static_cast<std::size_t>(p.index.size()));
    std::iota(p.branch_order.begin(), p.branch_order.end(), 0);
  } else {
    p.branch_order = heuristic_order(p);
  }

  SharedCounters shared;
  shared.budget = options.node_budget;
  const bool learning = options.engine != SearchEngine::Dfs &&
                        !options.deterministic &&
                        result.stats.mode == PropagationMode::Full;
  result.stats.engine = learning ? SearchEngine::Cdcl : SearchEngine::Dfs;

  const auto finish = [&](Verdict v) {
    result.verdict = v;
    result.stats.budget_exhausted = v == Verdict::Indeterminate;
    result.stats.nodes = shared.nodes;
    result.stats.runtime_ms = elapsed_ms(started);
    if (result.counterexample)
      verify_counterexample(*result.counterexample, red, blue);
    return result;
  };

  const int jobs = options.deterministic ? 1 : std::max(1, options.jobs);
  if (learning)
    return finish(solve_with_learning(p, jobs, shared, result));

  Worker root(p, shared);
  if (!root.init())
    return finish(Verdict::Arrows);

  if (jobs == 1) {
    const Outcome o = root.solve();
    root.flush_nodes();
    if (o == Outcome::Sat) {
      result.counterexample.emplace(host, root.colors());
      return finish(Verdict::Counterexample);
    }
    return finish(o == Outcome::Unsat ? Verdict::Arrows
                                      : Verdict::Indeterminate);
  }

  // Split the top of the tree: every color vector on the first `depth` free
  // branch edges is one job.
  result.stats.workers = jobs;
  int depth = 0;
  while ((1 << depth) < 8 * jobs && depth < 12)
    ++depth;
  const std::vector<int> prefix =
      root.free_prefix(static_cast<std::size_t>(depth));
  const std::size_t job_count = std::size_t{1} << prefix.size();

  std::atomic<std::size_t> next_job{0};
  std::mutex found_mutex;
  std::optional<std::vector<EdgeColor>> found;
  std::atomic<bool> budget_hit{false};

  const auto work = [&] {
    while (!shared.stop) {
      const std::size_t job = next_job++;
      if (job >= job_count)
        return;
      // Color-swap symmetry: only jobs with the first prefix edge Red.
      if (p.symmetric && !prefix.empty() && (job & 1U))
        continue;
      Worker w = root;
      bool ok = true;
      for (std::size_t i = 0; i < prefix.size() && ok; ++i)
        ok = w.assume(prefix[i], (job >> i) & 1U ? kBlue : kRed);
      if (!ok)
        continue;
      const Outcome o = w.solve();
      w.flush_nodes();
      if (o == Outcome::Sat) {
        std::lock_guard lock(found_mutex);
        if (!found)
          found = w.colors();
        shared.stop = true;
      } else if (o == Outcome::Budget) {
        budget_hit = true;
        shared.stop = true;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (int i = 0; i < jobs; ++i)
    pool.emplace_back(work);
  pool.clear();

  if (found) {
    result.counterexample.emplace(host, std::move(*found));
    return finish(Verdict::Counterexample);
  }
  return finish(budget_hit ? Verdict::Indeterminate : Verdict::Arrows);
}

} // namespace ramsey
