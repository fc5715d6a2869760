#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/containment.hpp"
#include "ramsey/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

/// Dfs: chronological backtracking with unit propagation. Cdcl: clause
/// learning plus lex-leader symmetry breaking over twin host vertices.
/// Auto picks Cdcl unless the search is deterministic or a copy set
/// overflowed its cap.
enum class SearchEngine { Auto, Dfs, Cdcl };

struct SearchOptions {
  /// Branching decisions across all workers.
  std::uint64_t node_budget = 100'000'000;
  std::size_t copy_cap = kDefaultCopyCap;
  /// Single worker, canonical branch order, Red tried first: the returned
  /// counterexample is the lexicographically least free coloring.
  bool deterministic = false;
  int jobs = 1;
  SearchEngine engine = SearchEngine::Auto;
};

enum class Verdict { Arrows, Counterexample, Indeterminate };

/// How copy constraints were used. Full: both colors propagate clauses.
/// Partial: one color overflowed the copy cap and is checked by
/// containment instead. PruneOnly: both colors overflowed.
enum class PropagationMode { Full, Partial, PruneOnly };

struct SearchStats {
  std::uint64_t nodes = 0;
  double runtime_ms = 0;
  PropagationMode mode = PropagationMode::Full;
  bool budget_exhausted = false;
  std::size_t red_copies = 0;
  std::size_t blue_copies = 0;
  int workers = 1;
  SearchEngine engine = SearchEngine::Dfs;
  std::uint64_t conflicts = 0;
};

struct ArrowingResult {
  Verdict verdict = Verdict::Indeterminate;
  /// Set iff verdict == Counterexample: complete, no red target, no blue
  /// target (re-verified by containment before return).
  std::optional<Coloring> counterexample;
  SearchStats stats;
};

/// Decides host -> (red, blue).
ArrowingResult arrows(const Graph &host, const Target &red, const Target &blue,
                      const SearchOptions &options = {});

std::string to_string(Verdict v);
std::string to_string(PropagationMode m);
std::string to_string(SearchEngine e);
/// "auto", "dfs" or "cdcl"; throws std::invalid_argument otherwise.
SearchEngine parse_engine(const std::string &name);

/// CNF whose models are exactly the free colorings of the host: one
/// variable per host edge in canonical order (true = red). Satisfiable iff
/// the host does not arrow. Throws LimitError on copy-cap overflow.
std::string export_dimacs(const Graph &host, const Target &red,
                          const Target &blue,
                          std::size_t copy_cap = kDefaultCopyCap);

// ---------------------------------------------------------------------------
// Ramsey and critical numbers

enum class SearchStatus { Found, NotFoundWithinBound, Indeterminate };

struct RamseyOptions {
  SearchOptions search;
  int max_r = 64;
  /// Start the ascent at the Burr lower bound when its hypotheses hold.
  bool start_from_burr = true;
};

struct RamseyResult {
  SearchStatus status = SearchStatus::Indeterminate;
  int value = 0;
  int start = 1;
  bool burr_start = false;
  std::optional<int> catalog;
  std::optional<std::string> catalog_source;
  std::uint64_t nodes = 0;
  double runtime_ms = 0;

  bool catalog_agrees() const {
    return !catalog || status != SearchStatus::Found || *catalog == value;
  }
};

/// Smallest r <= max_r with K_r -> (red, blue), searched upward. When the
/// ascent starts at the Burr bound b > 1, K_{b-1} is also confirmed not to
/// arrow. The catalog value (if any) is reported alongside, not used.
RamseyResult ramsey_number(const Target &red, const Target &blue,
                           const RamseyOptions &options = {});

/// Subgraphs deleted from K_r. Path(n) = P_n by vertex count; Matching(q) =
/// qK_2 by edge count; Clique(n) = K_n by vertex count.
enum class DeletionFamily { Path, Matching, Clique };

std::string to_string(DeletionFamily f);
/// "path", "matching" or "clique"; throws std::invalid_argument otherwise.
DeletionFamily parse_family(const std::string &name);

/// K_r minus the family member of the given index, on vertices 0..
Graph deletion_host(int r, DeletionFamily family, int index);

struct CriticalResult {
  SearchStatus status = SearchStatus::Indeterminate;
  /// Largest index whose deletion keeps arrowing; 0 if the smallest
  /// nontrivial deletion (P_2, 1K_2, K_2) already breaks it.
  int value = 0;
  DeletionFamily family = DeletionFamily::Path;
  int r = 0;
  /// Index and verdict of every arrowing call made, in scan order.
  std::vector<std::pair<int, Verdict>> scan;
  std::uint64_t nodes = 0;
  double runtime_ms = 0;
  std::string convention;
};

/// Scans indices upward from the smallest nontrivial deletion and stops at
/// the first that breaks arrowing (deletions are nested, so arrowing is
/// monotone along the scan).
CriticalResult critical_number(const Target &red, const Target &blue,
                               DeletionFamily family, int r,
                               const SearchOptions &options = {});

} // namespace ramsey
