#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/containment.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/graph_spec.hpp"

#include <cstddef>
#include <vector>

namespace ramsey {

struct WitnessReport {
  Coloring coloring;
  GraphSpec host_spec;
  /// Results of containment checks on the finished coloring.
  bool red_free = false;
  bool blue_free = false;
  BlockParameters parameters;
};

/// Free coloring of K_r minus P_{tn} certifying that the path-critical
/// number of (G, H) is at most tn - 1. Red blocks, lowest vertices first:
/// t copies of K_n minus a path (the deleted host path runs through them in
/// order), then k-t-1 copies of K_{n-1}, then one K_{s-1}. Every edge
/// between blocks is blue. Hypotheses as block_parameters; throws
/// VerificationError if the coloring is not free.
WitnessReport path_critical_witness(const GraphSpec &g, const GraphSpec &h,
                                    int r);

/// Member i of the (nK_2, K_3)-free family on K_{2n}: red K_{2i+1} on the
/// lowest vertices plus red K_{2n-2i-1} on the rest, blue between them.
/// Requires n >= 2 and 0 <= i <= ceil(n/2) - 1.
Coloring h_family(int n, int i);

/// Largest valid index of h_family for this n.
inline int h_family_last_index(int n) { return (n + 1) / 2 - 1; }

struct FreeColorings {
  /// One representative per color-preserving isomorphism class, in the
  /// order their first labeled member was found.
  std::vector<Coloring> classes;
  std::size_t labeled = 0;
};

inline constexpr int kEnumerationEdgeLimit = 30;

/// All complete colorings of `host` with no red `red` and no blue `blue`,
/// by depth-first search in canonical edge order with containment pruning.
/// Throws LimitError above kEnumerationEdgeLimit host edges.
FreeColorings enumerate_free_colorings(const Graph &host, const Target &red,
                                       const Target &blue);

} // namespace ramsey
