#pragma once

// Slow reference implementations used to cross-check the engine. None of
// these share code paths with the search, the detectors they check, or the
// clause encoder.

#include "ramsey/coloring.hpp"
#include "ramsey/containment.hpp"
#include "ramsey/graph.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ramsey::oracle {

/// Tries all 2^e complete colorings in lexicographic order (edge 0 most
/// significant, Red before Blue) and returns the first free one, if any.
/// Containment is decided by the detectors. At most 24 host edges.
std::optional<std::vector<EdgeColor>>
first_free_coloring(const Graph &host, const Target &red, const Target &blue);

inline bool arrows(const Graph &host, const Target &red, const Target &blue) {
  return !first_free_coloring(host, red, blue).has_value();
}

/// Maximum matching by exhaustive recursion over edges.
int max_matching(const Graph &g);

/// Vertices on a longest path, by depth-first search from every vertex.
int longest_path(const Graph &g);

/// Subgraph containment by trying every injective vertex map.
bool contains(const Graph &pattern, const Graph &host);

/// Chromatic number and surplus from all k^n vertex assignments.
int chromatic_number(const Graph &g);
int chromatic_surplus(const Graph &g);

/// G(n, p) random graph.
Graph random_graph(std::mt19937_64 &rng, int order, double p);

/// Random spanning tree plus G(n, p) extra edges.
Graph random_connected_graph(std::mt19937_64 &rng, int order, double p);

/// Plain recursive DPLL over DIMACS text; true iff satisfiable.
bool dimacs_satisfiable(const std::string &cnf);

} // namespace ramsey::oracle
