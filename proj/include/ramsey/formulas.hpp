#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/graph_spec.hpp"

#include <optional>
#include <string>

namespace ramsey {

struct ChromaticData {
  int chi = 0;
  /// Minimum color-class size over all proper chi-colorings.
  int surplus = 0;
};

inline constexpr int kChromaticNumberOrder = 20;
inline constexpr int kChromaticSurplusOrder = 16;

/// Exact chromatic number: clique lower bound, DSATUR upper bound,
/// backtracking in between. Order at most kChromaticNumberOrder.
int chromatic_number(const Graph &g);

/// Exact chromatic surplus by enumerating proper chi-colorings up to color
/// renaming, pruned once every class already reaches the best minimum.
/// Order at most kChromaticSurplusOrder.
int chromatic_surplus(const Graph &g);

ChromaticData chromatic_data(const Graph &g);

/// (chi(H)-1)(|V(G)|-1) + s(H). Requires G connected and |V(G)| >= s(H);
/// throws HypothesisError otherwise.
int burr_bound(const GraphSpec &g, const GraphSpec &h);

/// G is H-good iff R(G,H) attains the Burr bound.
bool is_good(const GraphSpec &g, const GraphSpec &h, int ramsey_value);

/// Quantities behind the upper bound on the path-critical number for a
/// connected G of order n with a dominating vertex:
/// t = r - (k-1)(n-1) - s + 1 with k = chi(H), s = s(H).
struct BlockParameters {
  int n = 0;
  int k = 0;
  int s = 0;
  int t = 0;
  int r = 0;

  /// t*n - 1.
  int upper_bound() const { return t * n - 1; }
};

/// Checks the hypotheses (G connected of order n, Delta(G) = n-1,
/// n >= s(H), r <= (k-1)n + s - 1, r at least the Burr bound) and returns
/// the parameters. Throws HypothesisError naming the failed inequality.
BlockParameters block_parameters(const GraphSpec &g, const GraphSpec &h, int r);

/// Upper bound t*n - 1 on the path-critical Ramsey number.
int path_critical_upper_bound(const GraphSpec &g, const GraphSpec &h, int r);

struct KnownValue {
  int value = 0;
  std::string source;
};

/// Ramsey numbers of the cataloged families, only inside each result's
/// validity range. Lookup is symmetric in the two arguments.
std::optional<KnownValue> known_ramsey(const GraphSpec &red,
                                       const GraphSpec &blue);

/// Closed-form path-critical Ramsey numbers, only inside each result's
/// validity range. Lookup is symmetric in the two arguments.
std::optional<KnownValue> closed_form_path_critical(const GraphSpec &red,
                                                    const GraphSpec &blue);

} // namespace ramsey
