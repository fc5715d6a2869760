#pragma once

#include "ramsey/coloring.hpp"

#include <string>
#include <vector>

namespace ramsey {

/// Canonical labeling of an edge-colored host up to color-preserving
/// isomorphism: equitable refinement on (red, blue, unassigned) neighbor
/// counts, then individualization with the lexicographically least leaf.
struct CanonicalLabel {
  /// Vertex placed at each canonical position.
  std::vector<Vertex> order;
  /// Pair codes in canonical order (i < j, row-major): '.' non-edge, 'R',
  /// 'B', '?' unassigned.
  std::string key;
};

CanonicalLabel canonical_label(const Coloring &c);

/// Whether a color-preserving isomorphism maps a onto b.
bool isomorphic(const Coloring &a, const Coloring &b);

} // namespace ramsey
