#pragma once

#include "ramsey/graph.hpp"

#include <string>
#include <string_view>

namespace ramsey {

/// Standard graph6 text (no trailing newline, no ">>graph6<<" header).
std::string graph6_encode(const Graph &g);

/// Inverse of graph6_encode. Accepts an optional ">>graph6<<" prefix and
/// one trailing newline. Throws Graph6Error on malformed input and
/// LimitError for orders above kMaxOrder.
Graph graph6_decode(std::string_view text);

} // namespace ramsey
