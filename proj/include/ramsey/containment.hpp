#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph_spec.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ramsey {

/// A target graph for containment and arrowing. Family members get
/// dedicated detectors; anything else goes through subgraph isomorphism.
class Target {
public:
  enum class Kind { Clique, Star, Path, Matching, Book, Fan, Generic };

  static Target clique(int m);
  static Target star(int n);
  static Target path(int n);
  static Target matching(int m);
  static Target book(int m);
  static Target fan(int n);
  static Target generic(const GraphSpec &spec);
  /// Family leaves map to their detector kind; everything else is Generic.
  static Target from_spec(const GraphSpec &spec);

  Kind kind() const { return kind_; }
  int parameter() const { return parameter_; }
  const GraphSpec &spec() const { return spec_; }
  const Graph &pattern() const { return pattern_; }
  std::string name() const { return to_string(spec_); }

  /// Same realized labeled pattern.
  friend bool operator==(const Target &a, const Target &b) {
    return a.pattern_ == b.pattern_;
  }

private:
  Target(Kind kind, int parameter, GraphSpec spec);

  Kind kind_;
  int parameter_;
  GraphSpec spec_;
  Graph pattern_;
};

/// Non-induced containment: does g have a subgraph isomorphic to the target?
bool contains_target(const Graph &g, const Target &t);

/// Exact maximum matching cardinality (Edmonds' blossom algorithm).
int max_matching_size(const Graph &g);

/// Exact clique number by branch and bound with a coloring bound.
int clique_number(const Graph &g);
bool has_clique(const Graph &g, int m);

/// Whether some vertex neighborhood contains a matching of size n.
bool has_fan(const Graph &g, int n);

/// Whether some edge uv has at least m common neighbors.
bool has_book(const Graph &g, int m);

/// Backtracking subgraph isomorphism (non-induced). `visit` receives the
/// image of each pattern vertex and returns false to stop the enumeration.
/// Returns false iff stopped early.
bool for_each_embedding(const Graph &pattern, const Graph &host,
                        const std::function<bool(std::span<const Vertex>)> &visit);
bool has_subgraph(const Graph &pattern, const Graph &host);

/// Edge sets of all distinct copies of a target in a host, as canonical edge
/// indices into `index`. Stored flat: copy i occupies
/// edges[offsets[i] .. offsets[i+1]).
struct CopySet {
  std::vector<std::uint16_t> edges;
  std::vector<std::uint32_t> offsets{0};
  bool overflow = false;

  std::size_t size() const { return offsets.size() - 1; }
  std::span<const std::uint16_t> copy(std::size_t i) const {
    return {edges.data() + offsets[i], edges.data() + offsets[i + 1]};
  }
};

inline constexpr std::size_t kDefaultCopyCap = 2'000'000;

/// Enumerates copies; stops with overflow=true once more than `cap` copies
/// exist. Every copy appears exactly once.
CopySet enumerate_copies(const Graph &host, const EdgeIndex &index,
                         const Target &t, std::size_t cap = kDefaultCopyCap);

namespace testing {
/// Makes max_matching_size under-report by one. Fault injection for the
/// verification suite's self-test; never enabled in normal runs.
void set_matching_fault(bool enabled);
} // namespace testing

} // namespace ramsey
