#pragma once

#include "ramsey/graph.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

enum class EdgeColor : std::uint8_t { Red, Blue, Unassigned };

inline EdgeColor opposite(EdgeColor c) {
  return c == EdgeColor::Red    ? EdgeColor::Blue
         : c == EdgeColor::Blue ? EdgeColor::Red
                                : EdgeColor::Unassigned;
}

/// Maps host edges to their canonical index and back.
class EdgeIndex {
public:
  EdgeIndex() = default;
  explicit EdgeIndex(const Graph &host);

  int size() const { return static_cast<int>(edges_.size()); }
  const Edge &edge(int i) const { return edges_[i]; }
  const std::vector<Edge> &edges() const { return edges_; }
  /// -1 for non-edges.
  int index(Vertex u, Vertex v) const {
    return index_[static_cast<std::size_t>(u * kMaxOrder + v)];
  }

private:
  std::vector<Edge> edges_;
  std::vector<int> index_;
};

/// Red/blue/unassigned labels on the edges of a host graph, stored in the
/// canonical edge order. Non-edges of the host carry no state.
class Coloring {
public:
  /// All edges Unassigned.
  explicit Coloring(Graph host);
  Coloring(Graph host, std::vector<EdgeColor> colors);

  const Graph &host() const { return host_; }
  const EdgeIndex &edge_index() const { return *index_; }
  int edge_count() const { return static_cast<int>(colors_.size()); }
  const std::vector<EdgeColor> &colors() const { return colors_; }

  EdgeColor color(int edge) const { return colors_[edge]; }
  /// Throws std::invalid_argument when uv is not a host edge.
  EdgeColor color(Vertex u, Vertex v) const;
  void set(int edge, EdgeColor c) { colors_[edge] = c; }
  void set(Vertex u, Vertex v, EdgeColor c);

  bool is_complete() const;

  /// The host's vertex set with exactly the edges of color `c`.
  Graph monochromatic_subgraph(EdgeColor c) const;

  /// Incident edges of color `c`. Throws std::out_of_range for bad vertices.
  int colored_degree(Vertex v, EdgeColor c) const;

  friend bool operator==(const Coloring &a, const Coloring &b) {
    return a.host_ == b.host_ && a.colors_ == b.colors_;
  }

private:
  int checked_index(Vertex u, Vertex v) const;

  Graph host_;
  std::shared_ptr<const EdgeIndex> index_;
  std::vector<EdgeColor> colors_;
};

/// JSON edge-list form: [[u, v, "R"|"B"], ...] in canonical edge order,
/// unassigned edges omitted.
std::string coloring_to_json(const Coloring &c);

/// Parses the edge-list form against a known host. Throws
/// std::invalid_argument for non-edges or bad color tags.
Coloring coloring_from_json(const Graph &host, const std::string &text);

} // namespace ramsey
