#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace ramsey {

using Vertex = int;
using VertexSet = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxOrder = 64;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline constexpr VertexSet low_bits(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int popcount(VertexSet s) { return std::popcount(s); }
inline Vertex first_vertex(VertexSet s) { return std::countr_zero(s); }

/// Immutable simple undirected graph on vertices 0..order-1, one adjacency
/// word per vertex. Build through GraphBuilder.
class Graph {
public:
  Graph() = default;

  int order() const { return order_; }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  VertexSet all_vertices() const { return low_bits(order_); }
  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  int edge_count() const;

  /// Edges in canonical order: lexicographic on (min endpoint, max endpoint).
  std::vector<Edge> edges() const;

  /// Subgraph induced on `keep`, relabeled to 0..|keep|-1 in vertex order.
  Graph induced(VertexSet keep) const;

  /// Same vertex set, only the edges with both endpoints in `keep`.
  Graph restricted(VertexSet keep) const;

  Graph complement() const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

  static Graph complete(int order);
  static Graph empty(int order);
  static Graph from_edges(int order, const std::vector<Edge> &edges);

private:
  friend class GraphBuilder;
  int order_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

class GraphBuilder {
public:
  explicit GraphBuilder(int order);
  explicit GraphBuilder(const Graph &g) : g_(g) {}

  int order() const { return g_.order_; }
  GraphBuilder &add_edge(Vertex u, Vertex v);
  GraphBuilder &remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }
  Graph build() const { return g_; }

private:
  void check(Vertex u, Vertex v) const;
  Graph g_;
};

struct GraphStats {
  int min_degree = 0;
  int max_degree = 0;
  bool is_connected = false;
  int edge_count = 0;
};

GraphStats stats(const Graph &g);

bool is_connected(const Graph &g);

/// Number of vertices on a longest simple path. Exact subset dynamic
/// program; order must be at most kExactPathOrder.
inline constexpr int kExactPathOrder = 20;
int longest_path_order(const Graph &g);

/// Whether g contains a simple path on `n` vertices.
bool has_path(const Graph &g, int n);

} // namespace ramsey
