#include "ramsey/graph.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <string>

namespace ramsey {

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v)
    twice += popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u) {
    VertexSet higher = adj_[u] & ~low_bits(u + 1);
    for (; higher; higher &= higher - 1)
      out.emplace_back(u, first_vertex(higher));
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= all_vertices();
  std::array<int, kMaxOrder> index{};
  int n = 0;
  for (VertexSet s = keep; s; s &= s - 1)
    index[first_vertex(s)] = n++;
  Graph g;
  g.order_ = n;
  for (VertexSet s = keep; s; s &= s - 1) {
    Vertex u = first_vertex(s);
    for (VertexSet t = adj_[u] & keep; t; t &= t - 1)
      g.adj_[index[u]] |= bit(index[first_vertex(t)]);
  }
  return g;
}

Graph Graph::restricted(VertexSet keep) const {
  Graph g = *this;
  for (Vertex v = 0; v < order_; ++v)
    g.adj_[v] = (keep >> v) & 1U ? adj_[v] & keep : 0;
  return g;
}

Graph Graph::complement() const {
  Graph g;
  g.order_ = order_;
  for (Vertex v = 0; v < order_; ++v)
    g.adj_[v] = ~adj_[v] & all_vertices() & ~bit(v);
  return g;
}

Graph Graph::complete(int order) { return empty(order).complement(); }

Graph Graph::empty(int order) { return GraphBuilder(order).build(); }

Graph Graph::from_edges(int order, const std::vector<Edge> &edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges)
    b.add_edge(u, v);
  return b.build();
}

GraphBuilder::GraphBuilder(int order) {
  if (order < 0 || order > kMaxOrder)
    throw LimitError("graph order " + std::to_string(order) +
                     " outside 0.." + std::to_string(kMaxOrder));
  g_.order_ = order;
}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= g_.order_ || v >= g_.order_)
    throw std::out_of_range("edge endpoint out of range");
  if (u == v)
    throw std::invalid_argument("self-loop");
}

GraphBuilder &GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  g_.adj_[u] |= bit(v);
  g_.adj_[v] |= bit(u);
  return *this;
}

GraphBuilder &GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  g_.adj_[u] &= ~bit(v);
  g_.adj_[v] &= ~bit(u);
  return *this;
}

bool is_connected(const Graph &g) {
  if (g.order() == 0)
    return true;
  VertexSet seen = bit(0), frontier = bit(0);
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1)
      next |= g.neighbors(first_vertex(s));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

GraphStats stats(const Graph &g) {
  GraphStats s;
  s.edge_count = g.edge_count();
  s.is_connected = is_connected(g);
  if (g.order() == 0)
    return s;
  s.min_degree = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  return s;
}

namespace {

// Above this order a single path query is cheaper by depth-first search than
// by filling the whole subset table.
constexpr int kPathTableOrder = 14;

// reach[mask] holds the end vertices of paths that visit exactly `mask`.
std::vector<std::uint32_t> path_reach_table(const Graph &g) {
  const int n = g.order();
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  for (Vertex v = 0; v < n; ++v)
    reach[bit(v)] = static_cast<std::uint32_t>(bit(v));
  for (std::uint32_t mask = 1; mask < reach.size(); ++mask) {
    for (std::uint32_t ends = reach[mask]; ends; ends &= ends - 1) {
      Vertex v = std::countr_zero(ends);
      for (VertexSet out = g.neighbors(v) & ~VertexSet{mask}; out;
           out &= out - 1) {
        Vertex u = first_vertex(out);
        reach[mask | bit(u)] |= static_cast<std::uint32_t>(bit(u));
      }
    }
  }
  return reach;
}

bool extend_path(const Graph &g, Vertex end, VertexSet used, int remaining) {
  if (remaining == 0)
    return true;
  for (VertexSet s = g.neighbors(end) & ~used; s; s &= s - 1) {
    Vertex v = first_vertex(s);
    if (extend_path(g, v, used | bit(v), remaining - 1))
      return true;
  }
  return false;
}

} // namespace

int longest_path_order(const Graph &g) {
  if (g.order() > kExactPathOrder)
    throw LimitError("longest_path_order: order " + std::to_string(g.order()) +
                     " exceeds exact limit " +
                     std::to_string(kExactPathOrder));
  if (g.order() == 0)
    return 0;
  auto reach = path_reach_table(g);
  int best = 0;
  for (std::uint32_t mask = 1; mask < reach.size(); ++mask)
    if (reach[mask])
      best = std::max(best, std::popcount(mask));
  return best;
}

bool has_path(const Graph &g, int n) {
  if (n <= 0)
    return true;
  if (n > g.order())
    return false;
  if (g.order() <= kPathTableOrder)
    return longest_path_order(g) >= n;
  for (Vertex v = 0; v < g.order(); ++v)
    if (extend_path(g, v, bit(v), n - 1))
      return true;
  return false;
}

} // namespace ramsey
