#include "ramsey/oracles.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace ramsey::oracle {

std::optional<std::vector<EdgeColor>>
first_free_coloring(const Graph &host, const Target &red, const Target &blue) {
  const auto edges = host.edges();
  const int e = static_cast<int>(edges.size());
  if (e > 24)
    throw LimitError("oracle::first_free_coloring: too many edges");
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << e); ++x) {
    GraphBuilder r(host.order()), b(host.order());
    std::vector<EdgeColor> colors(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
      const bool is_blue = (x >> (e - 1 - i)) & 1U;
      colors[i] = is_blue ? EdgeColor::Blue : EdgeColor::Red;
      (is_blue ? b : r).add_edge(edges[i].first, edges[i].second);
    }
    if (!contains_target(r.build(), red) && !contains_target(b.build(), blue))
      return colors;
  }
  return std::nullopt;
}

namespace {

int matching_rec(const std::vector<Edge> &edges, std::size_t from,
                 VertexSet used) {
  int best = 0;
  for (std::size_t i = from; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (used & (bit(u) | bit(v)))
      continue;
    best = std::max(best, 1 + matching_rec(edges, i + 1,
                                           used | bit(u) | bit(v)));
  }
  return best;
}

int path_rec(const Graph &g, Vertex end, VertexSet used) {
  int best = popcount(used);
  for (VertexSet s = g.neighbors(end) & ~used; s; s &= s - 1) {
    const Vertex v = first_vertex(s);
    best = std::max(best, path_rec(g, v, used | bit(v)));
  }
  return best;
}

bool properly_colored(const Graph &g, const std::vector<int> &color) {
  for (auto [u, v] : g.edges())
    if (color[u] == color[v])
      return false;
  return true;
}

/// Calls fn on every assignment of k colors to the vertices.
void for_each_assignment(int n, int k,
                         const std::function<void(const std::vector<int> &)> &fn) {
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  for (;;) {
    fn(color);
    int i = 0;
    while (i < n && ++color[i] == k)
      color[i++] = 0;
    if (i == n)
      return;
  }
}

} // namespace

int max_matching(const Graph &g) { return matching_rec(g.edges(), 0, 0); }

int longest_path(const Graph &g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    best = std::max(best, path_rec(g, v, bit(v)));
  return best;
}

bool contains(const Graph &pattern, const Graph &host) {
  const int p = pattern.order(), n = host.order();
  if (p > n)
    return false;
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  const auto edges = pattern.edges();
  // Every ordered choice of p distinct host vertices.
  std::vector<Vertex> image(static_cast<std::size_t>(p));
  std::function<bool(int, VertexSet)> rec = [&](int depth, VertexSet used) {
    if (depth == p) {
      return std::all_of(edges.begin(), edges.end(), [&](const Edge &e) {
        return host.has_edge(image[e.first], image[e.second]);
      });
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used & bit(v))
        continue;
      image[depth] = v;
      if (rec(depth + 1, used | bit(v)))
        return true;
    }
    return false;
  };
  return rec(0, 0);
}

int chromatic_number(const Graph &g) {
  for (int k = 1; k <= g.order(); ++k) {
    bool ok = false;
    for_each_assignment(g.order(), k, [&](const std::vector<int> &c) {
      ok = ok || properly_colored(g, c);
    });
    if (ok)
      return k;
  }
  return 0;
}

int chromatic_surplus(const Graph &g) {
  const int k = chromatic_number(g);
  int best = g.order();
  for_each_assignment(g.order(), k, [&](const std::vector<int> &c) {
    if (!properly_colored(g, c))
      return;
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int x : c)
      ++sizes[x];
    best = std::min(best, *std::min_element(sizes.begin(), sizes.end()));
  });
  return best;
}

Graph random_graph(std::mt19937_64 &rng, int order, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(order);
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v)
      if (coin(rng))
        b.add_edge(u, v);
  return b.build();
}

Graph random_connected_graph(std::mt19937_64 &rng, int order, double p) {
  GraphBuilder b(random_graph(rng, order, p));
  for (Vertex v = 1; v < order; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    const Vertex u = pick(rng);
    if (!b.has_edge(u, v))
      b.add_edge(u, v);
  }
  return b.build();
}

namespace {

using Clause = std::vector<int>;

bool dpll(std::vector<Clause> clauses, std::vector<int> assignment) {
  for (;;) {
    bool changed = false;
    std::vector<Clause> remaining;
    for (const Clause &c : clauses) {
      bool satisfied = false;
      Clause open;
      for (int lit : c) {
        const int value = assignment[static_cast<std::size_t>(std::abs(lit))];
        if (value == 0)
          open.push_back(lit);
        else if ((value > 0) == (lit > 0))
          satisfied = true;
      }
      if (satisfied)
        continue;
      if (open.empty())
        return false;
      if (open.size() == 1) {
        assignment[static_cast<std::size_t>(std::abs(open[0]))] =
            open[0] > 0 ? 1 : -1;
        changed = true;
      }
      remaining.push_back(std::move(open));
    }
    clauses = std::move(remaining);
    if (clauses.empty())
      return true;
    if (!changed)
      break;
  }
  const int var = std::abs(clauses.front().front());
  for (int value : {1, -1}) {
    std::vector<int> next = assignment;
    next[static_cast<std::size_t>(var)] = value;
    if (dpll(clauses, next))
      return true;
  }
  return false;
}

} // namespace

bool dimacs_satisfiable(const std::string &cnf) {
  std::istringstream in(cnf);
  std::string line;
  int vars = 0;
  std::vector<Clause> clauses;
  Clause current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c')
      continue;
    std::istringstream row(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      std::size_t count = 0;
      row >> p >> fmt >> vars >> count;
      continue;
    }
    int lit = 0;
    while (row >> lit) {
      if (lit == 0) {
        clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  return dpll(clauses, std::vector<int>(static_cast<std::size_t>(vars) + 1, 0));
}

} // namespace ramsey::oracle
