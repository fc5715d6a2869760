#include "ramsey/containment.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>

namespace ramsey {

namespace {
std::atomic<bool> g_matching_fault{false};
} // namespace

void testing::set_matching_fault(bool enabled) { g_matching_fault = enabled; }

Target::Target(Kind kind, int parameter, GraphSpec spec)
    : kind_(kind), parameter_(parameter), spec_(std::move(spec)),
      pattern_(realize(spec_)) {}

Target Target::clique(int m) {
  return {Kind::Clique, m, GraphSpec::complete(m)};
}
Target Target::star(int n) { return {Kind::Star, n, GraphSpec::star(n)}; }
Target Target::path(int n) { return {Kind::Path, n, GraphSpec::path(n)}; }
Target Target::matching(int m) {
  return {Kind::Matching, m, GraphSpec::matching(m)};
}
Target Target::book(int m) { return {Kind::Book, m, GraphSpec::book(m)}; }
Target Target::fan(int n) { return {Kind::Fan, n, GraphSpec::fan(n)}; }
Target Target::generic(const GraphSpec &spec) {
  return {Kind::Generic, 0, spec};
}

Target Target::from_spec(const GraphSpec &spec) {
  switch (spec.kind()) {
  case GraphSpec::Kind::Complete:
    return clique(spec.parameter());
  case GraphSpec::Kind::Star:
    return star(spec.parameter());
  case GraphSpec::Kind::Path:
    return path(spec.parameter());
  case GraphSpec::Kind::Matching:
    return matching(spec.parameter());
  case GraphSpec::Kind::Book:
    return book(spec.parameter());
  case GraphSpec::Kind::Fan:
    return fan(spec.parameter());
  default:
    return generic(spec);
  }
}

// ---------------------------------------------------------------------------
// Maximum matching

int max_matching_size(const Graph &g) {
  const int n = g.order();
  std::array<int, kMaxOrder> match, parent, base;
  match.fill(-1);

  const auto lca = [&](int a, int b) {
    VertexSet seen = 0;
    for (;;) {
      a = base[a];
      seen |= bit(a);
      if (match[a] == -1)
        break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen & bit(b))
        return b;
      b = parent[match[b]];
    }
  };

  int size = 0;
  // Greedy start shortens the augmenting phase.
  for (Vertex u = 0; u < n; ++u) {
    if (match[u] != -1)
      continue;
    for (VertexSet s = g.neighbors(u); s; s &= s - 1) {
      Vertex v = first_vertex(s);
      if (match[v] == -1) {
        match[u] = v;
        match[v] = u;
        ++size;
        break;
      }
    }
  }

  for (Vertex root = 0; root < n; ++root) {
    if (match[root] != -1)
      continue;
    parent.fill(-1);
    for (int i = 0; i < n; ++i)
      base[i] = i;
    VertexSet used = bit(root);
    std::array<int, kMaxOrder> queue;
    int head = 0, tail = 0;
    queue[tail++] = root;

    const auto mark_path = [&](VertexSet &blossom, int v, int b, int child) {
      while (base[v] != b) {
        blossom |= bit(base[v]) | bit(base[match[v]]);
        parent[v] = child;
        child = match[v];
        v = parent[match[v]];
      }
    };

    int found = -1;
    while (head < tail && found < 0) {
      const int v = queue[head++];
      for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
        const int to = first_vertex(s);
        if (base[v] == base[to] || match[v] == to)
          continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          const int cur = lca(v, to);
          VertexSet blossom = 0;
          mark_path(blossom, v, cur, to);
          mark_path(blossom, to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom & bit(base[i])) {
              base[i] = cur;
              if (!(used & bit(i))) {
                used |= bit(i);
                queue[tail++] = i;
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) {
            found = to;
            break;
          }
          used |= bit(match[to]);
          queue[tail++] = match[to];
        }
      }
    }
    if (found < 0)
      continue;
    for (int v = found; v != -1;) {
      const int pv = parent[v], next = match[pv];
      match[v] = pv;
      match[pv] = v;
      v = next;
    }
    ++size;
  }
  if (g_matching_fault && size > 0)
    --size;
  return size;
}

// ---------------------------------------------------------------------------
// Cliques

namespace {

void expand_clique(const Graph &g, VertexSet cand, int size, int &best,
                   int goal) {
  std::array<Vertex, kMaxOrder> order;
  std::array<int, kMaxOrder> bound;
  int k = 0, color = 0;
  for (VertexSet uncolored = cand; uncolored;) {
    ++color;
    for (VertexSet avail = uncolored; avail;) {
      const Vertex v = first_vertex(avail);
      avail &= ~g.neighbors(v) & ~bit(v);
      uncolored &= ~bit(v);
      order[k] = v;
      bound[k] = color;
      ++k;
    }
  }
  for (int i = k - 1; i >= 0; --i) {
    if (size + bound[i] <= best || best >= goal)
      return;
    const Vertex v = order[i];
    const VertexSet next = cand & g.neighbors(v);
    if (next == 0)
      best = std::max(best, size + 1);
    else
      expand_clique(g, next, size + 1, best, goal);
    cand &= ~bit(v);
  }
}

} // namespace

int clique_number(const Graph &g) {
  int best = 0;
  expand_clique(g, g.all_vertices(), 0, best, kMaxOrder + 1);
  return best;
}

bool has_clique(const Graph &g, int m) {
  if (m <= 0)
    return true;
  if (m > g.order())
    return false;
  int best = 0;
  expand_clique(g, g.all_vertices(), 0, best, m);
  return best >= m;
}

bool has_fan(const Graph &g, int n) {
  if (2 * n + 1 > g.order())
    return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2 * n)
      continue;
    if (max_matching_size(g.restricted(g.neighbors(v))) >= n)
      return true;
  }
  return false;
}

bool has_book(const Graph &g, int m) {
  if (m + 2 > g.order())
    return false;
  for (auto [u, v] : g.edges())
    if (popcount(g.neighbors(u) & g.neighbors(v)) >= m)
      return true;
  return false;
}

// ---------------------------------------------------------------------------
// Subgraph isomorphism

namespace {

class EmbeddingSearch {
public:
  EmbeddingSearch(const Graph &pattern, const Graph &host,
                  const std::function<bool(std::span<const Vertex>)> &visit)
      : pattern_(pattern), host_(host), visit_(visit) {
    const int p = pattern.order();
    // Most-constrained first: many already-placed neighbors, then degree.
    VertexSet placed = 0;
    for (int i = 0; i < p; ++i) {
      Vertex pick = -1;
      int pick_links = -1, pick_degree = -1;
      for (Vertex x = 0; x < p; ++x) {
        if (placed & bit(x))
          continue;
        const int links = popcount(pattern.neighbors(x) & placed);
        const int degree = pattern.degree(x);
        if (links > pick_links ||
            (links == pick_links && degree > pick_degree)) {
          pick = x;
          pick_links = links;
          pick_degree = degree;
        }
      }
      order_[i] = pick;
      placed |= bit(pick);
    }
    for (int d = 0; d <= kMaxOrder; ++d) {
      VertexSet s = 0;
      for (Vertex v = 0; v < host.order(); ++v)
        if (host.degree(v) >= d)
          s |= bit(v);
      min_degree_[d] = s;
      if (s == 0) {
        for (int e = d + 1; e <= kMaxOrder; ++e)
          min_degree_[e] = 0;
        break;
      }
    }
    image_.fill(-1);
  }

  bool run() { return place(0, 0); }

private:
  bool place(int depth, VertexSet used) {
    if (depth == pattern_.order())
      return visit_(std::span<const Vertex>(image_.data(),
                                            static_cast<std::size_t>(depth)));
    const Vertex x = order_[depth];
    VertexSet cand = host_.all_vertices() & ~used &
                     min_degree_[pattern_.degree(x)];
    for (VertexSet nb = pattern_.neighbors(x); nb; nb &= nb - 1) {
      const Vertex y = first_vertex(nb);
      if (image_[y] >= 0)
        cand &= host_.neighbors(image_[y]);
    }
    for (; cand; cand &= cand - 1) {
      const Vertex v = first_vertex(cand);
      image_[x] = v;
      if (!place(depth + 1, used | bit(v))) {
        image_[x] = -1;
        return false;
      }
    }
    image_[x] = -1;
    return true;
  }

  const Graph &pattern_;
  const Graph &host_;
  const std::function<bool(std::span<const Vertex>)> &visit_;
  std::array<Vertex, kMaxOrder> order_{};
  std::array<Vertex, kMaxOrder> image_{};
  std::array<VertexSet, kMaxOrder + 1> min_degree_{};
};

} // namespace

bool for_each_embedding(
    const Graph &pattern, const Graph &host,
    const std::function<bool(std::span<const Vertex>)> &visit) {
  if (pattern.order() > host.order())
    return true;
  return EmbeddingSearch(pattern, host, visit).run();
}

bool has_subgraph(const Graph &pattern, const Graph &host) {
  if (pattern.order() > host.order() ||
      pattern.edge_count() > host.edge_count())
    return false;
  bool found = false;
  for_each_embedding(pattern, host, [&](std::span<const Vertex>) {
    found = true;
    return false;
  });
  return found;
}

bool contains_target(const Graph &g, const Target &t) {
  const int p = t.parameter();
  switch (t.kind()) {
  case Target::Kind::Clique:
    return has_clique(g, p);
  case Target::Kind::Star:
    return p + 1 <= g.order() && stats(g).max_degree >= p;
  case Target::Kind::Path:
    return has_path(g, p);
  case Target::Kind::Matching:
    return 2 * p <= g.order() && max_matching_size(g) >= p;
  case Target::Kind::Book:
    return has_book(g, p);
  case Target::Kind::Fan:
    return has_fan(g, p);
  case Target::Kind::Generic:
    return has_subgraph(t.pattern(), g);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Copy enumeration

namespace {

class CopyCollector {
public:
  CopyCollector(const EdgeIndex &index, std::size_t cap)
      : index_(index), cap_(cap) {}

  /// False once the cap is exceeded.
  bool add(std::span<const Edge> edges) {
    if (out_.overflow)
      return false;
    if (out_.size() >= cap_) {
      out_.overflow = true;
      return false;
    }
    const std::size_t start = out_.edges.size();
    for (auto [u, v] : edges)
      out_.edges.push_back(static_cast<std::uint16_t>(index_.index(u, v)));
    std::sort(out_.edges.begin() + static_cast<std::ptrdiff_t>(start),
              out_.edges.end());
    out_.offsets.push_back(static_cast<std::uint32_t>(out_.edges.size()));
    return true;
  }

  bool full() const { return out_.overflow; }
  CopySet take() { return std::move(out_); }

private:
  const EdgeIndex &index_;
  std::size_t cap_;
  CopySet out_;
};

/// Calls fn for each k-subset of s, in increasing order. False = stop.
template <class Fn>
bool for_each_subset(VertexSet s, int k, VertexSet chosen, const Fn &fn) {
  if (k == 0)
    return fn(chosen);
  if (popcount(s) < k)
    return true;
  for (VertexSet rest = s; popcount(rest) >= k; rest &= rest - 1) {
    const Vertex v = first_vertex(rest);
    if (!for_each_subset(rest & ~bit(v), k - 1, chosen | bit(v), fn))
      return false;
  }
  return true;
}

bool collect_cliques(const Graph &g, VertexSet cand, int need,
                     std::vector<Vertex> &chosen, CopyCollector &out) {
  if (need == 0) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        edges.emplace_back(chosen[i], chosen[j]);
    return out.add(edges);
  }
  for (; popcount(cand) >= need; cand &= cand - 1) {
    const Vertex v = first_vertex(cand);
    chosen.push_back(v);
    const bool go =
        collect_cliques(g, cand & g.neighbors(v) & ~low_bits(v + 1), need - 1,
                        chosen, out);
    chosen.pop_back();
    if (!go)
      return false;
  }
  return true;
}

bool collect_paths(const Graph &g, std::vector<Vertex> &seq, VertexSet used,
                   int n, CopyCollector &out) {
  if (static_cast<int>(seq.size()) == n) {
    if (seq.front() > seq.back())
      return true;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
      edges.emplace_back(seq[i], seq[i + 1]);
    return out.add(edges);
  }
  for (VertexSet s = g.neighbors(seq.back()) & ~used; s; s &= s - 1) {
    const Vertex v = first_vertex(s);
    seq.push_back(v);
    const bool go = collect_paths(g, seq, used | bit(v), n, out);
    seq.pop_back();
    if (!go)
      return false;
  }
  return true;
}

/// Matchings of size `need` among `edges[from..]` avoiding `used`.
bool collect_matchings(const std::vector<Edge> &edges, std::size_t from,
                       VertexSet used, int need, std::vector<Edge> &chosen,
                       CopyCollector &out) {
  if (need == 0)
    return out.add(chosen);
  for (std::size_t i = from; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (used & (bit(u) | bit(v)))
      continue;
    chosen.push_back(edges[i]);
    const bool go = collect_matchings(edges, i + 1, used | bit(u) | bit(v),
                                      need - 1, chosen, out);
    chosen.pop_back();
    if (!go)
      return false;
  }
  return true;
}

void collect_generic(const Graph &host, const EdgeIndex &index,
                     const Graph &pattern, CopyCollector &out,
                     std::size_t cap) {
  const auto pattern_edges = pattern.edges();
  std::set<std::vector<std::uint16_t>> seen;
  for_each_embedding(pattern, host, [&](std::span<const Vertex> image) {
    std::vector<std::uint16_t> key;
    key.reserve(pattern_edges.size());
    for (auto [a, b] : pattern_edges)
      key.push_back(
          static_cast<std::uint16_t>(index.index(image[a], image[b])));
    std::sort(key.begin(), key.end());
    seen.insert(std::move(key));
    return seen.size() <= cap;
  });
  for (const auto &key : seen) {
    std::vector<Edge> edges;
    for (auto e : key)
      edges.push_back(index.edge(e));
    if (!out.add(edges))
      return;
  }
}

} // namespace

CopySet enumerate_copies(const Graph &host, const EdgeIndex &index,
                         const Target &t, std::size_t cap) {
  CopyCollector out(index, cap);
  const Graph &pattern = t.pattern();
  if (pattern.order() > host.order())
    return out.take();
  if (pattern.edge_count() == 0) {
    out.add({});
    return out.take();
  }

  const int p = t.parameter();
  Target::Kind kind = t.kind();
  // K_{1,1}, P_2, B_1 and F_1 have several symmetric "centers"; route them
  // to the clique enumerator which emits each copy once.
  int clique_size = p;
  if ((kind == Target::Kind::Star && p == 1) ||
      (kind == Target::Kind::Path && p == 2)) {
    kind = Target::Kind::Clique;
    clique_size = 2;
  } else if ((kind == Target::Kind::Book || kind == Target::Kind::Fan) &&
             p == 1) {
    kind = Target::Kind::Clique;
    clique_size = 3;
  }

  switch (kind) {
  case Target::Kind::Clique: {
    std::vector<Vertex> chosen;
    collect_cliques(host, host.all_vertices(), clique_size, chosen, out);
    break;
  }
  case Target::Kind::Star:
    for (Vertex c = 0; c < host.order() && !out.full(); ++c) {
      for_each_subset(host.neighbors(c), p, 0, [&](VertexSet leaves) {
        std::vector<Edge> edges;
        for (; leaves; leaves &= leaves - 1)
          edges.emplace_back(c, first_vertex(leaves));
        return out.add(edges);
      });
    }
    break;
  case Target::Kind::Path:
    for (Vertex s = 0; s < host.order() && !out.full(); ++s) {
      std::vector<Vertex> seq{s};
      collect_paths(host, seq, bit(s), p, out);
    }
    break;
  case Target::Kind::Matching: {
    std::vector<Edge> chosen;
    collect_matchings(host.edges(), 0, 0, p, chosen, out);
    break;
  }
  case Target::Kind::Book:
    for (auto [u, v] : host.edges()) {
      const VertexSet common = host.neighbors(u) & host.neighbors(v);
      const bool go = for_each_subset(common, p, 0, [&](VertexSet pages) {
        std::vector<Edge> edges{{u, v}};
        for (; pages; pages &= pages - 1) {
          edges.emplace_back(u, first_vertex(pages));
          edges.emplace_back(v, first_vertex(pages));
        }
        return out.add(edges);
      });
      if (!go)
        break;
    }
    break;
  case Target::Kind::Fan:
    for (Vertex c = 0; c < host.order() && !out.full(); ++c) {
      if (host.degree(c) < 2 * p)
        continue;
      // Rungs are a matching inside N(c); each comes with its two spokes.
      const auto rungs = host.restricted(host.neighbors(c)).edges();
      std::vector<Edge> picked;
      const std::function<bool(std::size_t, VertexSet, int)> rec =
          [&](std::size_t from, VertexSet used, int need) -> bool {
        if (need == 0) {
          std::vector<Edge> edges = picked;
          for (auto [a, b] : picked) {
            edges.emplace_back(c, a);
            edges.emplace_back(c, b);
          }
          return out.add(edges);
        }
        for (std::size_t i = from; i < rungs.size(); ++i) {
          auto [a, b] = rungs[i];
          if (used & (bit(a) | bit(b)))
            continue;
          picked.push_back(rungs[i]);
          const bool go = rec(i + 1, used | bit(a) | bit(b), need - 1);
          picked.pop_back();
          if (!go)
            return false;
        }
        return true;
      };
      rec(0, 0, p);
    }
    break;
  case Target::Kind::Generic:
    collect_generic(host, index, pattern, out, cap);
    break;
  }
  return out.take();
}

} // namespace ramsey
