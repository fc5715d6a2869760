#include "ramsey/formulas.hpp"

#include "ramsey/containment.hpp"
#include "ramsey/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <span>

namespace ramsey {

namespace {

void require_order(const Graph &g, int limit, const char *what) {
  if (g.order() > limit)
    throw LimitError(std::string(what) + ": order " +
                     std::to_string(g.order()) + " exceeds " +
                     std::to_string(limit));
}

int dsatur_colors(const Graph &g) {
  const int n = g.order();
  std::array<int, kMaxOrder> color;
  color.fill(-1);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    int pick_sat = -1, pick_deg = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] >= 0)
        continue;
      std::uint64_t seen = 0;
      for (VertexSet s = g.neighbors(v); s; s &= s - 1)
        if (color[first_vertex(s)] >= 0)
          seen |= std::uint64_t{1} << color[first_vertex(s)];
      const int sat = std::popcount(seen);
      if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = g.degree(v);
      }
    }
    std::uint64_t seen = 0;
    for (VertexSet s = g.neighbors(pick); s; s &= s - 1)
      if (color[first_vertex(s)] >= 0)
        seen |= std::uint64_t{1} << color[first_vertex(s)];
    color[pick] = std::countr_one(seen);
    used = std::max(used, color[pick] + 1);
  }
  return used;
}

std::vector<Vertex> degree_order(const Graph &g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

/// Proper colorings with at most k colors, colors opened in order (each
/// partition visited once). `visit` sees the class sizes of complete
/// colorings and returns false to stop.
class ColoringEnumerator {
public:
  ColoringEnumerator(const Graph &g, int k)
      : g_(g), k_(k), order_(degree_order(g)) {
    class_members_.fill(0);
    sizes_.fill(0);
  }

  template <class Visit, class Prune>
  void run(const Visit &visit, const Prune &prune) {
    stopped_ = false;
    rec(0, 0, visit, prune);
  }

private:
  template <class Visit, class Prune>
  void rec(std::size_t depth, int opened, const Visit &visit,
           const Prune &prune) {
    if (stopped_)
      return;
    if (depth == order_.size()) {
      if (!visit(std::span<const int>(sizes_.data(),
                                      static_cast<std::size_t>(opened))))
        stopped_ = true;
      return;
    }
    if (prune(std::span<const int>(sizes_.data(),
                                   static_cast<std::size_t>(opened)),
              order_.size() - depth))
      return;
    const Vertex v = order_[depth];
    const int limit = std::min(k_, opened + 1);
    for (int c = 0; c < limit && !stopped_; ++c) {
      if (class_members_[c] & g_.neighbors(v))
        continue;
      class_members_[c] |= bit(v);
      ++sizes_[c];
      rec(depth + 1, std::max(opened, c + 1), visit, prune);
      --sizes_[c];
      class_members_[c] &= ~bit(v);
    }
  }

  const Graph &g_;
  int k_;
  std::vector<Vertex> order_;
  std::array<VertexSet, kMaxOrder> class_members_;
  std::array<int, kMaxOrder> sizes_;
  bool stopped_ = false;
};

bool colorable(const Graph &g, int k) {
  bool found = false;
  ColoringEnumerator(g, k).run(
      [&](std::span<const int>) {
        found = true;
        return false;
      },
      [](std::span<const int>, std::size_t) { return false; });
  return found;
}

} // namespace

int chromatic_number(const Graph &g) {
  require_order(g, kChromaticNumberOrder, "chromatic_number");
  if (g.order() == 0)
    return 0;
  const int lower = std::max(1, clique_number(g));
  const int upper = dsatur_colors(g);
  for (int k = lower; k < upper; ++k)
    if (colorable(g, k))
      return k;
  return upper;
}

int chromatic_surplus(const Graph &g) {
  require_order(g, kChromaticSurplusOrder, "chromatic_surplus");
  if (g.order() == 0)
    return 0;
  const int chi = chromatic_number(g);
  int best = g.order() / chi;
  ColoringEnumerator(g, chi).run(
      [&](std::span<const int> sizes) {
        if (static_cast<int>(sizes.size()) == chi)
          best = std::min(best, *std::min_element(sizes.begin(), sizes.end()));
        return best > 1;
      },
      [&](std::span<const int> sizes, std::size_t remaining) {
        // Unopened classes still need a vertex each.
        if (static_cast<int>(remaining) < chi - static_cast<int>(sizes.size()))
          return true;
        // Classes only grow: once all are open and at least `best`, the
        // minimum cannot improve.
        return static_cast<int>(sizes.size()) == chi &&
               *std::min_element(sizes.begin(), sizes.end()) >= best;
      });
  return best;
}

ChromaticData chromatic_data(const Graph &g) {
  return {chromatic_number(g), chromatic_surplus(g)};
}

int burr_bound(const GraphSpec &g, const GraphSpec &h) {
  const Graph gg = realize(g);
  const Graph hh = realize(h);
  if (!is_connected(gg))
    throw HypothesisError("burr_bound: " + to_string(g) + " is not connected");
  const ChromaticData data = chromatic_data(hh);
  if (gg.order() < data.surplus)
    throw HypothesisError("burr_bound: |V(G)| = " +
                          std::to_string(gg.order()) + " < s(H) = " +
                          std::to_string(data.surplus));
  return (data.chi - 1) * (gg.order() - 1) + data.surplus;
}

bool is_good(const GraphSpec &g, const GraphSpec &h, int ramsey_value) {
  return burr_bound(g, h) == ramsey_value;
}

BlockParameters block_parameters(const GraphSpec &g, const GraphSpec &h,
                                 int r) {
  const Graph gg = realize(g);
  const Graph hh = realize(h);
  const int n = gg.order();
  if (!is_connected(gg))
    throw HypothesisError(to_string(g) + " is not connected");
  if (stats(gg).max_degree != n - 1)
    throw HypothesisError("Delta(G) = " + std::to_string(stats(gg).max_degree) +
                          " != n - 1 = " + std::to_string(n - 1));
  const ChromaticData data = chromatic_data(hh);
  BlockParameters p{n, data.chi, data.surplus, 0, r};
  if (n < p.s)
    throw HypothesisError("n = " + std::to_string(n) + " < s(H) = " +
                          std::to_string(p.s));
  const int ceiling = (p.k - 1) * n + p.s - 1;
  if (r > ceiling)
    throw HypothesisError("r = " + std::to_string(r) +
                          " > (chi(H)-1)n + s(H) - 1 = " +
                          std::to_string(ceiling));
  p.t = r - (p.k - 1) * (n - 1) - p.s + 1;
  if (p.t < 1)
    throw HypothesisError("r = " + std::to_string(r) +
                          " is below the Burr bound " +
                          std::to_string(r - p.t + 1));
  return p;
}

int path_critical_upper_bound(const GraphSpec &g, const GraphSpec &h, int r) {
  return block_parameters(g, h, r).upper_bound();
}

namespace {

using Kind = GraphSpec::Kind;

/// A catalog rule sees (a, b) leaf parameters of the matched kinds.
struct Rule {
  Kind first;
  Kind second;
  std::function<std::optional<int>(int, int)> value;
  std::string source;
};

std::optional<KnownValue> lookup(const std::vector<Rule> &rules,
                                 const GraphSpec &red, const GraphSpec &blue) {
  if (!red.is_leaf() || !blue.is_leaf())
    return std::nullopt;
  for (const Rule &rule : rules) {
    const GraphSpec *a = nullptr, *b = nullptr;
    if (red.kind() == rule.first && blue.kind() == rule.second) {
      a = &red;
      b = &blue;
    } else if (blue.kind() == rule.first && red.kind() == rule.second) {
      a = &blue;
      b = &red;
    } else {
      continue;
    }
    if (auto v = rule.value(a->parameter(), b->parameter()))
      return KnownValue{*v, rule.source};
  }
  return std::nullopt;
}

const std::vector<Rule> &ramsey_rules() {
  static const std::vector<Rule> rules = {
      {Kind::Star, Kind::Complete,
       [](int n, int m) -> std::optional<int> {
         if (n < 1 || m < 1)
           return std::nullopt;
         return n * (m - 1) + 1;
       },
       "star-clique: R(K1n,Km) = n(m-1)+1 (Chvatal)"},
      {Kind::Star, Kind::Star,
       [](int m, int n) -> std::optional<int> {
         return m + n - ((m % 2 == 0 && n % 2 == 0) ? 1 : 0);
       },
       "star-star: R(K1m,K1n) = m+n-e, e=1 iff m,n even (classical, "
       "re-verified by search for m,n <= 4)"},
      {Kind::Star, Kind::Book,
       [](int n, int m) -> std::optional<int> {
         if (m < 2 || n < 3 * m - 4)
           return std::nullopt;
         return 2 * n + 1;
       },
       "star-book: R(K1n,Bm) = 2n+1 for m >= 2, n >= 3m-4 (Erdos et al.)"},
      {Kind::Fan, Kind::Complete,
       [](int n, int m) -> std::optional<int> {
         if (m != 3 || n < 2)
           return std::nullopt;
         return 4 * n + 1;
       },
       "fan-triangle: R(Fn,K3) = 4n+1 for n >= 2 (Li, Rousseau)"},
      {Kind::Matching, Kind::Complete,
       [](int n, int m) -> std::optional<int> {
         if (m != 3 || n < 2)
           return std::nullopt;
         return 2 * n + 1;
       },
       "matching-triangle: R(nK2,K3) = 2n+1 for n >= 2 (Lorimer)"},
      {Kind::Star, Kind::Path,
       [](int m, int n) -> std::optional<int> {
         if (n < 2 * m + 1)
           return std::nullopt;
         return n;
       },
       "star-path: R(K1m,Pn) = n for n >= 2m+1 (Parsons)"},
      {Kind::Matching, Kind::Matching,
       [](int a, int b) -> std::optional<int> {
         const int m = std::min(a, b), n = std::max(a, b);
         return 2 * n + m - 1;
       },
       "matching-matching: R(mK2,nK2) = 2n+m-1 for n >= m >= 1 "
       "(Cockayne, Lorimer)"},
  };
  return rules;
}

const std::vector<Rule> &path_critical_rules() {
  static const std::vector<Rule> rules = {
      {Kind::Star, Kind::Complete,
       [](int n, int m) -> std::optional<int> {
         if (n < 2 || m < 2)
           return std::nullopt;
         return n;
       },
       "path-critical star-clique: n for m, n >= 2"},
      {Kind::Star, Kind::Star,
       [](int m, int n) -> std::optional<int> {
         if (m == 1 && n == 1)
           return std::nullopt;
         return (m % 2 == 0 && n % 2 == 0) ? 0 : m + n - 1;
       },
       "path-critical star-star: 0 if m, n both even, else m+n-1"},
      {Kind::Star, Kind::Book,
       [](int n, int m) -> std::optional<int> {
         if (m < 2 || n < 3 * m + 2)
           return std::nullopt;
         return n;
       },
       "path-critical star-book: n for m >= 2, n >= 3m+2"},
      {Kind::Fan, Kind::Complete,
       [](int n, int m) -> std::optional<int> {
         if (m != 3 || n < 2)
           return std::nullopt;
         return 2 * n;
       },
       "path-critical fan-triangle: 2n for n >= 2"},
      {Kind::Star, Kind::Path,
       [](int m, int n) -> std::optional<int> {
         if (n < 2 * m + 3)
           return std::nullopt;
         return n;
       },
       "path-critical star-path: n for n >= 2m+3"},
      {Kind::Matching, Kind::Matching,
       [](int a, int b) -> std::optional<int> {
         const int m = std::min(a, b), n = std::max(a, b);
         if (n < 2)
           return std::nullopt;
         return 2 * n + m - 1;
       },
       "path-critical matching-matching: 2n+m-1 for n >= m >= 1, n >= 2"},
  };
  return rules;
}

} // namespace

std::optional<KnownValue> known_ramsey(const GraphSpec &red,
                                       const GraphSpec &blue) {
  return lookup(ramsey_rules(), red, blue);
}

std::optional<KnownValue> closed_form_path_critical(const GraphSpec &red,
                                                    const GraphSpec &blue) {
  return lookup(path_critical_rules(), red, blue);
}

} // namespace ramsey
