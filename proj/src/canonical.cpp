#include "ramsey/canonical.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <tuple>

namespace ramsey {

namespace {

struct ColorRows {
  int n = 0;
  std::array<VertexSet, kMaxOrder> red{};
  std::array<VertexSet, kMaxOrder> blue{};
  std::array<VertexSet, kMaxOrder> open{};

  explicit ColorRows(const Coloring &c) : n(c.host().order()) {
    for (int e = 0; e < c.edge_count(); ++e) {
      auto [u, v] = c.edge_index().edge(e);
      auto &rows = c.color(e) == EdgeColor::Red    ? red
                   : c.color(e) == EdgeColor::Blue ? blue
                                                   : open;
      rows[u] |= bit(v);
      rows[v] |= bit(u);
    }
  }

  char code(Vertex u, Vertex v) const {
    if (red[u] & bit(v))
      return 'R';
    if (blue[u] & bit(v))
      return 'B';
    if (open[u] & bit(v))
      return '?';
    return '.';
  }
};

/// Ordered partition of the vertices, one mask per cell.
using Partition = std::vector<VertexSet>;

Partition refine(const ColorRows &rows, Partition cells) {
  for (;;) {
    Partition next;
    for (VertexSet cell : cells) {
      if (popcount(cell) == 1) {
        next.push_back(cell);
        continue;
      }
      using Signature = std::vector<int>;
      std::vector<std::pair<Signature, Vertex>> keyed;
      for (VertexSet s = cell; s; s &= s - 1) {
        const Vertex v = first_vertex(s);
        Signature sig;
        sig.reserve(cells.size() * 3);
        for (VertexSet other : cells) {
          sig.push_back(popcount(rows.red[v] & other));
          sig.push_back(popcount(rows.blue[v] & other));
          sig.push_back(popcount(rows.open[v] & other));
        }
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      VertexSet current = 0;
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first != keyed[i - 1].first) {
          next.push_back(current);
          current = 0;
        }
        current |= bit(keyed[i].second);
      }
      next.push_back(current);
    }
    if (next.size() == cells.size())
      return next;
    cells = std::move(next);
  }
}

class Canonizer {
public:
  explicit Canonizer(const ColorRows &rows) : rows_(rows) {}

  CanonicalLabel run() {
    search(refine(rows_, {low_bits(rows_.n)}));
    return std::move(*best_);
  }

private:
  void search(const Partition &cells) {
    auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) {
      return popcount(c) > 1;
    });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t at = static_cast<std::size_t>(target - cells.begin());
    for (VertexSet s = *target; s; s &= s - 1) {
      const Vertex v = first_vertex(s);
      Partition split(cells.begin(), cells.begin() + static_cast<long>(at));
      split.push_back(bit(v));
      split.push_back(*target & ~bit(v));
      split.insert(split.end(), target + 1, cells.end());
      search(refine(rows_, std::move(split)));
    }
  }

  void leaf(const Partition &cells) {
    CanonicalLabel label;
    for (VertexSet c : cells)
      label.order.push_back(first_vertex(c));
    const int n = rows_.n;
    label.key.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        label.key.push_back(rows_.code(label.order[i], label.order[j]));
    if (!best_ || label.key < best_->key)
      best_ = std::move(label);
  }

  const ColorRows &rows_;
  std::optional<CanonicalLabel> best_;
};

} // namespace

CanonicalLabel canonical_label(const Coloring &c) {
  const ColorRows rows(c);
  if (rows.n == 0)
    return {};
  return Canonizer(rows).run();
}

bool isomorphic(const Coloring &a, const Coloring &b) {
  if (a.host().order() != b.host().order() ||
      a.edge_count() != b.edge_count())
    return false;
  return canonical_label(a).key == canonical_label(b).key;
}

} // namespace ramsey
