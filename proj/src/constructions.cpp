#include "ramsey/constructions.hpp"

#include "ramsey/canonical.hpp"
#include "ramsey/errors.hpp"

#include <set>
#include <string>

namespace ramsey {

WitnessReport path_critical_witness(const GraphSpec &g, const GraphSpec &h,
                                    int r) {
  const BlockParameters p = block_parameters(g, h, r);
  const GraphSpec host_spec = GraphSpec::minus(GraphSpec::complete(r),
                                               GraphSpec::path(p.t * p.n));
  const Graph host = realize(host_spec);

  // block[v]: which red block vertex v belongs to.
  std::vector<int> block;
  int id = 0;
  const auto add_block = [&](int size) {
    for (int i = 0; i < size; ++i)
      block.push_back(id);
    ++id;
  };
  for (int i = 0; i < p.t; ++i)
    add_block(p.n);
  for (int i = 0; i < p.k - p.t - 1; ++i)
    add_block(p.n - 1);
  add_block(p.s - 1);
  if (static_cast<int>(block.size()) != r)
    throw VerificationError("path_critical_witness: blocks cover " +
                            std::to_string(block.size()) + " of " +
                            std::to_string(r) + " vertices");

  Coloring c(host);
  for (int e = 0; e < c.edge_count(); ++e) {
    auto [u, v] = c.edge_index().edge(e);
    c.set(e, block[u] == block[v] ? EdgeColor::Red : EdgeColor::Blue);
  }

  WitnessReport report{c, host_spec, false, false, p};
  report.red_free = !contains_target(c.monochromatic_subgraph(EdgeColor::Red),
                                     Target::from_spec(g));
  report.blue_free = !contains_target(
      c.monochromatic_subgraph(EdgeColor::Blue), Target::from_spec(h));
  if (!report.red_free || !report.blue_free)
    throw VerificationError("path_critical_witness(" + to_string(g) + ", " +
                            to_string(h) + ", r=" + std::to_string(r) +
                            "): coloring is not free");
  return report;
}

Coloring h_family(int n, int i) {
  if (n < 2)
    throw std::invalid_argument("h_family: n must be at least 2");
  if (i < 0 || i > h_family_last_index(n))
    throw std::out_of_range("h_family: index " + std::to_string(i) +
                            " outside 0.." +
                            std::to_string(h_family_last_index(n)));
  const int split = 2 * i + 1;
  Coloring c(Graph::complete(2 * n));
  for (int e = 0; e < c.edge_count(); ++e) {
    auto [u, v] = c.edge_index().edge(e);
    c.set(e, (u < split) == (v < split) ? EdgeColor::Red : EdgeColor::Blue);
  }
  if (contains_target(c.monochromatic_subgraph(EdgeColor::Red),
                      Target::matching(n)) ||
      contains_target(c.monochromatic_subgraph(EdgeColor::Blue),
                      Target::clique(3)))
    throw VerificationError("h_family(" + std::to_string(n) + ", " +
                            std::to_string(i) + ") is not free");
  return c;
}

namespace {

class FreeEnumerator {
public:
  FreeEnumerator(const Graph &host, const Target &red, const Target &blue)
      : host_(host), index_(host), red_target_(red), blue_target_(blue),
        red_(host.order()), blue_(host.order()),
        colors_(static_cast<std::size_t>(index_.size()),
                EdgeColor::Unassigned) {}

  FreeColorings run() {
    // Edgeless targets are present in every coloring of a large enough host.
    if (!contains_target(red_.build(), red_target_) &&
        !contains_target(blue_.build(), blue_target_))
      rec(0);
    return std::move(out_);
  }

private:
  void rec(int e) {
    if (e == index_.size()) {
      ++out_.labeled;
      Coloring c(host_, colors_);
      if (seen_.insert(canonical_label(c).key).second)
        out_.classes.push_back(std::move(c));
      return;
    }
    auto [u, v] = index_.edge(e);
    red_.add_edge(u, v);
    if (!contains_target(red_.build(), red_target_)) {
      colors_[e] = EdgeColor::Red;
      rec(e + 1);
    }
    red_.remove_edge(u, v);
    blue_.add_edge(u, v);
    if (!contains_target(blue_.build(), blue_target_)) {
      colors_[e] = EdgeColor::Blue;
      rec(e + 1);
    }
    blue_.remove_edge(u, v);
    colors_[e] = EdgeColor::Unassigned;
  }

  const Graph &host_;
  EdgeIndex index_;
  const Target &red_target_;
  const Target &blue_target_;
  GraphBuilder red_;
  GraphBuilder blue_;
  std::vector<EdgeColor> colors_;
  std::set<std::string> seen_;
  FreeColorings out_;
};

} // namespace

FreeColorings enumerate_free_colorings(const Graph &host, const Target &red,
                                       const Target &blue) {
  if (host.edge_count() > kEnumerationEdgeLimit)
    throw LimitError("enumerate_free_colorings: " +
                     std::to_string(host.edge_count()) + " host edges exceed " +
                     std::to_string(kEnumerationEdgeLimit));
  return FreeEnumerator(host, red, blue).run();
}

} // namespace ramsey
