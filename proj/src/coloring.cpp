#include "ramsey/coloring.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace ramsey {

EdgeIndex::EdgeIndex(const Graph &host)
    : edges_(host.edges()),
      index_(static_cast<std::size_t>(kMaxOrder * kMaxOrder), -1) {
  for (int i = 0; i < size(); ++i) {
    auto [u, v] = edges_[i];
    index_[static_cast<std::size_t>(u * kMaxOrder + v)] = i;
    index_[static_cast<std::size_t>(v * kMaxOrder + u)] = i;
  }
}

Coloring::Coloring(Graph host)
    : host_(host), index_(std::make_shared<const EdgeIndex>(host_)),
      colors_(static_cast<std::size_t>(index_->size()),
              EdgeColor::Unassigned) {}

Coloring::Coloring(Graph host, std::vector<EdgeColor> colors)
    : host_(host), index_(std::make_shared<const EdgeIndex>(host_)),
      colors_(std::move(colors)) {
  if (static_cast<int>(colors_.size()) != index_->size())
    throw std::invalid_argument("coloring: " + std::to_string(colors_.size()) +
                                " colors for " +
                                std::to_string(index_->size()) + " edges");
}

int Coloring::checked_index(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= host_.order() || v >= host_.order())
    throw std::out_of_range("coloring: vertex out of range");
  const int i = index_->index(u, v);
  if (i < 0)
    throw std::invalid_argument("coloring: (" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not a host edge");
  return i;
}

EdgeColor Coloring::color(Vertex u, Vertex v) const {
  return colors_[checked_index(u, v)];
}

void Coloring::set(Vertex u, Vertex v, EdgeColor c) {
  colors_[checked_index(u, v)] = c;
}

bool Coloring::is_complete() const {
  return std::none_of(colors_.begin(), colors_.end(),
                      [](EdgeColor c) { return c == EdgeColor::Unassigned; });
}

Graph Coloring::monochromatic_subgraph(EdgeColor c) const {
  GraphBuilder b(host_.order());
  for (int i = 0; i < edge_count(); ++i)
    if (colors_[i] == c)
      b.add_edge(index_->edge(i).first, index_->edge(i).second);
  return b.build();
}

int Coloring::colored_degree(Vertex v, EdgeColor c) const {
  if (v < 0 || v >= host_.order())
    throw std::out_of_range("colored_degree: vertex out of range");
  int d = 0;
  for (VertexSet s = host_.neighbors(v); s; s &= s - 1)
    if (colors_[index_->index(v, first_vertex(s))] == c)
      ++d;
  return d;
}

std::string coloring_to_json(const Coloring &c) {
  auto out = nlohmann::json::array();
  for (int i = 0; i < c.edge_count(); ++i) {
    if (c.color(i) == EdgeColor::Unassigned)
      continue;
    auto [u, v] = c.edge_index().edge(i);
    out.push_back({u, v, c.color(i) == EdgeColor::Red ? "R" : "B"});
  }
  return out.dump();
}

Coloring coloring_from_json(const Graph &host, const std::string &text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array())
    throw std::invalid_argument("coloring JSON must be an array");
  Coloring c(host);
  for (const auto &item : doc) {
    if (!item.is_array() || item.size() != 3)
      throw std::invalid_argument("coloring JSON entries are [u, v, color]");
    const std::string tag = item[2].get<std::string>();
    if (tag != "R" && tag != "B")
      throw std::invalid_argument("coloring JSON color must be \"R\" or \"B\"");
    c.set(item[0].get<int>(), item[1].get<int>(),
          tag == "R" ? EdgeColor::Red : EdgeColor::Blue);
  }
  return c;
}

} // namespace ramsey
