#include "ramsey/coloring.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/graph_spec.hpp"

#include <doctest.h>

using namespace ramsey;

TEST_CASE("monochromatic sides") {
  Coloring all_red(Graph::complete(4),
                   std::vector<EdgeColor>(6, EdgeColor::Red));
  CHECK(all_red.monochromatic_subgraph(EdgeColor::Red) == Graph::complete(4));
  CHECK(all_red.monochromatic_subgraph(EdgeColor::Blue) == Graph::empty(4));

  const Coloring h1 = h_family(3, 1);
  CHECK(h1.monochromatic_subgraph(EdgeColor::Red) ==
        realize(parse_spec("K3 u K3")));
  CHECK(h1.monochromatic_subgraph(EdgeColor::Blue).edge_count() == 9);

  const Graph host = realize(parse_spec("K5\\P5"));
  Coloring c(host, std::vector<EdgeColor>(6, EdgeColor::Blue));
  c.set(0, 2, EdgeColor::Red);
  CHECK(c.monochromatic_subgraph(EdgeColor::Red).edge_count() == 1);
  CHECK(c.monochromatic_subgraph(EdgeColor::Blue).edge_count() == 5);
}

TEST_CASE("colored degrees") {
  Coloring blue(Graph::complete(5),
                std::vector<EdgeColor>(10, EdgeColor::Blue));
  for (Vertex v = 0; v < 5; ++v)
    CHECK(blue.colored_degree(v, EdgeColor::Blue) == 4);

  const Coloring h1 = h_family(3, 1);
  for (Vertex v = 0; v < 6; ++v)
    CHECK(h1.colored_degree(v, EdgeColor::Red) == 2);

  const Graph host = realize(parse_spec("K9\\P4"));
  Coloring c(host);
  for (int e = 0; e < c.edge_count(); ++e)
    c.set(e, e % 3 ? EdgeColor::Red : EdgeColor::Blue);
  CHECK(c.colored_degree(1, EdgeColor::Red) +
            c.colored_degree(1, EdgeColor::Blue) ==
        6);
}

TEST_CASE("colors only apply to host edges") {
  Coloring c(realize(parse_spec("K5\\P5")));
  CHECK_FALSE(c.is_complete());
  CHECK(c.color(0, 2) == EdgeColor::Unassigned);
  CHECK_THROWS(c.set(0, 1, EdgeColor::Red));
  CHECK_THROWS(c.color(0, 1));
}

TEST_CASE("JSON edge lists round-trip and omit unassigned edges") {
  const Graph host = Graph::complete(4);
  Coloring c(host);
  c.set(0, 1, EdgeColor::Red);
  c.set(2, 3, EdgeColor::Blue);
  CHECK(coloring_to_json(c) == R"([[0,1,"R"],[2,3,"B"]])");
  CHECK(coloring_from_json(host, coloring_to_json(c)) == c);

  const Coloring h = h_family(2, 0);
  CHECK(coloring_from_json(h.host(), coloring_to_json(h)) == h);

  CHECK_THROWS(coloring_from_json(host, R"([[0,1,"G"]])"));
  CHECK_THROWS(coloring_from_json(host, R"([[0,9,"R"]])"));
  CHECK_THROWS(coloring_from_json(host, "not json"));
}
