#include "ramsey/errors.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/graph_spec.hpp"
#include "ramsey/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace ramsey;

namespace {

GraphSpec spec(const char *text) { return parse_spec(text); }

} // namespace

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number(Graph::complete(4)) == 4);
  CHECK(chromatic_number(realize(spec("B2"))) == 3);
  CHECK(chromatic_number(realize(spec("P7"))) == 2);
  CHECK(chromatic_number(realize(spec("F3"))) == 3);
  CHECK(chromatic_number(Graph::empty(3)) == 1);
  CHECK(chromatic_number(Graph::empty(0)) == 0);
  CHECK(chromatic_number(realize(spec("K3 + K3"))) == 6);
  CHECK_THROWS_AS(chromatic_number(Graph::complete(21)), LimitError);
}

TEST_CASE("chromatic surplus") {
  CHECK(chromatic_surplus(realize(spec("B2"))) == 1);
  CHECK(chromatic_surplus(realize(spec("P4"))) == 2);
  CHECK(chromatic_surplus(realize(spec("P5"))) == 2);
  CHECK(chromatic_surplus(Graph::complete(5)) == 1);
  CHECK(chromatic_surplus(realize(spec("M3"))) == 3);
  CHECK(chromatic_surplus(realize(spec("S4"))) == 1);
  CHECK(chromatic_surplus(realize(spec("E4 + E4"))) == 4);
}

TEST_CASE("chromatic data agrees with all vertex assignments") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> order(1, 7);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    const ChromaticData d = chromatic_data(g);
    REQUIRE(d.chi == oracle::chromatic_number(g));
    REQUIRE(d.surplus == oracle::chromatic_surplus(g));
  }
}

TEST_CASE("Burr bound") {
  CHECK(burr_bound(spec("F2"), spec("K3")) == 9);
  CHECK(burr_bound(spec("S3"), spec("K3")) == 7);
  CHECK(burr_bound(spec("S8"), spec("B2")) == 17);
  CHECK(burr_bound(spec("S2"), spec("P7")) == 5);
  CHECK_THROWS_AS(burr_bound(spec("K2 u K1"), spec("K3")), HypothesisError);
  CHECK_THROWS_AS(burr_bound(spec("K2"), spec("P7")), HypothesisError);
}

TEST_CASE("goodness") {
  CHECK(is_good(spec("F2"), spec("K3"), 9));
  CHECK_FALSE(is_good(spec("F2"), spec("K3"), 10));
}

TEST_CASE("block parameters") {
  const BlockParameters p = block_parameters(spec("F2"), spec("K3"), 9);
  CHECK(p.n == 5);
  CHECK(p.k == 3);
  CHECK(p.s == 1);
  CHECK(p.t == 1);
  CHECK(p.upper_bound() == 4);

  CHECK(path_critical_upper_bound(spec("F2"), spec("K3"), 9) == 4);
  CHECK(path_critical_upper_bound(spec("S3"), spec("K3"), 7) == 3);
  CHECK(path_critical_upper_bound(spec("S8"), spec("B2"), 17) == 8);
  CHECK(path_critical_upper_bound(spec("S2"), spec("K2"), 3) == 2);
}

TEST_CASE("block parameters name the failed hypothesis") {
  const auto message = [](const char *g, const char *h, int r) {
    try {
      block_parameters(parse_spec(g), parse_spec(h), r);
    } catch (const HypothesisError &e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("K2 u K1", "K3", 5).find("connected") != std::string::npos);
  CHECK(message("P4", "K3", 7).find("Delta") != std::string::npos);
  CHECK(message("S3", "K3", 6).find("Burr bound") != std::string::npos);
  CHECK(message("S3", "K3", 9).find("> (chi(H)-1)n") != std::string::npos);
  CHECK(message("S3", "K3", 7).empty());
}

TEST_CASE("catalog Ramsey numbers") {
  const auto known = [](const char *g, const char *h) {
    const auto v = known_ramsey(parse_spec(g), parse_spec(h));
    return v ? v->value : -1;
  };
  CHECK(known("F3", "K3") == 13);
  CHECK(known("K3", "F3") == 13);
  CHECK(known("S2", "P7") == 7);
  CHECK(known("S2", "B2") == 5);
  CHECK(known("S3", "K4") == 10);
  CHECK(known("S2", "S2") == 3);
  CHECK(known("S3", "S2") == 5);
  CHECK(known("M2", "M3") == 7);
  CHECK(known("M3", "M3") == 8);
  CHECK(known("M3", "K3") == 7);
  CHECK(known("S8", "B2") == 17);
  CHECK(known("K3", "K3") == -1);
  CHECK(known("S2", "P4") == -1);
  CHECK(known("F1", "K3") == -1);
  CHECK_FALSE(known_ramsey(spec("F3"), spec("K3"))->source.empty());
}

TEST_CASE("closed-form path-critical numbers") {
  const auto closed = [](const char *g, const char *h) {
    const auto v = closed_form_path_critical(parse_spec(g), parse_spec(h));
    return v ? v->value : -1;
  };
  CHECK(closed("M2", "M3") == 7);
  CHECK(closed("S2", "S2") == 0);
  CHECK(closed("F3", "K3") == 6);
  CHECK(closed("S3", "K3") == 3);
  CHECK(closed("S2", "S3") == 4);
  CHECK(closed("S8", "B2") == 8);
  CHECK(closed("S2", "P7") == 7);
  CHECK(closed("S1", "S1") == -1);
  CHECK(closed("K3", "K3") == -1);
}
