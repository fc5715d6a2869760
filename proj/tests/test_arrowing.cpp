#include "ramsey/arrowing.hpp"
#include "ramsey/graph_spec.hpp"
#include "ramsey/oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace ramsey;

namespace {

Graph host(const char *text) { return realize(parse_spec(text)); }

Target target(const char *text) { return Target::from_spec(parse_spec(text)); }

Target small_target(std::mt19937_64 &rng) {
  static const char *choices[] = {"K2", "K3", "S2", "S3", "P3", "P4",
                                  "M2", "B1", "B2", "F2", "P3 u K2"};
  std::uniform_int_distribution<int> pick(0, std::size(choices) - 1);
  return target(choices[pick(rng)]);
}

} // namespace

TEST_CASE("arrowing examples") {
  CHECK(arrows(host("K2"), target("K2"), target("K2")).verdict ==
        Verdict::Arrows);
  CHECK(arrows(host("K5\\P5"), target("M2"), target("M2")).verdict ==
        Verdict::Arrows);
  const ArrowingResult k4 = arrows(host("K4"), target("M2"), target("M2"));
  CHECK(k4.verdict == Verdict::Counterexample);
  REQUIRE(k4.counterexample);
  CHECK(k4.counterexample->is_complete());
  CHECK(arrows(host("K9\\P4"), target("F2"), target("K3")).verdict ==
        Verdict::Arrows);
  CHECK(arrows(host("K9\\P5"), target("F2"), target("K3")).verdict ==
        Verdict::Counterexample);
}

TEST_CASE("edgeless and oversized targets") {
  // K1 is in every coloring of a nonempty host.
  CHECK(arrows(host("K3"), target("K1"), target("K3")).verdict ==
        Verdict::Arrows);
  CHECK(arrows(host("E3"), target("K2"), target("K2")).verdict ==
        Verdict::Counterexample);
  CHECK(arrows(host("K4"), target("K5"), target("K5")).verdict ==
        Verdict::Counterexample);
}

TEST_CASE("search agrees with exhaustive enumeration") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> order(4, 8);
  std::uniform_real_distribution<double> density(0.3, 1.0);
  for (int trial = 0; trial < 120;) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    if (g.edge_count() > 14)
      continue;
    ++trial;
    const Target red = small_target(rng), blue = small_target(rng);
    CAPTURE(red.name());
    CAPTURE(blue.name());
    const auto naive = oracle::first_free_coloring(g, red, blue);
    SearchOptions det;
    det.deterministic = true;
    const ArrowingResult a = arrows(g, red, blue, det);
    REQUIRE((a.verdict == Verdict::Arrows) == !naive.has_value());
    if (naive)
      REQUIRE(a.counterexample->colors() == *naive);
    SearchOptions parallel;
    parallel.jobs = 3;
    REQUIRE(arrows(g, red, blue, parallel).verdict == a.verdict);
  }
}

TEST_CASE("deterministic mode is reproducible") {
  SearchOptions det;
  det.deterministic = true;
  det.jobs = 4;
  const ArrowingResult a = arrows(host("K8"), target("F2"), target("K3"), det);
  const ArrowingResult b = arrows(host("K8"), target("F2"), target("K3"), det);
  REQUIRE(a.counterexample);
  CHECK(a.counterexample == b.counterexample);
  CHECK(a.stats.nodes == b.stats.nodes);
  CHECK(a.stats.workers == 1);
}

TEST_CASE("arrowing is monotone under adding host edges") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> order(4, 7);
  std::uniform_real_distribution<double> density(0.3, 0.9);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    const Target red = small_target(rng), blue = small_target(rng);
    const bool base = arrows(g, red, blue).verdict == Verdict::Arrows;
    GraphBuilder b(g);
    for (auto [u, v] : g.complement().edges())
      b.add_edge(u, v);
    const bool full = arrows(b.build(), red, blue).verdict == Verdict::Arrows;
    REQUIRE((!base || full));
  }
}

TEST_CASE("budget exhaustion is indeterminate") {
  SearchOptions tiny;
  tiny.node_budget = 10;
  const ArrowingResult a =
      arrows(host("K9\\P4"), target("F2"), target("K3"), tiny);
  CHECK(a.verdict == Verdict::Indeterminate);
  CHECK(a.stats.budget_exhausted);
  CHECK_FALSE(a.counterexample);
}

TEST_CASE("copy-cap overflow falls back without changing verdicts") {
  SearchOptions capped;
  capped.copy_cap = 5;
  const ArrowingResult k6 = arrows(host("K6"), target("K3"), target("K3"), capped);
  CHECK(k6.stats.mode == PropagationMode::PruneOnly);
  CHECK(k6.verdict == Verdict::Arrows);
  const ArrowingResult k5 = arrows(host("K5"), target("K3"), target("K3"), capped);
  CHECK(k5.verdict == Verdict::Counterexample);

  capped.copy_cap = 12;
  const ArrowingResult partial =
      arrows(host("K5"), target("M2"), target("K3"), capped);
  CHECK(partial.stats.mode == PropagationMode::Partial);
  CHECK(partial.verdict == Verdict::Arrows);
  CHECK(arrows(host("K4"), target("M2"), target("K3"), capped).verdict ==
        Verdict::Counterexample);
}

TEST_CASE("parallel search agrees with a single worker") {
  SearchOptions par;
  par.jobs = 4;
  CHECK(arrows(host("K9\\P4"), target("F2"), target("K3"), par).verdict ==
        Verdict::Arrows);
  const ArrowingResult ce =
      arrows(host("K9\\P5"), target("F2"), target("K3"), par);
  CHECK(ce.verdict == Verdict::Counterexample);
  CHECK(ce.stats.workers > 1);
}

TEST_CASE("DIMACS export") {
  const std::string k3 = export_dimacs(host("K3"), target("K3"), target("K3"));
  CHECK(k3.find("p cnf 3 2\n") != std::string::npos);
  CHECK(k3.find("-1 -2 -3 0\n") != std::string::npos);
  CHECK(k3.find("\n1 2 3 0\n") != std::string::npos);
  CHECK(k3.find("c edge 0 1 var 1\n") != std::string::npos);

  const std::string k4 = export_dimacs(host("K4"), target("M2"), target("M2"));
  CHECK(k4.find("p cnf 6 6\n") != std::string::npos);
  CHECK(oracle::dimacs_satisfiable(k4));
  CHECK_FALSE(oracle::dimacs_satisfiable(
      export_dimacs(host("K5\\P5"), target("M2"), target("M2"))));
}

TEST_CASE("DIMACS satisfiability matches the search verdict") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> order(3, 8);
  std::uniform_real_distribution<double> density(0.3, 1.0);
  for (int trial = 0; trial < 60;) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    if (g.edge_count() > 20)
      continue;
    ++trial;
    const Target red = small_target(rng), blue = small_target(rng);
    REQUIRE(oracle::dimacs_satisfiable(export_dimacs(g, red, blue)) ==
            (arrows(g, red, blue).verdict == Verdict::Counterexample));
  }
}

TEST_CASE("Ramsey numbers by search") {
  CHECK(ramsey_number(target("S2"), target("K3")).value == 5);
  CHECK(ramsey_number(target("M2"), target("M3")).value == 7);
  CHECK(ramsey_number(target("M3"), target("M3")).value == 8);
  CHECK(ramsey_number(target("K2"), target("K3")).value == 3);
  CHECK(ramsey_number(target("K3"), target("K3")).value == 6);

  RamseyOptions from_one;
  from_one.start_from_burr = false;
  const RamseyResult r = ramsey_number(target("F2"), target("K3"), from_one);
  CHECK(r.status == SearchStatus::Found);
  CHECK(r.value == 9);
  CHECK(r.start == 1);
  CHECK(r.catalog == 9);
  CHECK(r.catalog_agrees());

  RamseyOptions low;
  low.max_r = 5;
  CHECK(ramsey_number(target("K3"), target("K3"), low).status ==
        SearchStatus::NotFoundWithinBound);
}

TEST_CASE("R(2K2, 3K2) = 7 by exhaustive enumeration") {
  CHECK_FALSE(oracle::arrows(host("K6"), target("M2"), target("M3")));
  CHECK(oracle::arrows(host("K7"), target("M2"), target("M3")));
}

TEST_CASE("critical numbers") {
  CHECK(critical_number(target("M2"), target("M2"), DeletionFamily::Path, 5)
            .value == 5);
  CHECK(critical_number(target("S2"), target("S2"), DeletionFamily::Path, 3)
            .value == 0);
  CHECK(critical_number(target("S2"), target("K3"), DeletionFamily::Path, 5)
            .value == 2);
}

TEST_CASE("critical numbers agree with an exhaustive scan") {
  struct Case {
    const char *red, *blue;
    int r;
  };
  for (const Case c : {Case{"M2", "M2", 5}, Case{"S2", "K3", 5},
                       Case{"S2", "S3", 5}, Case{"K2", "K3", 3},
                       Case{"M1", "M2", 4}}) {
    for (DeletionFamily f : {DeletionFamily::Path, DeletionFamily::Matching,
                             DeletionFamily::Clique}) {
      const int first = f == DeletionFamily::Matching ? 1 : 2;
      const int last = f == DeletionFamily::Matching ? c.r / 2 : c.r;
      int expected = 0;
      for (int i = first; i <= last; ++i) {
        if (!oracle::arrows(deletion_host(c.r, f, i), target(c.red),
                            target(c.blue)))
          break;
        expected = i;
      }
      CAPTURE(c.red);
      CAPTURE(c.blue);
      CAPTURE(to_string(f));
      CHECK(critical_number(target(c.red), target(c.blue), f, c.r).value ==
            expected);
    }
  }
}

TEST_CASE("deletion hosts") {
  CHECK(deletion_host(9, DeletionFamily::Path, 4) == host("K9\\P4"));
  CHECK(deletion_host(5, DeletionFamily::Matching, 2).edge_count() == 8);
  CHECK(deletion_host(5, DeletionFamily::Clique, 3).edge_count() == 7);
  CHECK(parse_family("matching") == DeletionFamily::Matching);
  CHECK_THROWS_AS(parse_family("cycle"), std::invalid_argument);
}
