#include "ramsey/arrowing.hpp"
#include "ramsey/cdcl.hpp"
#include "ramsey/graph_spec.hpp"
#include "ramsey/oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace ramsey;

namespace {

using Cnf = std::vector<std::vector<int>>;

std::string dimacs(int vars, const Cnf &cnf) {
  std::ostringstream out;
  out << "p cnf " << vars << ' ' << cnf.size() << '\n';
  for (const auto &c : cnf) {
    for (int l : c)
      out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

CdclSolver::Result solve(int vars, const Cnf &cnf, std::uint64_t seed,
                         std::vector<bool> *model = nullptr) {
  CdclSolver s(vars, seed);
  for (const auto &c : cnf)
    s.add_clause(c);
  const auto r = s.solve();
  if (model && r == CdclSolver::Result::Sat)
    for (int v = 1; v <= vars; ++v)
      model->push_back(s.model_value(v));
  return r;
}

bool satisfies(const Cnf &cnf, const std::vector<bool> &model) {
  for (const auto &c : cnf) {
    bool sat = false;
    for (int l : c)
      sat = sat || model[std::abs(l) - 1] == (l > 0);
    if (!sat)
      return false;
  }
  return true;
}

/// n+1 pigeons, n holes.
Cnf pigeonhole(int n) {
  const auto var = [n](int p, int h) { return p * n + h + 1; };
  Cnf cnf;
  for (int p = 0; p <= n; ++p) {
    cnf.emplace_back();
    for (int h = 0; h < n; ++h)
      cnf.back().push_back(var(p, h));
  }
  for (int h = 0; h < n; ++h)
    for (int p = 0; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q)
        cnf.push_back({-var(p, h), -var(q, h)});
  return cnf;
}

Graph host(const std::string &text) { return realize(parse_spec(text)); }
Target target(const std::string &text) {
  return Target::from_spec(parse_spec(text));
}

} // namespace

TEST_CASE("cdcl agrees with DPLL on random 3-CNF") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const int vars = 8 + trial % 13;
    const int clauses = static_cast<int>(vars * (3.6 + (trial % 7) * 0.15));
    std::uniform_int_distribution<int> pick(1, vars);
    std::bernoulli_distribution neg(0.5);
    Cnf cnf;
    for (int c = 0; c < clauses; ++c) {
      cnf.emplace_back();
      for (int k = 0; k < 3; ++k)
        cnf.back().push_back(neg(rng) ? -pick(rng) : pick(rng));
    }
    const bool expected = oracle::dimacs_satisfiable(dimacs(vars, cnf));
    for (std::uint64_t seed : {0, 7}) {
      std::vector<bool> model;
      const auto r = solve(vars, cnf, seed, &model);
      REQUIRE(r != CdclSolver::Result::Unknown);
      REQUIRE((r == CdclSolver::Result::Sat) == expected);
      if (expected)
        REQUIRE(satisfies(cnf, model));
    }
  }
}

TEST_CASE("pigeonhole formulas are unsatisfiable") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(solve(n * (n + 1), pigeonhole(n), 0) == CdclSolver::Result::Unsat);
  }
}

TEST_CASE("empty clause and decision limit") {
  CdclSolver s(2);
  CHECK(s.add_clause(std::vector<int>{1}));
  CHECK_FALSE(s.add_clause(std::vector<int>{-1}));
  CHECK(s.solve() == CdclSolver::Result::Unsat);

  CdclSolver hard(56);
  for (const auto &c : pigeonhole(7))
    hard.add_clause(c);
  SolveLimits limits;
  limits.decisions = 50;
  CHECK(hard.solve(limits) == CdclSolver::Result::Unknown);
}

TEST_CASE("engines agree on arrowing") {
  // Hosts rich in twin vertices exercise the symmetry clauses.
  const char *hosts[] = {"K6",      "K7\\P3",  "K7\\P4",  "K8\\P5",
                         "E3+E3+E2", "K9\\P4", "K9\\P5", "K2+E4",
                         "K4 u K4", "K5\\M2",  "K6\\K3",  "K1+3*K2"};
  const char *targets[] = {"K3", "F2", "M2", "S3", "P4", "B2", "K2"};
  for (const std::string h : hosts)
    for (const std::string r : targets)
      for (const std::string b : targets) {
        CAPTURE(h);
        CAPTURE(r);
        CAPTURE(b);
        SearchOptions dfs, cdcl;
        dfs.engine = SearchEngine::Dfs;
        cdcl.engine = SearchEngine::Cdcl;
        const ArrowingResult a = arrows(host(h), target(r), target(b), dfs);
        const ArrowingResult c = arrows(host(h), target(r), target(b), cdcl);
        REQUIRE(c.stats.engine == SearchEngine::Cdcl);
        REQUIRE(a.verdict == c.verdict);
        // Counterexamples are rechecked inside arrows().
        REQUIRE(c.counterexample.has_value() ==
                (c.verdict == Verdict::Counterexample));
      }
}

TEST_CASE("cdcl portfolio") {
  SearchOptions o;
  o.engine = SearchEngine::Cdcl;
  o.jobs = 4;
  const ArrowingResult a = arrows(host("K9\\P4"), target("F2"), target("K3"), o);
  CHECK(a.verdict == Verdict::Arrows);
  CHECK(a.stats.workers == 4);
  CHECK(arrows(host("K9\\P5"), target("F2"), target("K3"), o).verdict ==
        Verdict::Counterexample);
}

TEST_CASE("deterministic mode keeps the backtracking engine") {
  SearchOptions det;
  det.deterministic = true;
  det.engine = SearchEngine::Cdcl;
  CHECK(arrows(host("K5"), target("K3"), target("K3"), det).stats.engine ==
        SearchEngine::Dfs);
}
