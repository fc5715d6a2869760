// ramsey: arrowing queries, Ramsey and critical numbers, witness colorings
// and the reproduction suite.
//
// Exit codes: 0 pass/arrows, 1 counterexample/fail, 2 indeterminate,
// 3 usage error.

#include "ramsey/arrowing.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/graph_spec.hpp"
#include "ramsey/report.hpp"
#include "ramsey/verification.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace ramsey;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kIndeterminate = 2, kUsage = 3 };

struct SearchFlags {
  std::uint64_t budget = 100'000'000;
  bool deterministic = false;
  int jobs = 1;
  std::string engine = "auto";

  void attach(CLI::App *cmd) {
    cmd->add_option("--budget", budget, "Search node budget")
        ->capture_default_str();
    cmd->add_flag("--deterministic", deterministic,
                  "Single worker, canonical order (lex-least counterexample)");
    cmd->add_option("--jobs", jobs, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--engine", engine,
                    "auto, dfs or cdcl (auto: cdcl unless --deterministic)")
        ->check(CLI::IsMember({"auto", "dfs", "cdcl"}))
        ->capture_default_str();
  }

  SearchOptions options() const {
    SearchOptions o;
    o.node_budget = budget;
    o.deterministic = deterministic;
    o.jobs = jobs;
    o.engine = parse_engine(engine);
    return o;
  }
};

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
  if (text.empty() || text.back() != '\n')
    out << '\n';
}

json stats_json(const SearchStats &s) {
  return {{"nodes", s.nodes},
          {"runtime_ms", s.runtime_ms},
          {"propagation_mode", to_string(s.mode)},
          {"budget_exhausted", s.budget_exhausted},
          {"red_copies", s.red_copies},
          {"blue_copies", s.blue_copies},
          {"workers", s.workers},
          {"engine", to_string(s.engine)},
          {"conflicts", s.conflicts}};
}

void emit(const RunReport &report, bool as_json, const std::string &text) {
  if (as_json) {
    std::cout << to_json(report).dump(2) << '\n';
    return;
  }
  for (const ReportValue &v : report.outputs) {
    std::cout << v.name << " = "
              << (v.value.is_string() ? v.value.get<std::string>()
                                      : v.value.dump())
              << " (" << to_string(v.provenance);
    if (!v.source.empty())
      std::cout << ": " << v.source;
    std::cout << ")\n";
  }
  std::cout << text;
}

// ---------------------------------------------------------------------------

struct ArrowsCmd {
  std::string host, red, blue;
  std::string witness_path, graph6_path, dimacs_path;
  SearchFlags search;

  int run(bool as_json) const {
    const GraphSpec host_spec = parse_spec(host);
    const GraphSpec red_spec = parse_spec(red), blue_spec = parse_spec(blue);
    const Graph g = realize(host_spec);
    const Target rt = Target::from_spec(red_spec),
                 bt = Target::from_spec(blue_spec);

    RunReport report;
    report.command = "arrows";
    report.inputs = {{"host", to_string(host_spec)},
                     {"red", to_string(red_spec)},
                     {"blue", to_string(blue_spec)}};
    std::ostringstream text;

    if (!dimacs_path.empty()) {
      write_file(dimacs_path, export_dimacs(g, rt, bt));
      report.details["dimacs"] = dimacs_path;
    }

    const ArrowingResult r = arrows(g, rt, bt, search.options());
    report.add("verdict", to_string(r.verdict), Provenance::Search);
    report.stats = stats_json(r.stats);
    if (r.counterexample) {
      report.details["counterexample"] =
          json::parse(coloring_to_json(*r.counterexample));
      report.details["counterexample_red_graph6"] = graph6_encode(
          r.counterexample->monochromatic_subgraph(EdgeColor::Red));
      if (!witness_path.empty())
        write_file(witness_path, coloring_to_json(*r.counterexample));
      if (!graph6_path.empty())
        write_file(graph6_path,
                   report.details["counterexample_red_graph6"].get<std::string>());
    } else if (!witness_path.empty() || !graph6_path.empty()) {
      std::cerr << "no counterexample; nothing written\n";
    }
    text << "nodes = " << r.stats.nodes << "\nruntime_ms = " << std::fixed
         << std::setprecision(1) << r.stats.runtime_ms
         << "\npropagation = " << to_string(r.stats.mode) << '\n';
    emit(report, as_json, text.str());

    switch (r.verdict) {
    case Verdict::Arrows:
      return kPass;
    case Verdict::Counterexample:
      return kFail;
    case Verdict::Indeterminate:
      return kIndeterminate;
    }
    return kFail;
  }
};

const char *critical_symbol(DeletionFamily f) {
  switch (f) {
  case DeletionFamily::Path:
    return "R_pi";
  case DeletionFamily::Matching:
    return "R_mu";
  case DeletionFamily::Clique:
    return "R_omega";
  }
  return "?";
}

struct NumbersCmd {
  std::string red, blue;
  std::string family = "path";
  int max_r = 64;
  bool no_burr_start = false;
  SearchFlags search;

  int run(bool as_json) const {
    const GraphSpec red_spec = parse_spec(red), blue_spec = parse_spec(blue);
    const Target rt = Target::from_spec(red_spec),
                 bt = Target::from_spec(blue_spec);
    std::optional<DeletionFamily> fam;
    if (family != "none")
      fam = parse_family(family);

    RunReport report;
    report.command = "numbers";
    report.inputs = {{"red", to_string(red_spec)},
                     {"blue", to_string(blue_spec)},
                     {"family", family},
                     {"max_r", max_r}};
    std::ostringstream text;

    RamseyOptions ro;
    ro.search = search.options();
    ro.max_r = max_r;
    ro.start_from_burr = !no_burr_start;
    const RamseyResult rr = ramsey_number(rt, bt, ro);
    report.stats["ramsey"] = {{"nodes", rr.nodes},
                              {"runtime_ms", rr.runtime_ms},
                              {"start", rr.start},
                              {"burr_start", rr.burr_start}};

    int code = kPass;
    if (rr.status == SearchStatus::Found)
      report.add("R", rr.value, Provenance::Search);
    if (rr.catalog)
      report.add("R", *rr.catalog, Provenance::Catalog,
                 rr.catalog_source.value_or(""));

    if (rr.status == SearchStatus::Indeterminate) {
      text << "R: search budget exhausted\n";
      code = kIndeterminate;
    } else if (rr.status == SearchStatus::NotFoundWithinBound) {
      text << "R: K_" << max_r << " does not arrow\n";
      code = kFail;
    } else if (!rr.catalog_agrees()) {
      std::cerr << "error: R by search (" << rr.value
                << ") disagrees with catalog (" << *rr.catalog << ")\n";
      code = kFail;
    }

    if (fam && code == kPass) {
      const CriticalResult cr =
          critical_number(rt, bt, *fam, rr.value, search.options());
      const std::string sym = critical_symbol(*fam);
      json scan = json::array();
      for (auto [index, verdict] : cr.scan)
        scan.push_back({index, to_string(verdict)});
      report.details["scan"] = scan;
      report.details["convention"] = cr.convention;
      report.stats["critical"] = {{"nodes", cr.nodes},
                                  {"runtime_ms", cr.runtime_ms}};
      if (cr.status == SearchStatus::Found)
        report.add(sym, cr.value, Provenance::Search);
      else {
        text << sym << ": search budget exhausted\n";
        code = kIndeterminate;
      }
      if (*fam == DeletionFamily::Path) {
        if (const auto closed = closed_form_path_critical(red_spec, blue_spec)) {
          report.add(sym, closed->value, Provenance::Catalog, closed->source);
          if (cr.status == SearchStatus::Found && closed->value != cr.value) {
            std::cerr << "error: " << sym << " by search (" << cr.value
                      << ") disagrees with catalog (" << closed->value
                      << ")\n";
            code = kFail;
          }
        }
      }
    }
    emit(report, as_json, text.str());
    return code;
  }
};

struct WitnessCmd {
  std::string red, blue;
  int r = 0;
  std::string json_path, graph6_path;

  int run(bool as_json) const {
    const GraphSpec red_spec = parse_spec(red), blue_spec = parse_spec(blue);
    int order = r;
    if (order == 0) {
      const auto known = known_ramsey(red_spec, blue_spec);
      if (!known)
        throw std::invalid_argument("no catalog Ramsey number for (" +
                                    to_string(red_spec) + ", " +
                                    to_string(blue_spec) + "); pass --r");
      order = known->value;
    }
    const WitnessReport w = path_critical_witness(red_spec, blue_spec, order);
    const std::string red_g6 =
        graph6_encode(w.coloring.monochromatic_subgraph(EdgeColor::Red));

    RunReport report;
    report.command = "witness";
    report.inputs = {{"red", to_string(red_spec)},
                     {"blue", to_string(blue_spec)},
                     {"r", order}};
    report.add("host", to_string(w.host_spec), Provenance::Construction);
    report.add("red_free", w.red_free, Provenance::Construction);
    report.add("blue_free", w.blue_free, Provenance::Construction);
    report.add(std::string("R_pi upper bound"), w.parameters.upper_bound(),
               Provenance::Construction);
    const BlockParameters &p = w.parameters;
    report.details = {
        {"parameters",
         {{"n", p.n}, {"k", p.k}, {"s", p.s}, {"t", p.t}, {"r", p.r}}},
        {"coloring", json::parse(coloring_to_json(w.coloring))},
        {"red_graph6", red_g6}};
    if (!json_path.empty())
      write_file(json_path, report.details.dump(2));
    if (!graph6_path.empty())
      write_file(graph6_path, red_g6);

    std::ostringstream text;
    text << "n = " << p.n << ", k = " << p.k << ", s = " << p.s
         << ", t = " << p.t << "\nred graph6 = " << red_g6 << '\n';
    emit(report, as_json, text.str());
    return kPass;
  }
};

struct VerifyCmd {
  std::string level = "quick";
  int jobs = 1;
  std::uint64_t stretch_budget = 2'000'000'000;
  std::uint64_t seed = 20240611;
  std::string fault;
  std::string out_path;

  int run() const {
    if (fault == "matching")
      testing::set_matching_fault(true);
    else if (!fault.empty())
      throw std::invalid_argument("unknown fault: " + fault);

    SuiteOptions opts;
    opts.level = level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
    opts.jobs = jobs;
    opts.stretch_budget = stretch_budget;
    opts.seed = seed;

    const SuiteReport suite = run_acceptance(opts, [](const CheckResult &r) {
      std::cerr << std::setw(2) << r.id << "  " << std::left << std::setw(13)
                << to_string(r.status) << std::right << std::fixed
                << std::setprecision(2) << std::setw(8)
                << r.runtime_ms / 1000 << "s  " << r.name << '\n';
      if (r.status != CheckStatus::Pass)
        for (const std::string &d : r.details)
          std::cerr << "      " << d << '\n';
    });
    for (const std::string &note : suite.notes)
      std::cerr << "note: " << note << '\n';

    RunReport report;
    report.command = "verify-paper";
    report.inputs = {{"level", level}, {"seed", seed}, {"jobs", jobs}};
    report.add("passed", suite.passed, Provenance::Search);
    report.details = to_json(suite);
    double total = 0;
    for (const CheckResult &r : suite.results)
      total += r.runtime_ms;
    report.stats["runtime_ms"] = total;

    const std::string text = to_json(report).dump(2);
    std::cout << text << '\n';
    if (!out_path.empty())
      write_file(out_path, text);
    return suite.passed ? kPass : kFail;
  }
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Ramsey arrowing search and verification"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the run report as JSON");

  ArrowsCmd arrows_cmd;
  auto *arrows_app = app.add_subcommand("arrows", "Decide host -> (red, blue)");
  arrows_app->add_option("--host", arrows_cmd.host, "Host graph spec")
      ->required();
  arrows_app->add_option("--red", arrows_cmd.red, "Red target spec")
      ->required();
  arrows_app->add_option("--blue", arrows_cmd.blue, "Blue target spec")
      ->required();
  arrows_app->add_option("--emit-witness", arrows_cmd.witness_path,
                         "Write the counterexample coloring as JSON");
  arrows_app->add_option("--emit-graph6", arrows_cmd.graph6_path,
                         "Write the counterexample's red graph as graph6");
  arrows_app->add_option("--dimacs", arrows_cmd.dimacs_path,
                         "Write the CNF encoding");
  arrows_cmd.search.attach(arrows_app);

  NumbersCmd numbers_cmd;
  auto *numbers_app =
      app.add_subcommand("numbers", "Ramsey number and a critical number");
  numbers_app->add_option("--red", numbers_cmd.red, "Red target spec")
      ->required();
  numbers_app->add_option("--blue", numbers_cmd.blue, "Blue target spec")
      ->required();
  numbers_app
      ->add_option("--family", numbers_cmd.family, "Deletion family")
      ->check(CLI::IsMember({"path", "matching", "clique", "none"}))
      ->capture_default_str();
  numbers_app->add_option("--max-r", numbers_cmd.max_r, "Largest host order")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  numbers_app->add_flag("--no-burr-start", numbers_cmd.no_burr_start,
                        "Ascend from K_1 instead of the Burr bound");
  numbers_cmd.search.attach(numbers_app);

  WitnessCmd witness_cmd;
  auto *witness_app = app.add_subcommand(
      "witness", "Block coloring of K_r minus a path, free of both targets");
  witness_app->add_option("--red", witness_cmd.red, "Red target spec")
      ->required();
  witness_app->add_option("--blue", witness_cmd.blue, "Blue target spec")
      ->required();
  witness_app->add_option("--r", witness_cmd.r,
                          "Ramsey number (default: catalog value)");
  witness_app->add_option("--json", witness_cmd.json_path,
                          "Write parameters and coloring as JSON");
  witness_app->add_option("--graph6", witness_cmd.graph6_path,
                          "Write the red graph as graph6");

  VerifyCmd verify_cmd;
  auto *verify_app =
      app.add_subcommand("verify-paper", "Run the reproduction suite");
  verify_app->add_option("--level", verify_cmd.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  verify_app->add_option("--jobs", verify_cmd.jobs, "Workers for the stretch")
      ->check(CLI::PositiveNumber);
  verify_app->add_option("--stretch-budget", verify_cmd.stretch_budget,
                         "Node budget for the stretch search")
      ->capture_default_str();
  verify_app->add_option("--seed", verify_cmd.seed, "Property suite seed")
      ->capture_default_str();
  verify_app->add_option("--out", verify_cmd.out_path,
                         "Also write the JSON report here");
  verify_app->add_option("--inject-fault", verify_cmd.fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*arrows_app)
      return arrows_cmd.run(as_json);
    if (*numbers_app)
      return numbers_cmd.run(as_json);
    if (*witness_app)
      return witness_cmd.run(as_json);
    return verify_cmd.run();
  } catch (const SpecError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const HypothesisError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Graph6Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
