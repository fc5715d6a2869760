#include "ramsey/report.hpp"

namespace ramsey {

std::string to_string(Provenance p) {
  switch (p) {
  case Provenance::Search:
    return "search";
  case Provenance::Catalog:
    return "catalog";
  case Provenance::Construction:
    return "construction";
  }
  return "?";
}

void RunReport::add(std::string name, nlohmann::json value, Provenance p,
                    std::string source) {
  outputs.push_back({std::move(name), std::move(value), p, std::move(source)});
}

nlohmann::json to_json(const RunReport &report) {
  nlohmann::json outputs = nlohmann::json::array();
  for (const ReportValue &v : report.outputs) {
    nlohmann::json entry = {{"name", v.name},
                            {"value", v.value},
                            {"provenance", to_string(v.provenance)}};
    if (!v.source.empty())
      entry["source"] = v.source;
    outputs.push_back(std::move(entry));
  }
  return {{"schema", "ramsey-run-report"},
          {"version", kReportVersion},
          {"command", report.command},
          {"inputs", report.inputs},
          {"outputs", outputs},
          {"stats", report.stats},
          {"details", report.details}};
}

} // namespace ramsey
