#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ramsey {

inline constexpr int kReportVersion = 1;

enum class Provenance { Search, Catalog, Construction };
std::string to_string(Provenance p);

/// One reported value and where it came from.
struct ReportValue {
  std::string name;
  nlohmann::json value;
  Provenance provenance;
  /// Literature source for catalog values, empty otherwise.
  std::string source;
};

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<ReportValue> outputs;
  nlohmann::json stats = nlohmann::json::object();
  /// Command-specific payload (counterexample, check table, ...).
  nlohmann::json details = nlohmann::json::object();

  void add(std::string name, nlohmann::json value, Provenance p,
           std::string source = {});
};

/// {"schema", "version", "command", "inputs", "outputs", "stats", "details"}.
nlohmann::json to_json(const RunReport &report);

} // namespace ramsey
