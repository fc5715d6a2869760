#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ramsey {

enum class CheckStatus { Pass, Fail, Skip, Indeterminate };
std::string to_string(CheckStatus s);

enum class VerifyLevel { Quick, Full };

struct CheckResult {
  int id = 0;
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  double runtime_ms = 0;
  double limit_ms = 0;
  /// One line per sub-check, "ok: ..." or "FAIL: ...".
  std::vector<std::string> details;
};

struct Check {
  int id;
  std::string name;
  /// Stretch checks only run at VerifyLevel::Full and never fail the suite
  /// by being Indeterminate.
  bool stretch;
  double limit_seconds;
  std::function<void(CheckResult &)> run;
};

struct SuiteOptions {
  VerifyLevel level = VerifyLevel::Quick;
  /// Node budget for the stretch search.
  std::uint64_t stretch_budget = 2'000'000'000;
  int jobs = 1;
  std::uint64_t seed = 20240611;
};

/// The reproduction table, in order.
std::vector<Check> acceptance_checks(const SuiteOptions &options);

struct SuiteReport {
  std::vector<CheckResult> results;
  bool passed = true;
  std::vector<std::string> notes;
};

/// Runs every check (stretch only at Full), timing each against its limit.
/// A check over its limit fails. `on_result` fires as each check ends.
SuiteReport
run_acceptance(const SuiteOptions &options,
               const std::function<void(const CheckResult &)> &on_result = {});

nlohmann::json to_json(const SuiteReport &report);

} // namespace ramsey
