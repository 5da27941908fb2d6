#pragma once

// Runs one configured experiment: writes <out>/<task>.csv and
// <out>/<task>.json and enforces the baseline when one is configured.

#include <string>

#include "json.hpp"
#include "morrey/config.hpp"

namespace morrey {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2, kExitResource = 3 };

struct RunOutcome {
  int exit_code = kExitOk;
  nlohmann::json summary;
  std::string csv_path;
  std::string json_path;
};

/// Validates `config` (after filling task defaults) and runs it. Domain and
/// format problems surface as exceptions; the caller maps them to exit codes.
RunOutcome run_experiment(ExperimentConfig config);

}  // namespace morrey
