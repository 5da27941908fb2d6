#pragma once

// Regression baselines: a JSON file mapping metric names to pinned values.
// The first run writes the file; later runs compare against it and never
// modify it.

#include <map>
#include <string>
#include <vector>

namespace morrey {

inline constexpr double kBaselineTolerance = 1e-12;

enum class BaselineStatus { Pinned, Matched, Drift };

std::string to_string(BaselineStatus status);

struct BaselineOutcome {
  BaselineStatus status = BaselineStatus::Matched;
  std::vector<std::string> drifts;    ///< "key: now X, pinned Y"
  std::vector<std::string> unpinned;  ///< keys absent from an existing file
};

/// Pins `values` into `path` if the file does not exist, otherwise compares
/// every key present in both within the file's relative tolerance.
BaselineOutcome check_baseline(const std::string& path, const std::string& label,
                               const std::map<std::string, double>& values,
                               double tolerance = kBaselineTolerance);

}  // namespace morrey
