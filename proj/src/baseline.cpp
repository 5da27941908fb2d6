#include "morrey/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "morrey/sequence_io.hpp"

namespace morrey {

std::string to_string(BaselineStatus status) {
  switch (status) {
    case BaselineStatus::Pinned:
      return "pinned";
    case BaselineStatus::Matched:
      return "matched";
    case BaselineStatus::Drift:
      return "drift";
  }
  return "matched";
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool within(double now, double pinned, double tol) {
  if (now == pinned) return true;
  if (!std::isfinite(now) || !std::isfinite(pinned)) return false;
  return std::fabs(now - pinned) <= tol * std::max(std::fabs(now), std::fabs(pinned));
}

}  // namespace

BaselineOutcome check_baseline(const std::string& path, const std::string& label,
                               const std::map<std::string, double>& values, double tolerance) {
  namespace fs = std::filesystem;
  BaselineOutcome outcome;
  if (!fs::exists(path)) {
    nlohmann::json doc;
    doc["label"] = label;
    doc["tolerance"] = tolerance;
    doc["pinned"] = nlohmann::json::object();
    for (const auto& [key, value] : values) doc["pinned"][key] = value;
    const fs::path parent = fs::path(path).parent_path();
    if (!parent.empty()) fs::create_directories(parent);
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write baseline " + path);
    out << doc.dump(2) << '\n';
    outcome.status = BaselineStatus::Pinned;
    return outcome;
  }

  nlohmann::json doc;
  try {
    std::ifstream in(path);
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("baseline " + path + ": " + e.what());
  }
  if (!doc.contains("pinned") || !doc["pinned"].is_object()) {
    throw FormatError("baseline " + path + " has no 'pinned' object");
  }
  const double tol = doc.value("tolerance", tolerance);
  const auto& pinned = doc["pinned"];
  for (const auto& [key, value] : values) {
    if (!pinned.contains(key)) {
      outcome.unpinned.push_back(key);
      continue;
    }
    const double ref = pinned[key].get<double>();
    if (!within(value, ref, tol)) outcome.drifts.push_back(key + ": now " + fmt(value) + ", pinned " + fmt(ref));
  }
  outcome.status = outcome.drifts.empty() ? BaselineStatus::Matched : BaselineStatus::Drift;
  return outcome;
}

}  // namespace morrey
