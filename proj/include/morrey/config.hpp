#pragma once

// Experiment configuration: an INI file with the sections [run], [params],
// [generator] and [output]. Unknown sections or keys are rejected. Lines
// starting with '#' or ';' are comments.

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "morrey/generators.hpp"
#include "morrey/lattice.hpp"
#include "morrey/maximal.hpp"

namespace morrey {

/// Malformed or out-of-domain configuration (a usage error).
class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class Task { Norm, Maximal, Riesz, FsCheck, Sandwich, VerifyAll, Gen };

std::string to_string(Task task);
Task parse_task(const std::string& name);
const std::vector<std::string>& task_names();

struct ExperimentConfig {
  std::optional<Task> task;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> alpha;
  std::vector<MaximalVariant> variants = {MaximalVariant::Odd};
  std::optional<std::int64_t> margin;
  std::size_t trials = 1000;
  bool phi_equals_x = false;
  std::size_t adversarial_iterations = 0;
  std::vector<double> radii = {1, 2, 4, 8};
  int max_dim = 2;
  double scale = 1.0;
  std::uint64_t cell_limit = kDefaultCellLimit;

  GeneratorSpec generator;
  std::string input;  ///< sequence file; replaces the generator when set

  std::string out_dir = "results";
  std::string baseline;
  bool timestamp = true;

  /// Fills unset p, q, alpha and margin with the defaults of `task`.
  void apply_task_defaults();

  /// Checks the hypotheses of the chosen task; throws ConfigError naming the
  /// violated condition.
  void validate() const;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

/// Documented schema, one "section.key: description" line per key.
std::string config_schema();

}  // namespace morrey
