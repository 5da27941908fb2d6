#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "morrey/config.hpp"
#include "morrey/runner.hpp"
#include "morrey/sequence_io.hpp"

namespace {

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> baseline;
  std::optional<unsigned> threads;
  bool no_timestamp = false;
};

void add_flags(CLI::App& cmd, Flags& flags) {
  cmd.add_option("--config", flags.config, "experiment config file (INI)")->check(CLI::ExistingFile);
  cmd.add_option("--seed", flags.seed, "master seed, overrides run.seed");
  cmd.add_option("--out", flags.out, "output directory, overrides output.dir");
  cmd.add_option("--baseline", flags.baseline, "baseline JSON, overrides output.baseline");
  cmd.add_option("--threads", flags.threads, "worker threads (0 = all cores)");
  cmd.add_flag("--no-timestamp", flags.no_timestamp, "omit the timestamp line and field");
}

int run(const std::string& task, const Flags& flags) {
  morrey::ExperimentConfig config;
  if (!flags.config.empty()) config = morrey::load_config(flags.config);
  const morrey::Task chosen = morrey::parse_task(task);
  if (config.task && *config.task != chosen) {
    throw morrey::ConfigError("config declares task '" + morrey::to_string(*config.task) +
                              "' but the subcommand is '" + task + "'");
  }
  config.task = chosen;
  if (flags.seed) config.seed = *flags.seed;
  if (flags.out) config.out_dir = *flags.out;
  if (flags.baseline) config.baseline = *flags.baseline;
  if (flags.threads) config.threads = *flags.threads;
  if (flags.no_timestamp) config.timestamp = false;

  const auto outcome = morrey::run_experiment(config);
  std::cout << task << ": wrote " << outcome.csv_path << " and " << outcome.json_path << '\n';
  if (outcome.summary.contains("baseline")) {
    const auto& b = outcome.summary["baseline"];
    std::cout << "baseline " << b["path"].get<std::string>() << ": " << b["status"].get<std::string>() << '\n';
    for (const auto& d : b["drifts"]) std::cout << "  drift " << d.get<std::string>() << '\n';
  }
  if (outcome.exit_code == morrey::kExitViolation) std::cout << task << ": property violation or baseline drift\n";
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on discrete Morrey spaces"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every subcommand");
  bool schema = false;
  app.add_flag("--config-schema", schema, "print every config key and exit");

  Flags flags;
  const std::pair<const char*, const char*> commands[] = {
      {"norm", "Morrey norm with its certificate"},
      {"maximal", "maximal fields, equivalence constants and the boundedness ratio"},
      {"riesz", "Riesz potential, Hedberg ratios and the boundedness ratio"},
      {"fs-check", "Fefferman-Stein ensemble"},
      {"sandwich", "ball-average sandwich of the maximal operator"},
      {"verify-all", "every property group against its oracle"},
      {"gen", "write a generated sequence file"},
  };
  for (const auto& [name, help] : commands) add_flags(*app.add_subcommand(name, help), flags);

  // --config-schema works without a subcommand.
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--config-schema") {
      std::cout << morrey::config_schema();
      return 0;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : morrey::kExitUsage;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), flags);
  } catch (const morrey::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return morrey::kExitResource;
  } catch (const morrey::OverflowError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return morrey::kExitResource;
  } catch (const morrey::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return morrey::kExitUsage;
  } catch (const morrey::FormatError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return morrey::kExitUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource error: out of memory\n";
    return morrey::kExitResource;
  }
}
