#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "morrey/baseline.hpp"
#include "morrey/config.hpp"
#include "morrey/runner.hpp"
#include "morrey/sequence_io.hpp"

using namespace morrey;
namespace fs = std::filesystem;

namespace {

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("morrey_unit_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse(
      "# comment\n[run]\ntask = maximal\nseed = 9\n[params]\np = 2\nq = 4\nvariant = odd, even\n"
      "[generator]\nkind = cube-indicator\ndim = 2\nradius = 1\n[output]\ntimestamp = false\n");
  REQUIRE(c.task);
  CHECK(*c.task == Task::Maximal);
  CHECK(c.seed == 9);
  CHECK(*c.p == 2);
  CHECK(*c.q == 4);
  CHECK(c.variants.size() == 2);
  CHECK(c.generator.dim == 2);
  CHECK_FALSE(c.timestamp);

  CHECK(parse("[params]\nvariant = all\n").variants.size() == 3);
  CHECK(parse("[params]\nphi = equal-x\n").phi_equals_x);
  CHECK(parse("[params]\nradii = 1, 3\n").radii == std::vector<double>{1, 3});
}

TEST_CASE("config rejects unknown and malformed entries") {
  CHECK_THROWS_AS(parse("[run]\ntsk = norm\n"), ConfigError);
  CHECK_THROWS_AS(parse("[extra]\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("[params]\np = two\n"), ConfigError);
  CHECK_THROWS_AS(parse("[params]\nvariant = sideways\n"), DomainError);
  CHECK_THROWS_AS(parse("[run]\ntask = plot\n"), DomainError);
  CHECK_THROWS_AS(parse("[params]\nphi = maybe\n"), ConfigError);
}

TEST_CASE("task defaults and validation") {
  ExperimentConfig c;
  c.task = Task::Riesz;
  c.apply_task_defaults();
  CHECK(*c.alpha == 0.5);
  CHECK(*c.p == doctest::Approx(4.0 / 3));
  CHECK(*c.q == 1.5);
  CHECK_NOTHROW(c.validate());

  c.alpha = 1.0;  // alpha * q >= d
  CHECK_THROWS_AS(c.validate(), ConfigError);

  ExperimentConfig f;
  f.task = Task::FsCheck;
  f.p = 1.0;
  f.apply_task_defaults();
  CHECK_THROWS_AS(f.validate(), ConfigError);

  ExperimentConfig n;
  n.task = Task::Norm;
  n.p = 3;
  n.q = 2;  // needs p <= q
  CHECK_THROWS_AS(n.validate(), ConfigError);
}

TEST_CASE("schema lists every section") {
  const std::string schema = config_schema();
  for (const char* key : {"run.task", "params.p", "generator.kind", "output.baseline"}) {
    CHECK(schema.find(key) != std::string::npos);
  }
}

TEST_CASE("baseline pins, matches and reports drift") {
  const fs::path dir = scratch("baseline");
  const std::string path = (dir / "b.json").string();
  CHECK(check_baseline(path, "t", {{"a", 1.0}, {"b", 2.0}}).status == BaselineStatus::Pinned);
  const std::string pinned = slurp(path);

  auto same = check_baseline(path, "t", {{"a", 1.0}, {"b", 2.0 * (1 + 1e-14)}});
  CHECK(same.status == BaselineStatus::Matched);

  auto drift = check_baseline(path, "t", {{"a", 1.0 + 1e-6}, {"c", 3.0}});
  CHECK(drift.status == BaselineStatus::Drift);
  REQUIRE(drift.drifts.size() == 1);
  CHECK(drift.drifts[0].rfind("a:", 0) == 0);
  CHECK(drift.unpinned == std::vector<std::string>{"c"});
  CHECK(slurp(path) == pinned);

  std::ofstream(dir / "bad.json") << "{ not json";
  CHECK_THROWS_AS(check_baseline((dir / "bad.json").string(), "t", {}), FormatError);
}

TEST_CASE("runner writes csv and json") {
  const fs::path dir = scratch("runner");
  ExperimentConfig c = parse("[run]\ntask = norm\n[generator]\nkind = cube-indicator\ndim = 2\nradius = 1\n");
  c.out_dir = dir.string();
  c.timestamp = false;
  const RunOutcome r = run_experiment(c);
  CHECK(r.exit_code == kExitOk);
  CHECK(fs::exists(r.csv_path));
  CHECK(fs::exists(r.json_path));
  CHECK(r.summary["pinned"]["norm.value"].get<double>() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK_FALSE(r.summary.contains("generated_at"));
  const std::string csv = slurp(r.csv_path);
  CHECK(csv.rfind("p,q,value", 0) == 0);

  // Same config, same bytes.
  const std::string json_first = slurp(r.json_path);
  run_experiment(c);
  CHECK(slurp(r.json_path) == json_first);
}

TEST_CASE("runner baseline drift gives exit 1") {
  const fs::path dir = scratch("runner_drift");
  ExperimentConfig c = parse("[run]\ntask = norm\n[generator]\nkind = spike\ndim = 1\n");
  c.out_dir = dir.string();
  c.timestamp = false;
  c.baseline = (dir / "base.json").string();
  CHECK(run_experiment(c).exit_code == kExitOk);
  CHECK(run_experiment(c).exit_code == kExitOk);
  std::ofstream(c.baseline) << R"({"label": "x", "tolerance": 1e-12, "pinned": {"norm.value": 2.0}})";
  CHECK(run_experiment(c).exit_code == kExitViolation);
}

TEST_CASE("runner resource guard") {
  ExperimentConfig c = parse("[run]\ntask = maximal\n[generator]\nkind = uniform-random-box\ndim = 2\nradius = 50\n");
  c.out_dir = scratch("runner_limit").string();
  c.cell_limit = 100;
  CHECK_THROWS_AS(run_experiment(c), ResourceError);
}
