#include "morrey/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "morrey/baseline.hpp"
#include "morrey/fefferman_stein.hpp"
#include "morrey/maximal.hpp"
#include "morrey/norm.hpp"
#include "morrey/parallel.hpp"
#include "morrey/riesz.hpp"
#include "morrey/sequence_io.hpp"
#include "morrey/verify.hpp"

namespace morrey {

namespace {

using nlohmann::json;
using Row = std::vector<std::string>;

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string cell(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string cell(bool v) { return v ? "1" : "0"; }

template <typename Int>
  requires std::is_integral_v<Int>
std::string cell(Int v) {
  return std::to_string(v);
}

Row coords(const Point& m) {
  Row out;
  for (int i = 0; i < m.dim(); ++i) out.push_back(std::to_string(m[i]));
  return out;
}

Row names(int dim, const std::string& prefix) {
  Row out;
  for (int i = 0; i < dim; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Row operator+(Row a, const Row& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

class Csv {
 public:
  Csv(const std::string& path, bool timestamp) : out_(path) {
    if (!out_) throw FormatError("cannot write " + path);
    if (timestamp) out_ << "# generated " << utc_now() << '\n';
  }

  void write(const Row& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

json point_json(const Point& p) {
  json arr = json::array();
  for (int i = 0; i < p.dim(); ++i) arr.push_back(p[i]);
  return arr;
}

json box_json(const BoundingBox& b) {
  if (b.is_empty()) return nullptr;
  return {{"lo", point_json(b.lo())}, {"hi", point_json(b.hi())}};
}

FiniteSequence input_sequence(const ExperimentConfig& c) {
  if (!c.input.empty()) return read_sequence_file(c.input, c.cell_limit);
  return generate(c.generator);
}

/// Hull +- margin, or a box around the origin for the zero sequence.
BoundingBox window_for(const FiniteSequence& x, std::int64_t margin, std::uint64_t limit) {
  const BoundingBox hull = support_hull(x);
  const BoundingBox window =
      hull.is_empty() ? BoundingBox::around(Point(x.dim()), margin) : hull.inflated(margin);
  if (window.cell_count() > limit) {
    throw ResourceError("window of " + std::to_string(window.cell_count()) +
                        " points exceeds the cell limit");
  }
  return window;
}

struct TaskResult {
  json summary = json::object();
  std::map<std::string, double> pinned;
  bool violated = false;
};

TaskResult run_norm(const ExperimentConfig& c, Csv& csv) {
  const FiniteSequence x = input_sequence(c);
  const auto params = MorreyParams::make(*c.p, *c.q);
  const auto cert = morrey_norm(x, params);
  const Point center = cert.argmax_cube.center.dim() ? cert.argmax_cube.center : Point(x.dim());
  csv.write(Row{"p", "q", "value"} + names(x.dim(), "m") + Row{"radius", "candidates", "truncation_radius"});
  csv.write(Row{cell(params.p), cell(params.q), cell(cert.value)} + coords(center) +
            Row{cell(cert.argmax_cube.radius), cell(cert.candidate_count), cell(cert.truncation_radius)});
  TaskResult r;
  r.summary = {{"value", cert.value},
               {"argmax", {{"center", point_json(center)}, {"radius", cert.argmax_cube.radius}}},
               {"candidate_count", cert.candidate_count},
               {"truncation_radius", cert.truncation_radius},
               {"lp_norm", lp_norm(x, params.p)},
               {"sup_norm", sup_norm(x)},
               {"support_hull", box_json(support_hull(x))}};
  r.pinned["norm.value"] = cert.value;
  return r;
}

TaskResult run_maximal(const ExperimentConfig& c, Csv& csv) {
  const FiniteSequence x = input_sequence(c);
  const auto params = MorreyParams::make(*c.p, *c.q);
  const BoundingBox window = window_for(x, *c.margin, c.cell_limit);
  const auto rows = equivalence_check(x, window);
  csv.write(names(x.dim(), "m") + Row{"M", "Mhat", "Mtilde", "violations"});
  std::uint64_t violations = 0;
  for (const auto& row : rows) {
    violations += row.violations != 0;
    csv.write(coords(row.m) + Row{cell(row.odd.value()), cell(row.even.value()), cell(row.uncentered.value()),
                                  cell(row.violations)});
  }
  TaskResult r;
  r.violated = violations > 0;
  const double sup = certified_sup_maximal(x);
  r.summary = {{"window", box_json(window)},
               {"points", rows.size()},
               {"equivalence_violations", violations},
               {"certified_sup", sup}};
  r.pinned["maximal.certified_sup"] = sup;
  if (!x.is_zero()) {
    const auto est = boundedness_ratio(x, params, *c.margin, c.threads);
    r.summary["boundedness"] = {{"ratio", est.ratio},
                                {"maximal_norm", est.maximal_norm},
                                {"input_norm", est.input_norm},
                                {"stabilized", est.stabilized},
                                {"margin", *c.margin}};
    r.pinned["maximal.ratio"] = est.ratio;
  }
  const auto tc = theoretical_constant(1.0, x.dim(), params);
  r.summary["theoretical_constant_per_unit_K"] = {{"C", tc.c}, {"bound", tc.bound}};
  return r;
}

TaskResult run_riesz(const ExperimentConfig& c, Csv& csv) {
  const FiniteSequence x = input_sequence(c);
  const auto rp = RieszParams::make(*c.alpha, x.dim(), *c.p, *c.q);
  if (x.is_zero()) throw DomainError("riesz needs a nonzero input sequence");
  const auto exps = conjugate_exponents(rp);
  const auto bounded = riesz_boundedness_ratio(x, rp, *c.margin, c.threads);

  const BoundingBox window = window_for(x, *c.margin, c.cell_limit);
  const HedbergContext ctx(x, rp);
  const double theta = rp.alpha * rp.q / rp.dim;
  std::vector<Row> rows(window.cell_count());
  std::vector<double> split_max(rows.size(), 0.0), opt_max(rows.size(), 0.0);
  parallel_for(rows.size(), c.threads, [&](std::size_t i) {
    const Point k = window.point_at(i);
    const double value = ctx.riesz().at(k);
    const double mx = ctx.maximal().at(k, MaximalVariant::Odd);
    const double bound = mx > 0 ? std::pow(mx, 1 - theta) * std::pow(ctx.morrey_norm(), theta) : 0.0;
    for (double radius : c.radii) split_max[i] = std::max(split_max[i], ctx.ratio(k, radius));
    opt_max[i] = ctx.optimized_ratio(k);
    rows[i] = coords(k) + Row{cell(value), cell(mx), cell(bound), cell(opt_max[i]), cell(split_max[i])};
  });
  csv.write(names(x.dim(), "k") + Row{"I_alpha", "Mx", "hedberg_bound", "optimized_ratio", "max_split_ratio"});
  for (const auto& row : rows) csv.write(row);

  const double hedberg_max = *std::max_element(split_max.begin(), split_max.end());
  const double optimized_max = *std::max_element(opt_max.begin(), opt_max.end());
  TaskResult r;
  r.summary = {{"s", exps.s},
               {"t", exps.t},
               {"input_norm", bounded.input_norm},
               {"ratio", bounded.ratio},
               {"doubled_ratio", bounded.doubled_ratio},
               {"stabilized", bounded.stabilized},
               {"certified", bounded.certified},
               {"omitted_bound", bounded.omitted_bound},
               {"window", box_json(window)},
               {"hedberg_max_ratio", hedberg_max},
               {"hedberg_max_optimized_ratio", optimized_max}};
  r.pinned["riesz.ratio"] = bounded.ratio;
  r.pinned["hedberg.max_ratio"] = hedberg_max;
  r.pinned["hedberg.max_optimized_ratio"] = optimized_max;
  return r;
}

TaskResult run_fs(const ExperimentConfig& c, Csv& csv) {
  TaskResult r;
  csv.write({"variant", "trial", "seed", "lhs", "rhs", "ratio", "skipped"});
  json variants = json::object();
  for (MaximalVariant v : c.variants) {
    const auto report = fs_ratio_ensemble(c.generator, c.trials, *c.p, v, {c.phi_equals_x, c.threads});
    for (const auto& row : report.rows) {
      csv.write({to_string(v), cell(row.trial), cell(row.seed), cell(row.lhs), cell(row.rhs), cell(row.ratio),
                 cell(row.skipped)});
    }
    json entry = {{"trials", report.trials},
                  {"skipped", report.skipped},
                  {"max_ratio", report.max_ratio},
                  {"argmax_trial", report.argmax_trial},
                  {"argmax_seed", report.argmax_seed}};
    r.pinned["fs." + to_string(v) + ".max_ratio"] = report.max_ratio;
    if (c.adversarial_iterations > 0) {
      const auto adv = fs_adversarial_search(c.generator, c.adversarial_iterations, *c.p, v);
      entry["adversarial"] = {{"iterations", adv.trials}, {"max_ratio", adv.max_ratio}, {"improvements", adv.rows.size()}};
      r.pinned["fs." + to_string(v) + ".adversarial_max_ratio"] = adv.max_ratio;
    }
    variants[to_string(v)] = entry;
  }
  r.summary = {{"p", *c.p}, {"trials", c.trials}, {"phi", c.phi_equals_x ? "equal-x" : "independent"},
               {"variants", variants}};
  return r;
}

TaskResult run_sandwich(const ExperimentConfig& c, Csv& csv) {
  const FiniteSequence x = input_sequence(c);
  const BoundingBox window = window_for(x, *c.margin, c.cell_limit);
  const MaximalEvaluator eval(x);
  std::vector<SandwichValues> values(window.cell_count());
  parallel_for(values.size(), c.threads, [&](std::size_t i) { values[i] = sandwich_check(eval, window.point_at(i)); });
  csv.write(names(x.dim(), "m") + Row{"ball_sup", "low", "mid", "high", "holds"});
  std::uint64_t violations = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& s = values[i];
    violations += !s.holds;
    csv.write(coords(window.point_at(i)) + Row{cell(s.ball.value()), cell(s.low), cell(s.mid), cell(s.high), cell(s.holds)});
  }
  TaskResult r;
  r.violated = violations > 0;
  r.summary = {{"window", box_json(window)}, {"points", values.size()}, {"violations", violations}};
  return r;
}

TaskResult run_verify(const ExperimentConfig& c, Csv& csv) {
  VerifyOptions opt;
  opt.max_dim = c.max_dim;
  opt.scale = c.scale;
  opt.threads = c.threads;
  opt.seed = c.seed;
  TaskResult r;
  csv.write({"group", "checks", "failures", "status"});
  json groups = json::array();
  for (const auto& g : verify_all(opt)) {
    csv.write({g.name, cell(g.checks), cell(g.failures), g.passed() ? "pass" : "fail"});
    groups.push_back({{"name", g.name},
                      {"checks", g.checks},
                      {"failures", g.failures},
                      {"seconds", g.seconds},
                      {"notes", g.notes},
                      {"metrics", g.metrics}});
    r.violated = r.violated || !g.passed();
    for (const auto& [key, value] : g.metrics) r.pinned[g.name + "/" + key] = value;
  }
  r.summary = {{"max_dim", c.max_dim}, {"scale", c.scale}, {"groups", groups}};
  return r;
}

TaskResult run_gen(const ExperimentConfig& c, Csv& csv) {
  const FiniteSequence x = input_sequence(c);
  const std::string path = (std::filesystem::path(c.out_dir) / "sequence.txt").string();
  write_sequence_file(path, x);
  const auto entries = x.nonzeros();
  csv.write(names(x.dim(), "k") + Row{"value"});
  for (const auto& [k, v] : entries) csv.write(coords(k) + Row{cell(v)});
  TaskResult r;
  r.summary = {{"sequence_file", path},
               {"nonzeros", entries.size()},
               {"support_hull", box_json(support_hull(x))},
               {"l1_norm", lp_norm(x, 1.0)}};
  return r;
}

}  // namespace

RunOutcome run_experiment(ExperimentConfig config) {
  config.apply_task_defaults();
  config.validate();
  config.generator.seed = config.seed;
  const Task task = *config.task;
  const std::string name = to_string(task);

  std::filesystem::create_directories(config.out_dir);
  RunOutcome outcome;
  outcome.csv_path = (std::filesystem::path(config.out_dir) / (name + ".csv")).string();
  outcome.json_path = (std::filesystem::path(config.out_dir) / (name + ".json")).string();

  TaskResult result;
  {
    Csv csv(outcome.csv_path, config.timestamp);
    switch (task) {
      case Task::Norm:
        result = run_norm(config, csv);
        break;
      case Task::Maximal:
        result = run_maximal(config, csv);
        break;
      case Task::Riesz:
        result = run_riesz(config, csv);
        break;
      case Task::FsCheck:
        result = run_fs(config, csv);
        break;
      case Task::Sandwich:
        result = run_sandwich(config, csv);
        break;
      case Task::VerifyAll:
        result = run_verify(config, csv);
        break;
      case Task::Gen:
        result = run_gen(config, csv);
        break;
    }
  }

  json summary = {{"task", name}, {"seed", config.seed}, {"threads", config.threads}};
  json params = json::object();
  if (config.p) params["p"] = *config.p;
  if (config.q) params["q"] = *config.q;
  if (config.alpha) params["alpha"] = *config.alpha;
  if (config.margin) params["margin"] = *config.margin;
  summary["params"] = params;
  summary["input"] = config.input.empty() ? json{{"generator", to_string(config.generator.kind)},
                                                 {"dim", config.generator.dim},
                                                 {"radius", config.generator.radius}}
                                          : json{{"file", config.input}};
  summary["result"] = result.summary;
  summary["pinned"] = result.pinned;
  if (config.timestamp) summary["generated_at"] = utc_now();

  outcome.exit_code = result.violated ? kExitViolation : kExitOk;
  if (!config.baseline.empty()) {
    const auto b = check_baseline(config.baseline, name, result.pinned);
    summary["baseline"] = {{"path", config.baseline},
                           {"status", to_string(b.status)},
                           {"drifts", b.drifts},
                           {"unpinned", b.unpinned}};
    if (b.status == BaselineStatus::Drift) outcome.exit_code = kExitViolation;
  }

  std::ofstream out(outcome.json_path);
  if (!out) throw FormatError("cannot write " + outcome.json_path);
  out << summary.dump(2) << '\n';
  outcome.summary = std::move(summary);
  return outcome;
}

}  // namespace morrey
