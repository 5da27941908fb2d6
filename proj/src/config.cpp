#include "morrey/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace morrey {

namespace {

const std::vector<std::pair<Task, std::string>>& task_table() {
  static const std::vector<std::pair<Task, std::string>> table = {
      {Task::Norm, "norm"},         {Task::Maximal, "maximal"},       {Task::Riesz, "riesz"},
      {Task::FsCheck, "fs-check"},  {Task::Sandwich, "sandwich"},     {Task::VerifyAll, "verify-all"},
      {Task::Gen, "gen"}};
  return table;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string where(const std::string& key) { return "config key '" + key + "'"; }

double to_real(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigError(where(key) + ": expected a finite real, got '" + v + "'");
  }
  return out;
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError(where(key) + ": expected an integer, got '" + v + "'");
  }
  return out;
}

std::uint64_t to_uint(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError(where(key) + ": expected a nonnegative integer, got '" + v + "'");
  }
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw ConfigError(where(key) + ": expected true or false, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

using Setter = std::function<void(ExperimentConfig&, const std::string& key, const std::string& value)>;

struct KeySpec {
  Setter set;
  std::string doc;
};

const std::map<std::string, KeySpec>& key_table() {
  static const std::map<std::string, KeySpec> table = {
      {"run.task", {[](auto& c, auto&, auto& v) { c.task = parse_task(v); },
                    "norm | maximal | riesz | fs-check | sandwich | verify-all | gen"}},
      {"run.seed", {[](auto& c, auto& k, auto& v) { c.seed = to_uint(k, v); },
                    "master seed; generator and trial streams derive from it (default 0)"}},
      {"run.threads", {[](auto& c, auto& k, auto& v) { c.threads = static_cast<unsigned>(to_uint(k, v)); },
                       "worker threads, 0 = all cores (default 1)"}},
      {"params.p", {[](auto& c, auto& k, auto& v) { c.p = to_real(k, v); }, "exponent p"}},
      {"params.q", {[](auto& c, auto& k, auto& v) { c.q = to_real(k, v); }, "exponent q"}},
      {"params.alpha", {[](auto& c, auto& k, auto& v) { c.alpha = to_real(k, v); },
                        "Riesz order alpha"}},
      {"params.variant",
       {[](auto& c, auto&, auto& v) {
          c.variants.clear();
          for (const auto& name : split_list(v)) {
            if (name == "all") {
              c.variants = {MaximalVariant::Odd, MaximalVariant::Even, MaximalVariant::Uncentered};
              return;
            }
            c.variants.push_back(parse_variant(name));
          }
          if (c.variants.empty()) throw ConfigError("config key 'params.variant' is empty");
        },
        "odd | even | uncentered | all, or a comma list (default odd)"}},
      {"params.margin", {[](auto& c, auto& k, auto& v) { c.margin = to_int(k, v); },
                         "window margin L around the support hull"}},
      {"params.trials", {[](auto& c, auto& k, auto& v) { c.trials = to_uint(k, v); },
                         "ensemble size for fs-check (default 1000)"}},
      {"params.phi",
       {[](auto& c, auto& k, auto& v) {
          if (v == "independent") c.phi_equals_x = false;
          else if (v == "equal-x") c.phi_equals_x = true;
          else throw ConfigError(where(k) + ": expected independent or equal-x, got '" + v + "'");
        },
        "fs-check weight: independent draw or |x| (default independent)"}},
      {"params.adversarial_iterations",
       {[](auto& c, auto& k, auto& v) { c.adversarial_iterations = to_uint(k, v); },
        "fs-check hill-climbing steps after the ensemble (default 0)"}},
      {"params.radii",
       {[](auto& c, auto& k, auto& v) {
          c.radii.clear();
          for (const auto& item : split_list(v)) c.radii.push_back(to_real(k, item));
        },
        "riesz split radii for the Hedberg ratio (default 1,2,4,8)"}},
      {"params.max_dim", {[](auto& c, auto& k, auto& v) { c.max_dim = static_cast<int>(to_int(k, v)); },
                          "verify-all: largest dimension (default 2)"}},
      {"params.scale", {[](auto& c, auto& k, auto& v) { c.scale = to_real(k, v); },
                        "verify-all: trial-count multiplier (default 1)"}},
      {"params.cell_limit", {[](auto& c, auto& k, auto& v) { c.cell_limit = to_uint(k, v); },
                             "memory guard on dense boxes and windows (default 1e8)"}},
      {"generator.kind", {[](auto& c, auto&, auto& v) { c.generator.kind = parse_generator_kind(v); },
                          "spike | multi-spike | cube-indicator | uniform-random-box | power-decay-truncated"}},
      {"generator.dim", {[](auto& c, auto& k, auto& v) { c.generator.dim = static_cast<int>(to_int(k, v)); },
                         "dimension d (default 1)"}},
      {"generator.radius", {[](auto& c, auto& k, auto& v) { c.generator.radius = to_int(k, v); },
                            "box half-width / cube radius / outer radius (default 0)"}},
      {"generator.count", {[](auto& c, auto& k, auto& v) { c.generator.count = to_int(k, v); },
                           "multi-spike count (default 1)"}},
      {"generator.value_min", {[](auto& c, auto& k, auto& v) { c.generator.value_min = to_real(k, v); },
                               "smallest drawn value (default 1)"}},
      {"generator.value_max", {[](auto& c, auto& k, auto& v) { c.generator.value_max = to_real(k, v); },
                               "largest drawn value (default 1)"}},
      {"generator.integer_values",
       {[](auto& c, auto& k, auto& v) { c.generator.integer_values = to_bool(k, v); },
        "draw integers instead of reals (default false)"}},
      {"generator.density", {[](auto& c, auto& k, auto& v) { c.generator.density = to_real(k, v); },
                             "uniform-random-box fill probability (default 1)"}},
      {"generator.beta", {[](auto& c, auto& k, auto& v) { c.generator.beta = to_real(k, v); },
                          "power-decay exponent (default 0.5)"}},
      {"generator.center_offset",
       {[](auto& c, auto& k, auto& v) { c.generator.center_offset = to_int(k, v); },
        "center (c,...,c) of the generator box (default 0)"}},
      {"generator.input", {[](auto& c, auto&, auto& v) { c.input = v; },
                           "sequence file used instead of the generator"}},
      {"output.dir", {[](auto& c, auto&, auto& v) { c.out_dir = v; },
                      "directory for <task>.csv and <task>.json (default results)"}},
      {"output.baseline", {[](auto& c, auto&, auto& v) { c.baseline = v; },
                           "baseline JSON: written on first run, enforced afterwards"}},
      {"output.timestamp", {[](auto& c, auto& k, auto& v) { c.timestamp = to_bool(k, v); },
                            "write a timestamp comment as the first CSV line (default true)"}},
  };
  return table;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string to_string(Task task) {
  for (const auto& [t, name] : task_table()) {
    if (t == task) return name;
  }
  return "norm";
}

Task parse_task(const std::string& name) {
  for (const auto& [t, n] : task_table()) {
    if (n == name) return t;
  }
  throw ConfigError("unknown task '" + name + "'");
}

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [t, n] : task_table()) out.push_back(n);
    return out;
  }();
  return names;
}

ExperimentConfig parse_config(std::istream& in) {
  // Boost's INI grammar only knows ';' comments.
  std::ostringstream cleaned;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    cleaned << (t.empty() || t[0] == '#' ? std::string() : line) << '\n';
  }
  std::istringstream ini(cleaned.str());
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(ini, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("config line " + std::to_string(e.line()) + ": " + e.message());
  }

  ExperimentConfig config;
  const auto& keys = key_table();
  for (const auto& [section, body] : tree) {
    if (!body.data().empty()) throw ConfigError("config entry '" + section + "' is outside any section");
    if (section != "run" && section != "params" && section != "generator" && section != "output") {
      throw ConfigError("unknown config section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      const std::string full = section + "." + key;
      const auto it = keys.find(full);
      if (it == keys.end()) throw ConfigError("unknown config key '" + full + "'");
      it->second.set(config, full, trim(value.data()));
    }
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  return parse_config(in);
}

std::string config_schema() {
  std::ostringstream os;
  for (const auto& [key, spec] : key_table()) os << key << ": " << spec.doc << '\n';
  return os.str();
}

void ExperimentConfig::apply_task_defaults() {
  if (!task) return;
  switch (*task) {
    case Task::Norm:
      if (!p) p = 1.0;
      if (!q) q = 2.0;
      break;
    case Task::Maximal:
      if (!p) p = 2.0;
      if (!q) q = 3.0;
      if (!margin) margin = 16;
      break;
    case Task::Riesz:
      if (!alpha) alpha = 0.5;
      if (!p) p = 4.0 / 3.0;
      if (!q) q = 1.5;
      if (!margin) margin = 16;
      break;
    case Task::FsCheck:
      if (!p) p = 2.0;
      break;
    case Task::Sandwich:
      if (!margin) margin = 4;
      break;
    case Task::VerifyAll:
    case Task::Gen:
      break;
  }
}

void ExperimentConfig::validate() const {
  require(task.has_value(), "no task given (set run.task or use a subcommand)");
  require(cell_limit > 0, "params.cell_limit must be positive");
  if (input.empty()) {
    try {
      generator.validate();
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  if (margin) require(*margin >= 0, "params.margin must be nonnegative");

  switch (*task) {
    case Task::Norm:
      require(*p >= 1.0 && *p <= *q,
              "the Morrey norm needs 1 <= p <= q < inf; got p=" + num(*p) + ", q=" + num(*q));
      break;
    case Task::Maximal:
      require(*p > 1.0 && *p <= *q,
              "maximal boundedness needs 1 < p <= q < inf; got p=" + num(*p) + ", q=" + num(*q));
      break;
    case Task::Riesz: {
      const int d = generator.dim;
      require(*alpha > 0.0 && *alpha < d,
              "the Riesz potential needs 0 < alpha < d; got alpha=" + num(*alpha) + ", d=" + std::to_string(d));
      require(*p > 1.0 && *p < *q && *q < d / *alpha,
              "Riesz boundedness needs 1 < p < q < d/alpha; got p=" + num(*p) + ", q=" + num(*q) +
                  ", d/alpha=" + num(d / *alpha));
      require(*margin >= 1, "riesz needs params.margin >= 1");
      for (double r : radii) require(r >= 1.0, "params.radii must all be >= 1");
      break;
    }
    case Task::FsCheck:
      require(*p > 1.0, "the Fefferman-Stein inequality needs 1 < p < inf; got p=" + num(*p));
      require(trials >= 1, "params.trials must be at least 1");
      require(input.empty(), "fs-check draws its own ensemble; generator.input is not allowed");
      break;
    case Task::Sandwich:
      break;
    case Task::VerifyAll:
      require(max_dim >= 1 && max_dim <= 3, "params.max_dim must be 1, 2 or 3");
      require(scale > 0.0, "params.scale must be positive");
      break;
    case Task::Gen:
      break;
  }
}

}  // namespace morrey
