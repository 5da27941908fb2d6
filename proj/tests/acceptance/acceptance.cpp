// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--criterion N] [--baselines DIR]
//
// Exit status is nonzero when a criterion fails on a sub-check that is not
// listed in kKnownDeviations. Known deviations still print FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morrey/baseline.hpp"
#include "morrey/maximal.hpp"
#include "morrey/riesz.hpp"
#include "morrey/verify.hpp"

#ifndef MORREY_BASELINE_DIR
#define MORREY_BASELINE_DIR "tests/baselines"
#endif

using namespace morrey;

namespace {

struct Outcome {
  std::vector<std::string> failed;  ///< sub-check ids
  std::vector<std::string> info;

  void check(bool ok, const std::string& id) {
    if (!ok && std::find(failed.begin(), failed.end(), id) == failed.end()) failed.push_back(id);
  }
  bool passed() const { return failed.empty(); }
};

/// Sub-checks that cannot pass as the criteria are written (see README).
const std::set<std::string> kKnownDeviations = {
    "7.theoretical-C-2",
    "7.stabilized.p2q2",
};

std::string baseline_dir;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

VerifyOptions options(int max_dim) {
  VerifyOptions opt;
  opt.max_dim = max_dim;
  return opt;
}

void group(Outcome& out, const GroupResult& g, const std::string& id) {
  out.check(g.passed(), id);
  out.info.push_back(g.name + " " + std::to_string(g.checks) + " checks, " + std::to_string(g.failures) +
                     " failures, " + fmt(g.seconds) + " s");
  for (const auto& note : g.notes) out.info.push_back("  " + note);
}

void baseline(Outcome& out, const std::string& file, const std::map<std::string, double>& values,
              double tolerance, const std::string& id) {
  const std::string path = (std::filesystem::path(baseline_dir) / file).string();
  const auto b = check_baseline(path, file, values, tolerance);
  out.check(b.status != BaselineStatus::Drift && b.unpinned.empty(), id);
  out.info.push_back("baseline " + file + ": " + to_string(b.status));
  for (const auto& d : b.drifts) out.info.push_back("  drift " + d);
  for (const auto& u : b.unpinned) out.info.push_back("  not pinned " + u);
}

std::map<std::string, double> metrics_with(const GroupResult& g, const std::string& suffix) {
  std::map<std::string, double> out;
  for (const auto& [key, value] : g.metrics) {
    if (suffix.empty() || key.ends_with(suffix)) out[key] = value;
  }
  return out;
}

Outcome criterion1() {
  Outcome out;
  const GroupResult g = verify_cube_sums(options(3));
  group(out, g, "1.oracle");
  out.check(g.checks == 1000, "1.count");
  out.check(g.seconds < 5.0, "1.runtime");
  return out;
}

Outcome criterion2() {
  Outcome out;
  const GroupResult g = verify_morrey_truncation(options(2));
  group(out, g, "2.oracle");
  out.check(g.checks >= 500, "2.count");
  return out;
}

Outcome criterion3() {
  Outcome out;
  const GroupResult g = verify_maximal_oracle(options(3));
  group(out, g, "3.oracle");
  const auto delta1 = FiniteSequence::from_entries(1, {{Point{0}, 1.0}});
  const auto delta2 = FiniteSequence::from_entries(2, {{Point{0, 0}, 1.0}});
  out.check(maximal_at(delta1, Point{0}, MaximalVariant::Odd) == 1.0, "3.pinned.M0");
  out.check(maximal_at(delta1, Point{2}, MaximalVariant::Odd) == 1.0 / 5, "3.pinned.M2");
  out.check(maximal_at(delta1, Point{0}, MaximalVariant::Even) == 1.0 / 2, "3.pinned.Mhat0");
  out.check(maximal_at(delta2, Point{1, 1}, MaximalVariant::Odd) == 1.0 / 9, "3.pinned.M11");
  return out;
}

Outcome criterion4() {
  Outcome out;
  group(out, verify_equivalence(options(2)), "4.violations");
  return out;
}

Outcome criterion5() {
  Outcome out;
  group(out, verify_sup_bound(options(2)), "5.violations");
  return out;
}

Outcome criterion6() {
  Outcome out;
  const GroupResult g = verify_fefferman_stein(options(2));
  group(out, g, "6.properties");
  // Bit-identical reproduction of every cell's maximum.
  baseline(out, "fefferman_stein.json", g.metrics, 0.0, "6.baseline");
  return out;
}

Outcome criterion7() {
  Outcome out;
  const GroupResult g = verify_maximal_boundedness(options(2));
  group(out, g, "7.finite-and-at-least-1");
  for (const auto& [key, value] : g.metrics) {
    if (!key.ends_with(".stabilized")) continue;
    const bool targeted = key.starts_with("maximal.spike") || key.starts_with("maximal.indicator");
    if (!targeted) continue;
    const std::string cell = key.substr(key.rfind(".p") + 1, key.size() - key.rfind(".p") - 1 - 11);
    if (value != 1.0) {
      out.check(false, "7.stabilized." + cell);
      out.info.push_back("  not stabilized: " + key);
    }
  }
  const double c22 = g.metrics.at("theoretical.K1.d1.p2q2");
  const double c24 = g.metrics.at("theoretical.K1.d1.p2q4");
  out.info.push_back("theoretical C at p=q=2: " + fmt(c22) + " (criterion expects 2)");
  out.check(std::fabs(c22 - 2.0) <= 1e-9, "7.theoretical-C-2");
  out.check(rel_close(c24, 20.48528137423858, 1e-9), "7.theoretical-C-20.48528");
  baseline(out, "maximal_boundedness.json", metrics_with(g, ".ratio"), kBaselineTolerance, "7.baseline");
  return out;
}

Outcome criterion8() {
  Outcome out;
  group(out, verify_sandwich(options(2)), "8.violations");
  const auto delta = FiniteSequence::from_entries(1, {{Point{0}, 1.0}});
  const auto s = sandwich_check(delta, Point{0});
  out.check(s.mid == 1.0 && s.ball.value() == 0.5 && s.mid == 2 * s.ball.value(), "8.delta-equality");
  return out;
}

Outcome criterion9() {
  Outcome out;
  const GroupResult g = verify_hedberg(options(2));
  group(out, g, "9.balance");
  const auto delta = FiniteSequence::from_entries(1, {{Point{0}, 1.0}});
  const double worked = hedberg_optimized_ratio(delta, RieszParams::make(0.5, 1, 4.0 / 3, 1.5), Point{2});
  out.info.push_back("optimized ratio for delta at k=2: " + fmt(worked));
  out.check(std::fabs(worked - 1.0574) <= 1e-4, "9.worked-value");
  baseline(out, "hedberg.json", g.metrics, kBaselineTolerance, "9.baseline");
  return out;
}

Outcome criterion10() {
  Outcome out;
  const GroupResult g = verify_riesz(options(2));
  group(out, g, "10.riesz");
  const auto e1 = conjugate_exponents(RieszParams::make(0.5, 1, 4.0 / 3, 1.5));
  const auto e2 = conjugate_exponents(RieszParams::make(0.5, 2, 2, 3));
  out.check(rel_close(e1.s, 16.0 / 3, 1e-12) && rel_close(e1.t, 6, 1e-12), "10.exponents-1");
  out.check(rel_close(e2.s, 8, 1e-12) && rel_close(e2.t, 12, 1e-12), "10.exponents-2");
  baseline(out, "riesz.json", metrics_with(g, ".ratio"), kBaselineTolerance, "10.baseline");

  const auto start = std::chrono::steady_clock::now();
  const auto all = verify_all(options(2));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool green = true;
  for (const auto& r : all) green = green && r.passed();
  out.info.push_back("verify-all at d <= 2: " + fmt(seconds) + " s, " + (green ? "all groups pass" : "failures"));
  out.check(green, "10.verify-all");
  out.check(seconds < 300.0, "10.verify-all-runtime");
  return out;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
      {"cube-sum oracle", criterion1},
      {"Morrey-norm truncation certificate", criterion2},
      {"maximal-operator oracle", criterion3},
      {"equivalence constants", criterion4},
      {"sup of Mx below the Morrey norm", criterion5},
      {"Fefferman-Stein ensembles", criterion6},
      {"maximal-operator boundedness", criterion7},
      {"ball-average sandwich", criterion8},
      {"Hedberg bound", criterion9},
      {"Riesz boundedness and full-suite runtime", criterion10},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  bool verbose = false;
  baseline_dir = MORREY_BASELINE_DIR;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  app.add_option("--baselines", baseline_dir, "directory of pinned baselines");
  app.add_flag("--verbose", verbose, "print details for passing criteria too");
  CLI11_PARSE(app, argc, argv);

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (only != 0 && n != only) continue;
    const auto& [title, fn] = criteria()[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.check(false, std::to_string(n) + ".exception");
      out.info.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::vector<std::string> known, other;
    for (const auto& id : out.failed) (kKnownDeviations.count(id) ? known : other).push_back(id);
    std::cout << (out.passed() ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << fmt(seconds)
              << " s)";
    if (!out.passed()) {
      std::cout << " failed:";
      for (const auto& id : out.failed) std::cout << ' ' << id << (kKnownDeviations.count(id) ? "[known]" : "");
    }
    std::cout << '\n';
    if (verbose || !out.passed()) {
      for (const auto& line : out.info) std::cout << "    " << line << '\n';
    }
    if (!other.empty()) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
