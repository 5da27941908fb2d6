#include "morrey/fefferman_stein.hpp"

#include <cmath>

#include "morrey/parallel.hpp"
#include "morrey/random.hpp"

namespace morrey {

void FsInstance::validate() const {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("Fefferman-Stein requires 1 < p < inf");
  if (x.dim() != phi.dim()) throw DomainError("x and phi have different dimensions");
  if (!phi.is_positive()) throw DomainError("the weight phi must be nonnegative");
}

FsSides fs_sides(const FsInstance& instance) {
  instance.validate();
  const MaximalEvaluator mx(instance.x);
  const MaximalEvaluator mphi(instance.phi);
  exact::DoubleDouble lhs;
  exact::DoubleDouble rhs;
  for (const auto& [k, w] : instance.phi.nonzeros()) {
    lhs += {std::pow(mx.at(k, instance.variant), instance.p) * w, 0.0};
  }
  for (const auto& [k, v] : instance.x.nonzeros()) {
    rhs += {std::pow(std::fabs(v), instance.p) * mphi.at(k, instance.variant), 0.0};
  }
  return {lhs.value(), rhs.value()};
}

FsInstance fs_trial_instance(const GeneratorSpec& gen, std::uint64_t trial, double p,
                             MaximalVariant variant, bool phi_equals_x) {
  GeneratorSpec base = gen;
  base.seed = derive_seed(gen.seed, "trial", trial);
  FiniteSequence x = generate_stream(base, "x", 0);
  FiniteSequence phi = phi_equals_x ? x.abs() : generate_stream(base, "phi", 0).abs();
  return {std::move(x), std::move(phi), p, variant};
}

namespace {

void summarize(RatioReport& report) {
  report.trials = report.rows.size();
  report.skipped = 0;
  report.max_ratio = 0.0;
  bool any = false;
  for (const RatioRow& row : report.rows) {
    if (row.skipped) {
      ++report.skipped;
      continue;
    }
    if (!any || row.ratio > report.max_ratio) {
      report.max_ratio = row.ratio;
      report.argmax_trial = row.trial;
      report.argmax_seed = row.seed;
      any = true;
    }
  }
}

RatioRow make_row(std::uint64_t trial, std::uint64_t seed, FsSides sides) {
  RatioRow row{trial, seed, sides.lhs, sides.rhs, 0.0, sides.rhs == 0.0};
  if (!row.skipped) row.ratio = sides.lhs / sides.rhs;
  return row;
}

}  // namespace

RatioReport fs_ratio_ensemble(const GeneratorSpec& gen, std::size_t trials, double p,
                              MaximalVariant variant, const FsEnsembleOptions& options) {
  if (trials < 1) throw DomainError("fs_ratio_ensemble requires at least one trial");
  if (!(p > 1.0)) throw DomainError("Fefferman-Stein requires 1 < p < inf");
  gen.validate();
  RatioReport report;
  report.rows.resize(trials);
  parallel_for(trials, options.threads, [&](std::size_t t) {
    const FsInstance inst = fs_trial_instance(gen, t, p, variant, options.phi_equals_x);
    report.rows[t] = make_row(t, derive_seed(gen.seed, "trial", t), fs_sides(inst));
  });
  summarize(report);
  return report;
}

RatioReport fs_adversarial_search(const GeneratorSpec& gen, std::size_t iterations, double p,
                                  MaximalVariant variant) {
  FsInstance current = fs_trial_instance(gen, 0, p, variant, false);
  RandomStream rng(derive_seed(gen.seed, "adversarial", 0));
  auto ratio_of = [](const FsSides& s) { return s.rhs > 0.0 ? s.lhs / s.rhs : 0.0; };
  FsSides best_sides = fs_sides(current);
  double best = ratio_of(best_sides);
  RatioReport report;
  report.rows.push_back(make_row(0, gen.seed, best_sides));

  for (std::size_t it = 1; it <= iterations; ++it) {
    const bool move_phi = rng.uniform01() < 0.5;
    const FiniteSequence& target = move_phi ? current.phi : current.x;
    auto entries = target.nonzeros();
    if (entries.empty()) continue;
    const auto pick = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(entries.size()) - 1));
    if (rng.uniform01() < 0.5) {
      const int axis = static_cast<int>(rng.uniform_int(0, target.dim() - 1));
      Point moved = entries[pick].first;
      moved[axis] += rng.uniform01() < 0.5 ? -1 : 1;
      bool clash = false;
      for (const auto& e : entries) clash = clash || e.first == moved;
      if (clash) continue;
      entries[pick].first = moved;
    } else {
      entries[pick].second *= rng.uniform(0.5, 2.0);
    }
    FsInstance candidate = current;
    (move_phi ? candidate.phi : candidate.x) = FiniteSequence::from_entries(target.dim(), entries);
    const FsSides sides = fs_sides(candidate);
    const double r = ratio_of(sides);
    if (r > best) {
      best = r;
      current = std::move(candidate);
      report.rows.push_back(make_row(it, gen.seed, sides));
    }
  }
  summarize(report);
  report.trials = iterations;
  return report;
}

}  // namespace morrey
