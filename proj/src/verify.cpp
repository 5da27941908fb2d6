#include "morrey/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "morrey/brute_force.hpp"
#include "morrey/fefferman_stein.hpp"
#include "morrey/generators.hpp"
#include "morrey/maximal.hpp"
#include "morrey/norm.hpp"
#include "morrey/random.hpp"
#include "morrey/riesz.hpp"

namespace morrey {

std::size_t VerifyOptions::count(std::size_t base) const {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(base * scale)));
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr MaximalVariant kVariants[] = {MaximalVariant::Odd, MaximalVariant::Even,
                                        MaximalVariant::Uncentered};

bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({std::fabs(a), std::fabs(b), 1e-300});
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string pq_tag(double p, double q) {
  std::ostringstream os;
  os << 'p' << p << 'q' << q;
  return os.str();
}

RandomStream stream_for(const VerifyOptions& opt, const std::string& group) {
  return RandomStream(derive_seed(opt.seed, group, 0));
}

int dims_up_to(const VerifyOptions& opt, int cap) { return std::max(1, std::min(cap, opt.max_dim)); }

Point random_point(RandomStream& rng, const BoundingBox& box) {
  Point p(box.dim());
  for (int i = 0; i < box.dim(); ++i) p[i] = rng.uniform_int(box.lo()[i], box.hi()[i]);
  return p;
}

/// Dense random values over `box`; each point is nonzero with probability `density`.
FiniteSequence random_dense(RandomStream& rng, const BoundingBox& box, double lo, double hi,
                            double density, bool integers) {
  std::vector<double> values(box.cell_count(), 0.0);
  for (double& v : values) {
    const double draw = integers ? static_cast<double>(rng.uniform_int(static_cast<std::int64_t>(lo),
                                                                       static_cast<std::int64_t>(hi)))
                                 : rng.uniform(lo, hi);
    if (rng.uniform01() < density) v = draw;
  }
  return {box, std::move(values)};
}

FiniteSequence random_in_cube(RandomStream& rng, int dim, std::int64_t half, double lo, double hi,
                              double density, bool integers = false) {
  return random_dense(rng, BoundingBox::around(Point(dim), half), lo, hi, density, integers);
}

FiniteSequence spike(int dim, const Point& at, double value = 1.0) {
  return FiniteSequence::from_entries(dim, {{at, value}});
}

FiniteSequence indicator(int dim, std::int64_t radius) {
  const BoundingBox box = BoundingBox::around(Point(dim), radius);
  return {box, std::vector<double>(box.cell_count(), 1.0)};
}

template <typename Body>
GroupResult timed(const std::string& name, Body&& body) {
  GroupResult result;
  result.name = name;
  const auto start = Clock::now();
  body(result);
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace

const std::vector<std::string>& verify_group_names() {
  static const std::vector<std::string> names = {
      "cube-sums",        "morrey-truncation",   "maximal-oracle", "equivalence",
      "sup-bound",        "fefferman-stein",     "maximal-boundedness",
      "sandwich",         "hedberg",             "riesz"};
  return names;
}

GroupResult verify_cube_sums(const VerifyOptions& opt) {
  return timed("cube-sums", [&](GroupResult& r) {
    RandomStream rng = stream_for(opt, r.name);
    const int dims = dims_up_to(opt, 3);
    const std::size_t n = opt.count(1000);
    for (std::size_t t = 0; t < n; ++t) {
      const int d = 1 + static_cast<int>(t % dims);
      Point lo(d), hi(d);
      for (int i = 0; i < d; ++i) {
        lo[i] = rng.uniform_int(-20, 0);
        hi[i] = lo[i] + rng.uniform_int(0, 32);
      }
      const BoundingBox box(lo, hi);
      const bool integers = t % 2 == 0;
      const FiniteSequence x =
          integers ? random_dense(rng, box, -9, 9, 0.7, true) : random_dense(rng, box, -5, 5, 0.7, false);
      const FieldTransform tr = integers ? FieldTransform::abs() : FieldTransform::abs_pow(rng.uniform(1.0, 4.0));
      const PrefixSumTable table(x, tr);
      const Cube c = Cube::odd(random_point(rng, box.inflated(5)), rng.uniform_int(0, 20));
      const double fast = cube_sum(table, c);
      const double slow = brute::box_sum(x, c.box().intersect(box), tr);
      r.expect(integers ? fast == slow : rel_close(fast, slow, 1e-12), [&] {
        return "cube sum " + fmt(fast) + " vs enumeration " + fmt(slow);
      });
    }
  });
}

GroupResult verify_morrey_truncation(const VerifyOptions& opt) {
  return timed("morrey-truncation", [&](GroupResult& r) {
    RandomStream rng = stream_for(opt, r.name);
    const int dims = dims_up_to(opt, 2);
    const std::size_t n = opt.count(500);
    for (std::size_t t = 0; t < n; ++t) {
      const int d = 1 + static_cast<int>(t % dims);
      const FiniteSequence x = random_in_cube(rng, d, 4, -5, 5, 0.4);
      const double p = rng.uniform(1.0, 4.0);
      const auto params = MorreyParams::make(p, rng.uniform(p, 4.0));
      const auto cert = morrey_norm(x, params);
      const BoundingBox hull = support_hull(x);
      if (hull.is_empty()) {
        r.expect(cert.value == 0.0, [] { return std::string("nonzero norm of the zero sequence"); });
        continue;
      }
      const std::int64_t n0 = cert.truncation_radius;
      const double slow = brute::morrey_sup(x, params, hull.inflated(3 * n0), 3 * n0);
      r.expect(rel_close(cert.value, slow, 1e-12),
               [&] { return "certified " + fmt(cert.value) + " vs extended " + fmt(slow); });
    }
    for (int d = 1; d <= dims; ++d) {
      for (auto [p, q] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {2.0, 3.0}, {1.5, 4.0}}) {
        const double v = morrey_norm(spike(d, Point(d)), MorreyParams::make(p, q)).value;
        r.expect(v == 1.0, [&] { return "norm of delta is " + fmt(v); });
      }
      for (std::int64_t n0 = 0; n0 <= 3; ++n0) {
        for (auto [p, q] : {std::pair{1.0, 2.0}, {2.0, 3.0}, {1.5, 4.0}}) {
          const auto cert = morrey_norm(indicator(d, n0), MorreyParams::make(p, q));
          const double expected = std::pow(2.0 * n0 + 1, d / q);
          r.expect(rel_close(cert.value, expected, 1e-12) && cert.argmax_cube.radius == n0, [&] {
            return "indicator norm " + fmt(cert.value) + " expected " + fmt(expected);
          });
        }
      }
    }
  });
}

GroupResult verify_maximal_oracle(const VerifyOptions& opt) {
  return timed("maximal-oracle", [&](GroupResult& r) {
    RandomStream rng = stream_for(opt, r.name);
    const int dims = dims_up_to(opt, 3);
    const std::size_t n = opt.count(500);
    for (std::size_t t = 0; t < n; ++t) {
      const int d = 1 + static_cast<int>(t % dims);
      const MaximalVariant v = kVariants[(t / dims) % 3];
      const std::int64_t half = d == 3 ? 2 : 3;
      const FiniteSequence x = random_in_cube(rng, d, half, -5, 5, 0.4);
      const Point m = random_point(rng, BoundingBox::around(Point(d), half + 3));
      const MaximalEvaluator eval(x);
      std::int64_t cert = 0;
      if (!eval.hull().is_empty()) {
        cert = v == MaximalVariant::Uncentered ? eval.covering_radius(m)
                                               : eval.farthest_support_distance(m) + 1;
      }
      const double fast = eval.at(m, v);
      const double slow = brute::maximal(x, m, v, cert + 5);
      r.expect(rel_close(fast, slow, 1e-12), [&] {
        return to_string(v) + " maximal at " + m.to_string() + ": " + fmt(fast) + " vs " + fmt(slow);
      });
    }
    const struct {
      FiniteSequence x;
      Point m;
      MaximalVariant v;
      double expected;
    } pinned[] = {
        {spike(1, Point{0}), Point{0}, MaximalVariant::Odd, 1.0},
        {spike(1, Point{0}), Point{2}, MaximalVariant::Odd, 1.0 / 5},
        {spike(1, Point{0}), Point{0}, MaximalVariant::Even, 1.0 / 2},
        {spike(2, Point{0, 0}), Point{1, 1}, MaximalVariant::Odd, 1.0 / 9},
    };
    for (const auto& c : pinned) {
      if (c.x.dim() > opt.max_dim) continue;
      const double v = maximal_at(c.x, c.m, c.v);
      r.expect(v == c.expected, [&] { return "pinned maximal value " + fmt(v) + " expected " + fmt(c.expected); });
    }
  });
}

GroupResult verify_equivalence(const VerifyOptions& opt) {
  return timed("equivalence", [&](GroupResult& r) {
    RandomStream rng = stream_for(opt, r.name);
    const int dims = dims_up_to(opt, 2);
    const std::size_t n = opt.count(200);
    std::uint64_t points = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const int d = 1 + static_cast<int>(t % dims);
      const FiniteSequence x = random_in_cube(rng, d, 3, -5, 5, 0.35, t % 2 == 0);
      const BoundingBox hull = support_hull(x);
      if (hull.is_empty()) continue;
      for (const auto& row : equivalence_check(x, hull.inflated(4))) {
        ++points;
        r.expect(row.violations == 0, [&] {
          return "equivalence violation mask " + std::to_string(row.violations) + " at " + row.m.to_string();
        });
      }
    }
    r.metrics["points"] = static_cast<double>(points);
  });
}

GroupResult verify_sup_bound(const VerifyOptions& opt) {
  return timed("sup-bound", [&](GroupResult& r) {
    RandomStream rng = stream_for(opt, r.name);
    const int dims = dims_up_to(opt, 2);
    const std::size_t n = opt.count(200);
    const std::pair<double, double> cells[] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {1.5, 4}};
    for (std::size_t t = 0; t < n; ++t) {
      const int d = 1 + static_cast<int>(t % dims);
      const FiniteSequence x = random_in_cube(rng, d, 3, -5, 5, 0.4);
      const double sup = certified_sup_maximal(x);
      for (auto [p, q] : cells) {
        const double norm = morrey_norm(x, MorreyParams::make(p, q)).value;
        // Both sides are rounded independently; allow a few ulps.
        r.expect(sup <= norm * (1 + 8 * std::numeric_limits<double>::epsilon()), [&] {
          return "sup Mx " + fmt(sup) + " above norm " + fmt(norm) + " at " + pq_tag(p, q);
        });
      }
      const BoundingBox hull = support_hull(x);
      if (hull.is_empty()) continue;
      const MaximalEvaluator eval(x);
      for (int i = 0; i < 50; ++i) {
        Point out = random_point(rng, hull.inflated(10));
        if (hull.contains(out)) {
          const int axis = static_cast<int>(rng.uniform_int(0, d - 1));
          out[axis] = hull.hi()[axis] + rng.uniform_int(1, 10);
        }
        const Average at_out = eval.average_at(out, MaximalVariant::Odd);
        const Average at_clamp = eval.average_at(hull.clamp(out), MaximalVariant::Odd);
        r.expect(compare_averages(at_out, 1, at_clamp, 1) <= 0, [&] {
          return "clamp domination fails at " + out.to_string();
        });
      }
    }
  });
}

GroupResult verify_fefferman_stein(const VerifyOptions& opt) {
  return timed("fefferman-stein", [&](GroupResult& r) {
    const int dims = dims_up_to(opt, 2);
    const std::size_t trials = opt.count(1000);
    const std::size_t invariance_trials = opt.count(40);
    const unsigned alt_threads = opt.threads > 1 ? 1 : 3;
    for (int d = 1; d <= dims; ++d) {
      for (double p : {1.5, 2.0, 3.0}) {
        for (MaximalVariant v : kVariants) {
          GeneratorSpec spikes;
          spikes.kind = GeneratorKind::Spike;
          spikes.dim = d;
          spikes.radius = 8;
          spikes.seed = derive_seed(opt.seed, "fs-spike", static_cast<std::uint64_t>(d));
          GeneratorSpec boxes;
          boxes.kind = GeneratorKind::UniformRandomBox;
          boxes.dim = d;
          boxes.radius = d == 1 ? 4 : 2;
          boxes.density = 0.5;
          boxes.value_min = 0.0;
          boxes.value_max = 4.0;
          boxes.seed = derive_seed(opt.seed, "fs-box", static_cast<std::uint64_t>(d));

          for (const auto& [label, gen] : {std::pair{"spike", spikes}, {"random", boxes}}) {
            const std::string cell =
                "fs." + to_string(v) + ".d" + std::to_string(d) + ".p" + fmt(p) + "." + label;
            const RatioReport a = fs_ratio_ensemble(gen, trials, p, v, {false, opt.threads});
            const RatioReport b = fs_ratio_ensemble(gen, trials, p, v, {false, alt_threads});
            bool identical = a.max_ratio == b.max_ratio && a.argmax_trial == b.argmax_trial &&
                             a.rows.size() == b.rows.size();
            for (std::size_t i = 0; identical && i < a.rows.size(); ++i) {
              identical = a.rows[i].lhs == b.rows[i].lhs && a.rows[i].rhs == b.rows[i].rhs;
            }
            r.expect(identical, [&] { return cell + ": report differs across thread counts"; });
            bool finite = true;
            for (const auto& row : a.rows) finite = finite && (row.skipped || std::isfinite(row.ratio));
            r.expect(finite && std::isfinite(a.max_ratio), [&] { return cell + ": non-finite ratio"; });

            // Running max over the first half of the trials is what a shorter run reports.
            const RatioReport half = fs_ratio_ensemble(gen, std::max<std::size_t>(1, trials / 2), p, v);
            double running = 0.0;
            for (std::size_t i = 0; i < half.rows.size(); ++i) {
              if (!a.rows[i].skipped) running = std::max(running, a.rows[i].ratio);
            }
            r.expect(half.max_ratio == running && half.max_ratio <= a.max_ratio,
                     [&] { return cell + ": running max is not reproduced by a shorter run"; });
            r.metrics[cell] = a.max_ratio;

            for (std::size_t t = 0; t < std::min(invariance_trials, trials); ++t) {
              const FsInstance inst = fs_trial_instance(gen, t, p, v, false);
              const FsSides base = fs_sides(inst);
              if (base.rhs == 0.0) continue;
              FsInstance scaled = inst;
              scaled.x = inst.x.scaled(-2.5);
              const FsSides sx = fs_sides(scaled);
              r.expect(rel_close(sx.lhs / sx.rhs, base.lhs / base.rhs, 1e-10) &&
                           rel_close(sx.lhs, std::pow(2.5, p) * base.lhs, 1e-10),
                       [&] { return cell + ": scaling x changes the ratio"; });
              FsInstance weighted = inst;
              weighted.phi = inst.phi.scaled(3.0);
              const FsSides sp = fs_sides(weighted);
              r.expect(rel_close(sp.lhs, 3 * base.lhs, 1e-10) && rel_close(sp.rhs, 3 * base.rhs, 1e-10),
                       [&] { return cell + ": scaling phi is not linear"; });
              Point shift(d);
              for (int i = 0; i < d; ++i) shift[i] = static_cast<std::int64_t>(5 * i + 7) * (t % 2 ? 1 : -1);
              FsInstance moved = inst;
              moved.x = inst.x.shifted(shift);
              moved.phi = inst.phi.shifted(shift);
              const FsSides mv = fs_sides(moved);
              r.expect(mv.lhs == base.lhs && mv.rhs == base.rhs,
                       [&] { return cell + ": translation changes the sides"; });
            }
          }
        }
      }
    }
  });
}

GroupResult verify_maximal_boundedness(const VerifyOptions& opt) {
  return timed("maximal-boundedness", [&](GroupResult& r) {
    RandomStream rng = stream_for(opt, r.name);
    const int dims = dims_up_to(opt, 2);
    const std::int64_t margin = 16;
    const std::size_t random_inputs = opt.count(4);
    const std::pair<double, double> cells[] = {{2, 2}, {2, 3}, {1.5, 4}};
    for (int d = 1; d <= dims; ++d) {
      std::vector<std::pair<std::string, FiniteSequence>> inputs;
      inputs.emplace_back("spike", spike(d, Point(d)));
      inputs.emplace_back("spike-weighted", spike(d, Point::filled(d, 3), -2.5));
      inputs.emplace_back("indicator1", indicator(d, 1));
      inputs.emplace_back("indicator2", indicator(d, 2));
      GeneratorSpec decay;
      decay.kind = GeneratorKind::PowerDecayTruncated;
      decay.dim = d;
      decay.radius = 4;
      decay.beta = 0.5;
      inputs.emplace_back("power-decay", generate(decay));
      for (std::size_t i = 0; i < random_inputs; ++i) {
        FiniteSequence x = random_in_cube(rng, d, 2, -5, 5, 0.5);
        if (!x.is_zero()) inputs.emplace_back("random" + std::to_string(i), std::move(x));
      }
      for (auto [p, q] : cells) {
        const auto params = MorreyParams::make(p, q);
        for (const auto& [label, x] : inputs) {
          const std::string key = "maximal." + label + ".d" + std::to_string(d) + "." + pq_tag(p, q);
          const auto est = boundedness_ratio(x, params, margin, opt.threads);
          r.expect(std::isfinite(est.ratio), [&] { return key + ": ratio not finite"; });
          r.expect(est.ratio >= 1.0 - 1e-12, [&] { return key + ": ratio " + fmt(est.ratio) + " below 1"; });
          r.metrics[key + ".ratio"] = est.ratio;
          r.metrics[key + ".stabilized"] = est.stabilized ? 1.0 : 0.0;
        }
      }
    }
    const double c22 = theoretical_constant(1, 1, MorreyParams::make(2, 2)).c;
    const double c24 = theoretical_constant(1, 1, MorreyParams::make(2, 4)).c;
    r.metrics["theoretical.K1.d1.p2q2"] = c22;
    r.metrics["theoretical.K1.d1.p2q4"] = c24;
    for (double k : {0.5, 2.0, 7.0}) {
      for (int d = 1; d <= 3; ++d) {
        const auto params = MorreyParams::make(1.5, 3);
        const double c1 = theoretical_constant(k, d, params).c;
        const double c2 = theoretical_constant(2 * k, d, params).c;
        r.expect(rel_close(c2, 2 * c1, 1e-14), [&] { return std::string("theoretical constant is not linear in K"); });
      }
    }
  });
}

GroupResult verify_sandwich(const VerifyOptions& opt) {
  return timed("sandwich", [&](GroupResult& r) {
    RandomStream rng = stream_for(opt, r.name);
    const int dims = dims_up_to(opt, 2);
    const std::size_t n = opt.count(500);
    for (std::size_t t = 0; t < n; ++t) {
      const int d = 1 + static_cast<int>(t % dims);
      const FiniteSequence x = random_in_cube(rng, d, 3, -5, 5, 0.4, t % 2 == 0);
      const Point m = random_point(rng, BoundingBox::around(Point(d), 7));
      const auto s = sandwich_check(x, m);
      r.expect(s.holds, [&] {
        return "sandwich fails at " + m.to_string() + ": " + fmt(s.low) + " <= " + fmt(s.mid) + " <= " + fmt(s.high);
      });
    }
    const auto boundary = sandwich_check(spike(1, Point{0}), Point{0});
    r.expect(compare_averages(boundary.maximal, 1, boundary.ball, 2) == 0 && boundary.mid == boundary.high,
             [] { return std::string("delta boundary case is not an equality"); });
  });
}

GroupResult verify_hedberg(const VerifyOptions& opt) {
  return timed("hedberg", [&](GroupResult& r) {
    RandomStream rng = stream_for(opt, r.name);
    const int dims = dims_up_to(opt, 2);
    const std::size_t n = opt.count(200);
    const RieszParams by_dim[] = {RieszParams::make(0.5, 1, 4.0 / 3, 1.5), RieszParams::make(0.5, 2, 2, 3)};

    const double worked = hedberg_optimized_ratio(spike(1, Point{0}), by_dim[0], Point{2});
    r.metrics["hedberg.worked.d1"] = worked;
    r.expect(rel_close(worked, 1.0573712634405643, 1e-12),
             [&] { return "worked optimized ratio " + fmt(worked); });

    for (int d = 1; d <= dims; ++d) {
      const RieszParams& rp = by_dim[d - 1];
      double max_ratio = 0.0;
      double max_optimized = 0.0;
      for (std::size_t t = 0; t < n; ++t) {
        const FiniteSequence x = random_in_cube(rng, d, 3, -5, 5, 0.4);
        if (x.is_zero()) continue;
        const HedbergContext ctx(x, rp);
        const Point k = random_point(rng, BoundingBox::around(Point(d), 8));
        const double mx = ctx.maximal().at(k, MaximalVariant::Odd);
        const double radius = ctx.optimal_radius(k);
        const double near_term = std::pow(radius, rp.alpha) * mx;
        const double far_term = std::pow(radius, rp.alpha - d / rp.q) * ctx.morrey_norm();
        r.expect(radius >= 1.0 && rel_close(near_term, far_term, 1e-9), [&] {
          return "unbalanced optimal radius at " + k.to_string() + ": " + fmt(near_term) + " vs " + fmt(far_term);
        });
        const double opt_ratio = ctx.optimized_ratio(k);
        r.expect(std::isfinite(opt_ratio), [] { return std::string("optimized ratio not finite"); });
        max_optimized = std::max(max_optimized, opt_ratio);
        const double value = std::fabs(ctx.riesz().at(k));
        for (double rr : {1.0, 2.0, 4.0, 8.0}) {
          const double ratio = ctx.ratio(k, rr);
          r.expect(std::isfinite(ratio), [] { return std::string("Hedberg ratio not finite"); });
          max_ratio = std::max(max_ratio, ratio);
          const auto split = ctx.riesz().abs_split(k, rr);
          r.expect(value <= (split.first + split.second) * (1 + 1e-14),
                   [&] { return "split does not dominate at " + k.to_string(); });
        }
      }
      r.metrics["hedberg.max_ratio.d" + std::to_string(d)] = max_ratio;
      r.metrics["hedberg.max_optimized.d" + std::to_string(d)] = max_optimized;
    }
  });
}

GroupResult verify_riesz(const VerifyOptions& opt) {
  return timed("riesz", [&](GroupResult& r) {
    RandomStream rng = stream_for(opt, r.name);
    const auto e1 = conjugate_exponents(RieszParams::make(0.5, 1, 4.0 / 3, 1.5));
    const auto e2 = conjugate_exponents(RieszParams::make(0.5, 2, 2, 3));
    r.expect(rel_close(e1.s, 16.0 / 3, 1e-12) && rel_close(e1.t, 6, 1e-12),
             [&] { return "exponents (" + fmt(e1.s) + ", " + fmt(e1.t) + ")"; });
    r.expect(rel_close(e2.s, 8, 1e-12) && rel_close(e2.t, 12, 1e-12),
             [&] { return "exponents (" + fmt(e2.s) + ", " + fmt(e2.t) + ")"; });

    const int dims = dims_up_to(opt, 2);
    const RieszParams by_dim[] = {RieszParams::make(0.5, 1, 4.0 / 3, 1.5), RieszParams::make(0.5, 2, 2, 3)};
    for (int d = 1; d <= dims; ++d) {
      const RieszParams& rp = by_dim[d - 1];
      const std::string tag = "riesz.spike.d" + std::to_string(d);
      const auto base = riesz_boundedness_ratio(spike(d, Point(d)), rp, 16, opt.threads);
      r.metrics[tag + ".ratio"] = base.ratio;
      r.metrics[tag + ".certified"] = base.certified ? 1.0 : 0.0;
      r.expect(std::isfinite(base.ratio) && base.ratio > 0.0, [&] { return tag + ": ratio " + fmt(base.ratio); });
      r.expect(std::fabs(base.doubled_ratio - base.ratio) < kRieszStabilizationTolerance * base.ratio,
               [&] { return tag + ": doubling drift " + fmt(base.doubled_ratio - base.ratio); });
      for (double lambda : {-4.5, 0.125, 1000.0}) {
        const auto scaled = riesz_boundedness_ratio(spike(d, Point(d), lambda), rp, 16, opt.threads);
        r.expect(rel_close(scaled.ratio, base.ratio, 1e-12), [&] { return tag + ": ratio not homogeneous"; });
      }
      const auto moved = riesz_boundedness_ratio(spike(d, Point::filled(d, 11)), rp, 16, opt.threads);
      r.expect(moved.ratio == base.ratio, [&] { return tag + ": ratio not translation invariant"; });

      for (std::size_t t = 0; t < opt.count(3); ++t) {
        const FiniteSequence x = random_in_cube(rng, d, 1, -5, 5, 0.6);
        if (x.is_zero()) continue;
        const auto a = riesz_boundedness_ratio(x, rp, 8, opt.threads);
        const auto b = riesz_boundedness_ratio(x.scaled(-3.0), rp, 8, opt.threads);
        r.expect(std::isfinite(a.ratio) && rel_close(a.ratio, b.ratio, 1e-12),
                 [&] { return "random riesz ratio not homogeneous"; });
      }
    }
  });
}

GroupResult verify_group(const std::string& name, const VerifyOptions& opt) {
  static const std::map<std::string, std::function<GroupResult(const VerifyOptions&)>> table = {
      {"cube-sums", verify_cube_sums},
      {"morrey-truncation", verify_morrey_truncation},
      {"maximal-oracle", verify_maximal_oracle},
      {"equivalence", verify_equivalence},
      {"sup-bound", verify_sup_bound},
      {"fefferman-stein", verify_fefferman_stein},
      {"maximal-boundedness", verify_maximal_boundedness},
      {"sandwich", verify_sandwich},
      {"hedberg", verify_hedberg},
      {"riesz", verify_riesz},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw DomainError("unknown verification group '" + name + "'");
  return it->second(opt);
}

std::vector<GroupResult> verify_all(const VerifyOptions& opt) {
  if (opt.max_dim < 1 || opt.max_dim > 3) throw DomainError("verify max_dim must be 1, 2 or 3");
  if (!(opt.scale > 0.0)) throw DomainError("verify scale must be positive");
  std::vector<GroupResult> results;
  for (const auto& name : verify_group_names()) results.push_back(verify_group(name, opt));
  return results;
}

}  // namespace morrey
