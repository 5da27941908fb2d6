#include "morrey/riesz.hpp"

#include <algorithm>
#include <cmath>

#include "morrey/parallel.hpp"

namespace morrey {

RieszParams RieszParams::make(double alpha, int dim, double p, double q) {
  if (dim < 1) throw DomainError("dimension must be >= 1");
  if (!(alpha > 0.0 && alpha < dim)) throw DomainError("Riesz potential requires 0 < alpha < d");
  if (!(p > 1.0 && p < q && q < dim / alpha)) {
    throw DomainError("Riesz boundedness requires 1 < p < q < d/alpha");
  }
  return {alpha, dim, p, q};
}

ConjugateExponents conjugate_exponents(const RieszParams& rp) {
  RieszParams::make(rp.alpha, rp.dim, rp.p, rp.q);
  const double s = rp.dim * rp.p / (rp.dim - rp.alpha * rp.q);
  const double t = rp.q * s / rp.p;
  if (!(s > 1.0 && s <= t)) throw DomainError("conjugate exponents violate 1 < s <= t");
  return {s, t};
}

// -------------------------------------------------------------- evaluator

RieszEvaluator::RieszEvaluator(const FiniteSequence& x, const RieszParams& rp)
    : rp_(rp), support_(x.nonzeros()), hull_(support_hull(x)) {
  if (x.dim() != rp.dim) throw DomainError("sequence dimension differs from Riesz parameters");
  exact::DoubleDouble total;
  for (const auto& [i, v] : support_) total += {std::fabs(v), 0.0};
  total_abs_ = total.value();
}

double RieszEvaluator::kernel(std::int64_t distance) const {
  return std::pow(static_cast<double>(distance), rp_.alpha - rp_.dim);
}

double RieszEvaluator::at(const Point& k) const {
  exact::DoubleDouble acc;
  for (const auto& [i, v] : support_) {
    const std::int64_t dist = chebyshev_distance(k, i);
    if (dist > 0) acc += {v * kernel(dist), 0.0};
  }
  return acc.value();
}

std::pair<double, double> RieszEvaluator::abs_split(const Point& k, double r) const {
  exact::DoubleDouble near;
  exact::DoubleDouble far;
  for (const auto& [i, v] : support_) {
    const std::int64_t dist = chebyshev_distance(k, i);
    if (dist == 0) continue;
    const exact::DoubleDouble term{std::fabs(v) * kernel(dist), 0.0};
    if (static_cast<double>(dist) <= r) {
      near += term;
    } else {
      far += term;
    }
  }
  return {near.value(), far.value()};
}

double riesz_at(const FiniteSequence& x, const RieszParams& rp, const Point& k) {
  return RieszEvaluator(x, rp).at(k);
}

HedbergSplit hedberg_split(const FiniteSequence& x, const RieszParams& rp, const Point& k,
                           double r) {
  if (!(r >= 1.0)) throw DomainError("Hedberg split radius must be >= 1");
  const auto [near, far] = RieszEvaluator(x, rp).abs_split(k, r);
  return {near, far};
}

// ---------------------------------------------------------------- Hedberg

HedbergContext::HedbergContext(const FiniteSequence& x, const RieszParams& rp)
    : rp_(rp), riesz_(x, rp), maximal_(x), norm_(::morrey::morrey_norm(x, rp.source()).value) {}

double HedbergContext::ratio(const Point& k, double r) const {
  if (!(r >= 1.0)) throw DomainError("Hedberg radius must be >= 1");
  const double denominator = std::pow(r, rp_.alpha) * maximal_.at(k, MaximalVariant::Odd) +
                             std::pow(r, rp_.alpha - rp_.dim / rp_.q) * norm_;
  if (denominator == 0.0) throw DomainError("Hedberg ratio is undefined for the zero sequence");
  return std::fabs(riesz_.at(k)) / denominator;
}

double HedbergContext::optimal_radius(const Point& k) const {
  const double mx = maximal_.at(k, MaximalVariant::Odd);
  if (mx == 0.0) throw DomainError("optimal radius is undefined where Mx vanishes");
  // Mx(k) <= ||x|| makes this >= 1; rounding can land a hair below.
  return std::max(1.0, std::pow(norm_ / mx, rp_.q / rp_.dim));
}

double HedbergContext::optimized_ratio(const Point& k) const {
  const double mx = maximal_.at(k, MaximalVariant::Odd);
  if (mx == 0.0) return 0.0;
  const double e = rp_.alpha * rp_.q / rp_.dim;
  return std::fabs(riesz_.at(k)) / (std::pow(mx, 1.0 - e) * std::pow(norm_, e));
}

double hedberg_ratio(const FiniteSequence& x, const RieszParams& rp, const Point& k, double r) {
  return HedbergContext(x, rp).ratio(k, r);
}

double hedberg_optimized_ratio(const FiniteSequence& x, const RieszParams& rp, const Point& k) {
  return HedbergContext(x, rp).optimized_ratio(k);
}

// --------------------------------------------------------------- sandwich

SandwichValues sandwich_check(const MaximalEvaluator& eval, const Point& m) {
  const int d = eval.dim();
  SandwichValues out;
  if (eval.hull().is_empty()) return out;
  // The ball content is constant on [r, r+1) and (2r)^{-d} decreases, so the
  // sup over real r >= 1 is attained at an integer radius, and past the
  // covering radius only the prefactor changes.
  const std::int64_t last = std::max<std::int64_t>(1, eval.farthest_support_distance(m));
  bool first = true;
  for (std::int64_t r = 1; r <= last; ++r) {
    const Average a{eval.cube_average(Cube::odd(m, r)).sum,
                    checked_pow(static_cast<std::uint64_t>(2 * r), d)};
    if (first || compare_averages(a, 1, out.ball, 1) > 0) out.ball = a;
    first = false;
  }
  out.maximal = eval.average_at(m, MaximalVariant::Odd);
  const std::uint64_t two_d = checked_pow(2, d);
  const std::uint64_t three_d = checked_pow(3, d);
  out.low = std::pow(2.0 / 3.0, d) * out.ball.value();
  out.mid = out.maximal.value();
  out.high = static_cast<double>(two_d) * out.ball.value();
  out.holds = compare_averages(out.ball, two_d, out.maximal, three_d) <= 0 &&
              compare_averages(out.maximal, 1, out.ball, two_d) <= 0;
  return out;
}

SandwichValues sandwich_check(const FiniteSequence& x, const Point& m) {
  return sandwich_check(MaximalEvaluator(x), m);
}

// ------------------------------------------------------------ boundedness

FiniteSequence riesz_abs_field(const FiniteSequence& x, const RieszParams& rp,
                               const BoundingBox& window, unsigned threads) {
  const RieszEvaluator eval(x, rp);
  std::vector<double> values(window.cell_count(), 0.0);
  parallel_for(values.size(), threads,
               [&](std::size_t i) { values[i] = std::fabs(eval.at(window.point_at(i))); });
  return {window, std::move(values)};
}

namespace {

// Upper bound for sum over {k : dist_inf(k, hull) > radius} of
// (T dist^{a-d})^s, using exact shell counts and an integral tail.
double far_power_sum(const BoundingBox& hull, double total_abs, const RieszParams& rp, double s,
                     std::int64_t radius) {
  const int d = rp.dim;
  const double decay = s * (d - rp.alpha);
  auto shell = [&](std::int64_t j) {
    double outer = 1.0;
    double inner = 1.0;
    for (int i = 0; i < d; ++i) {
      outer *= static_cast<double>(hull.side(i) + 2 * j);
      inner *= static_cast<double>(hull.side(i) + 2 * j - 2);
    }
    return outer - inner;
  };
  const double ts = std::pow(total_abs, s);
  const std::int64_t explicit_terms = 20000;
  const std::int64_t first = radius + 1;
  const std::int64_t last = std::max(first, hull.max_side()) + explicit_terms;
  double sum = 0.0;
  for (std::int64_t j = first; j <= last; ++j) {
    sum += shell(j) * ts * std::pow(static_cast<double>(j), -decay);
  }
  // For j > last >= max side: shell(j) <= 2d (3j)^{d-1}.
  const double gamma = decay - (d - 1);
  sum += 2.0 * d * std::pow(3.0, d - 1) * ts * std::pow(static_cast<double>(last), 1.0 - gamma) /
         (gamma - 1.0);
  return sum;
}

}  // namespace

RieszBoundedness riesz_boundedness_ratio(const FiniteSequence& x, const RieszParams& rp,
                                         std::int64_t margin, unsigned threads) {
  if (margin < 1) throw DomainError("window margin must be >= 1");
  if (x.is_zero()) throw DomainError("Riesz boundedness ratio is undefined for the zero sequence");
  const ConjugateExponents st = conjugate_exponents(rp);
  const MorreyParams target = st.target();
  const BoundingBox hull = support_hull(x);

  RieszBoundedness out;
  out.input_norm = morrey_norm(x, rp.source()).value;
  const FiniteSequence field = riesz_abs_field(x, rp, hull.inflated(margin), threads);
  const double value = windowed_morrey_norm(field, target).value;
  const double doubled =
      windowed_morrey_norm(riesz_abs_field(x, rp, hull.inflated(2 * margin), threads), target).value;
  out.ratio = value / out.input_norm;
  out.doubled_ratio = doubled / out.input_norm;
  out.stabilized = std::fabs(doubled - value) < kRieszStabilizationTolerance * std::fabs(doubled);

  // Omitted cubes either avoid hull +- h entirely (every point is farther than
  // h from the support) or reach from hull +- h out of the window, which forces
  // side >= margin - h + 1.
  const int d = rp.dim;
  const double e = d * (1.0 / st.t - 1.0 / st.s);
  const std::int64_t h = margin / 2;
  const double total = RieszEvaluator(x, rp).total_abs();
  const double point_bound = total * std::pow(static_cast<double>(h + 1), rp.alpha - d);
  const double tail_h = far_power_sum(hull, total, rp, st.s, h);
  const double crossing = std::max(1.0, std::pow(std::pow(tail_h, 1.0 / st.s) / point_bound, st.s / d));
  const double outside_bound = std::pow(crossing, e) * std::pow(tail_h, 1.0 / st.s);

  const double window_power = PrefixSumTable(field, FieldTransform::abs_pow(st.s)).total();
  const double tail_l = far_power_sum(hull, total, rp, st.s, margin);
  const double straddle_bound = std::pow(static_cast<double>(margin - h + 1), e) *
                                std::pow(window_power + tail_l, 1.0 / st.s);
  out.omitted_bound = std::max(outside_bound, straddle_bound);
  out.certified = out.omitted_bound <= value * (1.0 + kRieszStabilizationTolerance);
  return out;
}

}  // namespace morrey
