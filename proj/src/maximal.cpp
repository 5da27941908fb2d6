#include "morrey/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "morrey/parallel.hpp"

namespace morrey {

namespace {

constexpr std::uint64_t kExactIntegerLimit = std::uint64_t{1} << 53;

// cand > best, decided exactly when the rounded values are too close to call.
bool exceeds(const Average& cand, const Average& best) {
  const double vc = cand.value();
  const double vb = best.value();
  if (vc > vb * (1.0 + 1e-12)) return true;
  if (vc < vb * (1.0 - 1e-12)) return false;
  return compare_averages(cand, 1, best, 1) > 0;
}

// Sliding max of radius n along `axis`: out(p) = max_{|j| <= n} in(p + j e_axis).
// `in_box` is `out_box` widened by n on that axis.
std::vector<double> sliding_max(const std::vector<double>& in, const BoundingBox& in_box,
                                const BoundingBox& out_box, int axis, std::int64_t n) {
  std::vector<double> out(out_box.cell_count(), 0.0);
  const std::int64_t out_len = out_box.side(axis);
  const std::int64_t in_len = in_box.side(axis);
  std::size_t in_stride = 1;
  std::size_t out_stride = 1;
  for (int i = in_box.dim() - 1; i > axis; --i) {
    in_stride *= static_cast<std::size_t>(in_box.side(i));
    out_stride *= static_cast<std::size_t>(out_box.side(i));
  }
  Point hi = out_box.hi();
  hi[axis] = out_box.lo()[axis];
  const BoundingBox starts(out_box.lo(), hi);
  std::deque<std::int64_t> window;
  for_each_point(starts, [&](const Point& start) {
    Point in_start = start;
    in_start[axis] = in_box.lo()[axis];
    const std::size_t in_base = in_box.index_of(in_start);
    const std::size_t out_base = out_box.index_of(start);
    auto value = [&](std::int64_t i) { return in[in_base + static_cast<std::size_t>(i) * in_stride]; };
    window.clear();
    for (std::int64_t i = 0; i < in_len; ++i) {
      while (!window.empty() && value(window.back()) <= value(i)) window.pop_back();
      window.push_back(i);
      if (window.front() <= i - (2 * n + 1)) window.pop_front();
      const std::int64_t o = i - 2 * n;
      if (o >= 0 && o < out_len) {
        out[out_base + static_cast<std::size_t>(o) * out_stride] = value(window.front());
      }
    }
  });
  return out;
}

}  // namespace

std::string to_string(MaximalVariant variant) {
  switch (variant) {
    case MaximalVariant::Odd:
      return "odd";
    case MaximalVariant::Even:
      return "even";
    case MaximalVariant::Uncentered:
      return "uncentered";
  }
  return "odd";
}

MaximalVariant parse_variant(const std::string& name) {
  if (name == "odd") return MaximalVariant::Odd;
  if (name == "even") return MaximalVariant::Even;
  if (name == "uncentered") return MaximalVariant::Uncentered;
  throw DomainError("unknown maximal variant '" + name + "' (expected odd, even or uncentered)");
}

int compare_averages(const Average& a, std::uint64_t scale_a, const Average& b,
                     std::uint64_t scale_b) {
  const std::uint64_t i = checked_mul(scale_a, b.card);
  const std::uint64_t j = checked_mul(scale_b, a.card);
  if (i >= kExactIntegerLimit || j >= kExactIntegerLimit) {
    throw OverflowError("average comparison exceeds the exact integer range of a double");
  }
  return exact::compare_scaled(a.sum, i, b.sum, j);
}

// ---------------------------------------------------------- evaluator

MaximalEvaluator::MaximalEvaluator(const FiniteSequence& x)
    : dim_(x.dim()), hull_(support_hull(x)) {
  if (hull_.is_empty()) return;
  table_ = PrefixSumTable(x.cropped(hull_), FieldTransform::abs());
  total_ = table_.total();
}

std::uint64_t MaximalEvaluator::odd_card(std::int64_t radius) const {
  return checked_pow(static_cast<std::uint64_t>(2 * radius + 1), dim_);
}

std::int64_t MaximalEvaluator::farthest_support_distance(const Point& m) const {
  std::int64_t n = 0;
  for (int i = 0; i < dim_; ++i) {
    n = std::max({n, std::abs(m[i] - hull_.lo()[i]), std::abs(hull_.hi()[i] - m[i])});
  }
  return n;
}

std::int64_t MaximalEvaluator::covering_radius(const Point& m) const {
  return hull_.hull_with(m).max_side() / 2;
}

Average MaximalEvaluator::cube_average(const Cube& cube) const {
  return {cube_sum(table_, cube), cube_cardinality(cube)};
}

Average MaximalEvaluator::average_at(const Point& m, MaximalVariant variant) const {
  if (hull_.is_empty()) return {};
  switch (variant) {
    case MaximalVariant::Odd:
      return odd_at(m);
    case MaximalVariant::Even:
      return even_at(m);
    case MaximalVariant::Uncentered:
      return uncentered_at(m);
  }
  return {};
}

Average MaximalEvaluator::odd_at(const Point& m) const {
  const std::int64_t last = farthest_support_distance(m);
  Average best{0.0, 1};
  for (std::int64_t n = 0; n <= last; ++n) {
    const Average a{table_.box_sum(BoundingBox::around(m, n)), odd_card(n)};
    if (n == 0 || exceeds(a, best)) best = a;
  }
  return best;
}

Average MaximalEvaluator::even_at(const Point& m) const {
  std::int64_t last = 1;
  for (int i = 0; i < dim_; ++i) {
    last = std::max({last, m[i] - hull_.lo()[i], hull_.hi()[i] - m[i] + 1});
  }
  Average best{0.0, 1};
  for (std::int64_t n = 1; n <= last; ++n) {
    const Cube cube{m, n, CubeParity::Even};
    const Average a{table_.box_sum(cube.box()), cube_cardinality(cube)};
    if (n == 1 || exceeds(a, best)) best = a;
  }
  return best;
}

Average MaximalEvaluator::uncentered_at(const Point& m) const {
  const std::int64_t last = covering_radius(m);
  Average best{0.0, 1};
  for (std::int64_t n = 0; n <= last; ++n) {
    // Centers k with ||k - m|| <= n whose cube meets the hull.
    Point lo(dim_);
    Point hi(dim_);
    bool any = true;
    for (int i = 0; i < dim_; ++i) {
      lo[i] = std::max(m[i], hull_.lo()[i]) - n;
      hi[i] = std::min(m[i], hull_.hi()[i]) + n;
      if (lo[i] > hi[i]) any = false;
    }
    if (!any) continue;
    const std::uint64_t card = odd_card(n);
    for_each_point(BoundingBox(lo, hi), [&](const Point& k) {
      const Average a{table_.box_sum(BoundingBox::around(k, n)), card};
      if (exceeds(a, best)) best = a;
    });
  }
  return best;
}

double maximal_at(const FiniteSequence& x, const Point& m, MaximalVariant variant) {
  if (m.dim() != x.dim()) throw DomainError("point and sequence dimensions differ");
  return MaximalEvaluator(x).at(m, variant);
}

// --------------------------------------------------------------- fields

FiniteSequence MaximalField::as_sequence() const {
  return {window, values, std::numeric_limits<std::uint64_t>::max()};
}

MaximalField maximal_field(const FiniteSequence& x, const BoundingBox& window,
                           MaximalVariant variant, unsigned threads, std::uint64_t cell_limit) {
  if (window.is_empty()) throw DomainError("maximal_field requires a nonempty window");
  const std::uint64_t cells = window.cell_count();
  if (cells > cell_limit) {
    throw ResourceError("window has " + std::to_string(cells) + " cells, limit is " +
                        std::to_string(cell_limit));
  }
  const MaximalEvaluator eval(x);
  MaximalField field{variant, window, std::vector<double>(cells, 0.0), eval.hull(),
                     eval.total_abs()};
  if (eval.hull().is_empty()) return field;

  if (variant != MaximalVariant::Uncentered) {
    parallel_for(cells, threads, [&](std::size_t i) {
      field.values[i] = eval.at(window.point_at(i), variant);
    });
    return field;
  }

  // Uncentered: per radius, cube sums for every center near the window, then a
  // separable max over the centers S_{m,n} of each window point m.
  const BoundingBox& hull = eval.hull();
  const std::int64_t last = hull.hull_with(window.lo()).hull_with(window.hi()).max_side() / 2;
  const int d = x.dim();
  std::vector<Average> best(cells, Average{0.0, 1});
  for (std::int64_t n = 0; n <= last; ++n) {
    const BoundingBox centers = window.inflated(n);
    if (centers.cell_count() > cell_limit) {
      throw ResourceError("uncentered sweep exceeds the cell limit");
    }
    const BoundingBox reach = hull.inflated(n);
    std::vector<double> sums(centers.cell_count(), 0.0);
    parallel_for(sums.size(), threads, [&](std::size_t i) {
      const Point k = centers.point_at(i);
      if (reach.contains(k)) sums[i] = eval.cube_average(Cube{k, n, CubeParity::Odd}).sum;
    });
    BoundingBox in_box = centers;
    for (int axis = 0; axis < d; ++axis) {
      Point lo = in_box.lo();
      Point hi = in_box.hi();
      lo[axis] = window.lo()[axis];
      hi[axis] = window.hi()[axis];
      const BoundingBox out_box(lo, hi);
      sums = sliding_max(sums, in_box, out_box, axis, n);
      in_box = out_box;
    }
    const std::uint64_t card = checked_pow(static_cast<std::uint64_t>(2 * n + 1), d);
    for (std::size_t i = 0; i < cells; ++i) {
      const Average a{sums[i], card};
      if (n == 0 || exceeds(a, best[i])) best[i] = a;
    }
  }
  for (std::size_t i = 0; i < cells; ++i) field.values[i] = best[i].value();
  return field;
}

double certified_sup_maximal(const FiniteSequence& x) {
  const MaximalEvaluator eval(x);
  double best = 0.0;
  for_each_point(eval.hull(), [&](const Point& m) {
    best = std::max(best, eval.at(m, MaximalVariant::Odd));
  });
  return best;
}

double maximal_tail_bound(const FiniteSequence& x, const Point& m) {
  const BoundingBox hull = support_hull(x);
  if (hull.is_empty()) return 0.0;
  const double total = PrefixSumTable(x.cropped(hull), FieldTransform::abs()).total();
  const double side = static_cast<double>(2 * hull.distance_to(m) + 1);
  return total / std::pow(side, x.dim());
}

// ------------------------------------------------------- boundedness

namespace {

double windowed_maximal_value(const FiniteSequence& x, const BoundingBox& hull, MorreyParams params,
                              std::int64_t margin, unsigned threads) {
  const MaximalField field = maximal_field(x, hull.inflated(margin), MaximalVariant::Odd, threads);
  return windowed_morrey_norm(field.as_sequence(), params).value;
}

}  // namespace

WindowedNorm windowed_morrey_norm_of_maximal(const FiniteSequence& x, MorreyParams params,
                                             std::int64_t margin, unsigned threads) {
  if (margin < 0) throw DomainError("window margin must be nonnegative");
  const BoundingBox hull = support_hull(x);
  if (hull.is_empty()) return {0.0, 0.0, true};
  WindowedNorm out;
  out.value = windowed_maximal_value(x, hull, params, margin, threads);
  out.doubled_value = windowed_maximal_value(x, hull, params, 2 * margin, threads);
  out.stabilized = std::fabs(out.doubled_value - out.value) <
                   kMaximalStabilizationTolerance * std::fabs(out.doubled_value);
  return out;
}

BoundednessEstimate boundedness_ratio(const FiniteSequence& x, MorreyParams params,
                                      std::int64_t margin, unsigned threads) {
  if (!(params.p > 1.0)) throw DomainError("boundedness of M requires 1 < p <= q");
  if (x.is_zero()) throw DomainError("boundedness ratio is undefined for the zero sequence");
  const WindowedNorm windowed = windowed_morrey_norm_of_maximal(x, params, margin, threads);
  const double norm = morrey_norm(x, params).value;
  return {windowed.value / norm, windowed.value, norm, windowed.stabilized};
}

TheoreticalConstant theoretical_constant(double k, int dim, MorreyParams params) {
  if (!(k > 0.0)) throw DomainError("theoretical_constant requires K > 0");
  if (!(params.p > 1.0) || params.q < params.p) {
    throw DomainError("theoretical_constant requires 1 < p <= q");
  }
  const double e = dim * params.p / params.q;
  const double head = std::pow(2.0, dim - e) * k;
  const double tail =
      std::pow(3.0, dim) * std::pow(2.0, dim - e) * (1.0 / (1.0 - std::pow(2.0, -e)) - 1.0) * k;
  const double c = 2.0 * std::max(head, tail);
  return {c, std::max(std::pow(c, 1.0 / params.p), 1.0)};
}

// --------------------------------------------------------- equivalence

std::vector<EquivalenceRow> equivalence_check(const FiniteSequence& x, const BoundingBox& window) {
  const MaximalEvaluator eval(x);
  const int d = x.dim();
  const std::uint64_t two_d = checked_pow(2, d);
  const std::uint64_t three_d = checked_pow(3, d);
  std::vector<EquivalenceRow> rows;
  rows.reserve(window.cell_count());
  for_each_point(window, [&](const Point& m) {
    EquivalenceRow row{m, eval.average_at(m, MaximalVariant::Odd),
                       eval.average_at(m, MaximalVariant::Even),
                       eval.average_at(m, MaximalVariant::Uncentered), 0};
    if (compare_averages(row.odd, 1, row.even, two_d) > 0) row.violations |= kOddAboveEven;
    if (compare_averages(row.even, two_d, row.odd, three_d) > 0) row.violations |= kEvenAboveOdd;
    if (compare_averages(row.odd, 1, row.uncentered, 1) > 0) row.violations |= kOddAboveUncentered;
    if (compare_averages(row.uncentered, 1, row.odd, two_d) > 0) {
      row.violations |= kUncenteredAboveOdd;
    }
    rows.push_back(row);
  });
  return rows;
}

}  // namespace morrey
