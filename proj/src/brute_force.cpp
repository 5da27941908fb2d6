#include "morrey/brute_force.hpp"

#include <algorithm>
#include <cmath>

namespace morrey::brute {

double box_sum(const FiniteSequence& x, const BoundingBox& box, FieldTransform transform) {
  long double acc = 0.0L;
  for_each_point(box, [&](const Point& k) { acc += transform.apply(x.at(k)); });
  return static_cast<double>(acc);
}

std::uint64_t intersection_count(const Cube& a, const Cube& b) {
  std::uint64_t n = 0;
  for_each_point(a.box(), [&](const Point& k) {
    if (b.contains(k)) ++n;
  });
  return n;
}

double morrey_sup(const FiniteSequence& x, MorreyParams params, const BoundingBox& centers,
                  std::int64_t max_radius) {
  const int d = x.dim();
  const FieldTransform pw = FieldTransform::abs_pow(params.p);
  double best = 0.0;
  for (std::int64_t n = 0; n <= max_radius; ++n) {
    const long double size = std::pow(static_cast<long double>(2 * n + 1), d);
    for_each_point(centers, [&](const Point& m) {
      // Only the part of the cube inside x.box() can contribute.
      const double s = box_sum(x, BoundingBox::around(m, n).intersect(x.box()), pw);
      const long double v = std::pow(size, 1.0L / params.q - 1.0L / params.p) *
                            std::pow(static_cast<long double>(s), 1.0L / params.p);
      best = std::max(best, static_cast<double>(v));
    });
  }
  return best;
}

double maximal(const FiniteSequence& x, const Point& m, MaximalVariant variant,
               std::int64_t max_radius) {
  const int d = x.dim();
  const FieldTransform abs = FieldTransform::abs();
  double best = 0.0;
  switch (variant) {
    case MaximalVariant::Odd:
      for (std::int64_t n = 0; n <= max_radius; ++n) {
        const BoundingBox cube = BoundingBox::around(m, n);
        best = std::max(best, box_sum(x, cube.intersect(x.box()), abs) /
                                  std::pow(static_cast<double>(2 * n + 1), d));
      }
      break;
    case MaximalVariant::Even:
      for (std::int64_t n = 1; n <= max_radius; ++n) {
        // Explicit set definition: S_{m,n} minus every point with k_i = m_i + n.
        long double acc = 0.0L;
        for_each_point(BoundingBox::around(m, n), [&](const Point& k) {
          for (int i = 0; i < d; ++i) {
            if (k[i] == m[i] + n) return;
          }
          acc += std::fabs(x.at(k));
        });
        best = std::max(best, static_cast<double>(acc) / std::pow(static_cast<double>(2 * n), d));
      }
      break;
    case MaximalVariant::Uncentered:
      for (std::int64_t n = 0; n <= max_radius; ++n) {
        for_each_point(BoundingBox::around(m, n), [&](const Point& k) {
          const BoundingBox cube = BoundingBox::around(k, n);
          best = std::max(best, box_sum(x, cube.intersect(x.box()), abs) /
                                    std::pow(static_cast<double>(2 * n + 1), d));
        });
      }
      break;
  }
  return best;
}

double ball_average_sup_real(const FiniteSequence& x, const Point& m, double r_max, double step) {
  const int d = x.dim();
  double best = 0.0;
  const auto steps = static_cast<std::int64_t>(std::floor((r_max - 1.0) / step + 1e-9));
  for (std::int64_t i = 0; i <= steps; ++i) {
    const double r = 1.0 + static_cast<double>(i) * step;
    long double acc = 0.0L;
    for_each_point(x.box(), [&](const Point& k) {
      if (static_cast<double>(chebyshev_distance(m, k)) <= r) acc += std::fabs(x.at(k));
    });
    best = std::max(best, static_cast<double>(acc) / std::pow(2.0 * r, d));
  }
  return best;
}

}  // namespace morrey::brute
