#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "morrey/lattice.hpp"
#include "morrey/random.hpp"

namespace morrey::testing {

inline FiniteSequence delta(int dim, Point at = {}) {
  if (at.dim() == 0) at = Point(dim);
  return FiniteSequence::from_entries(dim, {{at, 1.0}});
}

inline FiniteSequence indicator(const Point& center, std::int64_t radius, double value = 1.0) {
  std::vector<std::pair<Point, double>> entries;
  for_each_point(BoundingBox::around(center, radius),
                 [&](const Point& p) { entries.emplace_back(p, value); });
  return FiniteSequence::from_entries(center.dim(), entries);
}

inline FiniteSequence line(std::int64_t first, const std::vector<double>& values) {
  std::vector<std::pair<Point, double>> entries;
  for (std::size_t i = 0; i < values.size(); ++i) {
    entries.emplace_back(Point{first + static_cast<std::int64_t>(i)}, values[i]);
  }
  return FiniteSequence::from_entries(1, entries);
}

inline Point random_point(RandomStream& rng, int dim, std::int64_t lo, std::int64_t hi) {
  Point p(dim);
  for (int i = 0; i < dim; ++i) p[i] = rng.uniform_int(lo, hi);
  return p;
}

/// Dense random sequence over [lo,hi]^d with roughly `density` nonzeros.
inline FiniteSequence random_sequence(RandomStream& rng, int dim, std::int64_t lo, std::int64_t hi,
                                      double value_lo, double value_hi, double density = 0.6,
                                      bool integers = false) {
  const BoundingBox box(Point::filled(dim, lo), Point::filled(dim, hi));
  std::vector<double> values(box.cell_count(), 0.0);
  for (double& v : values) {
    const double draw = integers ? static_cast<double>(rng.uniform_int(
                                       static_cast<std::int64_t>(value_lo),
                                       static_cast<std::int64_t>(value_hi)))
                                 : rng.uniform(value_lo, value_hi);
    if (rng.uniform01() < density) v = draw;
  }
  return {box, std::move(values)};
}

inline bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({std::fabs(a), std::fabs(b), 1e-300});
}

}  // namespace morrey::testing
