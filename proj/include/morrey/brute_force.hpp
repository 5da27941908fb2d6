#pragma once

// Direct-enumeration oracles. Nothing here touches prefix tables or certified
// truncation: sums walk every lattice point of a set and accumulate in long
// double, and suprema scan an explicitly given, deliberately generous range.
// Used by the test suites and by `verify-all`.

#include <cstdint>

#include "morrey/lattice.hpp"
#include "morrey/maximal.hpp"
#include "morrey/norm.hpp"

namespace morrey::brute {

/// Sum over the points of `box` of transform(x(k)).
double box_sum(const FiniteSequence& x, const BoundingBox& box, FieldTransform transform);

/// Counts the points of `a` that also lie in `b`.
std::uint64_t intersection_count(const Cube& a, const Cube& b);

/// max over m in `centers`, 0 <= N <= max_radius of the Morrey candidate.
double morrey_sup(const FiniteSequence& x, MorreyParams params, const BoundingBox& centers,
                  std::int64_t max_radius);

/// The chosen maximal operator at m with every radius up to max_radius
/// (uncentered: every odd cube containing m with radius <= max_radius).
double maximal(const FiniteSequence& x, const Point& m, MaximalVariant variant,
               std::int64_t max_radius);

/// sup over r in {1, 1+step, ...} up to r_max of (2r)^{-d} sum_{||m-k|| <= r} |x(k)|.
double ball_average_sup_real(const FiniteSequence& x, const Point& m, double r_max, double step);

}  // namespace morrey::brute
