#pragma once

// Discrete Hardy-Littlewood maximal operators on Z^d:
//
//   Odd         Mx(m)  = sup_{N >= 0} (2N+1)^{-d} sum_{S_{m,N}} |x|
//   Even        M^x(m) = sup_{N >= 1} (2N)^{-d}   sum_{R_{m,N}} |x|
//   Uncentered  M~x(m) = sup over odd cubes S containing m of |S|^{-1} sum_S |x|
//
// Every supremum is evaluated over a finite certified range: once a centered
// cube covers the support its average only decreases with N, and for the
// uncentered operator a covering cube of minimal radius dominates every
// larger cube. The values returned are exact sups, not approximations.

#include <cstdint>
#include <string>
#include <vector>

#include "morrey/lattice.hpp"
#include "morrey/norm.hpp"

namespace morrey {

enum class MaximalVariant { Odd, Even, Uncentered };

std::string to_string(MaximalVariant variant);
MaximalVariant parse_variant(const std::string& name);

/// sum / card kept apart so that scaled comparisons can be decided exactly.
struct Average {
  double sum = 0.0;
  std::uint64_t card = 1;

  double value() const { return sum / static_cast<double>(card); }
};

/// Exact sign of scale_a * a - scale_b * b.
int compare_averages(const Average& a, std::uint64_t scale_a, const Average& b,
                     std::uint64_t scale_b);

/// Reusable evaluator: builds the |x| prefix table over the support hull once.
class MaximalEvaluator {
 public:
  explicit MaximalEvaluator(const FiniteSequence& x);

  int dim() const { return dim_; }
  const BoundingBox& hull() const { return hull_; }
  double total_abs() const { return total_; }

  /// Maximizing average at m; {0, 1} for the zero sequence.
  Average average_at(const Point& m, MaximalVariant variant) const;
  double at(const Point& m, MaximalVariant variant) const {
    return average_at(m, variant).value();
  }

  /// Average of |x| over an arbitrary cube.
  Average cube_average(const Cube& cube) const;

  /// Smallest radius of an odd cube containing both m and the hull.
  std::int64_t covering_radius(const Point& m) const;
  /// max over the hull of ||k - m||_inf.
  std::int64_t farthest_support_distance(const Point& m) const;

 private:
  Average odd_at(const Point& m) const;
  Average even_at(const Point& m) const;
  Average uncentered_at(const Point& m) const;
  std::uint64_t odd_card(std::int64_t radius) const;

  int dim_ = 1;
  BoundingBox hull_;
  PrefixSumTable table_;
  double total_ = 0.0;
};

double maximal_at(const FiniteSequence& x, const Point& m, MaximalVariant variant);

struct MaximalField {
  MaximalVariant variant = MaximalVariant::Odd;
  BoundingBox window;
  std::vector<double> values;
  BoundingBox source_hull;
  double total_abs = 0.0;

  double at(const Point& m) const { return values[window.index_of(m)]; }
  FiniteSequence as_sequence() const;
};

/// Evaluates the operator at every point of `window`. The uncentered field is
/// computed with a separable sliding-max filter per radius; the result is
/// identical to pointwise evaluation.
MaximalField maximal_field(const FiniteSequence& x, const BoundingBox& window,
                           MaximalVariant variant, unsigned threads = 1,
                           std::uint64_t cell_limit = kDefaultCellLimit);

/// sup over Z^d of Mx, attained on the support hull (a point outside the hull
/// is dominated by its clamp onto the hull).
double certified_sup_maximal(const FiniteSequence& x);

/// sum|x| / (2 dist_inf(m, hull) + 1)^d, an upper bound for Mx(m).
double maximal_tail_bound(const FiniteSequence& x, const Point& m);

struct WindowedNorm {
  double value = 0.0;          ///< windowed norm with margin L (a lower bound)
  double doubled_value = 0.0;  ///< same with margin 2L
  bool stabilized = true;      ///< relative change under doubling < 1e-9
};

inline constexpr double kMaximalStabilizationTolerance = 1e-9;

/// Morrey norm of Mx over odd cubes inside hull +- L.
WindowedNorm windowed_morrey_norm_of_maximal(const FiniteSequence& x, MorreyParams params,
                                             std::int64_t margin, unsigned threads = 1);

struct BoundednessEstimate {
  double ratio = 0.0;
  double maximal_norm = 0.0;
  double input_norm = 0.0;
  bool stabilized = true;
};

/// windowed ||Mx||_{p,q} / ||x||_{p,q}; requires 1 < p <= q and x != 0.
BoundednessEstimate boundedness_ratio(const FiniteSequence& x, MorreyParams params,
                                      std::int64_t margin, unsigned threads = 1);

struct TheoreticalConstant {
  double c = 0.0;      ///< C with C/2 = max(2^{d-dp/q} K, 3^d 2^{d-dp/q} (1/(1-2^{-dp/q}) - 1) K)
  double bound = 0.0;  ///< max(C^{1/p}, 1)
};

TheoreticalConstant theoretical_constant(double k, int dim, MorreyParams params);

enum EquivalenceViolation : unsigned {
  kOddAboveEven = 1u << 0,         ///< M > 2^d M^
  kEvenAboveOdd = 1u << 1,         ///< M^ > (3/2)^d M
  kOddAboveUncentered = 1u << 2,   ///< M > M~
  kUncenteredAboveOdd = 1u << 3,   ///< M~ > 2^d M
};

struct EquivalenceRow {
  Point m;
  Average odd;
  Average even;
  Average uncentered;
  unsigned violations = 0;
};

/// Pointwise check of M <= 2^d M^, M^ <= (3/2)^d M, M <= M~ <= 2^d M, decided
/// with exact arithmetic on the underlying sums.
std::vector<EquivalenceRow> equivalence_check(const FiniteSequence& x, const BoundingBox& window);

}  // namespace morrey
