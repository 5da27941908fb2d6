#pragma once

// Discrete Riesz potential
//
//   I_a x(k) = sum_{i != k} x(i) / ||k - i||_inf^{d - a}
//
// with the Hedberg-type pointwise bounds relating it to Mx and the Morrey
// norm, and the windowed boundedness ratio from l^p_q into l^s_t.

#include <cstdint>
#include <vector>

#include "morrey/lattice.hpp"
#include "morrey/maximal.hpp"
#include "morrey/norm.hpp"

namespace morrey {

/// 0 < alpha < d and 1 < p < q < d/alpha.
struct RieszParams {
  double alpha = 0.5;
  int dim = 1;
  double p = 1.5;
  double q = 1.75;

  static RieszParams make(double alpha, int dim, double p, double q);
  MorreyParams source() const { return {p, q}; }
};

struct ConjugateExponents {
  double s = 0.0;  ///< dp / (d - alpha q)
  double t = 0.0;  ///< q s / p

  MorreyParams target() const { return {s, t}; }
};

ConjugateExponents conjugate_exponents(const RieszParams& rp);

/// Evaluates I_a x at arbitrary points from the nonzero list of x.
class RieszEvaluator {
 public:
  RieszEvaluator(const FiniteSequence& x, const RieszParams& rp);

  double at(const Point& k) const;
  /// Sums of |x(i)| ||k-i||^{a-d} over 0 < ||k-i|| <= r and ||k-i|| > r.
  std::pair<double, double> abs_split(const Point& k, double r) const;
  double total_abs() const { return total_abs_; }
  const BoundingBox& hull() const { return hull_; }

 private:
  double kernel(std::int64_t distance) const;

  RieszParams rp_;
  std::vector<std::pair<Point, double>> support_;
  BoundingBox hull_;
  double total_abs_ = 0.0;
};

double riesz_at(const FiniteSequence& x, const RieszParams& rp, const Point& k);

struct HedbergSplit {
  double near = 0.0;  ///< 0 < ||k-i|| <= r
  double far = 0.0;   ///< ||k-i|| > r
};

HedbergSplit hedberg_split(const FiniteSequence& x, const RieszParams& rp, const Point& k,
                           double r);

/// Shared state for repeated Hedberg evaluations on one input.
class HedbergContext {
 public:
  HedbergContext(const FiniteSequence& x, const RieszParams& rp);

  /// |I_a x(k)| / (r^a Mx(k) + r^{a - d/q} ||x||_{p,q}).
  double ratio(const Point& k, double r) const;
  /// |I_a x(k)| / ((Mx(k))^{1 - aq/d} ||x||^{aq/d}); 0 where Mx(k) = 0.
  double optimized_ratio(const Point& k) const;
  /// (||x|| / Mx(k))^{q/d}, the radius balancing both terms of the bound.
  double optimal_radius(const Point& k) const;

  double morrey_norm() const { return norm_; }
  const MaximalEvaluator& maximal() const { return maximal_; }
  const RieszEvaluator& riesz() const { return riesz_; }

 private:
  RieszParams rp_;
  RieszEvaluator riesz_;
  MaximalEvaluator maximal_;
  double norm_ = 0.0;
};

double hedberg_ratio(const FiniteSequence& x, const RieszParams& rp, const Point& k, double r);
double hedberg_optimized_ratio(const FiniteSequence& x, const RieszParams& rp, const Point& k);

struct SandwichValues {
  Average ball;     ///< maximizing (2r)^{-d} sum_{||m-k|| <= r} |x(k)| over r >= 1
  Average maximal;  ///< Mx(m)
  double low = 0.0;   ///< (2/3)^d S(m)
  double mid = 0.0;   ///< Mx(m)
  double high = 0.0;  ///< 2^d S(m)
  bool holds = true;  ///< low <= mid <= high, decided exactly
};

SandwichValues sandwich_check(const FiniteSequence& x, const Point& m);
SandwichValues sandwich_check(const MaximalEvaluator& eval, const Point& m);

struct RieszBoundedness {
  double ratio = 0.0;          ///< windowed ||I_a x||_{s,t} / ||x||_{p,q}, margin L
  double doubled_ratio = 0.0;  ///< same with margin 2L
  double input_norm = 0.0;
  bool stabilized = false;     ///< relative drift under doubling < 1e-6
  bool certified = false;      ///< tail bound shows no omitted cube exceeds the value by 1e-6
  double omitted_bound = 0.0;  ///< upper bound on every cube not inside the window
};

inline constexpr double kRieszStabilizationTolerance = 1e-6;

RieszBoundedness riesz_boundedness_ratio(const FiniteSequence& x, const RieszParams& rp,
                                         std::int64_t margin, unsigned threads = 1);

/// |I_a x| over a window, as a sequence with the window as its box.
FiniteSequence riesz_abs_field(const FiniteSequence& x, const RieszParams& rp,
                               const BoundingBox& window, unsigned threads = 1);

}  // namespace morrey
