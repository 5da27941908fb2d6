#pragma once

// Error-free floating-point transformations.
//
// Prefix-sum tables accumulate in double-double so that inclusion-exclusion
// over 2^d corners does not lose the small cube sums to cancellation, and the
// operator comparisons (sandwich constants) are decided on exact products.

#include <cmath>
#include <cstdint>

namespace morrey::exact {

struct TwoTerm {
  double hi = 0.0;
  double lo = 0.0;
};

inline TwoTerm two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline TwoTerm quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline TwoTerm two_product(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

/// Double-double value with hi = fl(hi + lo).
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  double value() const { return hi; }

  DoubleDouble& operator+=(const DoubleDouble& o) {
    TwoTerm s = two_sum(hi, o.hi);
    const TwoTerm t = two_sum(lo, o.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    s = quick_two_sum(s.hi, s.lo);
    hi = s.hi;
    lo = s.lo;
    return *this;
  }

  DoubleDouble& operator-=(const DoubleDouble& o) { return *this += DoubleDouble{-o.hi, -o.lo}; }

  friend DoubleDouble operator+(DoubleDouble a, const DoubleDouble& b) { return a += b; }
  friend DoubleDouble operator-(DoubleDouble a, const DoubleDouble& b) { return a -= b; }
};

/// Exact sign of a*i - b*j for finite doubles a, b and integers i, j < 2^53.
int compare_scaled(double a, std::uint64_t i, double b, std::uint64_t j);

}  // namespace morrey::exact
