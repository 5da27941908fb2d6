#pragma once

// Discrete Morrey norm
//
//   ||x||_{p,q} = sup_{m, N} |S_{m,N}|^{1/q - 1/p} (sum_{k in S_{m,N}} |x(k)|^p)^{1/p}
//
// evaluated exactly for finitely supported x. Because the cube prefactor is
// nonincreasing in N, no cube larger than the smallest one covering the
// support can beat that covering cube, so the sup is a max over radii
// N <= N0 and centers in the support hull inflated by N.

#include <cstdint>

#include "morrey/lattice.hpp"

namespace morrey {

struct MorreyParams {
  double p = 1.0;
  double q = 1.0;

  /// Validates 1 <= p <= q < inf.
  static MorreyParams make(double p, double q);

  /// d(1/q - 1/p), the (nonpositive) exponent of |S| in the candidate.
  double cube_exponent(int dim) const { return dim * (1.0 / q - 1.0 / p); }
};

struct NormCertificate {
  double value = 0.0;
  Cube argmax_cube;
  std::uint64_t candidate_count = 0;
  /// Largest radius enumerated (N0 for morrey_norm).
  std::int64_t truncation_radius = 0;
};

/// (2N+1)^{d(1/q-1/p)} (sum over the cube of |x|^p)^{1/p}.
double morrey_candidate(const FiniteSequence& x, MorreyParams params, const Cube& cube);

/// Exact sup over all cubes. Ties go to the lexicographically smallest (N, m).
NormCertificate morrey_norm(const FiniteSequence& x, MorreyParams params);

/// Same sup restricted to odd cubes contained in field.box(). A lower bound
/// of the Morrey norm of any sequence agreeing with `field` on its box.
NormCertificate windowed_morrey_norm(const FiniteSequence& field, MorreyParams params);

double lp_norm(const FiniteSequence& x, double p);
double sup_norm(const FiniteSequence& x);

struct PowerMeanSides {
  double lhs = 0.0;  ///< |S|^{-1} sum |x|
  double rhs = 0.0;  ///< (|S|^{-1} sum |x|^p)^{1/p}
};

PowerMeanSides power_mean_check(const FiniteSequence& x, const Cube& cube, double p);

}  // namespace morrey
