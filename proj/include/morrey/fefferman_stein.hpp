#pragma once

// Both sides of the discrete Fefferman-Stein inequality
//
//   sum_k (Tx(k))^p phi(k)  <=  K sum_k |x(k)|^p Tphi(k)
//
// for T in {M, M^, M~}, evaluated as exact finite sums (the left side lives on
// supp(phi), the right side on supp(x)), and ensembles that estimate the
// smallest admissible K empirically.

#include <cstdint>
#include <vector>

#include "morrey/generators.hpp"
#include "morrey/lattice.hpp"
#include "morrey/maximal.hpp"

namespace morrey {

struct FsInstance {
  FiniteSequence x;
  FiniteSequence phi;  ///< nonnegative weight
  double p = 2.0;      ///< p > 1
  MaximalVariant variant = MaximalVariant::Odd;

  void validate() const;
};

struct FsSides {
  double lhs = 0.0;
  double rhs = 0.0;
};

FsSides fs_sides(const FsInstance& instance);

struct RatioRow {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool skipped = false;  ///< rhs == 0, the inequality is vacuous
};

struct RatioReport {
  std::uint64_t trials = 0;
  std::uint64_t skipped = 0;
  double max_ratio = 0.0;
  std::uint64_t argmax_trial = 0;
  std::uint64_t argmax_seed = 0;
  std::vector<RatioRow> rows;
};

struct FsEnsembleOptions {
  bool phi_equals_x = false;  ///< use phi = |x| instead of an independent draw
  unsigned threads = 1;
};

/// Trial t draws x and phi from sub-streams of derive_seed(gen.seed, "trial", t);
/// the report is identical for any thread count.
RatioReport fs_ratio_ensemble(const GeneratorSpec& gen, std::size_t trials, double p,
                              MaximalVariant variant, const FsEnsembleOptions& options = {});

/// The instance drawn for trial `trial` of an ensemble.
FsInstance fs_trial_instance(const GeneratorSpec& gen, std::uint64_t trial, double p,
                             MaximalVariant variant, bool phi_equals_x);

/// Hill climbing over spike positions and weights, starting from a generated
/// pair. Rows list every accepted improvement in order.
RatioReport fs_adversarial_search(const GeneratorSpec& gen, std::size_t iterations, double p,
                                  MaximalVariant variant);

}  // namespace morrey
