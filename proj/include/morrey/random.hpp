#pragma once

// Seeded random streams. Every stream is derived from (master seed, stream
// name, index) so trials can run in any order and still draw identical
// numbers. Conversions to reals and ranges are done here rather than with
// <random> distributions, whose output is implementation-defined.

#include <cstdint>
#include <random>
#include <string_view>

namespace morrey {

std::uint64_t splitmix64(std::uint64_t& state);

/// Stable seed for the named sub-stream `index` of `master`.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream, std::uint64_t index);

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform01();
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace morrey
