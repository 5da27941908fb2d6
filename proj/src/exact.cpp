#include "morrey/exact.hpp"

#include <array>
#include <cstddef>

namespace morrey::exact {

namespace {

// Sign of the exact sum of a few doubles via a nonoverlapping expansion.
template <std::size_t N>
int expansion_sign(const std::array<double, N>& terms) {
  std::array<double, N + 1> expansion{};
  std::size_t length = 0;
  for (double b : terms) {
    double q = b;
    std::size_t out = 0;
    for (std::size_t i = 0; i < length; ++i) {
      const TwoTerm s = two_sum(q, expansion[i]);
      q = s.hi;
      if (s.lo != 0.0) expansion[out++] = s.lo;
    }
    expansion[out++] = q;
    length = out;
  }
  for (std::size_t i = length; i-- > 0;) {
    if (expansion[i] > 0.0) return 1;
    if (expansion[i] < 0.0) return -1;
  }
  return 0;
}

}  // namespace

int compare_scaled(double a, std::uint64_t i, double b, std::uint64_t j) {
  const TwoTerm left = two_product(a, static_cast<double>(i));
  const TwoTerm right = two_product(b, static_cast<double>(j));
  return expansion_sign(std::array<double, 4>{left.lo, -right.lo, left.hi, -right.hi});
}

}  // namespace morrey::exact
