#include "morrey/random.hpp"

#include <stdexcept>

namespace morrey {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view stream, std::uint64_t index) {
  // FNV-1a over the stream name, then mixed with the master seed and index.
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  std::uint64_t state = master ^ h;
  splitmix64(state);
  state ^= index * 0xD1B54A32D192ED03ULL;
  return splitmix64(state);
}

double RandomStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

std::int64_t RandomStream::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t r = engine_();
  while (r >= limit) r = engine_();
  return lo + static_cast<std::int64_t>(r % span);
}

}  // namespace morrey
