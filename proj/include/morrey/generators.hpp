#pragma once

#include <cstdint>
#include <string>

#include "morrey/lattice.hpp"

namespace morrey {

enum class GeneratorKind { Spike, MultiSpike, CubeIndicator, UniformRandomBox, PowerDecayTruncated };

std::string to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(const std::string& name);

/// Recipe for a finitely supported test sequence. Everything lives inside
/// the box center +- radius, and (spec, seed) determines the output bit for bit.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Spike;
  int dim = 1;
  /// spike: random offset range (0 puts the spike at `center`); multi-spike and
  /// uniform box: half-width of the box; cube-indicator: cube radius;
  /// power-decay: outer radius R.
  std::int64_t radius = 0;
  std::int64_t count = 1;  ///< multi-spike: number of distinct spikes
  double value_min = 1.0;
  double value_max = 1.0;
  bool integer_values = false;
  double density = 1.0;  ///< uniform box: probability that a point is nonzero
  double beta = 0.5;     ///< power-decay exponent
  std::int64_t center_offset = 0;  ///< center = (c, ..., c)
  std::uint64_t seed = 0;

  Point center() const { return Point::filled(dim, center_offset); }
  BoundingBox declared_box() const;
  void validate() const;
};

FiniteSequence generate(const GeneratorSpec& spec);

/// Same recipe with the seed replaced by a named sub-stream of spec.seed.
FiniteSequence generate_stream(const GeneratorSpec& spec, std::string_view stream,
                               std::uint64_t index);

}  // namespace morrey
