#include "morrey/generators.hpp"

#include <cmath>
#include <set>
#include <vector>

#include "morrey/random.hpp"

namespace morrey {

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Spike:
      return "spike";
    case GeneratorKind::MultiSpike:
      return "multi-spike";
    case GeneratorKind::CubeIndicator:
      return "cube-indicator";
    case GeneratorKind::UniformRandomBox:
      return "uniform-random-box";
    case GeneratorKind::PowerDecayTruncated:
      return "power-decay-truncated";
  }
  return "spike";
}

GeneratorKind parse_generator_kind(const std::string& name) {
  for (auto k : {GeneratorKind::Spike, GeneratorKind::MultiSpike, GeneratorKind::CubeIndicator,
                 GeneratorKind::UniformRandomBox, GeneratorKind::PowerDecayTruncated}) {
    if (to_string(k) == name) return k;
  }
  throw DomainError("unknown generator kind '" + name + "'");
}

BoundingBox GeneratorSpec::declared_box() const { return BoundingBox::around(center(), radius); }

void GeneratorSpec::validate() const {
  if (dim < 1 || dim > kMaxDim) throw DomainError("generator dimension out of range");
  if (radius < 0) throw DomainError("generator radius must be nonnegative");
  if (value_max < value_min) throw DomainError("generator value_max < value_min");
  if (!(density >= 0.0 && density <= 1.0)) throw DomainError("generator density must lie in [0,1]");
  if (kind == GeneratorKind::MultiSpike) {
    if (count < 1) throw DomainError("multi-spike count must be >= 1");
    if (static_cast<std::uint64_t>(count) > declared_box().cell_count()) {
      throw DomainError("multi-spike count exceeds the number of points in its box");
    }
  }
  if (kind == GeneratorKind::PowerDecayTruncated && !(beta > 0.0)) {
    throw DomainError("power-decay beta must be positive");
  }
}

namespace {

double draw_value(const GeneratorSpec& spec, RandomStream& rng) {
  if (spec.value_min == spec.value_max) return spec.value_min;
  if (spec.integer_values) {
    return static_cast<double>(rng.uniform_int(static_cast<std::int64_t>(std::ceil(spec.value_min)),
                                               static_cast<std::int64_t>(std::floor(spec.value_max))));
  }
  return rng.uniform(spec.value_min, spec.value_max);
}

Point draw_point(const BoundingBox& box, RandomStream& rng) {
  Point p(box.dim());
  for (int i = 0; i < box.dim(); ++i) p[i] = rng.uniform_int(box.lo()[i], box.hi()[i]);
  return p;
}

}  // namespace

FiniteSequence generate(const GeneratorSpec& spec) {
  spec.validate();
  RandomStream rng(spec.seed);
  const BoundingBox box = spec.declared_box();
  std::vector<std::pair<Point, double>> entries;
  switch (spec.kind) {
    case GeneratorKind::Spike:
      entries.emplace_back(spec.radius > 0 ? draw_point(box, rng) : spec.center(),
                           draw_value(spec, rng));
      break;
    case GeneratorKind::MultiSpike: {
      std::set<Point> used;
      while (static_cast<std::int64_t>(entries.size()) < spec.count) {
        const Point p = draw_point(box, rng);
        const double v = draw_value(spec, rng);
        if (used.insert(p).second) entries.emplace_back(p, v);
      }
      break;
    }
    case GeneratorKind::CubeIndicator:
      for_each_point(box, [&](const Point& p) { entries.emplace_back(p, spec.value_max); });
      break;
    case GeneratorKind::UniformRandomBox:
      for_each_point(box, [&](const Point& p) {
        const bool keep = spec.density >= 1.0 || rng.uniform01() < spec.density;
        const double v = draw_value(spec, rng);
        if (keep) entries.emplace_back(p, v);
      });
      break;
    case GeneratorKind::PowerDecayTruncated:
      for_each_point(box, [&](const Point& p) {
        const std::int64_t r = chebyshev_distance(p, spec.center());
        if (r >= 1) entries.emplace_back(p, std::pow(static_cast<double>(r), -spec.beta));
      });
      break;
  }
  return FiniteSequence::from_entries(spec.dim, entries);
}

FiniteSequence generate_stream(const GeneratorSpec& spec, std::string_view stream,
                               std::uint64_t index) {
  GeneratorSpec copy = spec;
  copy.seed = derive_seed(spec.seed, stream, index);
  return generate(copy);
}

}  // namespace morrey
