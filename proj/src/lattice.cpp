#include "morrey/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace morrey {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("lattice count exceeds the 64-bit integer range");
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

// ---------------------------------------------------------------- Point

Point::Point(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw DomainError("dimension must lie in [1, " + std::to_string(kMaxDim) + "], got " +
                      std::to_string(dim));
  }
}

Point::Point(std::initializer_list<std::int64_t> coords) : Point(static_cast<int>(coords.size())) {
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

Point Point::from_span(std::span<const std::int64_t> coords) {
  Point p(static_cast<int>(coords.size()));
  std::copy(coords.begin(), coords.end(), p.coords_.begin());
  return p;
}

Point Point::filled(int dim, std::int64_t value) {
  Point p(dim);
  for (int i = 0; i < dim; ++i) p[i] = value;
  return p;
}

Point Point::operator+(const Point& o) const {
  Point r(*this);
  for (int i = 0; i < dim_; ++i) r[i] += o[i];
  return r;
}

Point Point::operator-(const Point& o) const {
  Point r(*this);
  for (int i = 0; i < dim_; ++i) r[i] -= o[i];
  return r;
}

bool operator==(const Point& a, const Point& b) {
  if (a.dim_ != b.dim_) return false;
  for (int i = 0; i < a.dim_; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (int i = 0; i < a.dim_; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < dim_; ++i) os << (i ? "," : "") << coords_[static_cast<std::size_t>(i)];
  os << ')';
  return os.str();
}

std::int64_t chebyshev_distance(const Point& a, const Point& b) {
  std::int64_t d = 0;
  for (int i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// ---------------------------------------------------------- BoundingBox

BoundingBox::BoundingBox(Point lo, Point hi) : lo_(lo), hi_(hi), empty_(false) {
  if (lo.dim() != hi.dim()) throw DomainError("box corners have different dimensions");
  for (int i = 0; i < lo.dim(); ++i) {
    if (lo[i] > hi[i]) {
      throw DomainError("box corner lo " + lo.to_string() + " exceeds hi " + hi.to_string());
    }
  }
}

BoundingBox BoundingBox::empty(int dim) {
  BoundingBox b;
  b.lo_ = Point(dim);
  b.hi_ = Point(dim);
  b.empty_ = true;
  return b;
}

BoundingBox BoundingBox::around(const Point& center, std::int64_t radius) {
  return {center - Point::filled(center.dim(), radius), center + Point::filled(center.dim(), radius)};
}

std::int64_t BoundingBox::max_side() const {
  std::int64_t s = 0;
  for (int i = 0; i < dim(); ++i) s = std::max(s, side(i));
  return s;
}

std::uint64_t BoundingBox::cell_count() const {
  if (empty_) return 0;
  std::uint64_t n = 1;
  for (int i = 0; i < dim(); ++i) n = checked_mul(n, static_cast<std::uint64_t>(side(i)));
  return n;
}

bool BoundingBox::contains(const Point& p) const {
  if (empty_) return false;
  for (int i = 0; i < dim(); ++i) {
    if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
  }
  return true;
}

bool BoundingBox::contains(const BoundingBox& other) const {
  if (other.empty_) return true;
  return contains(other.lo_) && contains(other.hi_);
}

BoundingBox BoundingBox::intersect(const BoundingBox& other) const {
  if (empty_ || other.empty_) return empty(dim());
  Point lo(dim());
  Point hi(dim());
  for (int i = 0; i < dim(); ++i) {
    lo[i] = std::max(lo_[i], other.lo_[i]);
    hi[i] = std::min(hi_[i], other.hi_[i]);
    if (lo[i] > hi[i]) return empty(dim());
  }
  return {lo, hi};
}

BoundingBox BoundingBox::hull_with(const Point& p) const {
  if (empty_) return {p, p};
  Point lo(lo_);
  Point hi(hi_);
  for (int i = 0; i < dim(); ++i) {
    lo[i] = std::min(lo[i], p[i]);
    hi[i] = std::max(hi[i], p[i]);
  }
  return {lo, hi};
}

BoundingBox BoundingBox::inflated(std::int64_t margin) const {
  if (empty_) return *this;
  const Point m = Point::filled(dim(), margin);
  return {lo_ - m, hi_ + m};
}

BoundingBox BoundingBox::shifted(const Point& v) const {
  if (empty_) return *this;
  return {lo_ + v, hi_ + v};
}

std::size_t BoundingBox::index_of(const Point& p) const {
  std::size_t idx = 0;
  for (int i = 0; i < dim(); ++i) {
    idx = idx * static_cast<std::size_t>(side(i)) + static_cast<std::size_t>(p[i] - lo_[i]);
  }
  return idx;
}

Point BoundingBox::point_at(std::size_t index) const {
  Point p(dim());
  for (int i = dim() - 1; i >= 0; --i) {
    const auto s = static_cast<std::size_t>(side(i));
    p[i] = lo_[i] + static_cast<std::int64_t>(index % s);
    index /= s;
  }
  return p;
}

std::int64_t BoundingBox::distance_to(const Point& p) const {
  std::int64_t d = 0;
  for (int i = 0; i < dim(); ++i) {
    d = std::max({d, lo_[i] - p[i], p[i] - hi_[i]});
  }
  return d;
}

Point BoundingBox::clamp(const Point& p) const {
  Point c(p);
  for (int i = 0; i < dim(); ++i) c[i] = std::clamp(p[i], lo_[i], hi_[i]);
  return c;
}

bool operator==(const BoundingBox& a, const BoundingBox& b) {
  if (a.empty_ || b.empty_) return a.empty_ == b.empty_ && a.dim() == b.dim();
  return a.lo_ == b.lo_ && a.hi_ == b.hi_;
}

void for_each_point(const BoundingBox& box, const std::function<void(const Point&)>& fn) {
  if (box.is_empty()) return;
  Point p = box.lo();
  const int d = box.dim();
  while (true) {
    fn(p);
    int axis = d - 1;
    while (axis >= 0) {
      if (p[axis] < box.hi()[axis]) {
        ++p[axis];
        break;
      }
      p[axis] = box.lo()[axis];
      --axis;
    }
    if (axis < 0) return;
  }
}

// ----------------------------------------------------------------- Cube

Cube Cube::odd(Point center, std::int64_t radius) {
  if (radius < 0) throw DomainError("cube radius must be nonnegative");
  return {center, radius, CubeParity::Odd};
}

Cube Cube::even(Point center, std::int64_t radius) {
  if (radius < 1) throw DomainError("even cube requires radius >= 1");
  return {center, radius, CubeParity::Even};
}

BoundingBox Cube::box() const {
  const Point r = Point::filled(center.dim(), radius);
  if (parity == CubeParity::Odd) return {center - r, center + r};
  return {center - r, center + r - Point::filled(center.dim(), 1)};
}

bool Cube::contains(const Point& p) const { return box().contains(p); }

std::uint64_t cube_cardinality(const Cube& cube) {
  if (cube.radius < 0) throw DomainError("cube radius must be nonnegative");
  if (cube.parity == CubeParity::Even && cube.radius < 1) {
    throw DomainError("even cube requires radius >= 1");
  }
  const auto side = static_cast<std::uint64_t>(cube.parity == CubeParity::Odd ? 2 * cube.radius + 1
                                                                              : 2 * cube.radius);
  return checked_pow(side, cube.center.dim());
}

std::uint64_t cube_intersection_cardinality(const Cube& a, const Cube& b) {
  if (a.parity != CubeParity::Odd || b.parity != CubeParity::Odd) {
    throw DomainError("cube_intersection_cardinality expects odd cubes");
  }
  if (a.center.dim() != b.center.dim()) throw DomainError("cubes have different dimensions");
  std::uint64_t n = 1;
  for (int i = 0; i < a.center.dim(); ++i) {
    const std::int64_t lo = std::max(a.center[i] - a.radius, b.center[i] - b.radius);
    const std::int64_t hi = std::min(a.center[i] + a.radius, b.center[i] + b.radius);
    if (hi < lo) return 0;
    n = checked_mul(n, static_cast<std::uint64_t>(hi - lo + 1));
  }
  return n;
}

// ------------------------------------------------------- FiniteSequence

FiniteSequence::FiniteSequence(BoundingBox box, std::vector<double> values, std::uint64_t cell_limit)
    : box_(std::move(box)), values_(std::move(values)) {
  const std::uint64_t cells = box_.cell_count();
  if (cells > cell_limit) {
    throw ResourceError("sequence box has " + std::to_string(cells) + " cells, limit is " +
                        std::to_string(cell_limit));
  }
  if (values_.size() != cells) {
    throw DomainError("value count " + std::to_string(values_.size()) + " does not match box size " +
                      std::to_string(cells));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("sequence values must be finite");
  }
}

FiniteSequence FiniteSequence::zero(int dim) { return {BoundingBox::empty(dim), {}}; }

FiniteSequence FiniteSequence::from_entries(int dim,
                                            const std::vector<std::pair<Point, double>>& entries,
                                            std::uint64_t cell_limit) {
  BoundingBox box = BoundingBox::empty(dim);
  std::set<Point> seen;
  for (const auto& [p, v] : entries) {
    if (p.dim() != dim) throw DomainError("entry " + p.to_string() + " has the wrong dimension");
    if (!seen.insert(p).second) throw DomainError("duplicate point " + p.to_string());
    box = box.hull_with(p);
  }
  const std::uint64_t cells = box.cell_count();
  if (cells > cell_limit) {
    throw ResourceError("sequence box has " + std::to_string(cells) + " cells, limit is " +
                        std::to_string(cell_limit));
  }
  std::vector<double> values(cells, 0.0);
  for (const auto& [p, v] : entries) values[box.index_of(p)] = v;
  return {box, std::move(values), cell_limit};
}

double FiniteSequence::at(const Point& p) const {
  if (!box_.contains(p)) return 0.0;
  return values_[box_.index_of(p)];
}

bool FiniteSequence::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

bool FiniteSequence::is_positive() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v >= 0.0; });
}

std::vector<std::pair<Point, double>> FiniteSequence::nonzeros() const {
  std::vector<std::pair<Point, double>> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != 0.0) out.emplace_back(box_.point_at(i), values_[i]);
  }
  return out;
}

FiniteSequence FiniteSequence::cropped(const BoundingBox& box) const {
  if (box.is_empty()) return zero(dim());
  std::vector<double> values(box.cell_count(), 0.0);
  const BoundingBox overlap = box.intersect(box_);
  for_each_point(overlap, [&](const Point& p) { values[box.index_of(p)] = at(p); });
  return {box, std::move(values), std::numeric_limits<std::uint64_t>::max()};
}

FiniteSequence FiniteSequence::shifted(const Point& v) const {
  return {box_.shifted(v), values_, std::numeric_limits<std::uint64_t>::max()};
}

FiniteSequence FiniteSequence::scaled(double factor) const {
  std::vector<double> values(values_);
  for (double& v : values) v *= factor;
  return {box_, std::move(values), std::numeric_limits<std::uint64_t>::max()};
}

FiniteSequence FiniteSequence::abs() const {
  std::vector<double> values(values_);
  for (double& v : values) v = std::fabs(v);
  return {box_, std::move(values), std::numeric_limits<std::uint64_t>::max()};
}

FiniteSequence FiniteSequence::combine(double a, const FiniteSequence& x, double b,
                                       const FiniteSequence& y) {
  BoundingBox box = x.box();
  if (!y.box().is_empty()) box = box.hull_with(y.box().lo()).hull_with(y.box().hi());
  if (box.is_empty()) return zero(x.dim());
  std::vector<double> values(box.cell_count(), 0.0);
  for_each_point(box, [&](const Point& p) { values[box.index_of(p)] = a * x.at(p) + b * y.at(p); });
  return {box, std::move(values)};
}

BoundingBox support_hull(const FiniteSequence& x) {
  BoundingBox hull = BoundingBox::empty(x.dim());
  const auto values = x.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0.0) hull = hull.hull_with(x.box().point_at(i));
  }
  return hull;
}

// ------------------------------------------------------- PrefixSumTable

double FieldTransform::apply(double v) const {
  switch (kind) {
    case Kind::Abs:
      return std::fabs(v);
    case Kind::AbsPow:
      return exponent == 1.0 ? std::fabs(v) : std::pow(std::fabs(v), exponent);
    case Kind::Identity:
      if (v < 0.0) throw DomainError("prefix table field must be nonnegative");
      return v;
  }
  return v;
}

PrefixSumTable::PrefixSumTable(const FiniteSequence& x, FieldTransform transform) : box_(x.box()) {
  if (box_.is_empty()) return;
  const int d = box_.dim();
  // Padded by one zero layer on the low side of every axis.
  std::size_t total = 1;
  for (int i = d - 1; i >= 0; --i) {
    strides_[static_cast<std::size_t>(i)] = total;
    total *= static_cast<std::size_t>(box_.side(i) + 1);
  }
  table_.assign(total, exact::DoubleDouble{});
  const auto values = x.values();
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    const Point p = box_.point_at(idx);
    std::size_t t = 0;
    for (int i = 0; i < d; ++i) {
      t += static_cast<std::size_t>(p[i] - box_.lo()[i] + 1) * strides_[static_cast<std::size_t>(i)];
    }
    table_[t] = {transform.apply(values[idx]), 0.0};
  }
  // One cumulative pass per axis.
  for (int axis = 0; axis < d; ++axis) {
    const std::size_t stride = strides_[static_cast<std::size_t>(axis)];
    const auto extent = static_cast<std::size_t>(box_.side(axis) + 1);
    for (std::size_t t = 0; t < total; ++t) {
      const std::size_t coord = (t / stride) % extent;
      if (coord > 0) table_[t] += table_[t - stride];
    }
  }
}

double PrefixSumTable::box_sum(const BoundingBox& query) const {
  if (box_.is_empty()) return 0.0;
  const BoundingBox clipped = query.intersect(box_);
  if (clipped.is_empty()) return 0.0;
  const int d = box_.dim();
  std::array<std::size_t, kMaxDim> lo_off{};
  std::array<std::size_t, kMaxDim> hi_off{};
  for (int i = 0; i < d; ++i) {
    const auto s = static_cast<std::size_t>(i);
    lo_off[s] = static_cast<std::size_t>(clipped.lo()[i] - box_.lo()[i]) * strides_[s];
    hi_off[s] = static_cast<std::size_t>(clipped.hi()[i] - box_.lo()[i] + 1) * strides_[s];
  }
  exact::DoubleDouble acc;
  const unsigned corners = 1u << d;
  for (unsigned mask = 0; mask < corners; ++mask) {
    std::size_t t = 0;
    int lows = 0;
    for (int i = 0; i < d; ++i) {
      const auto s = static_cast<std::size_t>(i);
      if (mask & (1u << i)) {
        t += lo_off[s];
        ++lows;
      } else {
        t += hi_off[s];
      }
    }
    if (lows % 2 == 0) {
      acc += table_[t];
    } else {
      acc -= table_[t];
    }
  }
  return acc.value() > 0.0 ? acc.value() : 0.0;
}

double PrefixSumTable::total() const { return box_sum(box_); }

double cube_sum(const PrefixSumTable& table, const Cube& cube) { return table.box_sum(cube.box()); }

}  // namespace morrey
