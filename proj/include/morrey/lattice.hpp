#pragma once

// Integer lattice geometry on Z^d, finitely supported sequences, and
// summed-area tables for exact cube sums.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "morrey/exact.hpp"

namespace morrey {

inline constexpr int kMaxDim = 6;
inline constexpr std::uint64_t kDefaultCellLimit = 100'000'000;

/// Parameter outside the domain an operation is defined on.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact integer arithmetic would overflow.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Dense storage would exceed the configured cell limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Multiplies with overflow detection; throws OverflowError.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, int exponent);

class Point {
 public:
  Point() = default;
  explicit Point(int dim);
  Point(std::initializer_list<std::int64_t> coords);
  static Point from_span(std::span<const std::int64_t> coords);
  static Point filled(int dim, std::int64_t value);

  int dim() const { return dim_; }
  std::int64_t operator[](int axis) const { return coords_[static_cast<std::size_t>(axis)]; }
  std::int64_t& operator[](int axis) { return coords_[static_cast<std::size_t>(axis)]; }

  Point operator+(const Point& o) const;
  Point operator-(const Point& o) const;

  friend bool operator==(const Point& a, const Point& b);
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

  std::string to_string() const;

 private:
  std::array<std::int64_t, kMaxDim> coords_{};
  int dim_ = 0;
};

/// ||a - b||_inf.
std::int64_t chebyshev_distance(const Point& a, const Point& b);

/// Axis-aligned lattice box with inclusive corners, or the empty box.
class BoundingBox {
 public:
  BoundingBox() = default;
  BoundingBox(Point lo, Point hi);
  static BoundingBox empty(int dim);
  static BoundingBox around(const Point& center, std::int64_t radius);

  int dim() const { return lo_.dim(); }
  bool is_empty() const { return empty_; }
  const Point& lo() const { return lo_; }
  const Point& hi() const { return hi_; }
  std::int64_t side(int axis) const { return empty_ ? 0 : hi_[axis] - lo_[axis] + 1; }
  std::int64_t max_side() const;

  /// Number of lattice points; OverflowError if it does not fit in 64 bits.
  std::uint64_t cell_count() const;

  bool contains(const Point& p) const;
  bool contains(const BoundingBox& other) const;
  BoundingBox intersect(const BoundingBox& other) const;
  BoundingBox hull_with(const Point& p) const;
  BoundingBox inflated(std::int64_t margin) const;
  BoundingBox shifted(const Point& v) const;

  /// Row-major index (last axis fastest) of a contained point.
  std::size_t index_of(const Point& p) const;
  Point point_at(std::size_t index) const;

  /// Chebyshev distance from p to the box (0 inside).
  std::int64_t distance_to(const Point& p) const;
  /// Coordinate-wise projection of p onto the box.
  Point clamp(const Point& p) const;

  friend bool operator==(const BoundingBox& a, const BoundingBox& b);

 private:
  Point lo_;
  Point hi_;
  bool empty_ = true;
};

/// Calls fn(point) for every point of the box in row-major order.
void for_each_point(const BoundingBox& box, const std::function<void(const Point&)>& fn);

enum class CubeParity { Odd, Even };

/// S_{m,N} = {k : ||k-m||_inf <= N} (odd, side 2N+1) or
/// R_{m,N} = {k : m_i-N <= k_i <= m_i+N-1} (even, side 2N, N >= 1).
struct Cube {
  Point center;
  std::int64_t radius = 0;
  CubeParity parity = CubeParity::Odd;

  static Cube odd(Point center, std::int64_t radius);
  static Cube even(Point center, std::int64_t radius);

  BoundingBox box() const;
  bool contains(const Point& p) const;
};

/// (2N+1)^d for odd cubes, (2N)^d for even cubes.
std::uint64_t cube_cardinality(const Cube& cube);

/// |S_{k,t} ∩ S_{m,N}| for two odd cubes of equal dimension.
std::uint64_t cube_intersection_cardinality(const Cube& a, const Cube& b);

/// Finitely supported real sequence: dense row-major values over a box, zero
/// outside it. Immutable after construction.
class FiniteSequence {
 public:
  FiniteSequence() = default;
  FiniteSequence(BoundingBox box, std::vector<double> values,
                 std::uint64_t cell_limit = kDefaultCellLimit);

  static FiniteSequence zero(int dim);
  /// Densifies a list of (point, value) entries; duplicate points are an error.
  static FiniteSequence from_entries(int dim, const std::vector<std::pair<Point, double>>& entries,
                                     std::uint64_t cell_limit = kDefaultCellLimit);

  int dim() const { return box_.dim(); }
  const BoundingBox& box() const { return box_; }
  std::span<const double> values() const { return values_; }

  double at(const Point& p) const;
  bool is_zero() const;
  bool is_positive() const;

  /// Nonzero entries in row-major order.
  std::vector<std::pair<Point, double>> nonzeros() const;

  FiniteSequence cropped(const BoundingBox& box) const;
  FiniteSequence shifted(const Point& v) const;
  FiniteSequence scaled(double factor) const;
  FiniteSequence abs() const;
  /// a*x + b*y over the hull of both boxes.
  static FiniteSequence combine(double a, const FiniteSequence& x, double b,
                                const FiniteSequence& y);

 private:
  BoundingBox box_;
  std::vector<double> values_;
};

/// Tight bounding box of {k : x(k) != 0}; the empty box for the zero sequence.
BoundingBox support_hull(const FiniteSequence& x);

/// Nonnegative derived field a prefix table is built from.
struct FieldTransform {
  enum class Kind { Abs, AbsPow, Identity } kind = Kind::Abs;
  double exponent = 1.0;

  static FieldTransform abs() { return {Kind::Abs, 1.0}; }
  static FieldTransform abs_pow(double p) { return {Kind::AbsPow, p}; }
  /// Field used as-is; must be nonnegative.
  static FieldTransform identity() { return {Kind::Identity, 1.0}; }

  double apply(double v) const;
};

/// Summed-area table over a sequence's box, stored in double-double.
class PrefixSumTable {
 public:
  PrefixSumTable() = default;
  PrefixSumTable(const FiniteSequence& x, FieldTransform transform);

  const BoundingBox& box() const { return box_; }

  /// Sum of the field over box ∩ table.box(); 0 when disjoint.
  double box_sum(const BoundingBox& query) const;
  double total() const;

 private:
  BoundingBox box_;
  std::array<std::size_t, kMaxDim> strides_{};
  std::vector<exact::DoubleDouble> table_;
};

double cube_sum(const PrefixSumTable& table, const Cube& cube);

}  // namespace morrey
