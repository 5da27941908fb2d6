#include <sstream>

#include "doctest.h"
#include "morrey/brute_force.hpp"
#include "morrey/lattice.hpp"
#include "morrey/sequence_io.hpp"
#include "support/helpers.hpp"

using namespace morrey;
using namespace morrey::testing;

TEST_CASE("cube cardinality") {
  CHECK(cube_cardinality(Cube::odd(Point(3), 0)) == 1);
  CHECK(cube_cardinality(Cube::odd(Point(2), 1)) == 9);
  CHECK(cube_cardinality(Cube::even(Point(2), 2)) == 16);
  CHECK_THROWS_AS(Cube::even(Point(1), 0), DomainError);
  CHECK_THROWS_AS(cube_cardinality(Cube{Point(1), 0, CubeParity::Even}), DomainError);
  CHECK_THROWS_AS(cube_cardinality(Cube::odd(Point(6), std::int64_t{1} << 40)), OverflowError);
}

TEST_CASE("cube_sum examples") {
  for (int d = 1; d <= 3; ++d) {
    const PrefixSumTable t(delta(d), FieldTransform::abs());
    CHECK(cube_sum(t, Cube::odd(Point(d), 5)) == 1.0);
  }
  const PrefixSumTable ind(indicator(Point{0}, 1), FieldTransform::abs());
  CHECK(cube_sum(ind, Cube::odd(Point{2}, 1)) == 1.0);
  const PrefixSumTable ramp(line(1, {1, 2, 3}), FieldTransform::abs());
  CHECK(cube_sum(ramp, Cube::odd(Point{2}, 1)) == 6.0);
  CHECK(cube_sum(ramp, Cube::odd(Point{20}, 3)) == 0.0);
  CHECK(cube_sum(PrefixSumTable(FiniteSequence::zero(2), FieldTransform::abs()),
                 Cube::odd(Point(2), 4)) == 0.0);
}

TEST_CASE("cube_sum matches direct enumeration") {
  RandomStream rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + trial % 3;
    const bool integers = trial % 2 == 0;
    const FiniteSequence x = random_sequence(rng, d, -6, 6, integers ? -9 : -5.0,
                                             integers ? 9 : 5.0, 0.7, integers);
    const double p = integers ? 1.0 : rng.uniform(1.0, 4.0);
    const PrefixSumTable table(x, FieldTransform::abs_pow(p));
    const Cube c = Cube::odd(random_point(rng, d, -9, 9), rng.uniform_int(0, 6));
    const double fast = cube_sum(table, c);
    const double slow = brute::box_sum(x, c.box().intersect(x.box()), FieldTransform::abs_pow(p));
    if (integers) {
      CHECK(fast == slow);
    } else {
      CHECK(rel_close(fast, slow, 1e-12));
    }
  }
}

TEST_CASE("even cube sums follow R_{m,N}") {
  const FiniteSequence x = line(-3, {1, 2, 3, 4, 5, 6, 7});  // k = -3..3
  const PrefixSumTable t(x, FieldTransform::abs());
  // R_{0,2} = {-2,-1,0,1}
  CHECK(cube_sum(t, Cube::even(Point{0}, 2)) == 2 + 3 + 4 + 5);
}

TEST_CASE("cube intersection cardinality") {
  CHECK(cube_intersection_cardinality(Cube::odd(Point{0}, 1), Cube::odd(Point{3}, 1)) == 0);
  CHECK(cube_intersection_cardinality(Cube::odd(Point{0}, 2), Cube::odd(Point{1}, 1)) == 3);
  CHECK(cube_intersection_cardinality(Cube::odd(Point{0, 0}, 2), Cube::odd(Point{1, 1}, 1)) == 9);
  CHECK_THROWS_AS(cube_intersection_cardinality(Cube::even(Point{0}, 1), Cube::odd(Point{0}, 1)),
                  DomainError);
}

TEST_CASE("cube intersection: symmetry, brute force and the overlap facts") {
  RandomStream rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int d = 1 + trial % 3;
    const Cube a = Cube::odd(random_point(rng, d, -6, 6), rng.uniform_int(0, 4));
    const Cube b = Cube::odd(random_point(rng, d, -6, 6), rng.uniform_int(0, 4));
    const auto n = cube_intersection_cardinality(a, b);
    REQUIRE(n == cube_intersection_cardinality(b, a));
    REQUIRE(n == brute::intersection_count(a, b));
    const std::int64_t dist = chebyshev_distance(a.center, b.center);
    CHECK((n > 0) == (dist <= a.radius + b.radius));
    if (a.radius >= dist + b.radius) CHECK(n == cube_cardinality(b));
  }
}

TEST_CASE("odd cube of radius N lies inside R_{m,N+1}") {
  for (int d = 1; d <= 3; ++d) {
    for (std::int64_t n = 0; n <= 3; ++n) {
      const Point m = Point::filled(d, 2);
      const Cube even = Cube::even(m, n + 1);
      for_each_point(Cube::odd(m, n).box(), [&](const Point& k) { REQUIRE(even.contains(k)); });
    }
  }
}

TEST_CASE("support hull") {
  CHECK(support_hull(FiniteSequence::zero(2)).is_empty());
  CHECK(support_hull(delta(3)) == BoundingBox(Point(3), Point(3)));
  const auto x = FiniteSequence::from_entries(2, {{Point{-1, 3}, 2.0}, {Point{2, 0}, -1.0}});
  CHECK(support_hull(x) == BoundingBox(Point{-1, 0}, Point{2, 3}));
  // A loose box with zero padding still yields the tight hull.
  CHECK(support_hull(x.cropped(BoundingBox(Point{-5, -5}, Point{5, 5}))) == support_hull(x));
}

TEST_CASE("sequence construction guards") {
  CHECK_THROWS_AS(FiniteSequence::from_entries(1, {{Point{0}, 1.0}, {Point{0}, 2.0}}), DomainError);
  CHECK_THROWS_AS(FiniteSequence::from_entries(1, {{Point{0}, NAN}}), DomainError);
  CHECK_THROWS_AS(FiniteSequence::from_entries(1, {{Point{0}, 1.0}, {Point{1000}, 1.0}}, 100),
                  ResourceError);
  CHECK_THROWS_AS(BoundingBox(Point{0, 0}, Point{-1, 2}), DomainError);
  CHECK_THROWS_AS(BoundingBox(Point{0, 0, 0, 0, 0, 0}, Point::filled(6, 4'000'000)).cell_count(),
                  OverflowError);
}

TEST_CASE("sequence file format") {
  std::istringstream in(
      "# two spikes\n"
      "dim 2\n"
      "-1 3 0.5   # trailing comment\n"
      "\n"
      "2 0 1.25\n");
  const FiniteSequence x = read_sequence(in);
  CHECK(x.dim() == 2);
  CHECK(x.at(Point{-1, 3}) == 0.5);
  CHECK(x.at(Point{2, 0}) == 1.25);
  CHECK(x.at(Point{0, 0}) == 0.0);

  std::ostringstream out;
  write_sequence(out, x);
  CHECK(out.str() == "dim 2\n-1 3 0.5\n2 0 1.25\n");

  std::istringstream dup("dim 1\n0 1\n0 2\n");
  CHECK_THROWS_AS(read_sequence(dup), FormatError);
  std::istringstream no_header("0 1\n");
  CHECK_THROWS_AS(read_sequence(no_header), FormatError);
  std::istringstream bad_arity("dim 2\n0 1\n");
  CHECK_THROWS_AS(read_sequence(bad_arity), FormatError);
  std::istringstream bad_value("dim 1\n0 abc\n");
  CHECK_THROWS_AS(read_sequence(bad_value), FormatError);
}

TEST_CASE("sequence file round trip preserves every value") {
  RandomStream rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 3;
    const FiniteSequence x = random_sequence(rng, d, -3, 3, -4.0, 4.0, 0.5);
    std::stringstream buf;
    write_sequence(buf, x);
    const FiniteSequence y = read_sequence(buf);
    for_each_point(x.box(), [&](const Point& p) { REQUIRE(y.at(p) == x.at(p)); });
    CHECK(support_hull(y) == support_hull(x));
  }
}
