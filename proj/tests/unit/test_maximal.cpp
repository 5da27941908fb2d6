#include <cmath>

#include "doctest.h"
#include "morrey/brute_force.hpp"
#include "morrey/maximal.hpp"
#include "morrey/norm.hpp"
#include "support/helpers.hpp"

using namespace morrey;
using namespace morrey::testing;

namespace {

constexpr MaximalVariant kOdd = MaximalVariant::Odd;
constexpr MaximalVariant kEven = MaximalVariant::Even;
constexpr MaximalVariant kUncentered = MaximalVariant::Uncentered;

}  // namespace

TEST_CASE("variant names") {
  for (auto v : {kOdd, kEven, kUncentered}) CHECK(parse_variant(to_string(v)) == v);
  CHECK_THROWS_AS(parse_variant("dyadic"), DomainError);
}

TEST_CASE("maximal_at examples") {
  CHECK(maximal_at(delta(1), Point{0}, kOdd) == 1.0);
  CHECK(maximal_at(delta(1), Point{2}, kOdd) == 0.2);
  CHECK(maximal_at(delta(1), Point{0}, kEven) == 0.5);
  CHECK(maximal_at(delta(2), Point{1, 1}, kOdd) == 1.0 / 9);
  CHECK(maximal_at(delta(1), Point{0}, kUncentered) == 1.0);
  CHECK(maximal_at(FiniteSequence::zero(2), Point{3, 3}, kUncentered) == 0.0);
  // Uncentered from a neighbour: S_{1,1} = {0,1,2} reaches the spike.
  CHECK(maximal_at(delta(1), Point{1}, kUncentered) == doctest::Approx(1.0 / 3));
}

TEST_CASE("maximal_field examples") {
  const auto field = maximal_field(delta(1), BoundingBox(Point{-2}, Point{2}), kOdd);
  const double expected[] = {0.2, 1.0 / 3, 1.0, 1.0 / 3, 0.2};
  for (int i = 0; i < 5; ++i) CHECK(field.values[i] == doctest::Approx(expected[i]).epsilon(1e-15));

  const auto zero = maximal_field(FiniteSequence::zero(2), BoundingBox::around(Point(2), 3),
                                  kUncentered);
  for (double v : zero.values) CHECK(v == 0.0);

  const auto ind = maximal_field(indicator(Point{0}, 1), BoundingBox(Point{0}, Point{0}), kOdd);
  CHECK(ind.values[0] == 1.0);

  CHECK_THROWS_AS(maximal_field(delta(2), BoundingBox::around(Point(2), 100), kOdd, 1, 1000),
                  ResourceError);
}

TEST_CASE("maximal_at equals brute force") {
  RandomStream rng(8080);
  for (int trial = 0; trial < 500; ++trial) {
    const int d = 1 + trial % 3;
    const std::int64_t half = d == 3 ? 2 : 3;
    const FiniteSequence x = random_sequence(rng, d, -half, half, -5.0, 5.0, 0.4);
    const MaximalVariant v = trial % 5 == 4 ? kUncentered : (trial % 2 ? kEven : kOdd);
    if (v == kUncentered && d == 3 && trial % 3 != 0) continue;
    const Point m = random_point(rng, d, -half - 3, half + 3);
    const MaximalEvaluator eval(x);
    const std::int64_t cert = eval.hull().is_empty() ? 0 : eval.covering_radius(m) + 1;
    const double fast = eval.at(m, v);
    const double slow = brute::maximal(x, m, v, cert + 5);
    REQUIRE(rel_close(fast, slow, 1e-12));
  }
}

TEST_CASE("uncentered field matches pointwise evaluation") {
  RandomStream rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 2;
    const FiniteSequence x = random_sequence(rng, d, -3, 3, -4.0, 4.0, 0.3);
    const BoundingBox window = BoundingBox::around(Point(d), 6);
    for (auto v : {kOdd, kEven, kUncentered}) {
      const auto field = maximal_field(x, window, v, 1 + trial % 3);
      for_each_point(window, [&](const Point& m) { REQUIRE(field.at(m) == maximal_at(x, m, v)); });
    }
  }
}

TEST_CASE("pointwise properties") {
  RandomStream rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 3;
    const FiniteSequence x = random_sequence(rng, d, -2, 2, -5.0, 5.0, 0.5);
    const MaximalEvaluator eval(x);
    const Point m = random_point(rng, d, -6, 6);
    const double odd = eval.at(m, kOdd);
    CHECK(odd >= std::fabs(x.at(m)));
    CHECK(odd <= maximal_tail_bound(x, m) * (1 + 1e-15));
    CHECK(eval.at(m, kUncentered) >= odd);
  }
}

TEST_CASE("certified sup") {
  CHECK(certified_sup_maximal(delta(2)) == 1.0);
  CHECK(certified_sup_maximal(line(0, {1, 2, 3})) == 3.0);
  CHECK(certified_sup_maximal(FiniteSequence::zero(1)) == 0.0);

  RandomStream rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 2;
    const FiniteSequence x = random_sequence(rng, d, -3, 3, -5.0, 5.0, 0.4);
    const double sup = certified_sup_maximal(x);
    const BoundingBox hull = support_hull(x);
    if (hull.is_empty()) continue;
    const std::int64_t diam = hull.max_side();
    double slow = 0.0;
    for_each_point(hull.inflated(diam + 5), [&](const Point& m) {
      slow = std::max(slow, brute::maximal(x, m, kOdd, 2 * diam + 6));
    });
    REQUIRE(rel_close(sup, slow, 1e-12));
    const double p = rng.uniform(1.0, 3.0);
    CHECK(sup <= morrey_norm(x, MorreyParams::make(p, rng.uniform(p, 4.0))).value * (1 + 1e-12));

    // Clamp domination at an outside point.
    const Point out = random_point(rng, d, -12, 12);
    CHECK(maximal_at(x, out, kOdd) <= maximal_at(x, hull.clamp(out), kOdd));
  }
}

TEST_CASE("tail bound examples") {
  CHECK(maximal_tail_bound(delta(1), Point{3}) == doctest::Approx(1.0 / 7));
  CHECK(maximal_at(delta(1), Point{3}, kOdd) == doctest::Approx(1.0 / 7));
  CHECK(maximal_tail_bound(line(0, {1, 2, 3}), Point{1}) == 6.0);
  const auto chi = indicator(Point{0}, 1);
  CHECK(maximal_tail_bound(chi, Point{4}) == doctest::Approx(3.0 / 7));
  // The best cube is S_{4,5} = [-1, 9], average 3/11.
  CHECK(maximal_at(chi, Point{4}, kOdd) == doctest::Approx(3.0 / 11));
}

TEST_CASE("indicator decay") {
  for (int d = 1; d <= 2; ++d) {
    for (std::int64_t n = 1; n <= 3; ++n) {
      const Point c = Point::filled(d, 1);
      const auto chi = indicator(c, n);
      for_each_point(BoundingBox::around(c, 4 * n + 4), [&](const Point& k) {
        const double v = maximal_at(chi, k, kOdd);
        REQUIRE(v <= 1.0);
        const std::int64_t dist = chebyshev_distance(k, c);
        if (dist > 2 * n) {
          const double bound =
              std::pow(1.5, d) * std::pow(static_cast<double>(n) / (dist - n), d);
          REQUIRE(v <= bound);
        }
      });
    }
  }
}

TEST_CASE("windowed norm of the maximal function") {
  const auto zero = windowed_morrey_norm_of_maximal(FiniteSequence::zero(1), MorreyParams::make(2, 2), 8);
  CHECK(zero.value == 0.0);
  CHECK(zero.stabilized);

  const auto spike = windowed_morrey_norm_of_maximal(delta(1), MorreyParams::make(1, 2), 8);
  CHECK(spike.value >= 1.0);

  // p = q = 2: the windowed value is the l2 norm of M delta over [-L, L].
  const auto l2 = windowed_morrey_norm_of_maximal(delta(1), MorreyParams::make(2, 2), 8);
  double partial = 0.0;
  for (int k = -8; k <= 8; ++k) partial += 1.0 / ((2.0 * std::abs(k) + 1) * (2.0 * std::abs(k) + 1));
  CHECK(l2.value == doctest::Approx(std::sqrt(partial)).epsilon(1e-13));
}

TEST_CASE("boundedness ratio") {
  const auto r = boundedness_ratio(delta(1), MorreyParams::make(2, 2), 16);
  CHECK(r.ratio >= 1.0);
  CHECK(std::isfinite(r.ratio));
  CHECK_THROWS_AS(boundedness_ratio(FiniteSequence::zero(1), MorreyParams::make(2, 2), 4),
                  DomainError);
  CHECK_THROWS_AS(boundedness_ratio(delta(1), MorreyParams::make(1, 2), 4), DomainError);

  RandomStream rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteSequence x = random_sequence(rng, 1, -3, 3, -5.0, 5.0, 0.6);
    if (x.is_zero()) continue;
    const double p = rng.uniform(1.1, 3.0);
    CHECK(boundedness_ratio(x, MorreyParams::make(p, rng.uniform(p, 4.0)), 4).ratio >=
          1.0 - 1e-12);
  }
}

TEST_CASE("theoretical constant") {
  const auto a = theoretical_constant(1, 1, MorreyParams::make(2, 2));
  CHECK(a.c == doctest::Approx(6.0).epsilon(1e-14));
  const auto b = theoretical_constant(1, 1, MorreyParams::make(2, 4));
  CHECK(b.c == doctest::Approx(20.48528137423858).epsilon(1e-12));
  CHECK(b.bound == doctest::Approx(std::sqrt(b.c)).epsilon(1e-14));
  for (double k : {0.5, 1.0, 3.0}) {
    const auto p = MorreyParams::make(1.5, 3);
    CHECK(theoretical_constant(2 * k, 2, p).c ==
          doctest::Approx(2 * theoretical_constant(k, 2, p).c).epsilon(1e-14));
  }
  CHECK_THROWS_AS(theoretical_constant(0, 1, MorreyParams::make(2, 2)), DomainError);
  CHECK_THROWS_AS(theoretical_constant(1, 1, MorreyParams::make(1, 2)), DomainError);
}

TEST_CASE("equivalence constants") {
  const auto rows = equivalence_check(delta(1), BoundingBox(Point{0}, Point{0}));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].odd.value() == 1.0);
  CHECK(rows[0].even.value() == 0.5);
  CHECK(rows[0].uncentered.value() == 1.0);
  CHECK(rows[0].violations == 0);

  for (const auto& row : equivalence_check(FiniteSequence::zero(2), BoundingBox::around(Point(2), 2))) {
    CHECK(row.violations == 0);
    CHECK(row.odd.value() == 0.0);
  }

  RandomStream rng(1001);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteSequence x = random_sequence(rng, 2, -2, 2, 0.0, 5.0, 0.4, trial % 2 == 0);
    const BoundingBox hull = support_hull(x);
    if (hull.is_empty()) continue;
    for (const auto& row : equivalence_check(x, hull.inflated(4))) REQUIRE(row.violations == 0);
  }
}

TEST_CASE("exact average comparison") {
  CHECK(compare_averages({1, 1}, 2, {1, 2}, 4) == 0);
  CHECK(compare_averages({1, 3}, 3, {1, 1}, 1) == 0);
  CHECK(compare_averages({0.1, 3}, 30, {1, 1}, 1) != 0);
  CHECK(compare_averages({2, 1}, 1, {1, 1}, 1) > 0);
}
