#include "morrey/norm.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace morrey {

namespace {

double candidate_value(double power_sum, double prefactor, double p) {
  if (power_sum == 0.0) return 0.0;
  return prefactor * (p == 1.0 ? power_sum : std::pow(power_sum, 1.0 / p));
}

double cube_prefactor(std::int64_t radius, int dim, MorreyParams params) {
  const double e = params.cube_exponent(dim);
  return e == 0.0 ? 1.0 : std::pow(static_cast<double>(2 * radius + 1), e);
}

}  // namespace

MorreyParams MorreyParams::make(double p, double q) {
  if (!(p >= 1.0) || !(q >= p) || !std::isfinite(q)) {
    throw DomainError("Morrey exponents require 1 <= p <= q < inf, got p=" + std::to_string(p) +
                      ", q=" + std::to_string(q));
  }
  return {p, q};
}

double morrey_candidate(const FiniteSequence& x, MorreyParams params, const Cube& cube) {
  if (cube.parity != CubeParity::Odd) throw DomainError("Morrey candidates use odd cubes");
  const PrefixSumTable table(x, FieldTransform::abs_pow(params.p));
  return candidate_value(cube_sum(table, cube), cube_prefactor(cube.radius, x.dim(), params),
                         params.p);
}

NormCertificate morrey_norm(const FiniteSequence& x, MorreyParams params) {
  const int d = x.dim();
  const BoundingBox hull = support_hull(x);
  NormCertificate cert{0.0, Cube::odd(Point(d), 0), 0, 0};
  if (hull.is_empty()) return cert;

  const PrefixSumTable table(x.cropped(hull), FieldTransform::abs_pow(params.p));
  const std::int64_t n0 = hull.max_side() / 2;
  cert.truncation_radius = n0;
  bool first = true;
  for (std::int64_t n = 0; n <= n0; ++n) {
    const double prefactor = cube_prefactor(n, d, params);
    for_each_point(hull.inflated(n), [&](const Point& m) {
      const Cube cube{m, n, CubeParity::Odd};
      const double v = candidate_value(cube_sum(table, cube), prefactor, params.p);
      ++cert.candidate_count;
      if (first || v > cert.value) {
        cert.value = v;
        cert.argmax_cube = cube;
        first = false;
      }
    });
  }
  return cert;
}

NormCertificate windowed_morrey_norm(const FiniteSequence& field, MorreyParams params) {
  const int d = field.dim();
  const BoundingBox& window = field.box();
  NormCertificate cert{0.0, Cube::odd(Point(d), 0), 0, 0};
  if (window.is_empty()) return cert;

  const PrefixSumTable table(field, FieldTransform::abs_pow(params.p));
  const std::int64_t max_radius = (window.max_side() - 1) / 2;
  std::vector<double> prefactors;
  for (std::int64_t n = 0; n <= max_radius; ++n) prefactors.push_back(cube_prefactor(n, d, params));

  bool first = true;
  for_each_point(window, [&](const Point& m) {
    std::int64_t reach = max_radius;
    for (int i = 0; i < d; ++i) {
      reach = std::min({reach, m[i] - window.lo()[i], window.hi()[i] - m[i]});
    }
    for (std::int64_t n = 0; n <= reach; ++n) {
      const Cube cube{m, n, CubeParity::Odd};
      const double v =
          candidate_value(cube_sum(table, cube), prefactors[static_cast<std::size_t>(n)], params.p);
      ++cert.candidate_count;
      // Lexicographic (N, m) tie-break: row-major m order is preserved per N.
      if (first || v > cert.value ||
          (v == cert.value && (n < cert.argmax_cube.radius ||
                               (n == cert.argmax_cube.radius && m < cert.argmax_cube.center)))) {
        cert.value = v;
        cert.argmax_cube = cube;
        first = false;
      }
      cert.truncation_radius = std::max(cert.truncation_radius, n);
    }
  });
  return cert;
}

double lp_norm(const FiniteSequence& x, double p) {
  if (!(p >= 1.0)) throw DomainError("lp_norm requires p >= 1");
  exact::DoubleDouble acc;
  for (double v : x.values()) acc += {FieldTransform::abs_pow(p).apply(v), 0.0};
  return candidate_value(acc.value(), 1.0, p);
}

double sup_norm(const FiniteSequence& x) {
  double m = 0.0;
  for (double v : x.values()) m = std::max(m, std::fabs(v));
  return m;
}

PowerMeanSides power_mean_check(const FiniteSequence& x, const Cube& cube, double p) {
  if (!(p >= 1.0)) throw DomainError("power_mean_check requires p >= 1");
  const BoundingBox overlap = cube.box().intersect(x.box());
  exact::DoubleDouble sum;
  exact::DoubleDouble power_sum;
  const FieldTransform pw = FieldTransform::abs_pow(p);
  for_each_point(overlap, [&](const Point& k) {
    const double v = x.at(k);
    sum += {std::fabs(v), 0.0};
    power_sum += {pw.apply(v), 0.0};
  });
  const auto card = static_cast<double>(cube_cardinality(cube));
  return {sum.value() / card, std::pow(power_sum.value() / card, 1.0 / p)};
}

}  // namespace morrey
