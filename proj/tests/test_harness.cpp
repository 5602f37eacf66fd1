#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "perlef/errors.hpp"
#include "perlef/harness.hpp"

using namespace perlef;

namespace {

MapSpec halve() { return MapSpec::affine(0.5, 0.0); }
MapSpec quadratic() { return MapSpec::polynomial({0.2, 0.0, 0.3}); }

}  // namespace

TEST_CASE("strictly_inside") {
  auto r = strictly_inside(halve());
  CHECK(r.strictly_inside);
  CHECK(r.margin == doctest::Approx(0.5).epsilon(1e-12));

  r = strictly_inside(MapSpec::affine(1.0, 0.0));
  CHECK_FALSE(r.strictly_inside);
  CHECK(std::abs(r.margin) < 1e-12);

  // max over |z| = 1 of |0.3 z^2 + 0.2| is 0.5.
  r = strictly_inside(quadratic());
  CHECK(r.strictly_inside);
  CHECK(r.margin == doctest::Approx(0.5).epsilon(1e-9));

  auto shifted = MapSpec::affine(0.25, Complex(2.25, 0.75), Disk{{3.0, 1.0}, 2.0});
  r = strictly_inside(shifted);
  CHECK(r.margin == doctest::Approx(1.5).epsilon(1e-9));

  auto rect = MapSpec::affine(0.5, 0.0, Rectangle{-1, 1, -2, 2});
  r = strictly_inside(rect);
  CHECK(r.strictly_inside);
  CHECK(r.margin == doctest::Approx(0.5).epsilon(1e-9));

  CHECK_THROWS_AS(strictly_inside(MapSpec::polynomial({0.0, 1e308, 1e308})), EvaluationOverflow);
  CHECK_THROWS_AS(strictly_inside(MapSpec::affine(0.5, 0.0, Disk{{0, 0}, -1.0})), MalformedInput);
  CHECK_THROWS_AS(strictly_inside(MapSpec::polynomial({NAN})), MalformedInput);
}

TEST_CASE("find_fixed_points: halving map") {
  auto map = halve();
  for (std::uint64_t m = 1; m <= 5; ++m) {
    auto r = find_fixed_points(map, m);
    REQUIRE(r.count == 1);
    CHECK(std::abs(r.points[0].z) < 1e-10);
    CHECK(r.lefschetz_value == 1);
    CHECK(r.bound_satisfied);
  }
}

TEST_CASE("find_fixed_points: quadratic contraction") {
  // Roots of 0.3 z^2 - z + 0.2 = 0 by the quadratic formula.
  const double disc = std::sqrt(1.0 - 4.0 * 0.3 * 0.2);
  const double inner = (1.0 - disc) / 0.6, outer = (1.0 + disc) / 0.6;
  CHECK(outer > 1.0);
  auto r = find_fixed_points(quadratic(), 1);
  REQUIRE(r.count == 1);
  CHECK(std::abs(r.points[0].z - inner) < 1e-9);
  CHECK(r.points[0].residual < kResidualTolerance);
  CHECK(r.bound_satisfied);
}

TEST_CASE("find_fixed_points rejects maps that are not strictly inside") {
  CHECK_THROWS_AS(find_fixed_points(MapSpec::affine(1.0, 0.0), 1), PreconditionNotStrictlyInside);
}

TEST_CASE("composition applies stages in order") {
  // z -> z / 2 then z -> z^2 + 0.1: fixed points of z^2/4 + 0.1.
  auto comp = MapSpec::composition({halve(), MapSpec::polynomial({0.1, 0.0, 1.0})});
  CHECK(comp(Complex(1.0, 0.0)) == Complex(0.35, 0.0));
  auto [w, dw] = comp.iterate_with_derivative(Complex(0.5, 0.0), 2);
  const double z1 = 0.25 * 0.25 + 0.1;
  CHECK(w.real() == doctest::Approx(z1 * z1 / 4 + 0.1));
  CHECK(dw.real() == doctest::Approx((0.5 * 0.5) * (0.5 * z1)));
}

TEST_CASE("fixed points of f^d appear among fixed points of f^m when d | m") {
  auto map = MapSpec::polynomial({Complex(0.1, 0.2), 0.0, 0.4});
  auto f2 = find_fixed_points(map, 2);
  auto f4 = find_fixed_points(map, 4);
  for (const auto& p : f2.points) {
    bool found = false;
    for (const auto& q : f4.points) found |= std::abs(p.z - q.z) < 1e-5;
    CHECK(found);
  }
}

TEST_CASE("verify_theorem on case (b) examples") {
  for (const auto& map : {halve(), quadratic()}) {
    auto r = verify_theorem(map, 6);
    CHECK(r.passed);
    CHECK(r.classification.verdict == Verdict::CaseBCompatible);
    for (std::size_t i = 0; i < r.per_m.size(); ++i) {
      CHECK(r.per_m[i].count == 1);
      CHECK(r.exact_period_counts[i] == (i == 0 ? 1u : 0u));
      for (const auto& p : r.per_m[i].points) {
        auto [w, dw] = map.iterate_with_derivative(p.z, r.per_m[i].m);
        CHECK(std::abs(w - p.z) < kResidualTolerance);
      }
    }
  }
}

TEST_CASE("verify_theorem flags a wrong declared action") {
  auto map = halve();
  map.declared_action = from_h1(IntMatrix{{1}});
  try {
    verify_theorem(map, 4);
    FAIL("expected TheoremViolation");
  } catch (const TheoremViolation& v) {
    CHECK(v.m() == 1);
    CHECK(v.cause() == ViolationCause::BoundExceeded);
    REQUIRE(v.report().per_m.size() == 1);
    CHECK(v.report().per_m[0].count == 1);
    CHECK(v.report().per_m[0].lefschetz_value == 0);
  }
  map.declared_action = validate_action(std::map<int, IntMatrix>{{2, IntMatrix{{1}}}});
  CHECK_THROWS_AS(verify_theorem(map, 2), HypothesisShapeViolated);
}

TEST_CASE("grid results are deterministic") {
  auto a = find_fixed_points(MapSpec::polynomial({Complex(0.1, 0.2), 0.0, 0.4}), 3, 48);
  auto b = find_fixed_points(MapSpec::polynomial({Complex(0.1, 0.2), 0.0, 0.4}), 3, 48);
  REQUIRE(a.count == b.count);
  for (std::size_t i = 0; i < a.count; ++i) CHECK(a.points[i].z == b.points[i].z);
}
