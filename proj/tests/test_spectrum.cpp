#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "perlef/errors.hpp"
#include "perlef/spectrum.hpp"

using namespace perlef;

TEST_CASE("spectrum_summary examples") {
  auto s = spectrum_summary(IntMatrix{{0, -1}, {1, -1}});
  CHECK(s.zero_count == 0);
  CHECK(s.unity_orders == std::vector<std::uint64_t>{3, 3});
  CHECK(s.circle_non_torsion_count == 0);
  CHECK(s.outside_count == 0);
  CHECK(s.inside_nonzero_count == 0);
  CHECK(s.radius_class == RadiusClass::One);

  s = spectrum_summary(IntMatrix{{2}});
  CHECK(s.outside_count == 1);
  CHECK(s.radius_class == RadiusClass::GreaterThanOne);

  s = spectrum_summary(IntMatrix::zero(2));
  CHECK(s.zero_count == 2);
  CHECK(s.radius_class == RadiusClass::Zero);

  s = spectrum_summary(IntMatrix{});
  CHECK(s.n == 0);
  CHECK(s.radius_class == RadiusClass::Zero);
}

TEST_CASE("Salem spectrum: circle roots that are not roots of unity") {
  // Lehmer's polynomial times x^2 (two zero eigenvalues).
  IntPolynomial lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  auto s = spectrum_summary(lehmer * IntPolynomial::monomial(2));
  CHECK(s.n == 12);
  CHECK(s.zero_count == 2);
  CHECK(s.unity_orders.empty());
  CHECK(s.circle_non_torsion_count == 8);
  CHECK(s.outside_count == 1);
  CHECK(s.inside_nonzero_count == 1);
  CHECK(s.radius_class == RadiusClass::GreaterThanOne);
}

TEST_CASE("reciprocal pairs off the circle split evenly") {
  // (x^2 - 3x + 1)(x + 1)
  auto s = spectrum_summary(IntPolynomial{1, -3, 1} * IntPolynomial{1, 1});
  CHECK(s.outside_count == 1);
  CHECK(s.inside_nonzero_count == 1);
  CHECK(s.unity_orders == std::vector<std::uint64_t>{2});
}

TEST_CASE("partition identity and numeric agreement over random matrices") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = 1 + t % 6;
    auto a = oracle::random_matrix(rng, n, -3, 3);
    auto s = spectrum_summary(a);
    CHECK(s.zero_count + s.unity_orders.size() + s.circle_non_torsion_count + s.outside_count +
              s.inside_nonzero_count == n);
    CHECK((s.radius_class == RadiusClass::Zero) == (s.zero_count == n));
    CHECK((s.radius_class == RadiusClass::One) == (s.outside_count == 0 && s.circle_count() > 0));
    if (s.inside_nonzero_count > 0) CHECK(s.circle_count() + s.outside_count > 0);

    // Double-precision eigenvalues agree when they sit clearly off the circle.
    auto ev = oracle::numeric_eigenvalues(a);
    bool clear = true;
    std::size_t outside = 0;
    for (auto l : ev) {
      clear &= std::abs(std::abs(l) - 1.0) > 1e-3;
      outside += std::abs(l) > 1.0;
    }
    if (clear) CHECK(s.outside_count == outside);
  }
}

TEST_CASE("dirichlet_bound") {
  CHECK(dirichlet_bound(1, 0.1) == 64);
  CHECK(dirichlet_bound(2, 0.1) == 3970);
  // As epsilon -> 2 the arc tends to pi and ceil(2 pi / delta) settles at 3.
  CHECK(dirichlet_bound(1, 1.98) == 4);
  CHECK(dirichlet_cells(1.999999) == 3);
  CHECK(dirichlet_bound(3, 0.5) == BigInt(13 * 13 * 13 + 1));
  CHECK_THROWS_AS(dirichlet_bound(1, 0.0), DegenerateEpsilon);
  CHECK_THROWS_AS(dirichlet_bound(1, 2.0), DegenerateEpsilon);
}

TEST_CASE("return_time examples") {
  CHECK(return_time({{Rational(1, 3)}, 0.5}) == 3);
  CHECK(return_time({{Rational(0)}, 0.3}) == 1);
  CHECK(return_time({{0.0}, 1e-6}) == 1);
  CHECK_THROWS_AS(return_time({{0.25}, 0.0}), DegenerateEpsilon);
  CHECK_THROWS_AS(return_time({{0.25}, -1.0}), DegenerateEpsilon);

  const double theta = 0.6180339887;
  const auto brute = oracle::brute_force_return_time(theta, 0.1, 10000);
  const auto m = return_time({{theta}, 0.1});
  CHECK(m == brute);
  CHECK(m == 34);
  CHECK(chord_to_one(theta, m) < 0.1);
}

TEST_CASE("return_time output satisfies the defining inequality") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> angle(0.0, 1.0), eps(0.05, 1.5);
  for (int t = 0; t < 200; ++t) {
    ReturnTimeQuery q;
    const int count = 1 + t % 3;
    for (int j = 0; j < count; ++j) q.angles.emplace_back(angle(rng));
    q.epsilon = eps(rng);
    for (auto mode : {ReturnTimeMode::MinimalScan, ReturnTimeMode::Pigeonhole}) {
      const auto m = return_time(q, mode);
      CHECK(m >= 1);
      CHECK(BigInt(static_cast<unsigned long>(m)) <= dirichlet_bound(q.angles.size(), q.epsilon));
      for (const auto& a : q.angles) {
        long double turns = static_cast<long double>(std::get<double>(a)) * static_cast<long double>(m);
        turns -= std::floor(turns);
        const auto mu = std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> * turns);
        CHECK(static_cast<double>(std::abs(mu - 1.0L)) < q.epsilon + 1e-12);
      }
    }
    // Minimal scan is minimal.
    const auto minimal = return_time(q);
    for (std::uint64_t k = 1; k < minimal; ++k) {
      bool all = true;
      for (const auto& a : q.angles) all &= chord_to_one(a, k) < q.epsilon - kReturnTimeMargin;
      CHECK_FALSE(all);
    }
  }
}

TEST_CASE("roots of unity return at a divisor of the lcm of their orders") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> order(1, 12);
  for (int t = 0; t < 100; ++t) {
    ReturnTimeQuery q;
    q.epsilon = 1e-3;
    std::uint64_t l = 1;
    for (int j = 0; j < 1 + t % 3; ++j) {
      const int k = order(rng);
      q.angles.emplace_back(Rational(1 + t % k, k));
      l = std::lcm(l, static_cast<std::uint64_t>(k));
    }
    const auto m = return_time(q);
    CHECK(l % m == 0);
    for (const auto& a : q.angles) CHECK(chord_to_one(a, l) == 0.0);
  }
}
