#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "perlef/errors.hpp"
#include "perlef/polynomial.hpp"
#include "perlef/rational_poly.hpp"

using namespace perlef;

TEST_CASE("char_poly examples") {
  IntMatrix a{{0, -1}, {1, -1}};
  CHECK(char_poly(a) == IntPolynomial(oracle::char_poly_2x2(a)));
  CHECK(char_poly(a) == IntPolynomial{1, 1, 1});
  CHECK(char_poly(IntMatrix{{0, 1}, {0, 0}}) == IntPolynomial{0, 0, 1});
  CHECK(char_poly(IntMatrix{{2}}) == IntPolynomial{-2, 1});
  CHECK(char_poly(IntMatrix{}) == IntPolynomial{1});
}

TEST_CASE("char_poly agrees with cofactor expansion on random 2x2") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto a = oracle::random_matrix(rng, 2, -9, 9);
    CHECK(char_poly(a) == IntPolynomial(oracle::char_poly_2x2(a)));
  }
}

TEST_CASE("Cayley-Hamilton holds exactly for random matrices") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + t % 6;
    auto a = oracle::random_matrix(rng, n, -5, 5);
    auto p = char_poly(a);
    CHECK(p.is_monic());
    CHECK(p.degree() == static_cast<long>(n));
    for (const auto& row : oracle::evaluate_at_matrix(p, a))
      for (const auto& v : row) CHECK(v == 0);
  }
}

TEST_CASE("companion matrix round-trips through char_poly") {
  IntPolynomial p{3, -1, 0, 2, 1};
  CHECK(char_poly(companion(p)) == p);
  CHECK(companion(IntPolynomial{1, 1, 1}) == IntMatrix{{0, -1}, {1, -1}});
}

TEST_CASE("is_nilpotent") {
  CHECK(is_nilpotent(IntMatrix{{0, 1}, {0, 0}}));
  CHECK_FALSE(is_nilpotent(IntMatrix{{1}}));
  CHECK(is_nilpotent(IntMatrix{{2, -4}, {1, -2}}));
  CHECK(is_nilpotent(IntMatrix{}));
  CHECK(is_nilpotent(IntMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST_CASE("is_nilpotent iff char_poly is x^n") {
  std::mt19937_64 rng(13);
  int nilpotent_seen = 0;
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = 1 + t % 3;
    auto a = oracle::random_matrix(rng, n, -1, 1);
    const bool nil = is_nilpotent(a);
    nilpotent_seen += nil;
    CHECK(nil == (char_poly(a) == IntPolynomial::monomial(n)));
  }
  CHECK(nilpotent_seen > 0);
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(IntPolynomial{1, 1, 1}) == IntPolynomial{1, 1, 1});
  CHECK(reciprocal(IntPolynomial{-2, 1}) == IntPolynomial{1, -2});
  CHECK(reciprocal(IntPolynomial{1, -3, 1}) == IntPolynomial{1, -3, 1});
  CHECK_THROWS_AS(reciprocal(IntPolynomial{0, 1}), ZeroConstantTerm);
}

TEST_CASE("self_inversive_part") {
  // (x - 2)(x^2 + x + 1)
  CHECK(self_inversive_part(IntPolynomial{-2, -1, -1, 1}) == IntPolynomial{1, 1, 1});
  CHECK(self_inversive_part(IntPolynomial{-2, 1}) == IntPolynomial{1});
  CHECK(self_inversive_part(IntPolynomial{1, 1}) == IntPolynomial{1, 1});
  CHECK_THROWS_AS(self_inversive_part(IntPolynomial{0, 0, 1}), ZeroConstantTerm);
}

TEST_CASE("self_inversive_part divides p and holds all circle roots") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    auto a = oracle::random_matrix(rng, 1 + t % 5, -2, 2);
    auto p = char_poly(a);
    if (p.coeffs().front() == 0) continue;
    auto g = self_inversive_part(p);
    CHECK(exact_quotient(p, g).has_value());
    for (auto r : oracle::numeric_roots(p)) {
      if (std::abs(std::abs(r) - 1.0) > 1e-9) continue;
      bool found = false;
      for (auto s : oracle::numeric_roots(g)) found |= std::abs(r - s) < 1e-5;
      CHECK(found);
    }
  }
}

TEST_CASE("cyclotomic polynomials match their numeric definition") {
  for (unsigned k = 1; k <= 40; ++k) {
    auto phi = cyclotomic(k);
    CHECK(phi == oracle::numeric_cyclotomic(k));
    CHECK(phi.degree() == static_cast<long>(euler_phi(k)));
  }
}

TEST_CASE("cyclotomic_part examples") {
  auto c = cyclotomic_part(IntPolynomial{1, 1, 1});
  CHECK(c.product == IntPolynomial{1, 1, 1});
  CHECK(c.orders == std::vector<std::uint64_t>{3});

  c = cyclotomic_part(IntPolynomial{-2, 1});
  CHECK(c.product == IntPolynomial{1});
  CHECK(c.orders.empty());

  // Lehmer-style quartic: no cyclotomic factor. Trial-divide against every
  // Phi_k with phi(k) <= 4, built numerically.
  IntPolynomial quartic{1, -1, -1, -1, 1};
  for (unsigned k : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 10u, 12u})
    CHECK_FALSE(exact_quotient(quartic, oracle::numeric_cyclotomic(k)).has_value());
  c = cyclotomic_part(quartic);
  CHECK(c.product == IntPolynomial{1});
  CHECK(c.orders.empty());

  // Repeated factors are reported with multiplicity.
  IntPolynomial p = IntPolynomial{1, 1} * IntPolynomial{1, 1} * IntPolynomial{1, 0, 1} * IntPolynomial{-3, 1};
  c = cyclotomic_part(p);
  CHECK(c.orders == std::vector<std::uint64_t>{2, 2, 4});
  CHECK(c.product == IntPolynomial{1, 1} * IntPolynomial{1, 1} * IntPolynomial{1, 0, 1});
  CHECK_THROWS_AS(cyclotomic_part(IntPolynomial{0, 1}), ZeroConstantTerm);
}

namespace {
// A monic integer polynomial with p(0) != 0 is a product of cyclotomics iff
// its root-squaring orbit is eventually periodic. All roots on the circle
// force |c_k| <= C(d, k); an orbit leaving that box never returns.
bool graeffe_revisits(const IntPolynomial& p, int max_iter) {
  std::vector<IntPolynomial> seen{p};
  IntPolynomial cur = p;
  const auto d = static_cast<unsigned long>(p.degree());
  for (int i = 0; i < max_iter; ++i) {
    cur = graeffe(cur);
    for (unsigned long k = 0; k <= d; ++k) {
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), d, k);
      if (abs(cur.coeff(k)) > binom) return false;
    }
    if (std::find(seen.begin(), seen.end(), cur) != seen.end()) return true;
    seen.push_back(cur);
  }
  return false;
}
}  // namespace

TEST_CASE("graeffe cross-check of cyclotomic detection") {
  CHECK(graeffe(IntPolynomial{-2, 1}) == IntPolynomial{-4, 1});
  CHECK(graeffe(IntPolynomial{1, 1, 1}) == IntPolynomial{1, 1, 1});
  std::mt19937_64 rng(15);
  int cyclo = 0;
  for (int t = 0; t < 300; ++t) {
    auto p = char_poly(oracle::random_matrix(rng, 1 + t % 4, -1, 1));
    if (p.coeffs().front() == 0) continue;
    const bool all_cyclotomic = cyclotomic_part(p).product == p;
    cyclo += all_cyclotomic;
    CHECK(graeffe_revisits(p, 40) == all_cyclotomic);
  }
  CHECK(cyclo > 10);
}

TEST_CASE("count_roots_outside_unit_disk examples") {
  CHECK(count_roots_outside_unit_disk(IntPolynomial{-2, 1}) == 1);
  CHECK(count_roots_outside_unit_disk(IntPolynomial{-1, -1, 1}) == 1);
  CHECK(count_roots_outside_unit_disk(IntPolynomial{-3, 1}) == 1);
  CHECK(count_roots_outside_unit_disk(IntPolynomial{1, 2}) == 0);
  CHECK(count_roots_outside_unit_disk(IntPolynomial{5}) == 0);
  // Palindromic: shares its roots with the reciprocal.
  CHECK_THROWS_AS(count_roots_outside_unit_disk(IntPolynomial{1, -3, 1}), RootOnCircle);
  CHECK_THROWS_AS(count_roots_outside_unit_disk(IntPolynomial{1, 1, 1}), RootOnCircle);
  CHECK_THROWS_AS(count_roots_outside_unit_disk(IntPolynomial{0, 1}), ZeroConstantTerm);
}

TEST_CASE("degenerate Schur-Cohn step falls back to the Cauchy index") {
  // x^2 + 3x - 1: |a_0| = |a_2| although no root is on the circle.
  IntPolynomial p{-1, 3, 1};
  CHECK_FALSE(detail::schur_cohn_inside(p).has_value());
  CHECK(detail::cauchy_index_inside(p) == 1);
  CHECK(count_roots_outside_unit_disk(p) == 1);
}

namespace {
std::size_t numeric_outside(const IntPolynomial& p) {
  std::size_t c = 0;
  for (auto r : oracle::numeric_roots(p)) c += std::abs(r) > 1.0;
  return c;
}
bool roots_clear_of_circle(const IntPolynomial& p, double margin) {
  for (auto r : oracle::numeric_roots(p))
    if (std::abs(std::abs(r) - 1.0) < margin) return false;
  return true;
}
}  // namespace

TEST_CASE("outside count matches a floating-point root finder") {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<int> coeff(-6, 6);
  int checked = 0;
  for (int t = 0; t < 3000 && checked < 600; ++t) {
    const int d = 1 + t % 8;
    std::vector<BigInt> c(d + 1);
    for (auto& v : c) v = coeff(rng);
    if (c.front() == 0 || c.back() == 0) continue;
    IntPolynomial p(c);
    if (self_inversive_part(p).degree() > 0 || !roots_clear_of_circle(p, 1e-3)) continue;
    ++checked;
    const std::size_t outside = count_roots_outside_unit_disk(p);
    CHECK(outside == numeric_outside(p));
    // Both exact routes agree whenever Schur-Cohn does not degenerate.
    const std::size_t inside = detail::cauchy_index_inside(p);
    CHECK(inside + outside == static_cast<std::size_t>(d));
    if (auto sc = detail::schur_cohn_inside(p)) CHECK(*sc == inside);
  }
  CHECK(checked >= 500);
}

TEST_CASE("count_roots_on_unit_circle") {
  CHECK(count_roots_on_unit_circle(IntPolynomial{1, 1, 1}) == 2);
  CHECK(count_roots_on_unit_circle(IntPolynomial{1, -3, 1}) == 0);
  CHECK(count_roots_on_unit_circle(IntPolynomial{-1, 1}) == 1);
  CHECK(count_roots_on_unit_circle(IntPolynomial{1, 2, 1}) == 2);
  CHECK(count_roots_on_unit_circle(IntPolynomial{0, 0, 1, 1}) == 1);
  // Lehmer's polynomial: one Salem root outside, its reciprocal inside, 8 on the circle.
  IntPolynomial lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  CHECK(count_roots_on_unit_circle(lehmer) == 8);
  CHECK(count_roots_on_unit_circle(lehmer * lehmer) == 16);
}

TEST_CASE("circle count matches numeric roots on random characteristic polynomials") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 400; ++t) {
    auto p = char_poly(oracle::random_matrix(rng, 1 + t % 5, -2, 2));
    if (p.coeffs().front() == 0) continue;
    // Skip repeated roots, where eigenvalues in double precision are unreliable.
    if (detail::squarefree_decomposition(detail::QPoly(p)).size() > 1) continue;
    std::size_t numeric = 0;
    for (auto r : oracle::numeric_roots(p)) numeric += std::abs(std::abs(r) - 1.0) < 1e-7;
    CHECK(count_roots_on_unit_circle(p) == numeric);
  }
}

TEST_CASE("to_string") {
  CHECK(IntPolynomial{1, 1, 1}.to_string() == "x^2 + x + 1");
  CHECK(IntPolynomial{1, -2}.to_string("t") == "-2t + 1");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{0, 0, -1}.to_string() == "-x^2");
}
