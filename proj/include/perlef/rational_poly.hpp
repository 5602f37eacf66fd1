#pragma once

#include <utility>
#include <vector>

#include "perlef/bigint.hpp"
#include "perlef/polynomial.hpp"

namespace perlef::detail {

/// Dense polynomial over Q, constant term first; zero polynomial is empty.
struct QPoly {
  std::vector<Rational> c;

  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  explicit QPoly(const IntPolynomial& p);

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Rational& leading() const { return c.back(); }
  void trim();

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;
  /// Sign of the polynomial as x -> +inf (dir > 0) or -inf (dir < 0).
  int sign_at_infinity(int dir) const;

  QPoly derivative() const;
  QPoly monic() const;
  /// Scale to a primitive integer polynomial with positive leading coefficient.
  IntPolynomial to_primitive_int() const;
};

QPoly operator-(const QPoly& a);
QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd; the gcd of two zero polynomials is zero.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Yun square-free decomposition: returns s_1, s_2, ... with p ~ prod s_i^i.
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

/// Signed remainder (Sturm) sequence starting from f0, f1.
std::vector<QPoly> sturm_chain(const QPoly& f0, const QPoly& f1);

int sign_variations_at(const std::vector<QPoly>& chain, const Rational& x);
int sign_variations_at_infinity(const std::vector<QPoly>& chain, int dir);

/// Distinct real roots of p in the open interval (a, b); p(a), p(b) nonzero.
std::size_t count_distinct_real_roots(const QPoly& p, const Rational& a, const Rational& b);

}  // namespace perlef::detail
