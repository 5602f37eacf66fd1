#pragma once

#include <cstdint>
#include <vector>

#include "perlef/bigint.hpp"
#include "perlef/homology.hpp"
#include "perlef/polynomial.hpp"

namespace perlef {

/// Exact Lefschetz numbers L(f^1), ..., L(f^M).
struct LefschetzSequence {
  std::vector<BigInt> values;  // values[m - 1] == L(f^m)

  std::size_t max_m() const noexcept { return values.size(); }
  const BigInt& at(std::size_t m) const { return values.at(m - 1); }
};

/// Generating function of the L-sequence as a quotient of integer polynomials
/// in t, kept in lowest terms with denominator constant term positive.
struct RationalFunction {
  IntPolynomial numerator;
  IntPolynomial denominator;

  /// Taylor coefficients c_0..c_order of numerator/denominator at t = 0.
  std::vector<Rational> series(std::size_t order) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// Power sums sum_i lambda_i^m for m = 1..max_m over the roots of a monic p,
/// computed with the Newton identities.
std::vector<BigInt> trace_power_sums(const IntPolynomial& p, std::size_t max_m);

/// sum_k (-1)^k trace(f_{*k}^m), by exact matrix powers.
BigInt lefschetz_number(const GradedHomologyAction& action, std::uint64_t m);

/// L(f^m) for m = 1..max_m. Uses 1 - p_m over the characteristic polynomial of
/// f_{*1} when the action has the theorem shape, per-m matrix powers otherwise.
LefschetzSequence lefschetz_sequence(const GradedHomologyAction& action, std::size_t max_m);

/// det(I - t f_{*1}) / (1 - t). Requires the theorem shape.
RationalFunction zeta(const GradedHomologyAction& action);

}  // namespace perlef
