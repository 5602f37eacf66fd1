#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perlef/bigint.hpp"
#include "perlef/int_matrix.hpp"

namespace perlef {

/// Integer polynomial, coefficients stored constant term first. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(std::size_t k, const BigInt& c = 1);
  static IntPolynomial constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  BigInt content() const;
  IntPolynomial primitive() const;
  BigInt evaluate(const BigInt& x) const;

  /// Human-readable form, e.g. "x^2 + x + 1".
  std::string to_string(const char* var = "x") const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);

/// Quotient a / b when b divides a in Z[x]; empty otherwise.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Multiplicity of x as a factor (number of vanishing low-order coefficients).
std::size_t zero_root_multiplicity(const IntPolynomial& p);

/// Companion matrix of a monic polynomial; its characteristic polynomial is p.
IntMatrix companion(const IntPolynomial& p);

/// det(xI - A) by the Faddeev-LeVerrier recurrence; every division is exact.
IntPolynomial char_poly(const IntMatrix& a);

/// A^n == 0, checked by repeated multiplication.
bool is_nilpotent(const IntMatrix& a);

/// x^deg(p) * p(1/x): the coefficient reversal.
IntPolynomial reciprocal(const IntPolynomial& p);

/// Primitive gcd of p and its reciprocal, positive leading coefficient.
/// Holds every unit-circle root of p with full multiplicity.
IntPolynomial self_inversive_part(const IntPolynomial& p);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t k);

/// The k-th cyclotomic polynomial.
IntPolynomial cyclotomic(std::uint64_t k);

struct CyclotomicFactor {
  IntPolynomial product;
  /// One entry per cyclotomic factor Phi_k dividing p, repeated by multiplicity.
  std::vector<std::uint64_t> orders;
};

/// Maximal factor of p that is a product of cyclotomic polynomials, found by
/// trial division against Phi_k for every k with phi(k) <= deg p.
CyclotomicFactor cyclotomic_part(const IntPolynomial& p);

/// Root-squaring step: the monic-up-to-sign polynomial whose roots are the squares of the roots of p.
IntPolynomial graeffe(const IntPolynomial& p);

/// Number of roots with |z| > 1, counted with multiplicity. p must be coprime to
/// its reciprocal so that no root lies on the unit circle.
std::size_t count_roots_outside_unit_disk(const IntPolynomial& p);

/// Number of roots on the unit circle, with multiplicity.
std::size_t count_roots_on_unit_circle(const IntPolynomial& p);

namespace detail {
/// Schur-Cohn-Jury count of roots strictly inside the unit disk; empty when a
/// transform step has a zero leading parameter.
std::optional<std::size_t> schur_cohn_inside(const IntPolynomial& p);
/// Count of roots strictly inside the unit disk via the Cayley map onto the upper
/// half-plane and a Sturm computation of the Cauchy index. Requires no circle roots.
std::size_t cauchy_index_inside(const IntPolynomial& p);
}  // namespace detail

}  // namespace perlef
