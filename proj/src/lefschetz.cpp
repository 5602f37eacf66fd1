#include "perlef/lefschetz.hpp"

#include <stdexcept>

#include "perlef/rational_poly.hpp"

namespace perlef {

std::vector<Rational> RationalFunction::series(std::size_t order) const {
  const auto& num = numerator.coeffs();
  const auto& den = denominator.coeffs();
  if (den.empty() || den.front() == 0)
    throw std::domain_error("RationalFunction::series: denominator vanishes at t = 0");
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = k < num.size() ? Rational(num[k]) : Rational(0);
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc -= Rational(den[j]) * c[k - j];
    c[k] = acc / Rational(den.front());
  }
  return c;
}

std::vector<BigInt> trace_power_sums(const IntPolynomial& p, std::size_t max_m) {
  if (!p.is_monic()) throw std::invalid_argument("trace_power_sums: polynomial must be monic");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  // e[i] is the coefficient of x^{n-i}; Newton: p_m = -(m e_m + sum_{i<m} e_i p_{m-i}).
  std::vector<BigInt> e(n + 1);
  for (std::size_t i = 0; i <= n; ++i) e[i] = p.coeffs()[n - i];
  std::vector<BigInt> sums(max_m + 1);
  for (std::size_t m = 1; m <= max_m; ++m) {
    BigInt acc = 0;
    if (m <= n) acc = e[m] * static_cast<unsigned long>(m);
    const std::size_t top = std::min(m - 1, n);
    for (std::size_t i = 1; i <= top; ++i)
      mpz_addmul(acc.get_mpz_t(), e[i].get_mpz_t(), sums[m - i].get_mpz_t());
    sums[m] = -acc;
  }
  sums.erase(sums.begin());
  return sums;
}

BigInt lefschetz_number(const GradedHomologyAction& action, std::uint64_t m) {
  BigInt total = 0;
  for (const auto& [k, mat] : action.degree_matrices()) {
    if (mat.empty()) continue;
    BigInt t = power(mat, m).trace();
    if (k % 2 == 0) total += t;
    else total -= t;
  }
  return total;
}

LefschetzSequence lefschetz_sequence(const GradedHomologyAction& action, std::size_t max_m) {
  LefschetzSequence seq;
  seq.values.reserve(max_m);
  if (hypothesis_shape(action).satisfies_theorem_hypotheses) {
    for (auto& p : trace_power_sums(char_poly(action.at(1)), max_m)) seq.values.push_back(1 - p);
    return seq;
  }
  for (std::size_t m = 1; m <= max_m; ++m) seq.values.push_back(lefschetz_number(action, m));
  return seq;
}

RationalFunction zeta(const GradedHomologyAction& action) {
  require_theorem_shape(action);
  // det(I - tA) is the reversal of det(xI - A), padded to degree n.
  const IntPolynomial chi = char_poly(action.at(1));
  std::vector<BigInt> rev(chi.coeffs().rbegin(), chi.coeffs().rend());
  detail::QPoly num{IntPolynomial(std::move(rev))};
  detail::QPoly den{IntPolynomial{1, -1}};

  detail::QPoly g = detail::gcd(num, den);
  num = detail::divmod(num, g).first;
  den = detail::divmod(den, g).first;

  // Clear denominators jointly so the quotient keeps its value.
  BigInt scale = 1;
  for (const auto* q : {&num, &den})
    for (const auto& v : q->c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  auto to_int = [&](const detail::QPoly& q) {
    std::vector<BigInt> v;
    for (const auto& c : q.c) v.emplace_back(c.get_num() * (scale / c.get_den()));
    return IntPolynomial(std::move(v));
  };
  IntPolynomial n = to_int(num), d = to_int(den);
  BigInt content = gcd(n.content(), d.content());
  if (d.coeffs().front() < 0) content = -content;
  std::vector<BigInt> nv = n.coeffs(), dv = d.coeffs();
  for (auto& v : nv) v /= content;
  for (auto& v : dv) v /= content;
  return {IntPolynomial(std::move(nv)), IntPolynomial(std::move(dv))};
}

}  // namespace perlef
