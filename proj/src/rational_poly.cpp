#include "perlef/rational_poly.hpp"

#include <stdexcept>

namespace perlef::detail {

namespace {
int sgn(const Rational& q) { return sgn(q.get_num()); }
}  // namespace

QPoly::QPoly(const IntPolynomial& p) {
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
}

void QPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational QPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int QPoly::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

int QPoly::sign_at_infinity(int dir) const {
  if (is_zero()) return 0;
  int s = sgn(leading());
  return (dir < 0 && degree() % 2 == 1) ? -s : s;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<unsigned long>(k));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly out = *this;
  Rational lc = leading();
  for (auto& v : out.c) v /= lc;
  return out;
}

IntPolynomial QPoly::to_primitive_int() const {
  if (is_zero()) return {};
  BigInt den = 1;
  for (const auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(c.size());
  for (const auto& v : c) ints.emplace_back(v.get_num() * (den / v.get_den()));
  IntPolynomial p = IntPolynomial(std::move(ints)).primitive();
  if (p.leading() < 0) p = BigInt(-1) * p;
  return p;
}

QPoly operator-(const QPoly& a) {
  QPoly out = a;
  for (auto& v : out.c) v = -v;
  return out;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r[k] += b.c[k];
  return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r[k] -= b.c[k];
  return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("QPoly division by zero");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<Rational> rem = a.c;
  std::vector<Rational> quot(a.c.size() - b.c.size() + 1);
  const Rational& lb = b.leading();
  for (long k = a.degree() - b.degree(); k >= 0; --k) {
    Rational q = rem[k + b.degree()] / lb;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) rem[k + j] -= q * b.c[j];
  }
  rem.resize(b.c.size() - 1);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  // Yun's algorithm over a field of characteristic zero.
  std::vector<QPoly> parts;
  if (p.degree() < 1) return parts;
  QPoly dp = p.derivative();
  QPoly a = gcd(p, dp);
  QPoly b = divmod(p, a).first;
  QPoly c = divmod(dp, a).first;
  QPoly d = c - b.derivative();
  while (b.degree() > 0) {
    QPoly g = gcd(b, d);
    parts.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return parts;
}

std::vector<QPoly> sturm_chain(const QPoly& f0, const QPoly& f1) {
  std::vector<QPoly> chain{f0, f1};
  while (!chain.back().is_zero()) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}
}  // namespace

int sign_variations_at(const std::vector<QPoly>& chain, const Rational& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& f : chain) s.push_back(f.sign_at(x));
  return count_variations(s);
}

int sign_variations_at_infinity(const std::vector<QPoly>& chain, int dir) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& f : chain) s.push_back(f.sign_at_infinity(dir));
  return count_variations(s);
}

std::size_t count_distinct_real_roots(const QPoly& p, const Rational& a, const Rational& b) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(p, p.derivative());
  return static_cast<std::size_t>(sign_variations_at(chain, a) - sign_variations_at(chain, b));
}

}  // namespace perlef::detail
