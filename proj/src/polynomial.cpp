#include "perlef/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "perlef/errors.hpp"
#include "perlef/rational_poly.hpp"

namespace perlef {

using detail::QPoly;

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t k, const BigInt& c) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  BigInt g = content();
  if (g == 0 || g == 1) return *this;
  std::vector<BigInt> v = coeffs_;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> r(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) r[k] += a.coeffs()[k];
  for (std::size_t k = 0; k < b.coeffs().size(); ++k) r[k] += b.coeffs()[k];
  return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + BigInt(-1) * b;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs()[i].get_mpz_t(), b.coeffs()[j].get_mpz_t());
  return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> r = p.coeffs();
  for (auto& v : r) v *= c;
  return IntPolynomial(std::move(r));
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quot(a.coeffs().size() - b.coeffs().size() + 1);
  const BigInt& lb = b.leading();
  const long db = b.degree();
  for (long k = a.degree() - db; k >= 0; --k) {
    BigInt& top = rem[k + db];
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    if (q != 0)
      for (long j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    quot[k] = std::move(q);
  }
  for (long j = 0; j < db; ++j)
    if (rem[j] != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

std::size_t zero_root_multiplicity(const IntPolynomial& p) {
  std::size_t z = 0;
  while (z < p.coeffs().size() && p.coeffs()[z] == 0) ++z;
  return z;
}

IntMatrix companion(const IntPolynomial& p) {
  if (!p.is_monic()) throw std::invalid_argument("companion: polynomial must be monic");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  IntMatrix c(n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs()[i];
  return c;
}

IntPolynomial char_poly(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k, with M_0 = 0.
  IntMatrix am = IntMatrix::zero(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    am = a * m;
    BigInt t = am.trace();
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), k);
    c[n - k] = -t;
  }
  return IntPolynomial(std::move(c));
}

bool is_nilpotent(const IntMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return true;
  IntMatrix p = a;
  for (std::size_t i = 1; i < n; ++i) {
    if (p.is_zero()) return true;
    p = p * a;
  }
  return p.is_zero();
}

IntPolynomial reciprocal(const IntPolynomial& p) {
  if (p.is_zero() || p.coeffs().front() == 0) throw ZeroConstantTerm();
  std::vector<BigInt> r(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPolynomial(std::move(r));
}

IntPolynomial self_inversive_part(const IntPolynomial& p) {
  IntPolynomial rev = reciprocal(p);
  return detail::gcd(QPoly(p), QPoly(rev)).to_primitive_int();
}

std::uint64_t euler_phi(std::uint64_t k) {
  std::uint64_t result = k;
  for (std::uint64_t q = 2; q * q <= k; ++q) {
    if (k % q) continue;
    while (k % q == 0) k /= q;
    result -= result / q;
  }
  if (k > 1) result -= result / k;
  return result;
}

namespace {

int moebius(std::uint64_t k) {
  int mu = 1;
  for (std::uint64_t q = 2; q * q <= k; ++q) {
    if (k % q) continue;
    k /= q;
    if (k % q == 0) return 0;
    mu = -mu;
  }
  if (k > 1) mu = -mu;
  return mu;
}

IntPolynomial x_power_minus_one(std::uint64_t d) {
  return IntPolynomial::monomial(d) - IntPolynomial{1};
}

}  // namespace

IntPolynomial cyclotomic(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("cyclotomic: order must be positive");
  // Phi_k = prod_{d | k} (x^d - 1)^{mu(k/d)}
  IntPolynomial num{1}, den{1};
  for (std::uint64_t d = 1; d <= k; ++d) {
    if (k % d) continue;
    int mu = moebius(k / d);
    if (mu == 1) num = num * x_power_minus_one(d);
    if (mu == -1) den = den * x_power_minus_one(d);
  }
  return *exact_quotient(num, den);
}

CyclotomicFactor cyclotomic_part(const IntPolynomial& p) {
  if (p.is_zero() || p.coeffs().front() == 0) throw ZeroConstantTerm();
  CyclotomicFactor out{IntPolynomial{1}, {}};
  IntPolynomial rest = p;
  const std::uint64_t deg = static_cast<std::uint64_t>(p.degree());
  // phi(k) >= sqrt(k / 2), so phi(k) <= deg forces k <= 2 deg^2.
  const std::uint64_t k_max = std::max<std::uint64_t>(2, 2 * deg * deg);
  for (std::uint64_t k = 1; k <= k_max && rest.degree() > 0; ++k) {
    if (euler_phi(k) > static_cast<std::uint64_t>(rest.degree())) continue;
    IntPolynomial phi = cyclotomic(k);
    while (auto q = exact_quotient(rest, phi)) {
      out.orders.push_back(k);
      out.product = out.product * phi;
      rest = std::move(*q);
    }
  }
  return out;
}

IntPolynomial graeffe(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  std::vector<BigInt> neg = p.coeffs();
  for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
  IntPolynomial prod = p * IntPolynomial(std::move(neg));
  std::vector<BigInt> g;
  for (std::size_t k = 0; k < prod.coeffs().size(); k += 2) g.push_back(prod.coeffs()[k]);
  IntPolynomial out(std::move(g));
  return p.degree() % 2 ? BigInt(-1) * out : out;
}

std::size_t count_roots_on_unit_circle(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("count_roots_on_unit_circle: zero polynomial");
  const std::size_t z = zero_root_multiplicity(p);
  IntPolynomial stripped(std::vector<BigInt>(p.coeffs().begin() + static_cast<long>(z), p.coeffs().end()));
  if (stripped.degree() <= 0) return 0;

  IntPolynomial q = self_inversive_part(stripped);
  std::size_t count = 0;
  for (long root : {1L, -1L}) {
    IntPolynomial lin{-root, 1};
    while (auto d = exact_quotient(q, lin)) {
      ++count;
      q = std::move(*d);
    }
  }
  if (q.degree() <= 0) return count;

  // q is now palindromic of even degree 2h: x^{-h} q(x) = r(x + 1/x), and a
  // root y of r in (-2, 2) gives the conjugate pair on the circle over it.
  const std::size_t h = static_cast<std::size_t>(q.degree()) / 2;
  std::vector<QPoly> dickson{QPoly(std::vector<Rational>{2}), QPoly(std::vector<Rational>{0, 1})};
  const QPoly y(std::vector<Rational>{0, 1});
  while (dickson.size() <= h) {
    const std::size_t j = dickson.size();
    dickson.push_back(y * dickson[j - 1] - dickson[j - 2]);
  }
  QPoly r(std::vector<Rational>{Rational(q.coeffs()[h])});
  for (std::size_t j = 1; j <= h; ++j) {
    QPoly term = dickson[j];
    for (auto& c : term.c) c *= q.coeffs()[h + j];
    r = r + term;
  }
  auto parts = detail::squarefree_decomposition(r);
  for (std::size_t i = 0; i < parts.size(); ++i)
    count += 2 * (i + 1) * detail::count_distinct_real_roots(parts[i], Rational(-2), Rational(2));
  return count;
}

namespace detail {

std::optional<std::size_t> schur_cohn_inside(const IntPolynomial& p) {
  // inside(p) = base + sign * inside(cur) throughout.
  IntPolynomial cur = p.primitive();
  long base = 0;
  long sign = 1;
  while (cur.degree() > 0) {
    const long d = cur.degree();
    const BigInt& a0 = cur.coeffs().front();
    const BigInt& ad = cur.leading();
    const BigInt delta = a0 * a0 - ad * ad;
    if (delta == 0) return std::nullopt;
    IntPolynomial next = (a0 * cur - ad * reciprocal(cur)).primitive();
    if (delta < 0) {
      // |a_d| > |a_0|: next has as many roots inside as the reciprocal of cur.
      base += sign * d;
      sign = -sign;
    }
    cur = std::move(next);
  }
  return static_cast<std::size_t>(base);
}

namespace {

// Polynomial with Gaussian-integer coefficients.
struct GaussPoly {
  std::vector<BigInt> re, im;
};

GaussPoly mul(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly r;
  r.re.assign(a.re.size() + b.re.size() - 1, 0);
  r.im.assign(a.re.size() + b.re.size() - 1, 0);
  for (std::size_t i = 0; i < a.re.size(); ++i)
    for (std::size_t j = 0; j < b.re.size(); ++j) {
      r.re[i + j] += a.re[i] * b.re[j] - a.im[i] * b.im[j];
      r.im[i + j] += a.re[i] * b.im[j] + a.im[i] * b.re[j];
    }
  return r;
}

}  // namespace

std::size_t cauchy_index_inside(const IntPolynomial& p) {
  const std::size_t d = static_cast<std::size_t>(p.degree());
  if (p.degree() <= 0) return 0;
  // Q(t) = (1 - it)^d p((1 + it) / (1 - it)); |x| < 1 <=> Im t > 0.
  std::vector<GaussPoly> plus{{{1}, {0}}}, minus{{{1}, {0}}};
  const GaussPoly lp{{1, 0}, {0, 1}}, lm{{1, 0}, {0, -1}};
  for (std::size_t k = 1; k <= d; ++k) {
    plus.push_back(mul(plus.back(), lp));
    minus.push_back(mul(minus.back(), lm));
  }
  std::vector<Rational> re(d + 1), im(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    const BigInt& a = p.coeffs()[k];
    if (a == 0) continue;
    GaussPoly term = mul(plus[k], minus[d - k]);
    for (std::size_t j = 0; j <= d; ++j) {
      re[j] += a * term.re[j];
      im[j] += a * term.im[j];
    }
  }
  QPoly real_part(std::move(re)), imag_part(std::move(im));
  // Leading coefficient of Q is (-i)^d p(-1); rotate by i for odd d so it is real.
  if (d % 2 == 1) {
    QPoly r = -imag_part;
    imag_part = real_part;
    real_part = r;
  }
  auto chain = sturm_chain(real_part, imag_part);
  const int index = sign_variations_at_infinity(chain, -1) - sign_variations_at_infinity(chain, 1);
  // N+ - N- = -index, N+ + N- = d.
  return static_cast<std::size_t>((static_cast<long>(d) - index) / 2);
}

}  // namespace detail

std::size_t count_roots_outside_unit_disk(const IntPolynomial& p) {
  if (p.is_zero() || p.coeffs().front() == 0) throw ZeroConstantTerm();
  if (p.degree() == 0) return 0;
  if (self_inversive_part(p).degree() > 0) throw RootOnCircle();
  const std::size_t d = static_cast<std::size_t>(p.degree());
  auto inside = detail::schur_cohn_inside(p);
  if (!inside) inside = detail::cauchy_index_inside(p);
  return d - *inside;
}

}  // namespace perlef
