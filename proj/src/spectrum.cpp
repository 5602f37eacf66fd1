#include "perlef/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "perlef/errors.hpp"

namespace perlef {

std::string_view to_string(RadiusClass r) {
  switch (r) {
    case RadiusClass::Zero: return "Zero";
    case RadiusClass::One: return "One";
    case RadiusClass::GreaterThanOne: return ">1";
  }
  return "?";
}

SpectrumSummary spectrum_summary(const IntMatrix& a) { return spectrum_summary(char_poly(a)); }

SpectrumSummary spectrum_summary(const IntPolynomial& chi) {
  SpectrumSummary s;
  s.n = static_cast<std::size_t>(chi.degree());
  s.zero_count = zero_root_multiplicity(chi);
  if (s.zero_count == s.n) {
    s.radius_class = RadiusClass::Zero;
    return s;
  }
  const IntPolynomial p(
      std::vector<BigInt>(chi.coeffs().begin() + static_cast<long>(s.zero_count), chi.coeffs().end()));

  const std::size_t circle = count_roots_on_unit_circle(p);
  for (std::uint64_t k : cyclotomic_part(p).orders)
    s.unity_orders.insert(s.unity_orders.end(), euler_phi(k), k);
  std::sort(s.unity_orders.begin(), s.unity_orders.end());
  if (s.unity_orders.size() > circle) throw std::logic_error("spectrum_summary: inconsistent circle count");
  s.circle_non_torsion_count = circle - s.unity_orders.size();

  // Off-circle roots of the self-inversive part come in pairs lambda, 1/lambda.
  const IntPolynomial g = self_inversive_part(p);
  const std::size_t paired = static_cast<std::size_t>(g.degree()) - circle;
  auto rest = exact_quotient(p, g);
  if (!rest || paired % 2 != 0) throw std::logic_error("spectrum_summary: bad self-inversive split");
  s.outside_count = count_roots_outside_unit_disk(*rest) + paired / 2;
  s.inside_nonzero_count = s.n - s.zero_count - circle - s.outside_count;

  if (s.outside_count > 0) {
    s.radius_class = RadiusClass::GreaterThanOne;
  } else if (circle > 0) {
    s.radius_class = RadiusClass::One;
  } else {
    // The nonzero roots multiply to +-p(0), a nonzero integer.
    throw std::logic_error("spectrum_summary: all nonzero eigenvalues strictly inside the disk");
  }
  return s;
}

namespace {

double turn_distance_to_integer(const Angle& theta, std::uint64_t m, double* frac_out = nullptr) {
  double frac;
  if (const auto* q = std::get_if<Rational>(&theta)) {
    BigInt num = q->get_num() * BigInt(static_cast<unsigned long>(m));
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), q->get_den_mpz_t());
    frac = Rational(r, q->get_den()).get_d();
  } else {
    long double x = static_cast<long double>(std::get<double>(theta)) * static_cast<long double>(m);
    frac = static_cast<double>(x - std::floor(x));
  }
  if (frac_out) *frac_out = frac;
  return std::min(frac, 1.0 - frac);
}

void check_query(const ReturnTimeQuery& query) {
  if (!(query.epsilon > 0.0 && query.epsilon < 2.0)) throw DegenerateEpsilon();
  if (query.angles.empty()) throw std::invalid_argument("return_time: at least one angle required");
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t q) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < q; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace

double chord_to_one(const Angle& theta, std::uint64_t m) {
  return 2.0 * std::sin(std::numbers::pi * turn_distance_to_integer(theta, m));
}

std::uint64_t dirichlet_cells(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) throw DegenerateEpsilon();
  const double delta = 2.0 * std::asin(epsilon / 2.0);
  return static_cast<std::uint64_t>(std::ceil(2.0 * std::numbers::pi / delta));
}

BigInt dirichlet_bound(std::size_t q, double epsilon) {
  BigInt cells = static_cast<unsigned long>(dirichlet_cells(epsilon));
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), cells.get_mpz_t(), q);
  return r + 1;
}

std::uint64_t return_time(const ReturnTimeQuery& query, ReturnTimeMode mode) {
  check_query(query);
  const double target = query.epsilon - kReturnTimeMargin;
  auto valid = [&](std::uint64_t m) {
    return std::all_of(query.angles.begin(), query.angles.end(),
                       [&](const Angle& a) { return chord_to_one(a, m) < target; });
  };
  const std::uint64_t cells = dirichlet_cells(query.epsilon);
  const std::uint64_t bound = saturating_pow(cells, query.angles.size());  // bound + 1 iterates

  if (mode == ReturnTimeMode::Pigeonhole) {
    std::map<std::vector<std::uint64_t>, std::uint64_t> seen;
    std::vector<std::uint64_t> key(query.angles.size());
    for (std::uint64_t m = 0; m <= bound; ++m) {
      for (std::size_t j = 0; j < query.angles.size(); ++j) {
        double frac;
        turn_distance_to_integer(query.angles[j], m, &frac);
        key[j] = std::min(cells - 1, static_cast<std::uint64_t>(frac * static_cast<double>(cells)));
      }
      auto [it, inserted] = seen.emplace(key, m);
      if (!inserted && valid(m - it->second)) return m - it->second;
    }
  }
  for (std::uint64_t m = 1; m <= bound; ++m)
    if (valid(m)) return m;
  throw std::logic_error("return_time: no return within the Dirichlet bound");
}

}  // namespace perlef
