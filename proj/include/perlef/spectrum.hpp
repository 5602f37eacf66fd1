#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "perlef/bigint.hpp"
#include "perlef/int_matrix.hpp"
#include "perlef/polynomial.hpp"

namespace perlef {

enum class RadiusClass { Zero, One, GreaterThanOne };

std::string_view to_string(RadiusClass r);

/// Where the eigenvalues of an integer matrix sit relative to the unit circle.
/// All counts are exact and include multiplicity.
struct SpectrumSummary {
  std::size_t n = 0;
  std::size_t zero_count = 0;
  /// Order of each root-of-unity eigenvalue, one entry per eigenvalue, sorted.
  std::vector<std::uint64_t> unity_orders;
  std::size_t circle_non_torsion_count = 0;
  std::size_t outside_count = 0;
  std::size_t inside_nonzero_count = 0;
  RadiusClass radius_class = RadiusClass::Zero;

  std::size_t circle_count() const { return unity_orders.size() + circle_non_torsion_count; }
};

SpectrumSummary spectrum_summary(const IntMatrix& a);
SpectrumSummary spectrum_summary(const IntPolynomial& char_poly);

/// Angle as a fraction of a full turn: exact p/q or a double in [0, 1).
using Angle = std::variant<Rational, double>;

struct ReturnTimeQuery {
  std::vector<Angle> angles;
  double epsilon = 0.5;
};

enum class ReturnTimeMode {
  /// Smallest m up to the Dirichlet bound.
  MinimalScan,
  /// First pigeonhole collision on the partitioned torus.
  Pigeonhole,
};

/// Interior margin applied to every |mu^m - 1| < epsilon comparison.
inline constexpr double kReturnTimeMargin = 1e-12;

/// Some m >= 1 with |exp(2 pi i theta_j m) - 1| < epsilon for every angle.
std::uint64_t return_time(const ReturnTimeQuery& query,
                          ReturnTimeMode mode = ReturnTimeMode::MinimalScan);

/// |exp(2 pi i theta m) - 1|, evaluated with exact reduction for rational angles.
double chord_to_one(const Angle& theta, std::uint64_t m);

/// (ceil(2 pi / delta))^q + 1 with delta = 2 asin(epsilon / 2).
BigInt dirichlet_bound(std::size_t q, double epsilon);

/// Number of arcs per circle used by the pigeonhole argument.
std::uint64_t dirichlet_cells(double epsilon);

}  // namespace perlef
