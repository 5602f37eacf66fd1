#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "perlef/classifier.hpp"
#include "perlef/errors.hpp"
#include "perlef/homology.hpp"

namespace perlef {

using Complex = std::complex<double>;

struct UnitDisk {};
struct Disk {
  Complex center;
  double radius = 1.0;
};
struct Rectangle {
  double x_min = -1, x_max = 1, y_min = -1, y_max = 1;
};
using Domain = std::variant<UnitDisk, Disk, Rectangle>;

/// Signed distance from z to the boundary of the domain, positive inside.
double signed_margin(const Domain& domain, Complex z);

enum class MapFamily { DiskAffine, DiskPolynomial, Composition };

/// One-variable polynomial map, possibly a composition of several stages.
/// Each stage holds coefficients constant term first; stages apply in order.
struct MapSpec {
  MapFamily family = MapFamily::DiskPolynomial;
  std::vector<std::vector<Complex>> stages;
  Domain domain = UnitDisk{};
  GradedHomologyAction declared_action;

  static MapSpec affine(Complex a, Complex b, Domain domain = UnitDisk{});
  static MapSpec polynomial(std::vector<Complex> coeffs, Domain domain = UnitDisk{});
  static MapSpec composition(const std::vector<MapSpec>& parts, Domain domain = UnitDisk{});

  /// Throws MalformedInput for non-finite coefficients or a non-positive radius.
  void validate() const;

  Complex operator()(Complex z) const;
  /// Value and derivative of the m-th iterate, chain rule along the orbit.
  std::pair<Complex, Complex> iterate_with_derivative(Complex z, std::uint64_t m) const;
};

struct InsideReport {
  bool strictly_inside = false;
  double margin = 0.0;
  std::size_t samples = 0;
};

/// Margins at or below this are treated as touching the boundary.
inline constexpr double kStrictMarginFloor = 1e-12;
inline constexpr std::size_t kDefaultBoundarySamples = 4096;

/// Samples the domain boundary and reports min distance of f(boundary) to it.
InsideReport strictly_inside(const MapSpec& map, std::size_t samples = kDefaultBoundarySamples);

struct FixedPoint {
  Complex z;
  double residual = 0.0;
};

struct FixedPointReport {
  std::uint64_t m = 0;
  std::vector<FixedPoint> points;
  std::size_t count = 0;
  BigInt lefschetz_value;
  bool bound_satisfied = false;
};

inline constexpr double kResidualTolerance = 1e-10;
inline constexpr double kDedupRadius = 1e-6;
inline constexpr std::size_t kDefaultGrid = 64;

FixedPointReport find_fixed_points(const MapSpec& map, std::uint64_t m,
                                   std::size_t grid_resolution = kDefaultGrid);

enum class ViolationCause { BoundExceeded, MissingFixedPoint, PredictionMismatch };

struct VerificationReport {
  InsideReport inside;
  ClassificationResult classification;
  std::vector<FixedPointReport> per_m;
  /// Points of exact period m (fixed by f^m, by no f^d with d a proper divisor).
  std::vector<std::size_t> exact_period_counts;
  bool passed = false;
};

class TheoremViolation : public Error {
 public:
  TheoremViolation(std::uint64_t m, ViolationCause cause, VerificationReport report);
  std::uint64_t m() const noexcept { return m_; }
  ViolationCause cause() const noexcept { return cause_; }
  const VerificationReport& report() const noexcept { return report_; }

 private:
  std::uint64_t m_;
  ViolationCause cause_;
  VerificationReport report_;
};

VerificationReport verify_theorem(const MapSpec& map, std::uint64_t max_m,
                                  std::size_t grid_resolution = kDefaultGrid);

}  // namespace perlef
