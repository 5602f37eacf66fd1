#include "perlef/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "perlef/kernels.hpp"
#include "perlef/lefschetz.hpp"

namespace perlef {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> boundary_samples(const Domain& domain, std::size_t samples) {
  std::vector<Complex> pts;
  pts.reserve(samples);
  auto circle = [&](Complex c, double r) {
    for (std::size_t k = 0; k < samples; ++k)
      pts.push_back(c + std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples)));
  };
  if (std::holds_alternative<UnitDisk>(domain)) {
    circle(0.0, 1.0);
  } else if (const auto* d = std::get_if<Disk>(&domain)) {
    circle(d->center, d->radius);
  } else {
    const auto& r = std::get<Rectangle>(domain);
    const double w = r.x_max - r.x_min, h = r.y_max - r.y_min;
    const double perimeter = 2.0 * (w + h);
    for (std::size_t k = 0; k < samples; ++k) {
      double s = perimeter * static_cast<double>(k) / static_cast<double>(samples);
      if (s < w) pts.emplace_back(r.x_min + s, r.y_min);
      else if ((s -= w) < h) pts.emplace_back(r.x_max, r.y_min + s);
      else if ((s -= h) < w) pts.emplace_back(r.x_max - s, r.y_max);
      else pts.emplace_back(r.x_min, r.y_max - (s - w));
    }
  }
  return pts;
}

Rectangle bounding_box(const Domain& domain) {
  if (std::holds_alternative<UnitDisk>(domain)) return {-1, 1, -1, 1};
  if (const auto* d = std::get_if<Disk>(&domain))
    return {d->center.real() - d->radius, d->center.real() + d->radius, d->center.imag() - d->radius,
            d->center.imag() + d->radius};
  return std::get<Rectangle>(domain);
}

std::vector<Complex> seed_grid(const Domain& domain, std::size_t resolution) {
  const Rectangle box = bounding_box(domain);
  std::vector<Complex> seeds;
  seeds.reserve(resolution * resolution);
  const double g = static_cast<double>(resolution);
  for (std::size_t i = 0; i < resolution; ++i)
    for (std::size_t j = 0; j < resolution; ++j)
      seeds.emplace_back(box.x_min + (box.x_max - box.x_min) * (static_cast<double>(i) + 0.5) / g,
                         box.y_min + (box.y_max - box.y_min) * (static_cast<double>(j) + 0.5) / g);
  return seeds;
}

bool near_any(Complex z, const std::vector<FixedPoint>& pts, double radius) {
  return std::any_of(pts.begin(), pts.end(), [&](const FixedPoint& p) { return std::abs(p.z - z) < radius; });
}

}  // namespace

double signed_margin(const Domain& domain, Complex z) {
  if (std::holds_alternative<UnitDisk>(domain)) return 1.0 - std::abs(z);
  if (const auto* d = std::get_if<Disk>(&domain)) return d->radius - std::abs(z - d->center);
  const auto& r = std::get<Rectangle>(domain);
  return std::min({z.real() - r.x_min, r.x_max - z.real(), z.imag() - r.y_min, r.y_max - z.imag()});
}

MapSpec MapSpec::affine(Complex a, Complex b, Domain domain) {
  MapSpec m;
  m.family = MapFamily::DiskAffine;
  m.stages = {{b, a}};
  m.domain = domain;
  return m;
}

MapSpec MapSpec::polynomial(std::vector<Complex> coeffs, Domain domain) {
  MapSpec m;
  m.family = MapFamily::DiskPolynomial;
  m.stages = {std::move(coeffs)};
  m.domain = domain;
  return m;
}

MapSpec MapSpec::composition(const std::vector<MapSpec>& parts, Domain domain) {
  MapSpec m;
  m.family = MapFamily::Composition;
  for (const auto& p : parts) m.stages.insert(m.stages.end(), p.stages.begin(), p.stages.end());
  m.domain = domain;
  return m;
}

void MapSpec::validate() const {
  if (stages.empty()) throw MalformedInput("coeffs", "map needs at least one stage");
  for (const auto& s : stages) {
    if (s.empty()) throw MalformedInput("coeffs", "empty coefficient list");
    for (auto c : s)
      if (!finite(c)) throw MalformedInput("coeffs", "coefficients must be finite");
  }
  if (const auto* d = std::get_if<Disk>(&domain)) {
    if (!(d->radius > 0.0) || !std::isfinite(d->radius)) throw MalformedInput("domain.radius", "radius must be positive");
    if (!finite(d->center)) throw MalformedInput("domain.center", "center must be finite");
  } else if (const auto* r = std::get_if<Rectangle>(&domain)) {
    if (!(r->x_min < r->x_max && r->y_min < r->y_max)) throw MalformedInput("domain", "empty rectangle");
  }
}

Complex MapSpec::operator()(Complex z) const {
  for (const auto& s : stages) z = horner(s, z);
  return z;
}

std::pair<Complex, Complex> MapSpec::iterate_with_derivative(Complex z, std::uint64_t m) const {
  Complex deriv = 1.0;
  for (std::uint64_t it = 0; it < m; ++it) {
    for (const auto& s : stages) {
      Complex v = 0.0, dv = 0.0;
      for (auto c = s.rbegin(); c != s.rend(); ++c) {
        dv = dv * z + v;
        v = v * z + *c;
      }
      deriv *= dv;
      z = v;
    }
  }
  return {z, deriv};
}

InsideReport strictly_inside(const MapSpec& map, std::size_t samples) {
  map.validate();
  InsideReport report;
  report.samples = samples;
  report.margin = std::numeric_limits<double>::infinity();
  for (Complex b : boundary_samples(map.domain, samples)) {
    Complex w = map(b);
    if (!finite(w)) throw EvaluationOverflow();
    report.margin = std::min(report.margin, signed_margin(map.domain, w));
  }
  report.strictly_inside = report.margin > kStrictMarginFloor;
  return report;
}

FixedPointReport find_fixed_points(const MapSpec& map, std::uint64_t m, std::size_t grid_resolution) {
  if (const auto inside = strictly_inside(map); !inside.strictly_inside)
    throw PreconditionNotStrictlyInside(inside.margin);

  const auto seeds = seed_grid(map.domain, grid_resolution);
  const auto outcomes = kernels::newton_seed_scan(map, m, seeds, kernels::Exec::Parallel);

  std::vector<FixedPoint> candidates;
  for (const auto& o : outcomes)
    if (o.converged && o.residual < kResidualTolerance && signed_margin(map.domain, o.z) > 0.0)
      candidates.push_back({o.z, o.residual});
  std::sort(candidates.begin(), candidates.end(), [](const FixedPoint& a, const FixedPoint& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    if (a.z.imag() != b.z.imag()) return a.z.imag() < b.z.imag();
    return a.residual < b.residual;
  });

  FixedPointReport report;
  report.m = m;
  for (const auto& c : candidates)
    if (!near_any(c.z, report.points, kDedupRadius)) report.points.push_back(c);
  report.count = report.points.size();
  report.lefschetz_value = lefschetz_number(map.declared_action, m);
  report.bound_satisfied = BigInt(static_cast<unsigned long>(report.count)) <= report.lefschetz_value;
  return report;
}

TheoremViolation::TheoremViolation(std::uint64_t m, ViolationCause cause, VerificationReport report)
    : Error([&] {
        switch (cause) {
          case ViolationCause::BoundExceeded:
            return "L(f^" + std::to_string(m) + ") < #Fix(f^" + std::to_string(m) + ")";
          case ViolationCause::MissingFixedPoint:
            return "L(f^" + std::to_string(m) + ") != 0 but no fixed point of f^" + std::to_string(m) + " found";
          case ViolationCause::PredictionMismatch:
            break;
        }
        return "observed fixed points of f^" + std::to_string(m) + " contradict the classifier verdict";
      }()),
      m_(m), cause_(cause), report_(std::move(report)) {}

VerificationReport verify_theorem(const MapSpec& map, std::uint64_t max_m, std::size_t grid_resolution) {
  require_theorem_shape(map.declared_action);
  VerificationReport report;
  report.classification = classify(map.declared_action);
  report.inside = strictly_inside(map);
  if (!report.inside.strictly_inside) throw PreconditionNotStrictlyInside(report.inside.margin);

  const Verdict verdict = report.classification.verdict;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    FixedPointReport fp = find_fixed_points(map, m, grid_resolution);
    std::size_t exact = 0;
    for (const auto& p : fp.points) {
      bool lower = false;
      for (std::uint64_t d = 1; d < m && !lower; ++d)
        if (m % d == 0) lower = near_any(p.z, report.per_m[d - 1].points, 10 * kDedupRadius);
      if (!lower) ++exact;
    }
    report.per_m.push_back(fp);
    report.exact_period_counts.push_back(exact);

    if (!fp.bound_satisfied) throw TheoremViolation(m, ViolationCause::BoundExceeded, report);
    if (fp.lefschetz_value != 0 && fp.count == 0)
      throw TheoremViolation(m, ViolationCause::MissingFixedPoint, report);
    const bool mismatch = (verdict == Verdict::CaseBCompatible && (fp.count != 1 || (m > 1 && exact != 0))) ||
                          (verdict == Verdict::CaseCCompatible && fp.count != 0);
    if (mismatch) throw TheoremViolation(m, ViolationCause::PredictionMismatch, report);
  }
  report.passed = true;
  return report;
}

}  // namespace perlef
