#include "perlef/kernels.hpp"

#include <cmath>

#include "perlef/errors.hpp"
#include "perlef/lefschetz.hpp"

namespace perlef::kernels {

SeedOutcome newton_from_seed(const MapSpec& map, std::uint64_t m, Complex seed) {
  Complex z = seed;
  for (int it = 0; it < kNewtonMaxIterations; ++it) {
    auto [w, dw] = map.iterate_with_derivative(z, m);
    const Complex g = w - z;
    const double residual = std::abs(g);
    if (!std::isfinite(residual)) return {};
    if (residual < kResidualTolerance) return {true, z, residual};
    const Complex dg = dw - 1.0;
    if (std::abs(dg) == 0.0) return {};
    z -= g / dg;
    if (!(std::abs(z) < 1e8)) return {};
  }
  return {};
}

std::vector<SeedOutcome> newton_seed_scan(const MapSpec& map, std::uint64_t m,
                                          std::span<const Complex> seeds, Exec exec) {
  std::vector<SeedOutcome> out(seeds.size());
  const long count = static_cast<long>(seeds.size());
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i) out[i] = newton_from_seed(map, m, seeds[i]);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < count; ++i) out[i] = newton_from_seed(map, m, seeds[i]);
  return out;
}

std::vector<BigInt> lefschetz_by_powers(const GradedHomologyAction& action, std::size_t max_m, Exec exec) {
  std::vector<BigInt> out(max_m);
  const long count = static_cast<long>(max_m);
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i) out[i] = lefschetz_number(action, static_cast<std::uint64_t>(i + 1));
    return out;
  }
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) out[i] = lefschetz_number(action, static_cast<std::uint64_t>(i + 1));
  return out;
}

namespace {

BatchOutcome classify_one(const GradedHomologyAction& action, std::uint64_t hard_cap) {
  try {
    return {classify(action, hard_cap), 0};
  } catch (const HypothesisShapeViolated& e) {
    return {std::string(e.what()), 2};
  } catch (const WitnessNotFound& e) {
    return {std::string(e.what()), 3};
  } catch (const Error& e) {
    return {std::string(e.what()), 1};
  }
}

}  // namespace

std::vector<BatchOutcome> classify_batch(std::span<const GradedHomologyAction> actions,
                                         std::uint64_t hard_cap, Exec exec) {
  std::vector<BatchOutcome> out(actions.size());
  const long count = static_cast<long>(actions.size());
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i) out[i] = classify_one(actions[i], hard_cap);
    return out;
  }
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) out[i] = classify_one(actions[i], hard_cap);
  return out;
}

}  // namespace perlef::kernels
